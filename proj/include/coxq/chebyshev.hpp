#pragma once

#include "coxq/assembly.hpp"
#include "coxq/bivar.hpp"
#include "coxq/series.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace coxq {

/* Exact polynomial in q, dense by degree. */
using QPoly = std::vector<Int>;

namespace detail {

inline void qpoly_add(QPoly& into, const QPoly& other, int q_shift = 0) {
    if (into.size() < other.size() + static_cast<size_t>(q_shift)) {
        into.resize(other.size() + static_cast<size_t>(q_shift));
    }
    for (size_t d = 0; d < other.size(); ++d) into[d + static_cast<size_t>(q_shift)] += other[d];
}

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace detail

/* Exact polynomial in x, s and q with integer coefficients, stored as a map
 * from (x-degree, s-degree) to the q-coefficient polynomial. */
class TrivarPoly {
public:
    static TrivarPoly zero() { return {}; }

    static TrivarPoly constant(Int c) {
        TrivarPoly p;
        if (c != 0) p.terms_[{0, 0}] = {std::move(c)};
        return p;
    }

    const std::map<std::pair<int, int>, QPoly>& terms() const { return terms_; }

    Int coeff(int x_deg, int s_deg, int q_deg) const {
        auto it = terms_.find({x_deg, s_deg});
        if (it == terms_.end() || q_deg < 0 || static_cast<size_t>(q_deg) >= it->second.size()) return 0;
        return it->second[static_cast<size_t>(q_deg)];
    }

    void add_term(int x_deg, int s_deg, int q_shift, const QPoly& q_part) {
        detail::qpoly_add(terms_[{x_deg, s_deg}], q_part, q_shift);
    }

    /* this += other * x^dx * s^ds * q^dq * scale. */
    void accumulate(const TrivarPoly& other, int dx, int ds, int dq, const Int& scale_by = 1) {
        for (const auto& [key, poly] : other.terms_) {
            QPoly scaled = poly;
            for (Int& c : scaled) c *= scale_by;
            detail::qpoly_add(terms_[{key.first + dx, key.second + ds}], scaled, dq);
        }
    }

    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            detail::qpoly_trim(it->second);
            it = it->second.empty() ? terms_.erase(it) : std::next(it);
        }
    }

    friend bool operator==(const TrivarPoly& a, const TrivarPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<std::pair<int, int>, QPoly> terms_;
};

/* The q-deformed Chebyshev recurrence of the first kind:
 * T_0 = 1, T_1 = x, T_n = (1+q^{n-1}) x T_{n-1} + q^{n-1} s T_{n-2}. */
inline TrivarPoly cigler_T(int n) {
    if (n < 0) throw std::invalid_argument("cigler_T: need n >= 0");
    TrivarPoly prev = TrivarPoly::constant(1);  // T_0
    if (n == 0) return prev;
    TrivarPoly cur = TrivarPoly::zero();  // T_1 = x
    cur.add_term(1, 0, 0, {1});
    for (int m = 2; m <= n; ++m) {
        TrivarPoly next = TrivarPoly::zero();
        next.accumulate(cur, 1, 0, 0);          // x T_{m-1}
        next.accumulate(cur, 1, 0, m - 1);      // q^{m-1} x T_{m-1}
        next.accumulate(prev, 0, 1, m - 1);     // q^{m-1} s T_{m-2}
        next.normalize();
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.normalize();
    return cur;
}

/* Classical Chebyshev polynomial of the first kind, by
 * T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}; coefficient of x^d at
 * index d. */
inline std::vector<Int> classical_T(int n) {
    if (n < 0) throw std::invalid_argument("classical_T: need n >= 0");
    std::vector<Int> prev{1};
    if (n == 0) return prev;
    std::vector<Int> cur{0, 1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> next(static_cast<size_t>(m) + 1);
        for (size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2 * cur[d];
        for (size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

/* T(s,q) from the double-coset formula at an order past its honest q-degree
 * n(n-1)/2, with a margin asserting that nothing lives above it. */
inline BivarSeries t_closed_polynomial(int n) {
    int degree = n * (n - 1) / 2;
    int order = degree + 4;
    BivarSeries t = t_closed(n, order);
    for (int k = 0; k <= t.outer_order(); ++k) {
        for (int d = degree + 1; d <= order; ++d) {
            if (t.coeff(k, d) != 0) {
                throw std::logic_error("t_closed_polynomial: series is not polynomial at the expected degree");
            }
        }
    }
    return t;
}

}  // namespace detail

/* T(s,q) equals the q-Chebyshev polynomial at x = 1, exactly. */
inline bool main2_check(int n) {
    if (n < 1) throw std::invalid_argument("main2_check: need n >= 1");
    BivarSeries t = detail::t_closed_polynomial(n);
    TrivarPoly deformed = cigler_T(n);
    TrivarPoly at_x1 = TrivarPoly::zero();
    for (const auto& [key, poly] : deformed.terms()) {
        at_x1.add_term(0, key.second, 0, poly);
    }
    at_x1.normalize();
    for (int k = 0; k <= t.outer_order(); ++k) {
        for (int d = 0; d <= t.inner_order(); ++d) {
            if (t.coeff(k, d) != at_x1.coeff(0, k, d)) return false;
        }
    }
    for (const auto& [key, poly] : at_x1.terms()) {
        if (key.second > t.outer_order() && !poly.empty()) return false;
    }
    return true;
}

/* Writing T(s,q) = sum_k t_k(q) (-s)^k, the values t_k(1) are the classical
 * Chebyshev coefficients: sum_k t_k(1) x^{n-2k} = T_n(x). */
inline bool cor1_check(int n) {
    if (n < 1) throw std::invalid_argument("cor1_check: need n >= 1");
    BivarSeries t = detail::t_closed_polynomial(n);
    std::vector<Int> expected = classical_T(n);
    std::vector<Int> got(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= t.outer_order(); ++k) {
        int x_deg = n - 2 * k;  // nonnegative since the s-degree is at most n/2
        Int tk1 = t.coeff(k).coeff_sum();
        if (k % 2 == 1) tk1 = -tk1;
        got[static_cast<size_t>(x_deg)] = tk1;
    }
    detail::qpoly_trim(expected);
    detail::qpoly_trim(got);
    return expected == got;
}

/* The rescaling T_n(x,s,q) = x^n T(s/x^2, q): every monomial s^k q^d of
 * T(s,q) must appear in the q-Chebyshev polynomial at x-degree n-2k, and
 * nothing else may appear there. */
inline bool rescale_check(int n) {
    if (n < 1) throw std::invalid_argument("rescale_check: need n >= 1");
    BivarSeries t = detail::t_closed_polynomial(n);
    TrivarPoly expected = TrivarPoly::zero();
    for (int k = 0; k <= t.outer_order(); ++k) {
        int x_deg = n - 2 * k;
        if (x_deg < 0) {
            if (!t.coeff(k).is_zero()) return false;
            continue;
        }
        for (int d = 0; d <= t.inner_order(); ++d) {
            Int c = t.coeff(k, d);
            if (c != 0) expected.add_term(x_deg, k, d, {c});
        }
    }
    expected.normalize();
    TrivarPoly actual = cigler_T(n);
    actual.normalize();
    return expected == actual;
}

/* Monomials ordered by (s-degree, q-degree, x-degree) ascending. */
inline std::string to_string(const TrivarPoly& p) {
    struct Entry {
        int s, q, x;
        Int c;
    };
    std::vector<Entry> entries;
    for (const auto& [key, poly] : p.terms()) {
        for (size_t d = 0; d < poly.size(); ++d) {
            if (poly[d] != 0) entries.push_back({key.second, static_cast<int>(d), key.first, poly[d]});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.s, a.q, a.x) < std::tie(b.s, b.q, b.x);
    });
    if (entries.empty()) return "0";
    std::string out;
    for (const Entry& e : entries) {
        bool neg = e.c < 0;
        Int mag = neg ? Int(-e.c) : e.c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::ostringstream body;
        bool have_factor = false;
        if (mag != 1 || (e.q == 0 && e.x == 0 && e.s == 0)) {
            body << mag;
            have_factor = true;
        }
        auto append_var = [&](const char* name, int deg) {
            if (deg == 0) return;
            if (have_factor) body << "*";
            body << name;
            if (deg > 1) body << "^" << deg;
            have_factor = true;
        };
        append_var("q", e.q);
        append_var("x", e.x);
        append_var("s", e.s);
        out += body.str();
    }
    return out;
}

/* JSON map from "x^a*s^b" to the q-coefficient list. */
inline std::string to_json(const TrivarPoly& p) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [key, poly] : p.terms()) {
        if (poly.empty()) continue;
        if (!first) out << ",";
        first = false;
        out << "\"x^" << key.first << "*s^" << key.second << "\":[";
        for (size_t d = 0; d < poly.size(); ++d) {
            if (d) out << ",";
            out << poly[d];
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

inline std::string to_string(const std::vector<Int>& xpoly) {
    std::string out;
    for (size_t d = 0; d < xpoly.size(); ++d) {
        const Int& c = xpoly[d];
        if (c == 0) continue;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::ostringstream body;
        if (d == 0) {
            body << mag;
        } else {
            if (mag != 1) body << mag << "*";
            body << "x";
            if (d > 1) body << "^" << d;
        }
        out += body.str();
    }
    return out.empty() ? "0" : out;
}

}  // namespace coxq
