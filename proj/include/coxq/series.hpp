#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxq {

/* All coefficients are exact arbitrary-precision integers; q-factorials and
 * the geometric-type denominators appearing here overflow 64-bit words in
 * intermediate products well before the ranks of interest. */
using Int = boost::multiprecision::cpp_int;

inline std::atomic<long>& mixed_order_count() {
    static std::atomic<long> count{0};
    return count;
}

/* Mixing truncation orders is legal (the result keeps the smaller order) but
 * usually indicates a caller slip, so every occurrence is counted and can be
 * echoed by setting COXQ_LOG_MIXED_ORDER. */
inline void note_mixed_order(int a, int b) {
    ++mixed_order_count();
    if (std::getenv("COXQ_LOG_MIXED_ORDER") != nullptr) {
        std::cerr << "coxq: mixing truncation orders " << a << " and " << b << "\n";
    }
}

/* Truncated formal power series in q over the integers.  A Series of order N
 * stores the coefficients of q^0,...,q^N; everything above q^N is unknown.
 * Values are immutable after construction apart from the compound-assignment
 * operators, and all operations are pure. */
class Series {
public:
    explicit Series(int order) {
        if (order < 0) throw std::invalid_argument("Series: order must be nonnegative");
        coeffs_.assign(static_cast<size_t>(order) + 1, Int(0));
    }

    static Series zero(int order) { return Series(order); }

    static Series constant(Int c, int order) {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static Series one(int order) { return constant(1, order); }

    /* c*q^d, silently zero when d exceeds the order. */
    static Series monomial(Int c, int degree, int order) {
        if (degree < 0) throw std::invalid_argument("Series: negative degree");
        Series s(order);
        if (degree <= order) s.coeffs_[static_cast<size_t>(degree)] = std::move(c);
        return s;
    }

    static Series from_coeffs(std::vector<Int> cs, int order) {
        Series s(order);
        for (size_t d = 0; d < cs.size() && d <= static_cast<size_t>(order); ++d) {
            s.coeffs_[d] = std::move(cs[d]);
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int d) const {
        if (d < 0) throw std::invalid_argument("Series: negative degree");
        static const Int kZero{0};
        if (d > order()) return kZero;
        return coeffs_[static_cast<size_t>(d)];
    }

    bool is_zero() const {
        for (const Int& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    /* Degree of the highest nonzero stored coefficient, or -1 for zero. */
    int top_degree() const {
        for (int d = order(); d >= 0; --d) {
            if (coeffs_[static_cast<size_t>(d)] != 0) return d;
        }
        return -1;
    }

    /* Value at q=1; meaningful when the series is known to be a polynomial
     * whose degree does not exceed the truncation order. */
    Int coeff_sum() const {
        Int total = 0;
        for (const Int& c : coeffs_) total += c;
        return total;
    }

    Series& operator+=(const Series& o) {
        resize_to_min(o);
        for (int d = 0; d <= order(); ++d) coeffs_[static_cast<size_t>(d)] += o.coeffs_[static_cast<size_t>(d)];
        return *this;
    }

    Series& operator-=(const Series& o) {
        resize_to_min(o);
        for (int d = 0; d <= order(); ++d) coeffs_[static_cast<size_t>(d)] -= o.coeffs_[static_cast<size_t>(d)];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator-(const Series& a) {
        Series r(a.order());
        for (int d = 0; d <= a.order(); ++d) r.coeffs_[static_cast<size_t>(d)] = -a.coeff(d);
        return r;
    }

    /* Cauchy product truncated at the smaller operand order. */
    friend Series operator*(const Series& a, const Series& b) {
        int ord = a.order();
        if (b.order() != ord) {
            note_mixed_order(a.order(), b.order());
            ord = std::min(a.order(), b.order());
        }
        Series r(ord);
        for (int i = 0; i <= ord; ++i) {
            const Int& ai = a.coeff(i);
            if (ai == 0) continue;
            for (int j = 0; i + j <= ord; ++j) {
                const Int& bj = b.coeff(j);
                if (bj == 0) continue;
                r.coeffs_[static_cast<size_t>(i + j)] += ai * bj;
            }
        }
        return r;
    }

    Series& operator*=(const Series& o) { return *this = *this * o; }

    /* Strict equality: same order and identical coefficients. */
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    void resize_to_min(const Series& o) {
        if (o.order() == order()) return;
        note_mixed_order(order(), o.order());
        if (o.order() < order()) coeffs_.resize(static_cast<size_t>(o.order()) + 1);
    }

    std::vector<Int> coeffs_;
};

/* Coefficientwise agreement up to the shared truncation order.  This is the
 * comparison used by every identity check in the library. */
inline bool agree(const Series& a, const Series& b) {
    int ord = std::min(a.order(), b.order());
    for (int d = 0; d <= ord; ++d) {
        if (a.coeff(d) != b.coeff(d)) return false;
    }
    return true;
}

/* Reciprocal of a series whose constant term is a unit of Z, i.e. +1 or -1.
 * If 1/(sum a_k q^k) = sum b_k q^k then b_n = -a_0 * sum_{k>=1} a_k b_{n-k},
 * using a_0^{-1} = a_0. */
inline Series invert(const Series& a) {
    const Int& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1) {
        throw std::invalid_argument("invert: constant term must be +1 or -1");
    }
    int ord = a.order();
    std::vector<Int> b(static_cast<size_t>(ord) + 1);
    b[0] = a0;
    for (int d = 1; d <= ord; ++d) {
        Int acc = 0;
        for (int k = 1; k <= d; ++k) acc += a.coeff(k) * b[static_cast<size_t>(d - k)];
        b[static_cast<size_t>(d)] = -a0 * acc;
    }
    return Series::from_coeffs(std::move(b), ord);
}

/* q -> q^k; the result keeps the input order, so source terms of degree
 * greater than order/k are dropped. */
inline Series substitute_power(const Series& a, int k) {
    if (k <= 0) throw std::invalid_argument("substitute_power: exponent must be positive");
    Series r(a.order());
    std::vector<Int> cs(static_cast<size_t>(a.order()) + 1);
    for (int d = 0; d * k <= a.order(); ++d) cs[static_cast<size_t>(d * k)] = a.coeff(d);
    return Series::from_coeffs(std::move(cs), a.order());
}

/* Multiplication by q^k (k >= 0). */
inline Series shifted(const Series& a, int k) {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    std::vector<Int> cs(static_cast<size_t>(a.order()) + 1);
    for (int d = 0; d + k <= a.order(); ++d) cs[static_cast<size_t>(d + k)] = a.coeff(d);
    return Series::from_coeffs(std::move(cs), a.order());
}

inline Series truncated(const Series& a, int order) {
    if (order > a.order()) throw std::invalid_argument("truncated: cannot extend");
    Series r(order);
    std::vector<Int> cs;
    for (int d = 0; d <= order; ++d) cs.push_back(a.coeff(d));
    return Series::from_coeffs(std::move(cs), order);
}

/* Reinterpret a series known to be an exact polynomial at a (possibly larger)
 * truncation order; the stored top coefficients must already vanish when
 * shrinking is requested. */
inline Series as_polynomial_with_order(const Series& a, int order) {
    if (order < a.top_degree()) {
        throw std::invalid_argument("as_polynomial_with_order: would drop nonzero terms");
    }
    std::vector<Int> cs;
    for (int d = 0; d <= std::min(order, a.order()); ++d) cs.push_back(a.coeff(d));
    return Series::from_coeffs(std::move(cs), order);
}

inline Series power(const Series& base, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    Series r = Series::one(base.order());
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/* ---- q-numbers ------------------------------------------------------- */

/* [n]_q = 1 + q + ... + q^{n-1}. */
inline Series q_int(int n, int order) {
    if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
    Series r(order);
    for (int d = 0; d < n && d <= order; ++d) r += Series::monomial(1, d, order);
    return r;
}

/* [n]_q! = [1]_q [2]_q ... [n]_q. */
inline Series q_factorial(int n, int order) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
    Series r = Series::one(order);
    for (int k = 1; k <= n; ++k) r *= q_int(k, order);
    return r;
}

/* Gaussian binomial via the Pascal-type recurrence
 * C(n,k)_q = C(n-1,k-1)_q + q^k C(n-1,k)_q, kept in exact integers. */
inline Series q_binomial(int n, int k, int order) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    std::vector<Series> row(static_cast<size_t>(k) + 1, Series::zero(order));
    row[0] = Series::one(order);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + shifted(row[static_cast<size_t>(j)], j);
        }
    }
    return row[static_cast<size_t>(k)];
}

/* (sign*q^j; q)_m = prod_{i=0}^{m-1} (1 - sign*q^{j+i}) with sign = +1/-1. */
inline Series q_pochhammer(int sign, int j, int m, int order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("q_pochhammer: sign must be +1 or -1");
    if (m < 0 || j < 0) throw std::invalid_argument("q_pochhammer: bad parameters");
    Series r = Series::one(order);
    for (int i = 0; i < m; ++i) {
        if (j + i > order) break;
        r *= Series::one(order) - Series::monomial(sign, j + i, order);
    }
    return r;
}

/* (sign*q^j; q)_infinity truncated at the given order (requires j >= 1 so the
 * product converges coefficientwise). */
inline Series q_pochhammer_inf(int sign, int j, int order) {
    if (j < 1) throw std::invalid_argument("q_pochhammer_inf: need j >= 1");
    Series r = Series::one(order);
    for (int e = j; e <= order; ++e) {
        r *= Series::one(order) - Series::monomial(sign, e, order);
    }
    return r;
}

/* ---- printing and JSON ------------------------------------------------ */

namespace detail {
inline void append_term(std::string& out, const Int& c, int d, bool compact) {
    bool first = out.empty();
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
        if (neg) out += "-";
    } else {
        out += compact ? (neg ? "-" : "+") : (neg ? " - " : " + ");
    }
    std::ostringstream body;
    if (d == 0) {
        body << mag;
    } else {
        if (mag != 1) body << mag << "*";
        body << "q";
        if (d > 1) body << "^" << d;
    }
    out += body.str();
}
}  // namespace detail

/* Canonical text form, ascending degrees: "1 + 2*q^3 - q^5 (+ O(q^25))". */
inline std::string to_string(const Series& s, bool order_tag = true) {
    std::string out;
    for (int d = 0; d <= s.order(); ++d) {
        if (s.coeff(d) == 0) continue;
        detail::append_term(out, s.coeff(d), d, false);
    }
    if (out.empty()) out = "0";
    if (order_tag) {
        out += " (+ O(q^" + std::to_string(s.order() + 1) + "))";
    }
    return out;
}

/* Space-free polynomial form used inside parenthesized coefficients. */
inline std::string to_compact_string(const Series& s) {
    std::string out;
    for (int d = 0; d <= s.order(); ++d) {
        if (s.coeff(d) == 0) continue;
        detail::append_term(out, s.coeff(d), d, true);
    }
    return out.empty() ? "0" : out;
}

inline std::string to_json(const Series& s) {
    std::ostringstream out;
    out << "{\"var\":\"q\",\"order\":" << s.order() << ",\"coeffs\":[";
    for (int d = 0; d <= s.order(); ++d) {
        if (d) out << ",";
        out << s.coeff(d);
    }
    out << "]}";
    return out.str();
}

}  // namespace coxq
