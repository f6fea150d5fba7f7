#pragma once

#include "coxq/series.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace coxq {

/* Truncated series in two variables, stored as a polynomial in an "outer"
 * variable whose coefficients are Series in the inner variable.  One
 * representation serves Z[[s,q]] (outer s, inner q) and Z[[y,x]] (outer y,
 * inner x).  All inner coefficients carry the same order, and binary
 * operations truncate both variables at the smaller operand order. */
class BivarSeries {
public:
    BivarSeries(int outer_order, int inner_order) {
        if (outer_order < 0) throw std::invalid_argument("BivarSeries: outer order must be nonnegative");
        coeffs_.assign(static_cast<size_t>(outer_order) + 1, Series(inner_order));
    }

    static BivarSeries zero(int outer_order, int inner_order) {
        return BivarSeries(outer_order, inner_order);
    }

    static BivarSeries one(int outer_order, int inner_order) {
        BivarSeries b(outer_order, inner_order);
        b.coeffs_[0] = Series::one(inner_order);
        return b;
    }

    /* s * outer^k. */
    static BivarSeries outer_monomial(const Series& s, int k, int outer_order) {
        if (k < 0) throw std::invalid_argument("BivarSeries: negative outer degree");
        BivarSeries b(outer_order, s.order());
        if (k <= outer_order) b.coeffs_[static_cast<size_t>(k)] = s;
        return b;
    }

    static BivarSeries from_inner(const Series& s, int outer_order) {
        return outer_monomial(s, 0, outer_order);
    }

    int outer_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int inner_order() const { return coeffs_[0].order(); }

    const Series& coeff(int k) const {
        if (k < 0 || k > outer_order()) throw std::invalid_argument("BivarSeries: outer degree out of range");
        return coeffs_[static_cast<size_t>(k)];
    }

    /* Coefficient of outer^k * inner^d, zero outside the stored window. */
    Int coeff(int k, int d) const {
        if (k < 0 || d < 0) throw std::invalid_argument("BivarSeries: negative degree");
        if (k > outer_order() || d > inner_order()) return 0;
        return coeffs_[static_cast<size_t>(k)].coeff(d);
    }

    int top_outer_degree() const {
        for (int k = outer_order(); k >= 0; --k) {
            if (!coeffs_[static_cast<size_t>(k)].is_zero()) return k;
        }
        return -1;
    }

    bool is_zero() const { return top_outer_degree() < 0; }

    BivarSeries& operator+=(const BivarSeries& o) {
        shrink_to(std::min(outer_order(), o.outer_order()), std::min(inner_order(), o.inner_order()));
        for (int k = 0; k <= outer_order(); ++k) {
            coeffs_[static_cast<size_t>(k)] += truncated(o.coeff(k), inner_order());
        }
        return *this;
    }

    BivarSeries& operator-=(const BivarSeries& o) {
        shrink_to(std::min(outer_order(), o.outer_order()), std::min(inner_order(), o.inner_order()));
        for (int k = 0; k <= outer_order(); ++k) {
            coeffs_[static_cast<size_t>(k)] -= truncated(o.coeff(k), inner_order());
        }
        return *this;
    }

    friend BivarSeries operator+(BivarSeries a, const BivarSeries& b) { return a += b; }
    friend BivarSeries operator-(BivarSeries a, const BivarSeries& b) { return a -= b; }

    friend BivarSeries operator-(const BivarSeries& a) {
        BivarSeries r(a.outer_order(), a.inner_order());
        for (int k = 0; k <= a.outer_order(); ++k) r.coeffs_[static_cast<size_t>(k)] = -a.coeff(k);
        return r;
    }

    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        int oo = std::min(a.outer_order(), b.outer_order());
        int io = std::min(a.inner_order(), b.inner_order());
        BivarSeries r(oo, io);
        for (int i = 0; i <= oo; ++i) {
            if (a.coeff(i).is_zero()) continue;
            Series ai = truncated(a.coeff(i), io);
            for (int j = 0; i + j <= oo; ++j) {
                if (b.coeff(j).is_zero()) continue;
                r.coeffs_[static_cast<size_t>(i + j)] += ai * truncated(b.coeff(j), io);
            }
        }
        return r;
    }

    BivarSeries& operator*=(const BivarSeries& o) { return *this = *this * o; }

    /* Multiply every outer coefficient by a plain inner series. */
    friend BivarSeries scale(const BivarSeries& a, const Series& s) {
        int io = std::min(a.inner_order(), s.order());
        BivarSeries r(a.outer_order(), io);
        Series t = truncated(s, io);
        for (int k = 0; k <= a.outer_order(); ++k) {
            r.coeffs_[static_cast<size_t>(k)] = truncated(a.coeff(k), io) * t;
        }
        return r;
    }

    /* Evaluate the outer variable at a small integer (+1 or -1 in practice). */
    Series specialize_outer(const Int& value) const {
        Series r(inner_order());
        Int p = 1;
        for (int k = 0; k <= outer_order(); ++k) {
            r += coeff(k) * Series::constant(p, inner_order());
            p *= value;
        }
        return r;
    }

    friend bool operator==(const BivarSeries& a, const BivarSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void shrink_to(int oo, int io) {
        if (oo != outer_order() || io != inner_order()) {
            if (oo != outer_order()) coeffs_.resize(static_cast<size_t>(oo) + 1, Series(io));
            for (Series& c : coeffs_) c = truncated(c, io);
        }
    }

    std::vector<Series> coeffs_;
};

/* Coefficientwise agreement up to the shared truncation orders in both
 * variables. */
inline bool agree(const BivarSeries& a, const BivarSeries& b) {
    int oo = std::min(a.outer_order(), b.outer_order());
    int io = std::min(a.inner_order(), b.inner_order());
    for (int k = 0; k <= oo; ++k) {
        for (int d = 0; d <= io; ++d) {
            if (a.coeff(k, d) != b.coeff(k, d)) return false;
        }
    }
    return true;
}

/* "(1+q+q^2+q^3) + (q+q^2+q^3)*s", ascending outer degree with compact inner
 * polynomials; an O-tag is appended for genuinely truncated values. */
inline std::string to_string(const BivarSeries& b, const std::string& outer = "s", bool order_tag = false) {
    std::string out;
    for (int k = 0; k <= b.outer_order(); ++k) {
        if (b.coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_compact_string(b.coeff(k)) + ")";
        if (k >= 1) {
            out += "*" + outer;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) out = "0";
    if (order_tag) out += " (+ O(q^" + std::to_string(b.inner_order() + 1) + "))";
    return out;
}

inline std::string to_json(const BivarSeries& b, const std::string& outer = "s", const std::string& inner = "q") {
    std::ostringstream out;
    out << "{\"outer\":\"" << outer << "\",\"inner\":\"" << inner << "\",\"outer_order\":" << b.outer_order()
        << ",\"order\":" << b.inner_order() << ",\"coeffs\":[";
    for (int k = 0; k <= b.outer_order(); ++k) {
        if (k) out << ",";
        out << "[";
        for (int d = 0; d <= b.inner_order(); ++d) {
            if (d) out << ",";
            out << b.coeff(k, d);
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

}  // namespace coxq
