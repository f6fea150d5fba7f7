#pragma once

#include "coxq/affine.hpp"
#include "coxq/bivar.hpp"
#include "coxq/coset.hpp"
#include "coxq/series.hpp"
#include "coxq/universal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace coxq {

/* A group family the series machinery knows how to sweep.  The symmetric
 * family of rank parameter n is the Weyl group of type A_{n-1}, with basic
 * invariant degrees 2, 3, ..., n. */
struct GroupDescriptor {
    enum class Family { symmetric, affine_symmetric } family;
    int n = 1;

    static GroupDescriptor symmetric(int n) { return {Family::symmetric, n}; }
    static GroupDescriptor affine_symmetric(int n) { return {Family::affine_symmetric, n}; }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (int i = 2; i <= n; ++i) d.push_back(i);
        return d;
    }
};

/* ---- closed product formulas ------------------------------------------ */

/* prod (1-q^{d_i})/(1-q) for the finite family; the affine family divides
 * each factor by the additional (1-q^{d_i-1}). */
inline Series poincare_closed(const GroupDescriptor& g, int order) {
    Series r = Series::one(order);
    Series inv_1mq = invert(Series::one(order) - Series::monomial(1, 1, order));
    for (int d : g.degrees()) {
        r *= (Series::one(order) - Series::monomial(1, d, order)) * inv_1mq;
        if (g.family == GroupDescriptor::Family::affine_symmetric) {
            r *= invert(Series::one(order) - Series::monomial(1, d - 1, order));
        }
    }
    return r;
}

/* Same shape with every minus sign flipped. */
inline Series l_closed(const GroupDescriptor& g, int order) {
    Series r = Series::one(order);
    Series inv_1pq = invert(Series::one(order) + Series::monomial(1, 1, order));
    for (int d : g.degrees()) {
        r *= (Series::one(order) + Series::monomial(1, d, order)) * inv_1pq;
        if (g.family == GroupDescriptor::Family::affine_symmetric) {
            r *= invert(Series::one(order) + Series::monomial(1, d - 1, order));
        }
    }
    return r;
}

/* ---- brute enumerations ------------------------------------------------ */

namespace detail {

/* Visit the elements of the group: the whole symmetric group, or the affine
 * ball of radius `order`. */
inline void for_each_element(const GroupDescriptor& g, int order,
                             const std::function<void(const AffinePermutation&)>& visit) {
    if (g.n == 1) return;  // trivial group handled by the callers
    if (g.family == GroupDescriptor::Family::symmetric) {
        std::vector<long long> win(static_cast<size_t>(g.n));
        std::iota(win.begin(), win.end(), 1);
        do {
            visit(AffinePermutation::from_window(g.n, win));
        } while (std::next_permutation(win.begin(), win.end()));
    } else {
        for (const auto& layer : enumerate_upto(g.n, order)) {
            for (const AffinePermutation& w : layer) visit(w);
        }
    }
}

inline AffinePermutation apply_aut(const AffinePermutation& w, Automorphism aut) {
    return aut == Automorphism::identity ? w : w.star();
}

}  // namespace detail

inline Series poincare_brute(const GroupDescriptor& g, int order) {
    std::vector<Int> counts(static_cast<size_t>(order) + 1);
    detail::for_each_element(g, order, [&](const AffinePermutation& w) {
        long long len = length(w);
        if (len <= order) counts[static_cast<size_t>(len)] += 1;
    });
    if (g.n == 1) counts[0] = 1;
    return Series::from_coeffs(std::vector<Int>(counts.begin(), counts.end()), order);
}

/* Length generating function of the fixed points of the automorphism. */
inline Series f_brute(const GroupDescriptor& g, Automorphism aut, int order) {
    std::vector<Int> counts(static_cast<size_t>(order) + 1);
    detail::for_each_element(g, order, [&](const AffinePermutation& w) {
        if (!(detail::apply_aut(w, aut) == w)) return;
        long long len = length(w);
        if (len <= order) counts[static_cast<size_t>(len)] += 1;
    });
    if (g.n == 1) counts[0] = 1;
    return Series::from_coeffs(std::vector<Int>(counts.begin(), counts.end()), order);
}

/* Sum of q^{l(w)} ((q-1)/(q+1))^{l'(w)} over the twisted involutions in the
 * ball; each summand has minimum q-degree l(w), so the ball of radius `order`
 * determines the series to that order. */
inline Series l_brute(const GroupDescriptor& g, Automorphism aut, int order) {
    int max_abs = g.n / 2 + 1;
    std::vector<std::vector<Int>> counts(static_cast<size_t>(max_abs) + 1,
                                         std::vector<Int>(static_cast<size_t>(order) + 1));
    detail::for_each_element(g, order, [&](const AffinePermutation& w) {
        if (!is_twisted_involution(w, aut)) return;
        long long len = length(w);
        if (len > order) return;
        long long abs_len = aut == Automorphism::identity ? absolute_length_involution(w)
                                                          : twisted_absolute_length(w);
        counts[static_cast<size_t>(abs_len)][static_cast<size_t>(len)] += 1;
    });
    if (g.n == 1) counts[0][0] = 1;
    Series ratio = (Series::monomial(1, 1, order) - Series::one(order)) *
                   invert(Series::monomial(1, 1, order) + Series::one(order));
    Series r(order);
    Series ratio_pow = Series::one(order);
    for (int k = 0; k <= max_abs; ++k) {
        r += Series::from_coeffs(std::vector<Int>(counts[static_cast<size_t>(k)].begin(),
                                                  counts[static_cast<size_t>(k)].end()),
                                 order) *
             ratio_pow;
        ratio_pow *= ratio;
    }
    return r;
}

/* L = P(q^2)/F, checked entirely on enumerated data. */
inline bool lusztig_identity_check(const GroupDescriptor& g, Automorphism aut, int order) {
    Series lhs = l_brute(g, aut, order);
    Series rhs = substitute_power(poincare_brute(g, order), 2) * invert(f_brute(g, aut, order));
    return agree(lhs, rhs);
}

/* The two-term double-coset expansion of L^J for the symmetric group of rank
 * parameter n+1 with J generating the copy of rank parameter n:
 * L_{S_n}(q) + s q (1-q^n)/(1+q) (1+q^n)/(1+q) L_{S_{n-1}}(q). */
inline BivarSeries lj_finite_example(int n, int order) {
    if (n < 2) throw std::invalid_argument("lj_finite_example: need n >= 2");
    Series inv_1pq = invert(Series::one(order) + Series::monomial(1, 1, order));
    Series s_coeff = Series::monomial(1, 1, order) *
                     (Series::one(order) - Series::monomial(1, n, order)) *
                     (Series::one(order) + Series::monomial(1, n, order)) * inv_1pq * inv_1pq *
                     l_closed(GroupDescriptor::symmetric(n - 1), order);
    BivarSeries r = BivarSeries::from_inner(l_closed(GroupDescriptor::symmetric(n), order), 1);
    r += BivarSeries::outer_monomial(s_coeff, 1, 1);
    return r;
}

/* ---- the double-coset series for the affine symmetric family ----------- */

namespace detail {

inline Series datum_fixed_series(const CosetDatum& datum, int order) {
    return fixed_series_closed(datum.stats.mu_minus, datum.stats.z, order);
}

}  // namespace detail

/* T(s,q) assembled literally from its definition: the Poincare ratio
 * P(q)/P(q^2) times the sum over minimal-coset involutions of
 * q^{l(w)} (s(1-q)/(1+q))^{l'(w)} [n]_{q^2}! / F_w(q).  A datum of length
 * beyond the truncation order cannot contribute, which bounds the sum. */
inline BivarSeries t_brute(int n, int order) {
    if (n < 1) throw std::invalid_argument("t_brute: need n >= 1");
    if (n == 1) return BivarSeries::one(0, order);
    GroupDescriptor g = GroupDescriptor::affine_symmetric(n);
    Series p = poincare_closed(g, order);
    Series prefactor = p * invert(substitute_power(p, 2));
    Series n_fact_q2 = substitute_power(q_factorial(n, order), 2);
    Series s_ratio = (Series::one(order) - Series::monomial(1, 1, order)) *
                     invert(Series::one(order) + Series::monomial(1, 1, order));
    int s_deg = n / 2;
    BivarSeries sum(s_deg, order);
    for (const CosetDatum& datum : enumerate_omega(n, order)) {
        Series term = Series::monomial(1, static_cast<int>(datum.length), order) * n_fact_q2 *
                      invert(detail::datum_fixed_series(datum, order)) *
                      power(s_ratio, static_cast<int>(datum.abs_length));
        sum += BivarSeries::outer_monomial(term, static_cast<int>(datum.abs_length), s_deg);
    }
    return scale(sum, prefactor);
}

/* The closed form: sum over k of
 * s^k q^{k^2} [n]_q/[2n-2k]_q C(n-k,k)_q (-q^{k+1};q)_{n-2k}. */
inline BivarSeries t_closed(int n, int order) {
    if (n < 1) throw std::invalid_argument("t_closed: need n >= 1");
    int s_deg = n / 2;
    BivarSeries r(s_deg, order);
    for (int k = 0; k <= s_deg; ++k) {
        Series term = Series::monomial(1, k * k, order) * q_int(n, order) *
                      invert(q_int(2 * n - 2 * k, order)) * q_binomial(n - k, k, order) *
                      q_pochhammer(-1, k + 1, n - 2 * k, order);
        r += BivarSeries::outer_monomial(term, k, s_deg);
    }
    return r;
}

/* Partial sums of the double-coset series at fixed absolute length k:
 * sum of q^{l(w)} [n]_{q^2}!/F_w(q) over data with l'(w) = k. */
inline Series sigma_brute(int n, int k, int order) {
    if (2 * k > n) return Series::zero(order);
    Series n_fact_q2 = substitute_power(q_factorial(n, order), 2);
    Series r(order);
    for (const CosetDatum& datum : enumerate_omega(n, order)) {
        if (datum.abs_length != k) continue;
        r += Series::monomial(1, static_cast<int>(datum.length), order) * n_fact_q2 *
             invert(detail::datum_fixed_series(datum, order));
    }
    return r;
}

/* Closed evaluation of the same sum:
 * q^{k^2} [n]_q/[2n-2k]_q C(n-k,k)_q (-q^{k+1};q)_{n-2k}
 *        ((1+q)/(1-q))^k (1+q^n)/(1+q)^n. */
inline Series sigma_closed(int n, int k, int order) {
    if (2 * k > n) return Series::zero(order);
    Series one_pq = Series::one(order) + Series::monomial(1, 1, order);
    Series one_mq = Series::one(order) - Series::monomial(1, 1, order);
    return Series::monomial(1, k * k, order) * q_int(n, order) * invert(q_int(2 * n - 2 * k, order)) *
           q_binomial(n - k, k, order) * q_pochhammer(-1, k + 1, n - 2 * k, order) *
           power(one_pq * invert(one_mq), k) *
           (Series::one(order) + Series::monomial(1, n, order)) * invert(power(one_pq, n));
}

/* Sum-to-product identity over the data with a fixed block-size sequence c:
 * the enumerated side against
 * q^{C(z,2)-C(n,2)} [n]_{q^2}!/[z]_q! prod_i q^{2b_i(n-b_i)}/(1-q^{2b_i(n-b_i)})
 *                                            q^{2C(c_i,2)}/[c_i]_{q^2}!. */
inline bool mufixed_check(int n, const std::vector<int>& c, int order) {
    long long csum = 0;
    for (int v : c) csum += v;
    if (2 * csum > n) throw std::invalid_argument("mufixed_check: sum of c exceeds floor(n/2)");
    int z = static_cast<int>(n - 2 * csum);

    Series n_fact_q2 = substitute_power(q_factorial(n, order), 2);
    Series lhs(order);
    Series f = fixed_series_closed(c, z, order);
    for (const CosetDatum& datum : enumerate_omega(n, order)) {
        if (datum.stats.mu_minus != c) continue;
        lhs += Series::monomial(1, static_cast<int>(datum.length), order);
    }
    lhs *= n_fact_q2 * invert(f);

    // the q-power prefactors combine to a nonnegative net shift
    long long shift = choose2(z) - choose2(n);
    Series rhs = n_fact_q2 * invert(q_factorial(z, order));
    long long b = 0;
    for (int ci : c) {
        b += ci;
        long long e = 2 * b * (n - b);
        shift += e + 2 * choose2(ci);
        rhs *= invert(Series::one(order) - Series::monomial(1, static_cast<int>(std::min<long long>(e, order + 1)), order));
        rhs *= invert(substitute_power(q_factorial(ci, order), 2));
    }
    if (shift < 0) throw std::logic_error("mufixed_check: negative net q-shift");
    rhs = shifted(rhs, static_cast<int>(std::min<long long>(shift, order + 1)));
    return agree(lhs, rhs);
}

/* ---- the abstract two-variable identities ------------------------------ */

/* Pi(c; x, y) = prod_i 1/(x^{b_i^2} y^{b_i} - 1) * x^{C(c_i,2)}/[c_i]_x!,
 * expanded in Z[[x, y]] with y as the outer variable.  Each reciprocal is the
 * geometric series -sum_t (x^{b^2} y^b)^t. */
inline BivarSeries pi_product(const std::vector<int>& c, int outer_order, int inner_order) {
    BivarSeries r = BivarSeries::one(outer_order, inner_order);
    long long b = 0;
    for (int ci : c) {
        if (ci <= 0) throw std::invalid_argument("pi_product: c entries must be positive");
        b += ci;
        BivarSeries geo(outer_order, inner_order);
        for (long long t = 0; t * b <= outer_order; ++t) {
            long long xdeg = t * b * b;
            if (xdeg > inner_order) break;
            geo += BivarSeries::outer_monomial(
                Series::monomial(-1, static_cast<int>(xdeg), inner_order), static_cast<int>(t * b), outer_order);
        }
        r *= geo;
        r = scale(r, Series::monomial(1, static_cast<int>(std::min<long long>(choose2(ci), inner_order + 1)), inner_order) *
                         invert(q_factorial(ci, inner_order)));
    }
    return r;
}

/* Sum of Pi over all compositions of k against (1/[k]_x!) prod 1/(x^i y - 1),
 * compared on the full truncation rectangle. */
inline bool csum_check(int k, int order) {
    BivarSeries lhs(order, order);
    std::vector<int> c;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            lhs += pi_product(c, order, order);
            return;
        }
        for (int ci = 1; ci <= remaining; ++ci) {
            c.push_back(ci);
            rec(remaining - ci);
            c.pop_back();
        }
    };
    rec(k);

    BivarSeries rhs = BivarSeries::from_inner(invert(q_factorial(k, order)), order);
    for (int i = 1; i <= k; ++i) {
        BivarSeries geo(order, order);
        for (int t = 0; t <= order && t * i <= order; ++t) {
            geo += BivarSeries::outer_monomial(Series::monomial(-1, t * i, order), t, order);
        }
        rhs *= geo;
    }
    return agree(lhs, rhs);
}

/* sum_{i=0}^{k} C(k,i)_x (y;x)_{k-i} y^i = 1, exact: the chosen orders bound
 * the honest degrees, so truncation loses nothing. */
inline bool tech_check(int k) {
    int inner = std::max(1, k * k);
    int outer = std::max(1, k);
    BivarSeries sum(outer, inner);
    for (int i = 0; i <= k; ++i) {
        BivarSeries poch = BivarSeries::one(outer, inner);
        for (int t = 0; t < k - i; ++t) {
            poch *= BivarSeries::one(outer, inner) -
                    BivarSeries::outer_monomial(Series::monomial(1, t, inner), 1, outer);
        }
        sum += scale(poch, q_binomial(k, i, inner)) * BivarSeries::outer_monomial(Series::one(inner), i, outer);
    }
    return sum == BivarSeries::one(outer, inner);
}

/* ---- the limit of the T-series ----------------------------------------- */

/* sum_k s^k q^{k^2} (q;q)_k^{-1} (-q^{k+1};q)_infinity. */
inline BivarSeries limit_sum_form(int order, int s_degree) {
    BivarSeries r(s_degree, order);
    for (int k = 0; k <= s_degree; ++k) {
        if (k * k > order) break;
        Series term = Series::monomial(1, k * k, order) * invert(q_pochhammer(1, 1, k, order)) *
                      q_pochhammer_inf(-1, k + 1, order);
        r += BivarSeries::outer_monomial(term, k, s_degree);
    }
    return r;
}

/* prod_{k>=1} (1+q^k)(1+s q^{2k-1}). */
inline BivarSeries limit_product_form(int order, int s_degree) {
    BivarSeries r = BivarSeries::one(s_degree, order);
    Series distinct_parts = Series::one(order);
    for (int k = 1; k <= order; ++k) {
        distinct_parts *= Series::one(order) + Series::monomial(1, k, order);
    }
    r = scale(r, distinct_parts);
    for (int k = 1; 2 * k - 1 <= order; ++k) {
        r *= BivarSeries::from_inner(Series::one(order), s_degree) +
             BivarSeries::outer_monomial(Series::monomial(1, 2 * k - 1, order), 1, s_degree);
    }
    return r;
}

}  // namespace coxq
