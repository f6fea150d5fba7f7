#pragma once

#include "coxq/affine.hpp"
#include "coxq/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace coxq {

inline long long choose2(long long m) { return m * (m - 1) / 2; }

/* The sequence lambda(w) with lambda_i = floor((w(i)-1)/n), recording which
 * shifted copy of [n] contains w(i). */
struct LambdaSeq {
    int n = 0;
    std::vector<long long> entries;

    bool weakly_increasing() const {
        return std::is_sorted(entries.begin(), entries.end());
    }

    bool antisymmetric() const {
        for (int i = 0; i < n; ++i) {
            if (entries[static_cast<size_t>(i)] + entries[static_cast<size_t>(n - 1 - i)] != 0) return false;
        }
        return true;
    }

    bool zero_sum() const {
        long long s = 0;
        for (long long v : entries) s += v;
        return s == 0;
    }

    friend bool operator==(const LambdaSeq& a, const LambdaSeq& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

/* Block statistics of a weakly increasing sequence: beta lists the final
 * index of each constant block, beta_minus its prefix covering the blocks
 * with strictly negative value, mu_minus the sizes of those blocks and
 * delta_minus the gaps between their values (closing with the distance of
 * the last negative value to zero).  z counts the zero entries. */
struct BlockStats {
    std::vector<int> beta;
    std::vector<int> beta_minus;
    std::vector<int> mu_minus;
    std::vector<long long> delta_minus;
    int z = 0;
};

inline LambdaSeq lambda_of(const AffinePermutation& w) {
    LambdaSeq a;
    a.n = w.rank();
    for (int i = 1; i <= a.n; ++i) {
        a.entries.push_back(floor_div(w.window()[static_cast<size_t>(i - 1)] - 1, a.n));
    }
    return a;
}

/* Final positions of the contiguous blocks of equal entries; defined for any
 * integer sequence. */
inline std::vector<int> beta_of(const std::vector<long long>& entries) {
    std::vector<int> beta;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i + 1 == entries.size() || entries[i] != entries[i + 1]) beta.push_back(static_cast<int>(i) + 1);
    }
    return beta;
}

inline BlockStats block_stats(const LambdaSeq& a) {
    if (!a.weakly_increasing()) throw std::invalid_argument("block_stats: sequence must be weakly increasing");
    BlockStats st;
    st.beta = beta_of(a.entries);
    std::vector<long long> values;
    for (int i = 0; i < a.n; ++i) {
        if (i + 1 == a.n || a.entries[static_cast<size_t>(i)] != a.entries[static_cast<size_t>(i + 1)]) {
            values.push_back(a.entries[static_cast<size_t>(i)]);
        }
        if (a.entries[static_cast<size_t>(i)] == 0) ++st.z;
    }
    size_t m0 = 0;
    while (m0 < values.size() && values[m0] < 0) ++m0;
    int prev = 0;
    for (size_t i = 0; i < m0; ++i) {
        st.beta_minus.push_back(st.beta[i]);
        st.mu_minus.push_back(st.beta[i] - prev);
        prev = st.beta[i];
    }
    for (size_t i = 1; i < m0; ++i) st.delta_minus.push_back(values[i] - values[i - 1]);
    if (m0 > 0) st.delta_minus.push_back(-values[m0 - 1]);
    return st;
}

/* The element w_a attached to a zero-sum integer sequence: it carries the
 * block I_i = (b_{i-1}, b_i] order-preservingly onto n*v_i + J_i where
 * J_i = n+1-I_i and v_i is the block value. */
inline AffinePermutation build_from_lambda(const LambdaSeq& a) {
    if (!a.zero_sum()) throw std::invalid_argument("build_from_lambda: entries must sum to zero");
    std::vector<long long> win(static_cast<size_t>(a.n));
    int start = 0;  // b_{i-1}
    for (int i = 0; i < a.n; ++i) {
        if (i + 1 == a.n || a.entries[static_cast<size_t>(i)] != a.entries[static_cast<size_t>(i + 1)]) {
            int end = i + 1;  // b_i
            long long v = a.entries[static_cast<size_t>(i)];
            for (int k = start + 1; k <= end; ++k) {
                win[static_cast<size_t>(k - 1)] = a.n * v + (a.n + 1 - end) + (k - start - 1);
            }
            start = end;
        }
    }
    return AffinePermutation::from_window(a.n, std::move(win));
}

/* Minimal length in its double coset with respect to the finite symmetric
 * subgroup on both sides: both windows strictly increasing. */
inline bool is_min_rep(const AffinePermutation& w) {
    auto increasing = [](const std::vector<long long>& v) {
        for (size_t i = 1; i < v.size(); ++i) {
            if (v[i - 1] >= v[i]) return false;
        }
        return true;
    };
    return increasing(w.window()) && increasing(w.inverse().window());
}

/* The weakly increasing antisymmetric sequence with negative block sizes c
 * and value gaps d: (-e_1 x c_1, ..., -e_m x c_m, 0 x z, e_m x c_m, ...,
 * e_1 x c_1) where e_k = d_k + ... + d_m. */
inline LambdaSeq build_from_mu_delta(int n, const std::vector<int>& c, const std::vector<long long>& d) {
    if (c.size() != d.size()) throw std::invalid_argument("build_from_mu_delta: c and d must have equal length");
    long long csum = 0;
    for (int v : c) {
        if (v <= 0) throw std::invalid_argument("build_from_mu_delta: c entries must be positive");
        csum += v;
    }
    for (long long v : d) {
        if (v <= 0) throw std::invalid_argument("build_from_mu_delta: d entries must be positive");
    }
    if (2 * csum > n) throw std::invalid_argument("build_from_mu_delta: sum of c exceeds floor(n/2)");
    size_t m = c.size();
    std::vector<long long> e(m);
    long long acc = 0;
    for (size_t k = m; k-- > 0;) {
        acc += d[k];
        e[k] = acc;
    }
    LambdaSeq a;
    a.n = n;
    for (size_t i = 0; i < m; ++i) a.entries.insert(a.entries.end(), static_cast<size_t>(c[i]), -e[i]);
    a.entries.insert(a.entries.end(), static_cast<size_t>(n - 2 * csum), 0);
    for (size_t i = m; i-- > 0;) a.entries.insert(a.entries.end(), static_cast<size_t>(c[i]), e[i]);
    return a;
}

/* Closed-form length and absolute length of the element with statistics
 * (c, d): l' is the number of negative entries and
 * l = C(z,2) - C(n,2) + 2*sum_i (b_i(n-b_i) d_i + C(c_i,2)). */
struct OmegaLength {
    long long length = 0;
    long long abs_length = 0;
};

inline OmegaLength omega_length(int n, const std::vector<int>& c, const std::vector<long long>& d) {
    if (c.size() != d.size()) throw std::invalid_argument("omega_length: c and d must have equal length");
    OmegaLength out;
    long long b = 0;
    long long sum = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        b += c[i];
        sum += b * (n - b) * d[i] + choose2(c[i]);
    }
    long long z = n - 2 * b;
    out.abs_length = b;
    out.length = choose2(z) - choose2(n) + 2 * sum;
    return out;
}

/* The same length from the pairwise gap formula sum_{i<j} max(a_j-a_i-1, 0),
 * valid on weakly increasing zero-sum sequences. */
inline long long omega_length_pairwise(const LambdaSeq& a) {
    long long total = 0;
    for (int i = 0; i < a.n; ++i) {
        for (int j = i + 1; j < a.n; ++j) {
            long long gap = a.entries[static_cast<size_t>(j)] - a.entries[static_cast<size_t>(i)] - 1;
            if (gap > 0) total += gap;
        }
    }
    return total;
}

/* Indices i in [n-1] whose simple generator is carried back into
 * {s_1,...,s_{n-1}} by conjugation with w. */
inline std::vector<int> coset_K(const AffinePermutation& w) {
    if (!is_involution(w) || !is_min_rep(w)) {
        throw std::invalid_argument("coset_K: w must be a minimal-coset involution");
    }
    int n = w.rank();
    std::vector<int> K;
    for (int i = 1; i < n; ++i) {
        AffinePermutation conj = compose(w, compose(AffinePermutation::simple_gen(n, i), w));
        for (int j = 1; j < n; ++j) {
            if (conj == AffinePermutation::simple_gen(n, j)) {
                K.push_back(i);
                break;
            }
        }
    }
    return K;
}

/* Fixed-point series of the conjugation action on the parabolic subgroup
 * attached to a minimal-coset involution: one [c_i]_{q^2}! per paired block
 * and [z]_q! for the central factor. */
inline Series fixed_series_closed(const std::vector<int>& c, int z, int order) {
    Series r = q_factorial(z, order);
    for (int ci : c) r *= substitute_power(q_factorial(ci, order), 2);
    return r;
}

/* Same series by direct enumeration: walk the (finite) standard parabolic
 * subgroup generated by the simple generators indexed by coset_K(w) and keep
 * the elements commuting with w. */
inline Series fixed_series_brute(const AffinePermutation& w, int order) {
    int n = w.rank();
    std::vector<int> K = coset_K(w);
    std::vector<AffinePermutation> gens;
    for (int i : K) gens.push_back(AffinePermutation::simple_gen(n, i));
    std::set<std::vector<long long>> seen;
    std::vector<AffinePermutation> frontier{AffinePermutation::identity(n)};
    seen.insert(AffinePermutation::identity(n).window());
    Series r(order);
    long long cap = max_ball_size();
    while (!frontier.empty()) {
        std::vector<AffinePermutation> next;
        for (const AffinePermutation& x : frontier) {
            if (compose(w, compose(x, w)) == x) {
                long long len = length(x);
                if (len <= order) r += Series::monomial(1, static_cast<int>(len), order);
            }
            for (const AffinePermutation& s : gens) {
                AffinePermutation xs = compose(x, s);
                if (seen.insert(xs.window()).second) {
                    next.push_back(xs);
                    if (static_cast<long long>(seen.size()) > cap) {
                        throw std::runtime_error("fixed_series_brute: parabolic exceeds COXQ_MAX_BALL");
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return r;
}

/* A minimal-coset involution together with everything the generating
 * functions need: the induced generator subset K and the block statistics
 * of its lambda sequence. */
struct CosetDatum {
    AffinePermutation w;
    std::vector<int> K;
    BlockStats stats;
    long long length = 0;
    long long abs_length = 0;
};

/* All minimal-coset involutions of length at most max_len, generated through
 * the (c, d) parametrization in graded lexicographic order.  The length is
 * strictly increasing in every d_i, which bounds the search. */
inline std::vector<CosetDatum> enumerate_omega(int n, long long max_len) {
    if (n < 2) throw std::invalid_argument("enumerate_omega: rank must be at least 2");
    std::vector<CosetDatum> out;
    long long cap = max_ball_size();

    auto emit = [&](const std::vector<int>& c, const std::vector<long long>& d) {
        LambdaSeq a = build_from_mu_delta(n, c, d);
        CosetDatum datum{build_from_lambda(a), {}, block_stats(a), 0, 0};
        datum.K = coset_K(datum.w);
        OmegaLength len = omega_length(n, c, d);
        datum.length = len.length;
        datum.abs_length = len.abs_length;
        out.push_back(std::move(datum));
        if (static_cast<long long>(out.size()) > cap) {
            throw std::runtime_error("enumerate_omega: result exceeds COXQ_MAX_BALL");
        }
    };

    std::vector<int> c;
    std::vector<long long> d;
    std::function<void(size_t)> fill_d = [&](size_t i) {
        if (i == c.size()) {
            if (omega_length(n, c, d).length <= max_len) emit(c, d);
            return;
        }
        for (long long di = 1;; ++di) {
            d.push_back(di);
            // remaining entries contribute at least their d=1 value
            std::vector<long long> probe = d;
            probe.resize(c.size(), 1);
            if (omega_length(n, c, probe).length > max_len) {
                d.pop_back();
                break;
            }
            fill_d(i + 1);
            d.pop_back();
        }
    };

    std::function<void(int)> fill_c = [&](int remaining) {
        if (remaining == 0) {
            d.clear();
            fill_d(0);
            return;
        }
        for (int ci = 1; ci <= remaining; ++ci) {
            c.push_back(ci);
            fill_c(remaining - ci);
            c.pop_back();
        }
    };

    for (int k = 0; 2 * k <= n; ++k) {
        c.clear();
        fill_c(k);
    }
    return out;
}

/* Image of w under the projection to the finite symmetric group:
 * i -> w(i) - n*lambda_i(w), a permutation of [n]. */
inline std::vector<int> finite_part(const AffinePermutation& w) {
    LambdaSeq a = lambda_of(w);
    std::vector<int> img;
    for (int i = 1; i <= w.rank(); ++i) {
        img.push_back(static_cast<int>(w.window()[static_cast<size_t>(i - 1)] - w.rank() * a.entries[static_cast<size_t>(i - 1)]));
    }
    return img;
}

inline std::string to_json(const CosetDatum& datum) {
    std::ostringstream out;
    auto list = [&out](const auto& v) {
        out << "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << v[i];
        }
        out << "]";
    };
    out << "{\"n\":" << datum.w.rank() << ",\"window\":";
    list(datum.w.window());
    out << ",\"K\":";
    list(datum.K);
    out << ",\"mu\":";
    list(datum.stats.mu_minus);
    out << ",\"delta\":";
    list(datum.stats.delta_minus);
    out << ",\"z\":" << datum.stats.z << ",\"length\":" << datum.length
        << ",\"abs_length\":" << datum.abs_length << "}";
    return out.str();
}

}  // namespace coxq
