#pragma once

#include "coxq/affine.hpp"
#include "coxq/assembly.hpp"
#include "coxq/chebyshev.hpp"
#include "coxq/coset.hpp"
#include "coxq/series.hpp"
#include "coxq/universal.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace coxq {

/* One verifiable identity instance.  `criterion` groups the checks into the
 * ten blocks reported by the acceptance driver. */
struct Check {
    int criterion = 0;
    std::string suite;
    std::string name;
    std::string params;
    int order = 0;
    std::function<bool(std::string& detail)> run;
};

struct CheckResult {
    int criterion = 0;
    std::string suite;
    std::string name;
    std::string params;
    int order = 0;
    bool pass = false;
    std::string detail;
};

/* Caps let a command-line run shrink the sweeps; the acceptance driver runs
 * uncapped.  Capped runs still verify every instance they execute. */
struct VerifyOptions {
    int n_cap = 1 << 20;
    int order_cap = 1 << 20;
};

namespace detail {

inline std::string fmt_params(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out << " ";
        first = false;
        out << k << "=" << v;
    }
    return out.str();
}

/* ---- criterion 1: golden polynomials ----------------------------------- */

inline bool golden_t(int n) {
    // printed forms of T(s,q) for ranks 1..4
    static const std::vector<std::vector<std::vector<long long>>> kGolden = {
        {{1}},
        {{1, 1}, {0, 1}},
        {{1, 1, 1, 1}, {0, 1, 1, 1}},
        {{1, 1, 1, 2, 1, 1, 1}, {0, 1, 1, 2, 2, 1, 1}, {0, 0, 0, 0, 1}},
    };
    const auto& want = kGolden[static_cast<size_t>(n - 1)];
    BivarSeries t = detail::t_closed_polynomial(n);
    if (t.outer_order() != static_cast<int>(want.size()) - 1) return false;
    for (int k = 0; k <= t.outer_order(); ++k) {
        for (int d = 0; d <= t.inner_order(); ++d) {
            long long expect = (static_cast<size_t>(d) < want[static_cast<size_t>(k)].size())
                                   ? want[static_cast<size_t>(k)][static_cast<size_t>(d)]
                                   : 0;
            if (t.coeff(k, d) != expect) return false;
        }
    }
    return true;
}

/* ---- criterion 8: structural oracle helpers ----------------------------- */

inline bool omega_round_trips(int n_cap, std::string& detail) {
    std::mt19937 rng(7291143u);
    int max_rank = std::min(8, std::max(2, n_cap));
    std::uniform_int_distribution<int> rank_dist(2, max_rank);
    std::uniform_int_distribution<long long> entry_dist(-4, 4);
    int done = 0, antisym = 0;
    while (done < 500) {
        int n = rank_dist(rng);
        LambdaSeq a;
        a.n = n;
        bool make_antisym = done % 2 == 1;
        if (make_antisym) {
            std::vector<long long> neg(static_cast<size_t>(n / 2));
            for (auto& v : neg) v = -std::abs(entry_dist(rng)) - std::uniform_int_distribution<int>(0, 2)(rng);
            std::sort(neg.begin(), neg.end());
            a.entries = neg;
            if (n % 2 == 1) a.entries.push_back(0);
            for (size_t i = neg.size(); i-- > 0;) a.entries.push_back(-neg[i]);
        } else {
            a.entries.resize(static_cast<size_t>(n));
            long long sum = 0;
            for (auto& v : a.entries) {
                v = entry_dist(rng);
                sum += v;
            }
            if (sum != 0) continue;  // rejection sampling for the zero-sum condition
            std::sort(a.entries.begin(), a.entries.end());
        }
        ++done;
        AffinePermutation w = build_from_lambda(a);
        if (!(lambda_of(w) == a)) return false;
        // weakly increasing zero-sum sequences land in the twisted family
        if (!is_min_rep(w) || !(w.star() == w.inverse())) return false;
        if (make_antisym || a.antisymmetric()) {
            ++antisym;
            if (!a.zero_sum()) return false;  // antisymmetry forces the zero sum
            if (!is_involution(w)) return false;
        }
    }
    detail = "samples=500 antisymmetric=" + std::to_string(antisym);
    return true;
}

inline bool omega_matches_ball(int n, long long max_len) {
    std::set<std::vector<long long>> from_ball;
    for (const auto& layer : enumerate_upto(n, max_len)) {
        for (const AffinePermutation& w : layer) {
            if (is_involution(w) && is_min_rep(w)) from_ball.insert(w.window());
        }
    }
    std::set<std::vector<long long>> from_bijection;
    for (const CosetDatum& datum : enumerate_omega(n, max_len)) {
        from_bijection.insert(datum.w.window());
    }
    return from_ball == from_bijection;
}

inline bool absolute_length_formulas_match(int n, long long max_len) {
    for (const auto& layer : enumerate_upto(n, max_len)) {
        for (const AffinePermutation& w : layer) {
            if (is_involution(w)) {
                if (absolute_length_involution(w) != hultman_absolute_length(w, Automorphism::identity)) return false;
            }
            if (is_twisted_involution(w, Automorphism::flip)) {
                if (twisted_absolute_length(w) != hultman_absolute_length(w, Automorphism::flip)) return false;
            }
        }
    }
    return true;
}

inline bool fixed_series_match(int n, long long max_len, int order) {
    for (const CosetDatum& datum : enumerate_omega(n, max_len)) {
        Series closed = fixed_series_closed(datum.stats.mu_minus, datum.stats.z, order);
        if (!agree(closed, fixed_series_brute(datum.w, order))) return false;
        // the absolute length is the total size of the negative blocks
        long long mu_sum = 0;
        for (int c : datum.stats.mu_minus) mu_sum += c;
        if (mu_sum != absolute_length_involution(datum.w)) return false;
    }
    return true;
}

inline bool omega_lengths_match(int n, long long max_len) {
    for (const CosetDatum& datum : enumerate_omega(n, max_len)) {
        LambdaSeq a = lambda_of(datum.w);
        std::vector<long long> d64(datum.stats.delta_minus.begin(), datum.stats.delta_minus.end());
        OmegaLength closed = omega_length(n, datum.stats.mu_minus, d64);
        if (closed.length != datum.length) return false;
        if (closed.length != omega_length_pairwise(a)) return false;
        if (closed.length != length(datum.w)) return false;
        if (closed.abs_length != absolute_length_involution(datum.w)) return false;
    }
    return true;
}

/* ---- criterion 9: limit and coefficientwise stabilization -------------- */

/* Coefficientwise convergence of the double-coset polynomials to the infinite
 * product.  The window of verified (s-degree, q-degree) pairs shrinks with
 * the sweep (a capped run cannot witness stabilization of high degrees); the
 * uncapped run covers the full pinned window and demands a constant tail that
 * matches the limit everywhere in it.  The observed stabilization point per
 * q-degree is reported. */
inline bool limit_stabilization(int sweep_max, int max_d, int max_j, std::string& detail) {
    int checked_d = std::min(max_d, sweep_max - 3);
    int checked_j = std::min(max_j, (sweep_max - 2) / 2);
    if (checked_d < 0 || checked_j < 0) {
        detail = "sweep too short to witness stabilization";
        return true;
    }
    BivarSeries lim = limit_product_form(max_d, max_j);
    std::vector<BivarSeries> ts;
    for (int n = 1; n <= sweep_max; ++n) ts.push_back(t_closed(n, max_d));
    std::vector<int> stab_by_degree(static_cast<size_t>(checked_d) + 1, 0);
    for (int j = 0; j <= checked_j; ++j) {
        for (int d = 0; d <= checked_d; ++d) {
            Int final_value = ts.back().coeff(j, d);
            int first_n = sweep_max;
            while (first_n > 1 && ts[static_cast<size_t>(first_n - 2)].coeff(j, d) == final_value) --first_n;
            if (sweep_max - first_n < 2) return false;        // no constant tail inside the sweep
            if (final_value != lim.coeff(j, d)) return false;  // stabilized to a wrong value
            stab_by_degree[static_cast<size_t>(d)] = std::max(stab_by_degree[static_cast<size_t>(d)], first_n);
        }
    }
    std::ostringstream out;
    out << "checked s-degree<=" << checked_j << ", stabilization n by q-degree:";
    for (int d = 0; d <= checked_d; ++d) out << " d" << d << ":" << stab_by_degree[static_cast<size_t>(d)];
    detail = out.str();
    return true;
}

}  // namespace detail

inline std::vector<Check> build_checks(const VerifyOptions& opts = {}) {
    std::vector<Check> checks;
    auto cap_n = [&](int n) { return std::min(n, opts.n_cap); };
    auto cap_order = [&](int o) { return std::min(o, opts.order_cap); };

    // 1. golden polynomials against the printed small-rank forms
    for (int n = 1; n <= cap_n(4); ++n) {
        checks.push_back({1, "golden", "t_golden", detail::fmt_params({{"n", n}}), n * (n - 1) / 2 + 4,
                          [n](std::string&) { return detail::golden_t(n); }});
    }

    // 2. closed vs brute double-coset series
    for (int n = 2; n <= cap_n(6); ++n) {
        int order = cap_order(24);
        checks.push_back({2, "closed-vs-brute", "t_closed_vs_brute", detail::fmt_params({{"n", n}, {"order", order}}),
                          order, [n, order](std::string&) { return agree(t_closed(n, order), t_brute(n, order)); }});
    }

    // 3. normalization at s = -1
    for (int n = 1; n <= cap_n(12); ++n) {
        checks.push_back({3, "normalization", "t_at_minus_one", detail::fmt_params({{"n", n}}), n * (n - 1) / 2 + 4,
                          [n](std::string&) {
                              BivarSeries t = detail::t_closed_polynomial(n);
                              return t.specialize_outer(-1) == Series::one(t.inner_order());
                          }});
    }

    // 4. L = P(q^2)/F on enumerated data
    for (int n = 1; n <= cap_n(5); ++n) {
        for (Automorphism aut : {Automorphism::identity, Automorphism::flip}) {
            int order = cap_order(16);
            checks.push_back({4, "lusztig", "lusztig_symmetric",
                              detail::fmt_params({{"n", n}, {"flip", aut == Automorphism::flip}, {"order", order}}),
                              order, [n, aut, order](std::string&) {
                                  return lusztig_identity_check(GroupDescriptor::symmetric(n), aut, order);
                              }});
        }
    }
    for (int n = 2; n <= cap_n(4); ++n) {
        for (Automorphism aut : {Automorphism::identity, Automorphism::flip}) {
            int order = cap_order(14);
            checks.push_back({4, "lusztig", "lusztig_affine",
                              detail::fmt_params({{"n", n}, {"flip", aut == Automorphism::flip}, {"order", order}}),
                              order, [n, aut, order](std::string&) {
                                  return lusztig_identity_check(GroupDescriptor::affine_symmetric(n), aut, order);
                              }});
        }
    }
    for (int n = 1; n <= cap_n(4); ++n) {
        for (int f = n; f >= 0; f -= 2) {
            int order = cap_order(12);
            checks.push_back({4, "lusztig", "lusztig_universal",
                              detail::fmt_params({{"n", n}, {"f", f}, {"order", order}}), order,
                              [n, f, order](std::string&) {
                                  UCAut aut = uc_standard_aut(n, f);
                                  Series lhs = uc_brute_L(n, aut, order);
                                  Series rhs = substitute_power(uc_brute_P(n, order), 2) *
                                               invert(uc_brute_F(n, aut, order));
                                  return agree(lhs, rhs);
                              }});
        }
    }

    // 5. the product formulas for L
    for (int n = 1; n <= cap_n(5); ++n) {
        int order = cap_order(16);
        checks.push_back({5, "products", "l_product_symmetric", detail::fmt_params({{"n", n}, {"order", order}}),
                          order, [n, order](std::string&) {
                              GroupDescriptor g = GroupDescriptor::symmetric(n);
                              return agree(l_brute(g, Automorphism::identity, order), l_closed(g, order));
                          }});
    }
    for (int n = 2; n <= cap_n(4); ++n) {
        int order = cap_order(14);
        checks.push_back({5, "products", "l_product_affine", detail::fmt_params({{"n", n}, {"order", order}}),
                          order, [n, order](std::string&) {
                              GroupDescriptor g = GroupDescriptor::affine_symmetric(n);
                              return agree(l_brute(g, Automorphism::identity, order), l_closed(g, order));
                          }});
    }

    // 6. the q-Chebyshev correspondence
    for (int n = 1; n <= cap_n(16); ++n) {
        checks.push_back({6, "chebyshev", "main2", detail::fmt_params({{"n", n}}), n * (n - 1) / 2 + 4,
                          [n](std::string&) { return main2_check(n); }});
    }
    for (int n = 1; n <= cap_n(12); ++n) {
        checks.push_back({6, "chebyshev", "cor1_classical", detail::fmt_params({{"n", n}}), n * (n - 1) / 2 + 4,
                          [n](std::string&) { return cor1_check(n); }});
        checks.push_back({6, "chebyshev", "rescale", detail::fmt_params({{"n", n}}), n * (n - 1) / 2 + 4,
                          [n](std::string&) { return rescale_check(n); }});
    }

    // 7. the identity ladder behind the closed form of T
    for (int k = 0; k <= 8; ++k) {
        checks.push_back({7, "ladder", "tech_identity", detail::fmt_params({{"k", k}}), std::max(1, k * k),
                          [k](std::string&) { return tech_check(k); }});
    }
    for (int k = 0; k <= 6; ++k) {
        int order = cap_order(12);
        checks.push_back({7, "ladder", "composition_sum", detail::fmt_params({{"k", k}, {"order", order}}), order,
                          [k, order](std::string&) { return csum_check(k, order); }});
    }
    for (int n = 2; n <= cap_n(6); ++n) {
        std::vector<std::vector<int>> cs{{}};
        std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& c, int remaining) {
            for (int ci = 1; ci <= remaining; ++ci) {
                c.push_back(ci);
                cs.push_back(c);
                gen(c, remaining - ci);
                c.pop_back();
            }
        };
        std::vector<int> scratch;
        gen(scratch, std::min(3, n / 2));
        for (const auto& c : cs) {
            int order = cap_order(16);
            std::ostringstream name;
            name << "n=" << n << " c=(";
            for (size_t i = 0; i < c.size(); ++i) name << (i ? "," : "") << c[i];
            name << ") order=" << order;
            checks.push_back({7, "ladder", "mu_fixed_sum", name.str(), order,
                              [n, c, order](std::string&) { return mufixed_check(n, c, order); }});
        }
    }
    for (int n = 2; n <= cap_n(6); ++n) {
        for (int k = 0; k <= n / 2 + 1; ++k) {
            int order = cap_order(16);
            checks.push_back({7, "ladder", "sigma_closed_vs_brute",
                              detail::fmt_params({{"n", n}, {"k", k}, {"order", order}}), order,
                              [n, k, order](std::string&) {
                                  return agree(sigma_closed(n, k, order), sigma_brute(n, k, order));
                              }});
        }
        int order = cap_order(16);
        checks.push_back({7, "ladder", "t_from_sigma", detail::fmt_params({{"n", n}, {"order", order}}), order,
                          [n, order](std::string&) {
                              Series one_pq = Series::one(order) + Series::monomial(1, 1, order);
                              Series ratio = (Series::one(order) - Series::monomial(1, 1, order)) * invert(one_pq);
                              Series prefactor = power(one_pq, n) *
                                                 invert(Series::one(order) + Series::monomial(1, n, order));
                              BivarSeries sum(n / 2, order);
                              for (int k = 0; k <= n / 2; ++k) {
                                  sum += BivarSeries::outer_monomial(power(ratio, k) * sigma_closed(n, k, order), k,
                                                                     n / 2);
                              }
                              return agree(scale(sum, prefactor), t_closed(n, order));
                          }});
    }

    // 8. structural oracles for the coset combinatorics
    checks.push_back({8, "structural", "omega_round_trips", "samples=500", 0,
                      [opts](std::string& detail) { return detail::omega_round_trips(opts.n_cap, detail); }});
    for (int n = 2; n <= cap_n(4); ++n) {
        checks.push_back({8, "structural", "omega_equals_ball", detail::fmt_params({{"n", n}, {"max_len", 12}}), 0,
                          [n](std::string&) { return detail::omega_matches_ball(n, 12); }});
        checks.push_back({8, "structural", "absolute_length_formulas",
                          detail::fmt_params({{"n", n}, {"max_len", 10}}), 0,
                          [n](std::string&) { return detail::absolute_length_formulas_match(n, 10); }});
    }
    for (int n = 2; n <= cap_n(5); ++n) {
        int order = cap_order(16);
        checks.push_back({8, "structural", "fixed_series_closed_vs_brute",
                          detail::fmt_params({{"n", n}, {"max_len", 10}, {"order", order}}), order,
                          [n, order](std::string&) { return detail::fixed_series_match(n, 10, order); }});
        checks.push_back({8, "structural", "omega_length_three_ways",
                          detail::fmt_params({{"n", n}, {"max_len", 12}}), 0,
                          [n](std::string&) { return detail::omega_lengths_match(n, 12); }});
    }

    // 9. the n -> infinity limit
    {
        int order = cap_order(20);
        checks.push_back({9, "limit", "sum_equals_product", detail::fmt_params({{"order", order}, {"s_degree", 4}}),
                          order, [order](std::string&) {
                              return agree(limit_sum_form(order, 4), limit_product_form(order, 4));
                          }});
        int sweep = cap_n(20);
        int max_d = cap_order(12);
        checks.push_back({9, "limit", "t_coefficient_stabilization",
                          detail::fmt_params({{"sweep_n", sweep}, {"max_q_degree", max_d}, {"max_s_degree", 3}}),
                          max_d, [sweep, max_d](std::string& detail) {
                              return detail::limit_stabilization(sweep, max_d, 3, detail);
                          }});
    }

    // 10. the universal Coxeter family
    for (int n = 1; n <= cap_n(4); ++n) {
        int order = cap_order(12);
        checks.push_back({10, "universal", "uc_poincare", detail::fmt_params({{"n", n}, {"order", order}}), order,
                          [n, order](std::string&) { return agree(uc_closed_P(n, order), uc_brute_P(n, order)); }});
        for (int f = n; f >= 0; f -= 2) {
            checks.push_back({10, "universal", "uc_fixed", detail::fmt_params({{"n", n}, {"f", f}, {"order", order}}),
                              order, [n, f, order](std::string&) {
                                  return agree(uc_closed_F(n, f, order), uc_brute_F(n, uc_standard_aut(n, f), order));
                              }});
            checks.push_back({10, "universal", "uc_twisted", detail::fmt_params({{"n", n}, {"f", f}, {"order", order}}),
                              order, [n, f, order](std::string&) {
                                  return agree(uc_closed_L(n, f, order), uc_brute_L(n, uc_standard_aut(n, f), order));
                              }});
        }
        for (int j = 0; j <= n; ++j) {
            checks.push_back({10, "universal", "uc_tj", detail::fmt_params({{"n", n}, {"j", j}, {"order", order}}),
                              order, [n, j, order](std::string&) {
                                  return agree(uc_closed_TJ(n, j, order), uc_brute_TJ(n, j, order));
                              }});
        }
    }
    for (int n = 3; n <= cap_n(4); ++n) {
        for (int j = 1; j < n; ++j) {
            int order = cap_order(12);
            checks.push_back({10, "universal", "uc_tj_not_polynomial",
                              detail::fmt_params({{"n", n}, {"j", j}, {"order", order}}), order,
                              [n, j, order](std::string&) {
                                  BivarSeries tj = uc_closed_TJ(n, j, order);
                                  return tj.coeff(1, order) != 0;
                              }});
        }
    }

    return checks;
}

/* Run the checks on a bounded worker pool; results keep registry order so the
 * report bytes do not depend on the job count. */
inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs = 1) {
    if (jobs < 1) jobs = 1;
    std::vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            const Check& c = checks[i];
            CheckResult r{c.criterion, c.suite, c.name, c.params, c.order, false, ""};
            try {
                r.pass = c.run(r.detail);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
            results[i] = std::move(r);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string report_json(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "[\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const CheckResult& r = results[i];
        out << "  {\"check\":\"" << json_escape(r.name) << "\",\"params\":\"" << json_escape(r.params)
            << "\",\"status\":\"" << (r.pass ? "pass" : "fail") << "\",\"order\":" << r.order;
        if (!r.detail.empty()) out << ",\"detail\":\"" << json_escape(r.detail) << "\"";
        out << "}";
        if (i + 1 < results.size()) out << ",";
        out << "\n";
    }
    out << "]\n";
    return out.str();
}

}  // namespace coxq
