#include "coxq/affine.hpp"
#include "coxq/assembly.hpp"
#include "coxq/chebyshev.hpp"
#include "coxq/coset.hpp"
#include "coxq/series.hpp"
#include "coxq/universal.hpp"
#include "coxq/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kUsageError = 2;

struct ComputeArgs {
    std::string family = "affine-sym";
    std::string kind;
    std::string format = "text";
    int n = 0;
    int f = -1;
    int j = -1;
    int k = -1;
    int order = 24;
    int s_degree = 4;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kUsageError);
}

/* Shrink a polynomial-valued bivariate series to its honest degrees so text
 * and JSON output carry no trailing truncation zeros. */
coxq::BivarSeries trim_polynomial(const coxq::BivarSeries& b) {
    int outer = std::max(0, b.top_outer_degree());
    int inner = 0;
    for (int k = 0; k <= b.outer_order(); ++k) inner = std::max(inner, b.coeff(k).top_degree());
    inner = std::max(inner, 0);
    coxq::BivarSeries r(outer, inner);
    for (int k = 0; k <= outer; ++k) {
        r += coxq::BivarSeries::outer_monomial(coxq::truncated(b.coeff(k), inner), k, outer);
    }
    return r;
}

void emit_series(const coxq::Series& s, const std::string& format) {
    std::cout << (format == "json" ? coxq::to_json(s) : coxq::to_string(s)) << "\n";
}

void emit_bivar(const coxq::BivarSeries& b, const std::string& format, bool truncated_value) {
    if (format == "json") {
        std::cout << coxq::to_json(b) << "\n";
    } else {
        std::cout << coxq::to_string(b, "s", truncated_value) << "\n";
    }
}

int run_compute(const ComputeArgs& args) {
    using namespace coxq;
    const std::string& kind = args.kind;
    const std::string& fam = args.family;
    if (args.format != "text" && args.format != "json") {
        usage_error("compute supports --format text|json");
    }
    if (args.order < 0) usage_error("--order must be nonnegative");

    auto need_n = [&](int min_n) {
        if (args.n < min_n) usage_error("--n is required and must be at least " + std::to_string(min_n));
    };
    auto group = [&]() {
        return fam == "sym" ? GroupDescriptor::symmetric(args.n) : GroupDescriptor::affine_symmetric(args.n);
    };

    if (kind == "P" || kind == "F" || kind == "L") {
        need_n(1);
        if (fam == "universal") {
            if (kind == "P") {
                emit_series(uc_closed_P(args.n, args.order), args.format);
            } else {
                if (args.f < 0) usage_error("--f is required for universal F and L");
                emit_series(kind == "F" ? uc_closed_F(args.n, args.f, args.order)
                                        : uc_closed_L(args.n, args.f, args.order),
                            args.format);
            }
        } else if (fam == "sym" || fam == "affine-sym") {
            // the fixed-point series for the identity automorphism is the
            // Poincare series itself
            emit_series(kind == "L" ? l_closed(group(), args.order) : poincare_closed(group(), args.order),
                        args.format);
        } else {
            usage_error("unknown --family " + fam);
        }
        return 0;
    }
    if (kind == "LJ") {
        if (fam != "sym") usage_error("--kind LJ applies to --family sym");
        need_n(2);
        emit_bivar(lj_finite_example(args.n, args.order), args.format, true);
        return 0;
    }
    if (kind == "T") {
        need_n(1);
        if (fam == "affine-sym") {
            emit_bivar(trim_polynomial(coxq::detail::t_closed_polynomial(args.n)), args.format, false);
        } else if (fam == "universal") {
            if (args.j < 0) usage_error("--j is required for universal T");
            emit_bivar(uc_closed_TJ(args.n, args.j, args.order), args.format, true);
        } else {
            usage_error("--kind T applies to --family affine-sym or universal");
        }
        return 0;
    }
    if (kind == "sigma") {
        if (fam != "affine-sym") usage_error("--kind sigma applies to --family affine-sym");
        need_n(1);
        if (args.k < 0) usage_error("--k is required for --kind sigma");
        emit_series(sigma_closed(args.n, args.k, args.order), args.format);
        return 0;
    }
    if (kind == "limit") {
        emit_bivar(limit_product_form(args.order, args.s_degree), args.format, true);
        return 0;
    }
    if (kind == "cigler") {
        if (args.n < 0) usage_error("--n must be nonnegative for --kind cigler");
        TrivarPoly p = cigler_T(args.n);
        std::cout << (args.format == "json" ? to_json(p) : to_string(p)) << "\n";
        return 0;
    }
    if (kind == "chebyshev") {
        if (args.n < 0) usage_error("--n must be nonnegative for --kind chebyshev");
        std::vector<Int> p = classical_T(args.n);
        if (args.format == "json") {
            std::cout << "{\"var\":\"x\",\"coeffs\":[";
            for (size_t d = 0; d < p.size(); ++d) std::cout << (d ? "," : "") << p[d];
            std::cout << "]}\n";
        } else {
            std::cout << to_string(p) << "\n";
        }
        return 0;
    }
    if (kind == "omega") {
        if (fam != "affine-sym") usage_error("--kind omega applies to --family affine-sym");
        need_n(2);
        std::vector<CosetDatum> data = enumerate_omega(args.n, args.order);
        if (args.format == "json") {
            std::cout << "[\n";
            for (size_t i = 0; i < data.size(); ++i) {
                std::cout << "  " << to_json(data[i]) << (i + 1 < data.size() ? "," : "") << "\n";
            }
            std::cout << "]\n";
        } else {
            for (const CosetDatum& datum : data) std::cout << to_json(datum) << "\n";
        }
        return 0;
    }
    usage_error("unknown --kind " + kind);
}

int run_verify(const std::string& suite, int n_max, int order, int jobs) {
    using namespace coxq;
    static const std::vector<std::string> kSuites = {"golden",    "closed-vs-brute", "normalization", "lusztig",
                                                     "products",  "chebyshev",       "ladder",        "structural",
                                                     "limit",     "universal",       "all"};
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        usage_error("unknown verify suite '" + suite + "'");
    }
    VerifyOptions opts;
    if (n_max > 0) opts.n_cap = n_max;
    if (order > 0) opts.order_cap = order;
    std::vector<Check> checks;
    for (Check& c : build_checks(opts)) {
        if (suite == "all" || c.suite == suite) checks.push_back(std::move(c));
    }
    std::vector<CheckResult> results = run_checks(checks, jobs);
    std::cout << report_json(results);
    for (const CheckResult& r : results) {
        if (!r.pass) return 1;
    }
    return 0;
}

int run_table(const std::string& kind, int n_min, int n_max, const std::string& format,
              const std::string& out_dir) {
    using namespace coxq;
    if (kind != "T") usage_error("table supports --kind T");
    if (n_min < 1 || n_max < n_min) usage_error("need 1 <= --n-min <= --n-max");
    if (format != "csv" && format != "text") usage_error("table supports --format csv|text");
    for (int n = n_min; n <= n_max; ++n) {
        BivarSeries t = trim_polynomial(coxq::detail::t_closed_polynomial(n));
        std::ostringstream body;
        body << "q_degree";
        for (int k = 0; k <= t.outer_order(); ++k) body << ",s^" << k;
        body << "\n";
        for (int d = 0; d <= t.inner_order(); ++d) {
            body << d;
            for (int k = 0; k <= t.outer_order(); ++k) body << "," << t.coeff(k, d);
            body << "\n";
        }
        if (format == "csv") {
            std::filesystem::path path = std::filesystem::path(out_dir) / ("T_n" + std::to_string(n) + ".csv");
            std::ofstream file(path);
            if (!file) usage_error("cannot write " + path.string());
            file << body.str();
            std::cout << path.string() << "\n";
        } else {
            std::cout << "n=" << n << "\n" << body.str();
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating-function toolkit for affine symmetric and universal Coxeter groups"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    CLI::App* compute = app.add_subcommand("compute", "print one series or polynomial");
    compute->add_option("--family", cargs.family, "sym|affine-sym|universal")->capture_default_str();
    compute->add_option("--kind", cargs.kind, "P|F|L|LJ|T|sigma|limit|cigler|chebyshev|omega")->required();
    compute->add_option("--n", cargs.n, "rank parameter");
    compute->add_option("--f", cargs.f, "fixed generator count (universal F/L)");
    compute->add_option("--j", cargs.j, "parabolic size (universal T)");
    compute->add_option("--k", cargs.k, "absolute length (sigma)");
    compute->add_option("--order", cargs.order, "truncation order")->capture_default_str();
    compute->add_option("--s-degree", cargs.s_degree, "outer degree for --kind limit")->capture_default_str();
    compute->add_option("--format", cargs.format, "text|json")->capture_default_str();
    int compute_jobs = 1;
    compute->add_option("--jobs", compute_jobs, "accepted for symmetry; compute is single-object");

    std::string suite = "all";
    int vf_n_max = 0, vf_order = 0, vf_jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "run identity checks and print a JSON report");
    verify->add_option("suite", suite, "golden|closed-vs-brute|normalization|lusztig|products|chebyshev|ladder|structural|limit|universal|all")
        ->capture_default_str();
    verify->add_option("--n-max", vf_n_max, "cap the rank sweeps");
    verify->add_option("--order", vf_order, "cap the truncation orders");
    verify->add_option("--jobs", vf_jobs, "worker pool size")->capture_default_str();

    std::string tb_kind = "T", tb_format = "csv", tb_out = ".";
    int tb_n_min = 1, tb_n_max = 6;
    CLI::App* table = app.add_subcommand("table", "emit coefficient tables over a range of ranks");
    table->add_option("--kind", tb_kind, "T")->capture_default_str();
    table->add_option("--n-min", tb_n_min)->capture_default_str();
    table->add_option("--n-max", tb_n_max)->capture_default_str();
    table->add_option("--format", tb_format, "csv|text")->capture_default_str();
    table->add_option("--out-dir", tb_out, "target directory for csv files")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (compute->parsed()) return run_compute(cargs);
        if (verify->parsed()) return run_verify(suite, vf_n_max, vf_order, vf_jobs);
        if (table->parsed()) return run_table(tb_kind, tb_n_min, tb_n_max, tb_format, tb_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
