// Copyright Contributors to the hzeta Project
// SPDX-License-Identifier: Apache-2.0

#include "hzeta/continuation.hpp"
#include "hzeta/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hzeta;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kDomainError = 2, kAccuracyError = 3 };

struct CliConfig {
    std::string precision = "double";
    long max_terms = 10'000'000;
    int quad_depth = 0; // 0: precision default
    double tol = -1.0;  // unset
    std::string format = "text";
    std::string out_path;
    std::string filter = "*";
    int jobs = 1;

    PrecisionContext context() const {
        PrecisionContext ctx =
            precision == "high" ? PrecisionContext::high() : PrecisionContext::standard();
        ctx.max_terms = max_terms;
        if (quad_depth > 0) ctx.quad_depth = quad_depth;
        if (tol > 0.0) ctx.tol_abs = ctx.tol_rel = tol;
        ctx.validate();
        return ctx;
    }
    bool high() const { return precision == "high"; }
    int sig_digits(bool machine) const {
        if (machine) return high() ? 34 : 17;
        return 12;
    }
};

std::complex<double> parse_complex(const std::string& text) {
    // forms: "2", "2.5", "2+3i", "2-3i", "1.5i"
    std::string s = text;
    if (s.empty()) throw domain_error("empty numeric argument");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        size_t split = s.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            // pure imaginary, possibly signed
            if (s.empty() || s == "+" || s == "-") s += "1";
            return {0.0, std::stod(s)};
        }
        std::string re = s.substr(0, split);
        std::string im = s.substr(split);
        if (im == "+" || im == "-") im += "1";
        return {std::stod(re), std::stod(im)};
    }
    return {std::stod(s), 0.0};
}

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void write_output(const CliConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    out << text;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalResult {
    std::complex<double> value;
    double error = 0.0;
    std::string method;
    std::string value_str; // at full working precision
};

template <class R>
EvalResult eval_dispatch(const std::string& fn, const std::vector<std::string>& args,
                         const PrecisionContext& ctx, int digits) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw domain_error("eval " + fn + ": expected " + std::to_string(n) +
                               " argument(s), got " + std::to_string(args.size()));
    };
    EvalResult res;
    auto set_cplx = [&](Cplx<R> v, double err, const std::string& method) {
        res.value = v.to_std();
        res.error = err;
        res.method = method;
        if (Real<R>::to_double(v.im) == 0.0) {
            res.value_str = Real<R>::str(v.re, digits);
        } else {
            using std::abs;
            res.value_str = Real<R>::str(v.re, digits) +
                            (Real<R>::to_double(v.im) < 0 ? " - " : " + ") +
                            Real<R>::str(abs(v.im), digits) + "i";
        }
    };

    if (fn == "zeta_h") {
        need(1);
        auto s = parse_complex(args[0]);
        auto r = zeta_h_ex(Cplx<R>::from_std(s), ctx);
        std::string method = s.real() > 1.05 ? "dirichlet series + euler-maclaurin tail"
                                             : "mellin-split analytic continuation";
        if (r.near_pole) method += " [warning: within 1e-6 of a pole]";
        set_cplx(r.value, r.error, method);
    } else if (fn == "zeta") {
        need(1);
        auto s = parse_complex(args[0]);
        set_cplx(riemann_zeta(Cplx<R>::from_std(s), ctx), 1e2 * Real<R>::eps,
                 s.real() < -0.5 ? "functional equation + euler-maclaurin"
                                 : "euler-maclaurin");
    } else if (fn == "hurwitz_zeta") {
        need(2);
        auto s = parse_complex(args[0]);
        R x = Real<R>::parse(args[1]);
        set_cplx(hurwitz_zeta(Cplx<R>::from_std(s), x, ctx), 1e2 * Real<R>::eps,
                 "euler-maclaurin");
    } else if (fn == "T") {
        need(1);
        auto est = bradley_T(Real<R>::parse(args[0]), ctx);
        set_cplx(Cplx<R>(est.value), est.error, "tanh-sinh quadrature");
    } else if (fn == "G") {
        need(1);
        auto z = parse_complex(args[0]);
        set_cplx(G_fun(Cplx<R>::from_std(z), ctx), ctx.tol_abs,
                 z.real() < 0.95 ? "power part + smooth quadrature"
                                 : "continued representation");
    } else if (fn == "L_sin") {
        need(1);
        int n = std::stoi(args[0]);
        auto est = log_tangent_sin_integral<R>(n, ctx);
        set_cplx(Cplx<R>(est.value), est.error,
                 n > 32 ? "tanh-sinh, subdivided at integrand zeros" : "tanh-sinh quadrature");
    } else if (fn == "w") {
        need(1);
        set_cplx(Cplx<R>(w_function(Real<R>::parse(args[0]), ctx)), 1e2 * Real<R>::eps,
                 "lorentzian h-series with asymptotic tail");
    } else {
        throw domain_error("eval: unknown function '" + fn +
                           "' (expected zeta_h, zeta, hurwitz_zeta, T, G, L_sin, w)");
    }
    return res;
}

int cmd_eval(const CliConfig& cfg, const std::string& fn,
             const std::vector<std::string>& args) {
    PrecisionContext ctx = cfg.context();
    bool machine = cfg.format != "text";
    int digits = cfg.sig_digits(machine);
    EvalResult res = cfg.high() ? eval_dispatch<DDouble>(fn, args, ctx, digits)
                                : eval_dispatch<double>(fn, args, ctx, digits);
    if (cfg.format == "json") {
        nlohmann::json j{{"function", fn},
                         {"args", args},
                         {"value", res.value_str},
                         {"error_estimate", res.error},
                         {"method", res.method}};
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        write_output(cfg, "function,value,error_estimate,method\r\n" + fn + "," +
                              res.value_str + "," + fmt(res.error, 3) + "," + res.method +
                              "\r\n");
    } else {
        write_output(cfg, res.value_str + "   (error estimate <= " + fmt(res.error, 3) +
                              ", method: " + res.method + ")");
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const CliConfig& cfg) {
    PrecisionContext ctx = cfg.context();
    const auto& cat = IdentityCatalog::instance();
    SuiteResult res = cat.run_suite(cfg.filter, ctx, cfg.jobs);
    if (cfg.tol > 0.0) {
        // a user tolerance overrides the per-identity defaults
        res.summary.passed = res.summary.failed = 0;
        for (auto& r : res.reports) {
            r.tol = cfg.tol;
            if (r.status != "skipped")
                r.status = (r.abs_err <= r.tol || r.rel_err <= r.tol) ? "pass" : "fail";
            if (r.status == "pass")
                ++res.summary.passed;
            else if (r.status == "fail")
                ++res.summary.failed;
        }
    }

    if (cfg.format == "json") {
        write_output(cfg, reports_to_json(res));
    } else if (cfg.format == "csv") {
        write_output(cfg, reports_to_csv(res.reports));
    } else {
        std::ostringstream os;
        for (const auto& r : res.reports) {
            os << (r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "SKIP") << "  "
               << r.id;
            if (!r.params.empty()) os << "(" << r.params << ")";
            os << "  abs_err=" << fmt(r.abs_err, 3) << "  rel_err=" << fmt(r.rel_err, 3)
               << "  tol=" << fmt(r.tol, 2) << "\n";
        }
        os << "families: " << res.summary.families << ", checks: " << res.summary.total
           << ", failures: " << res.summary.failed << "\n";
        write_output(cfg, os.str());
    }
    return res.summary.failed == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct Range {
    double lo = 0.0, hi = 0.0, step = 1.0;
};

Range parse_range(const std::string& text, double default_step) {
    Range r;
    r.step = default_step;
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stod(text);
        return r;
    }
    r.lo = std::stod(text.substr(0, dots));
    r.hi = std::stod(text.substr(dots + 2));
    return r;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const CliConfig& cfg, const std::string& kind, const Table& t) {
    if (cfg.format == "json") {
        nlohmann::json j{{"kind", kind}, {"columns", t.columns}, {"rows", t.rows}};
        return j.dump(2);
    }
    std::ostringstream os;
    const char* sep = cfg.format == "csv" ? "," : "  ";
    const char* eol = cfg.format == "csv" ? "\r\n" : "\n";
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? sep : "") << t.columns[i];
    os << eol;
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? sep : "") << row[i];
        os << eol;
    }
    return os.str();
}

template <class R>
Table table_dispatch(const std::string& kind, const std::vector<std::string>& args,
                     const CliConfig& cfg, const PrecisionContext& ctx) {
    bool machine = cfg.format != "text";
    int digits = cfg.sig_digits(machine);
    auto s = [&](R v) { return Real<R>::str(v, digits); };
    Table t;

    if (kind == "zeta_h_even") {
        Range r = parse_range(args.empty() ? "1..5" : args[0], 1.0);
        t.columns = {"m", "zeta_h_2m"};
        for (int m = static_cast<int>(r.lo); m <= static_cast<int>(r.hi); ++m)
            t.rows.push_back({std::to_string(m), s(zeta_h_series(Cplx<R>(R(2 * m)), ctx).re)});
    } else if (kind == "alpha_beta") {
        Range r = parse_range(args.empty() ? "1..5" : args[0], 1.0);
        t.columns = {"n", "alpha_n", "beta_n"};
        for (int n = static_cast<int>(r.lo); n <= static_cast<int>(r.hi); ++n)
            t.rows.push_back({std::to_string(n), s(alpha_coeff<R>(n, ctx)),
                              s(beta_coeff<R>(n, ctx))});
    } else if (kind == "residues") {
        t.columns = {"location", "order", "leading", "residue"};
        int kmax = args.empty() ? 3 : std::stoi(args[0]);
        for (int k = 0; k <= kmax; ++k) {
            auto p = pole_info<R>(k, ctx);
            t.rows.push_back({fmt(p.location.real(), 6), std::to_string(p.order),
                              s(p.leading_exact), s(p.residue_exact)});
        }
    } else if (kind == "T_curve") {
        Range r = parse_range(args.empty() ? "0..0.5" : args[0], 0.01);
        if (args.size() >= 3 && args[1] == "step") r.step = std::stod(args[2]);
        t.columns = {"r", "T_r"};
        for (double x = r.lo; x <= r.hi + 1e-12; x += r.step)
            t.rows.push_back({fmt(x, 6), s(bradley_T(Real<R>::of(x), ctx).value)});
    } else if (kind == "critical_line") {
        Range r = parse_range(args.empty() ? "0..10" : args[0], 0.5);
        if (args.size() >= 3 && args[1] == "step") r.step = std::stod(args[2]);
        t.columns = {"t", "re_zeta_h", "im_zeta_h"};
        for (double x = r.lo; x <= r.hi + 1e-12; x += r.step) {
            Cplx<R> v = zeta_h(Cplx<R>(R(0.5), Real<R>::of(x)), ctx);
            t.rows.push_back({fmt(x, 6), s(v.re), s(v.im)});
        }
    } else {
        throw domain_error("table: unknown kind '" + kind +
                           "' (expected zeta_h_even, alpha_beta, residues, T_curve, "
                           "critical_line)");
    }
    return t;
}

int cmd_table(const CliConfig& cfg, const std::string& kind,
              const std::vector<std::string>& args) {
    PrecisionContext ctx = cfg.context();
    Table t = cfg.high() ? table_dispatch<DDouble>(kind, args, cfg, ctx)
                         : table_dispatch<double>(kind, args, cfg, ctx);
    write_output(cfg, render_table(cfg, kind, t));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"h-zeta function library: evaluation and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--precision", cfg.precision, "working precision")
        ->check(CLI::IsMember({"double", "high"}));
    app.add_option("--max-terms", cfg.max_terms, "series truncation ceiling");
    app.add_option("--quad-depth", cfg.quad_depth, "quadrature refinement levels");
    app.add_option("--tol", cfg.tol, "tolerance override");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to a file");
    app.add_option("--filter", cfg.filter, "identity id filter (exact or prefix*)");
    app.add_option("--jobs", cfg.jobs, "parallel identity evaluations");

    std::string eval_fn;
    std::vector<std::string> eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a function");
    eval->add_option("function", eval_fn, "zeta_h|zeta|hurwitz_zeta|T|G|L_sin|w")->required();
    eval->add_option("args", eval_args, "function arguments");

    auto* verify = app.add_subcommand("verify", "run the identity verification suite");

    std::string table_kind;
    std::vector<std::string> table_args;
    auto* table = app.add_subcommand("table", "emit value tables");
    table->add_option("kind", table_kind,
                      "zeta_h_even|alpha_beta|residues|T_curve|critical_line")
        ->required();
    table->add_option("args", table_args, "range arguments, e.g. 1..5 or 0..0.5 step 0.01");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(cfg, eval_fn, eval_args);
        if (verify->parsed()) return cmd_verify(cfg);
        if (table->parsed()) return cmd_table(cfg, table_kind, table_args);
    } catch (const pole_error& e) {
        std::cerr << "pole error: " << e.what() << " (location " << e.location().real();
        if (e.location().imag() != 0.0) std::cerr << "+" << e.location().imag() << "i";
        std::cerr << ", order " << e.order();
        if (!std::isnan(e.residue())) std::cerr << ", residue " << e.residue();
        std::cerr << ")\n";
        return kDomainError;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what()
                  << " (best value " << e.best_value().real()
                  << ", estimate " << e.error_estimate() << ")\n";
        return kAccuracyError;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
