#include "hz/cli.hpp"

#include "hz/asym.hpp"
#include "hz/herglotz.hpp"
#include "hz/lambert.hpp"
#include "hz/quadrature.hpp"
#include "hz/report.hpp"
#include "hz/special.hpp"
#include "hz/suites.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace hz {

namespace {

double parse_real(std::string_view s, const std::string& whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw DomainError("cannot parse number '" + whole + "'");
    return v;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

cplx parse_cplx(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw DomainError("empty number");
    if (s.back() != 'i' && s.back() != 'j') return parse_real(s, raw);
    std::string_view body(s.data(), s.size() - 1);
    size_t split = std::string_view::npos;
    for (size_t p = body.size(); p-- > 1;)
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    auto imag_part = [&](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t, raw);
    };
    if (split == std::string_view::npos) return {0.0, imag_part(body)};
    return {parse_real(body.substr(0, split), raw), imag_part(body.substr(split))};
}

std::vector<cplx> parse_cplx_list(const std::vector<std::string>& items, const char* what) {
    std::vector<cplx> out;
    for (const auto& s : items) {
        if (trim(s).empty()) throw DomainError(std::string("empty entry in the ") + what + " list");
        out.push_back(parse_cplx(s));
    }
    return out;
}

namespace {

struct RawFlags {
    std::vector<std::string> k, N, x, m, alpha, a;
    std::string tolerance, precision, format, out, parallelism;
    bool timing = false;
};

struct Settings {
    int precision = 16;
    std::optional<double> tolerance;
    OutputFormat format = OutputFormat::json;
    std::string out;
    int parallelism = 1;
    bool timing = false;
};

std::vector<double> reals(const std::vector<std::string>& items, const char* what) {
    std::vector<double> out;
    for (cplx z : parse_cplx_list(items, what)) {
        if (z.imag() != 0.0) throw DomainError(std::string(what) + " must be real");
        out.push_back(z.real());
    }
    return out;
}

double single(const std::vector<std::string>& items, const char* what, double dflt) {
    std::vector<double> v = reals(items, what);
    if (v.empty()) return dflt;
    if (v.size() > 1) throw DomainError(std::string(what) + " takes a single value here");
    return v[0];
}

int to_int(double v, const char* what) {
    if (v != std::round(v) || std::abs(v) > 1e6) throw DomainError(std::string(what) + " must be an integer");
    return static_cast<int>(v);
}

Settings settings(const RawFlags& r, OutputFormat dflt_format) {
    Settings s;
    if (!r.precision.empty()) {
        double p = parse_real(trim(r.precision), r.precision);
        if (p != std::round(p) || p < 15) throw DomainError("precision must be an integer >= 15");
        if (p > 16) throw DomainError("only double precision is available: precision must be 15 or 16");
        s.precision = static_cast<int>(p);
    }
    if (!r.tolerance.empty()) {
        double t = parse_real(trim(r.tolerance), r.tolerance);
        if (!(t > 0) || t < std::pow(10.0, 4 - s.precision))
            throw DomainError("tolerance must be >= 1e" + std::to_string(4 - s.precision));
        s.tolerance = t;
    }
    s.format = dflt_format;
    if (!r.format.empty()) {
        if (r.format == "json") s.format = OutputFormat::json;
        else if (r.format == "csv") s.format = OutputFormat::csv;
        else if (r.format == "text") s.format = OutputFormat::text;
        else throw DomainError("format must be json, csv or text");
    }
    s.out = r.out;
    unsigned hw = std::thread::hardware_concurrency();
    s.parallelism = hw ? static_cast<int>(hw) : 1;
    if (!r.parallelism.empty()) {
        double p = parse_real(trim(r.parallelism), r.parallelism);
        if (p != std::round(p) || p < 1 || p > 1024) throw DomainError("parallelism must be an integer in [1, 1024]");
        s.parallelism = static_cast<int>(p);
    }
    s.timing = r.timing;
    return s;
}

void emit(const Settings& s, const std::string& text, std::ostream& out) {
    if (s.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(s.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + s.out + "'");
    f << text;
    if (!f) throw DomainError("cannot write output file '" + s.out + "'");
}

std::string cplx_plain(cplx z) {
    if (z.imag() == 0.0) return format_double(z.real());
    return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

// Shortest round-trip form, for arguments echoed in text output.
std::string short_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, p) : format_double(v);
}

std::string cplx_short(cplx z) {
    if (z.imag() == 0.0) return short_double(z.real());
    return short_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + short_double(z.imag()) + "i";
}

std::string cplx_json(cplx z) { return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]"; }

// ---------------------------------------------------------------- eval

int cmd_eval(const std::string& fn, const RawFlags& r, const Settings& s, std::ostream& out) {
    const double k = single(r.k, "k", 1.0), N = single(r.N, "N", 1.0), a = single(r.a, "a", 1.0);
    const bool is_lambert = fn == "lambert";
    std::vector<cplx> xs = parse_cplx_list(is_lambert && !r.alpha.empty() ? r.alpha : r.x, is_lambert ? "alpha" : "x");
    if (xs.empty()) throw DomainError(std::string("eval needs --") + (is_lambert ? "alpha" : "x"));
    auto real_x = [](cplx x) {
        if (x.imag() != 0.0) throw DomainError("this function takes a real argument");
        return x.real();
    };
    struct Row {
        std::string params;
        std::string params_json;
        EvalOutcome o;
    };
    std::vector<Row> rows;
    for (cplx x : xs) {
        EvalOutcome o;
        std::string p, pj;
        auto param = [&](const std::string& key, const std::string& plain, const std::string& js) {
            p += (p.empty() ? "" : ", ") + key + "=" + plain;
            pj += (pj.empty() ? "" : ", ") + std::string("\"") + key + "\": " + js;
        };
        auto num = [&](const std::string& key, double v) { param(key, short_double(v), format_double(v)); };
        auto nominal = [](cplx v) { return EvalOutcome{v, 1e-15 * std::abs(v), 0, Method::direct_sum}; };
        auto quad = [](const QuadResult& q) { return EvalOutcome{q.value, q.abs_err, q.panels, Method::quadrature}; };
        if (fn == "F") {
            o = herglotz_F(x);
        } else if (fn == "Fk") {
            num("k", k);
            o = higher_F_k(to_int(k, "k"), x);
        } else if (fn == "FkN") {
            num("k", k), num("N", N);
            o = ext_F(k, N, x);
        } else if (fn == "polylog") {
            num("s", k);
            param("t", cplx_short(x), cplx_json(x));
            o = nominal(polylog(k, x));
        } else if (fn == "gen_polylog") {
            num("N", N), num("s", k);
            param("t", cplx_short(x), cplx_json(x));
            o = nominal(gen_polylog(to_int(N, "N"), k, x));
        } else if (fn == "J") {
            o = quad(J_integral(real_x(x)));
        } else if (fn == "JkN") {
            num("k", k), num("N", N);
            o = quad(J_kN(to_int(k, "k"), to_int(N, "N"), real_x(x)));
        } else if (fn == "lambert") {
            num("p", k), num("N", N), num("a", a);
            param("alpha", cplx_short(x), cplx_json(x));
            o = lambert_sum(LambertSpec{k, to_int(N, "N"), x, a});
        } else {
            throw DomainError("unknown function '" + fn + "' (F, Fk, FkN, polylog, gen_polylog, J, JkN, lambert)");
        }
        if (fn != "polylog" && fn != "gen_polylog" && fn != "lambert") param("x", cplx_short(x), cplx_json(x));
        rows.push_back({p, pj, o});
    }
    std::ostringstream o;
    switch (s.format) {
        case OutputFormat::text:
            for (const auto& row : rows)
                o << fn << "(" << row.params << ") = " << cplx_plain(row.o.value) << "  abs_err=" << format_double(row.o.abs_err)
                  << "  method=" << method_name(row.o.method) << "  terms=" << row.o.terms_used << "\n";
            break;
        case OutputFormat::csv:
            o << "function,params,value_re,value_im,abs_err,method,terms_used\n";
            for (const auto& row : rows)
                o << fn << ",\"" << row.params << "\"," << format_double(row.o.value.real()) << "," << format_double(row.o.value.imag())
                  << "," << format_double(row.o.abs_err) << "," << method_name(row.o.method) << "," << row.o.terms_used << "\n";
            break;
        case OutputFormat::json:
            o << "[\n";
            for (size_t i = 0; i < rows.size(); ++i)
                o << "  {\"function\": \"" << fn << "\", \"params\": {" << rows[i].params_json << "}, \"value\": " << cplx_json(rows[i].o.value)
                  << ", \"abs_err\": " << format_double(rows[i].o.abs_err) << ", \"method\": \"" << method_name(rows[i].o.method)
                  << "\", \"terms_used\": " << rows[i].o.terms_used << "}" << (i + 1 < rows.size() ? ",\n" : "\n");
            o << "]\n";
            break;
    }
    emit(s, o.str(), out);
    return exit_pass;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& id, const RawFlags& r, const Settings& s, std::ostream& out, std::ostream& err) {
    if (!is_suite(id)) throw DomainError("unknown suite '" + id + "'");
    SuiteParams sp;
    sp.k = reals(r.k, "k");
    sp.N = reals(r.N, "N");
    sp.m = reals(r.m, "m");
    sp.a = reals(r.a, "a");
    sp.x = parse_cplx_list(r.x, "x");
    sp.alpha = parse_cplx_list(r.alpha, "alpha");
    sp.tolerance = s.tolerance;
    std::vector<GridTask> tasks = build_suite(id, sp);
    RunResult rr = run_tasks(tasks, s.parallelism, s.timing);
    emit(s, render(rr.reports, s.format), out);
    size_t passed = 0;
    for (const auto& rep : rr.reports) passed += rep.pass;
    err << "verify " << id << ": " << passed << "/" << rr.reports.size() << " passed\n";
    if (rr.domain_error) {
        err << "error: " << rr.error << "\n";
        return exit_config;
    }
    return passed == rr.reports.size() ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------- asym

int cmd_asym(const std::string& target, const RawFlags& r, const Settings& s, std::ostream& out) {
    AsymQuery q;
    q.target = parse_asym_target(target);
    q.k = single(r.k, "k", 1.0);
    q.N = single(r.N, "N", 1.0);
    q.m = to_int(single(r.m, "m", 1.0), "m");
    const bool lam = q.target == AsymTarget::lambert;
    std::vector<cplx> xs = parse_cplx_list(lam && !r.alpha.empty() ? r.alpha : r.x, lam ? "alpha" : "x");
    if (xs.empty()) throw DomainError(std::string("asym needs a non-empty --") + (lam ? "alpha" : "x") + " list");
    struct Row {
        cplx x;
        AsymResult a;
        EvalOutcome d;
        double diff;
        bool pass;
    };
    std::vector<Row> rows;
    for (cplx x : xs) {
        AsymResult a = asym_eval(q, x);
        EvalOutcome d = asym_direct(q, x);
        double diff = std::abs(a.value - d.value);
        rows.push_back({x, a, d, diff, diff <= a.remainder_bound + d.abs_err});
    }
    const char* var = lam ? "alpha" : "x";
    std::ostringstream o;
    switch (s.format) {
        case OutputFormat::text: {
            char buf[200];
            std::snprintf(buf, sizeof buf, "%-14s %-24s %-24s %-10s %-10s %s\n", var, "direct", "asymptotic", "|diff|", "bound", "ok");
            o << buf;
            for (const auto& w : rows) {
                std::snprintf(buf, sizeof buf, "%-14s %-24s %-24s %-10.3e %-10.3e %s\n", cplx_short(w.x).c_str(), cplx_plain(w.d.value).c_str(),
                              cplx_plain(w.a.value).c_str(), w.diff, w.a.remainder_bound + w.d.abs_err, w.pass ? "yes" : "NO");
                o << buf;
            }
            break;
        }
        case OutputFormat::csv:
            o << var << ",direct_re,direct_im,asymptotic_re,asymptotic_im,abs_diff,remainder_bound,direct_err,terms_used,pass\n";
            for (const auto& w : rows)
                o << cplx_plain(w.x) << "," << format_double(w.d.value.real()) << "," << format_double(w.d.value.imag()) << ","
                  << format_double(w.a.value.real()) << "," << format_double(w.a.value.imag()) << "," << format_double(w.diff) << ","
                  << format_double(w.a.remainder_bound) << "," << format_double(w.d.abs_err) << "," << w.a.terms_used << ","
                  << (w.pass ? "true" : "false") << "\n";
            break;
        case OutputFormat::json:
            o << "[\n";
            for (size_t i = 0; i < rows.size(); ++i) {
                const auto& w = rows[i];
                o << "  {\"target\": \"" << asym_target_name(q.target) << "\", \"" << var << "\": " << cplx_json(w.x)
                  << ", \"direct\": " << cplx_json(w.d.value) << ", \"asymptotic\": " << cplx_json(w.a.value)
                  << ", \"abs_diff\": " << format_double(w.diff) << ", \"remainder_bound\": " << format_double(w.a.remainder_bound)
                  << ", \"direct_err\": " << format_double(w.d.abs_err) << ", \"terms_used\": " << w.a.terms_used
                  << ", \"pass\": " << (w.pass ? "true" : "false") << "}" << (i + 1 < rows.size() ? ",\n" : "\n");
            }
            o << "]\n";
            break;
    }
    emit(s, o.str(), out);
    for (const auto& w : rows)
        if (!w.pass) return exit_fail;
    return exit_pass;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evaluate extended higher Herglotz functions and verify their identities.", "herglotz-lab"};
    RawFlags r;
    auto list = [&](const char* name, std::vector<std::string>& v, const char* help) { app.add_option(name, v, help)->delimiter(','); };
    list("--k", r.k, "k (order); the exponent p for eval lambert");
    list("--N", r.N, "N");
    list("--x", r.x, "argument list, complex as a+bi");
    list("--m", r.m, "m");
    list("--alpha", r.alpha, "alpha list");
    list("--a", r.a, "shift a");
    app.add_option("--tolerance", r.tolerance, "pass threshold (replaces per-identity defaults)");
    app.add_option("--precision", r.precision, "decimal digits: 15 or 16");
    app.add_option("--format", r.format, "json, csv or text");
    app.add_option("--out", r.out, "write the report to this file");
    app.add_option("--parallelism", r.parallelism, "worker threads");
    app.add_flag("--timing", r.timing, "record runtime_ms (otherwise 0, for byte-identical output)");
    app.set_config("--config", "", "flat key=value file; flags override it")->envname("HERGLOTZ_LAB_CONFIG");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    std::string name;
    auto* ev = app.add_subcommand("eval", "evaluate F, Fk, FkN, polylog, gen_polylog, J, JkN or lambert");
    auto* ve = app.add_subcommand("verify", "run a verification suite or all");
    auto* as = app.add_subcommand("asym", "compare an asymptotic expansion with direct evaluation");
    for (auto* sc : {ev, ve, as}) sc->fallthrough();
    ev->add_option("function", name)->required();
    ve->add_option("suite", name)->required();
    as->add_option("target", name, "FkN-inf, FkN-zero, pair-inf, pair-zero or lambert")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? exit_pass : exit_config;
    }
    try {
        if (ev->parsed()) return cmd_eval(name, r, settings(r, OutputFormat::text), out);
        if (ve->parsed()) return cmd_verify(name, r, settings(r, OutputFormat::json), out, err);
        return cmd_asym(name, r, settings(r, OutputFormat::text), out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return exit_fail;
    }
}

}  // namespace hz
