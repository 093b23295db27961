#include "hz/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hz {

void finalize(IdentityReport& r, double tol) {
    r.abs_residual = std::abs(r.lhs - r.rhs);
    double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    r.rel_residual = scale > 0 ? r.abs_residual / scale : 0.0;
    r.tolerance = std::max(tol, 3.0 * (r.lhs_err + r.rhs_err));
    r.pass = std::isfinite(r.abs_residual) && (r.abs_residual <= r.tolerance || r.rel_residual <= r.tolerance);
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string complex_json(cplx z) { return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]"; }

std::string param_json(const ParamValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
            else if constexpr (std::is_same_v<T, double>) return format_double(x);
            else if constexpr (std::is_same_v<T, cplx>) return complex_json(x);
            else return quote(x);
        },
        v);
}

std::string param_plain(const ParamValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
            else if constexpr (std::is_same_v<T, double>) return format_double(x);
            else if constexpr (std::is_same_v<T, cplx>) {
                if (x.imag() == 0.0) return format_double(x.real());
                return format_double(x.real()) + (std::signbit(x.imag()) ? "" : "+") + format_double(x.imag()) + "i";
            } else return x;
        },
        v);
}

std::string params_plain(const ParamList& ps) {
    std::string out;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ";";
        out += ps[i].first + "=" + param_plain(ps[i].second);
    }
    return out;
}

double read_double(const nlohmann::ordered_json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

}  // namespace

std::string to_json(const IdentityReport& r) {
    std::ostringstream o;
    o << "{\"identity\": " << quote(r.identity) << ", \"params\": {";
    for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) o << ", ";
        o << quote(r.params[i].first) << ": " << param_json(r.params[i].second);
    }
    o << "}, \"lhs\": " << complex_json(r.lhs) << ", \"rhs\": " << complex_json(r.rhs)
      << ", \"abs_residual\": " << format_double(r.abs_residual)
      << ", \"rel_residual\": " << format_double(r.rel_residual)
      << ", \"tolerance\": " << format_double(r.tolerance)
      << ", \"pass\": " << (r.pass ? "true" : "false")
      << ", \"terms_used\": " << r.terms_used
      << ", \"runtime_ms\": " << format_double(r.runtime_ms);
    if (!r.notes.empty()) {
        o << ", \"notes\": [";
        for (size_t i = 0; i < r.notes.size(); ++i) o << (i ? ", " : "") << quote(r.notes[i]);
        o << "]";
    }
    o << "}";
    return o.str();
}

std::string to_json(const std::vector<IdentityReport>& rs) {
    std::string out = "[\n";
    for (size_t i = 0; i < rs.size(); ++i) {
        out += "  " + to_json(rs[i]);
        out += (i + 1 < rs.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string to_csv(const std::vector<IdentityReport>& rs) {
    std::string out = "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,tolerance,pass,terms_used,runtime_ms\n";
    for (const auto& r : rs) {
        out += r.identity + ",\"" + params_plain(r.params) + "\"," + format_double(r.lhs.real()) + "," +
               format_double(r.lhs.imag()) + "," + format_double(r.rhs.real()) + "," + format_double(r.rhs.imag()) +
               "," + format_double(r.abs_residual) + "," + format_double(r.rel_residual) + "," +
               format_double(r.tolerance) + "," + (r.pass ? "true" : "false") + "," + std::to_string(r.terms_used) +
               "," + format_double(r.runtime_ms) + "\n";
    }
    return out;
}

std::string to_text(const std::vector<IdentityReport>& rs) {
    std::ostringstream o;
    int failed = 0;
    for (const auto& r : rs) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-5s %-14s abs=%.3e rel=%.3e tol=%.1e  ", r.pass ? "PASS" : "FAIL",
                      r.identity.c_str(), r.abs_residual, r.rel_residual, r.tolerance);
        o << buf << params_plain(r.params) << "\n";
        for (const auto& n : r.notes) o << "      note: " << n << "\n";
        if (!r.pass) ++failed;
    }
    o << rs.size() - failed << "/" << rs.size() << " passed\n";
    return o.str();
}

std::string render(const std::vector<IdentityReport>& rs, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return to_json(rs);
        case OutputFormat::csv: return to_csv(rs);
        case OutputFormat::text: return to_text(rs);
    }
    return {};
}

std::vector<IdentityReport> reports_from_json(const std::string& text) {
    auto doc = nlohmann::ordered_json::parse(text);
    if (doc.is_object()) doc = nlohmann::ordered_json::array({doc});
    std::vector<IdentityReport> out;
    for (const auto& j : doc) {
        IdentityReport r;
        r.identity = j.at("identity").get<std::string>();
        for (const auto& [key, v] : j.at("params").items()) {
            if (v.is_number_integer()) r.params.emplace_back(key, v.get<long long>());
            else if (v.is_number() || v.is_null()) r.params.emplace_back(key, read_double(v));
            else if (v.is_array()) r.params.emplace_back(key, cplx(read_double(v[0]), read_double(v[1])));
            else r.params.emplace_back(key, v.get<std::string>());
        }
        r.lhs = {read_double(j.at("lhs")[0]), read_double(j.at("lhs")[1])};
        r.rhs = {read_double(j.at("rhs")[0]), read_double(j.at("rhs")[1])};
        r.abs_residual = read_double(j.at("abs_residual"));
        r.rel_residual = read_double(j.at("rel_residual"));
        r.tolerance = read_double(j.at("tolerance"));
        r.pass = j.at("pass").get<bool>();
        r.terms_used = j.at("terms_used").get<long long>();
        r.runtime_ms = read_double(j.at("runtime_ms"));
        if (j.contains("notes"))
            for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hz
