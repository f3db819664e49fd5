// mjw_cli: oracle tables, asymptotic constants and convergence reports for modified Jacobi weights.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mjw/asymptotics.hpp"
#include "mjw/convergence.hpp"
#include "mjw/ortho_oracle.hpp"
#include "mjw/szego.hpp"
#include "mjw/weight.hpp"

using json = nlohmann::json;

namespace {

enum exit_code { ok = 0, fit_failed = 1, config_error = 2, numerical_error = 3 };

struct config_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::string out_path;
    std::optional<std::string> format;
    std::vector<std::string> quantities;
    std::optional<int> order;
    std::optional<long> seed;  // accepted, unused

    bool json_out(bool by_default = false) const { return format ? *format == "json" : by_default; }
};

// ---- config -----------------------------------------------------------------------

mjw::HKind parse_kind(const std::string& s) {
    if (s == "constant") return mjw::HKind::constant;
    if (s == "exp_poly") return mjw::HKind::exp_poly;
    if (s == "positive_poly") return mjw::HKind::positive_poly;
    throw config_failure("unknown h kind '" + s + "'");
}

mjw::WeightSpec parse_weight(const json& j) {
    if (!j.is_object()) throw config_failure("weight must be an object");
    mjw::WeightSpec w;
    w.alpha = j.at("alpha").get<double>();
    w.beta = j.at("beta").get<double>();
    if (j.contains("h")) {
        const json& h = j.at("h");
        w.h_kind = parse_kind(h.at("kind").get<std::string>());
        w.h_coeffs = h.at("coeffs").get<std::vector<double>>();
    }
    w.margin = j.value("margin", 0.5);
    return w;
}

struct RunConfig {
    mjw::WeightSpec weight;
    int N = 40;
    std::vector<int> n;
    std::map<std::string, std::vector<int>> n_by_quantity;
    std::vector<mjw::cplx> z;
    std::vector<double> x;
    std::vector<double> u;
    std::vector<int> k{1};
    int order = 2;
    std::vector<std::string> quantities;
    double tol_constant = 5e-3;
    double tol_zeros_rel = 0.02;
    mjw::SzegoOptions szego;
};

void require_increasing_list(const std::vector<int>& v, const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) throw config_failure(std::string(name) + " must be strictly increasing");
}

RunConfig parse_config(const json& j) {
    RunConfig c;
    if (!j.is_object()) throw config_failure("config must be a JSON object");
    c.weight = parse_weight(j.contains("weight") ? j.at("weight") : j);
    c.N = j.value("N", 40);
    if (j.contains("n")) c.n = j.at("n").get<std::vector<int>>();
    if (j.contains("n_by_quantity"))
        for (const auto& [q, v] : j.at("n_by_quantity").items()) {
            c.n_by_quantity[q] = v.get<std::vector<int>>();
            require_increasing_list(c.n_by_quantity[q], "n_by_quantity");
        }
    if (j.contains("z"))
        for (const auto& p : j.at("z")) {
            const auto v = p.get<std::vector<double>>();
            if (v.size() != 2) throw config_failure("z entries must be [re, im]");
            c.z.emplace_back(v[0], v[1]);
        }
    if (j.contains("x")) c.x = j.at("x").get<std::vector<double>>();
    if (j.contains("u")) c.u = j.at("u").get<std::vector<double>>();
    if (j.contains("k")) c.k = j.at("k").get<std::vector<int>>();
    c.order = j.value("order", 2);
    if (j.contains("quantity")) {
        const json& q = j.at("quantity");
        if (q.is_string()) c.quantities = {q.get<std::string>()};
        else c.quantities = q.get<std::vector<std::string>>();
    }
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        c.tol_constant = t.value("constant", c.tol_constant);
        c.tol_zeros_rel = t.value("zeros_rel", c.tol_zeros_rel);
        if (!(c.tol_constant > 0) || !(c.tol_zeros_rel > 0)) throw config_failure("tolerances must be > 0");
    }
    if (j.contains("contour")) {
        c.szego.contour.rho = j.at("contour").value("rho", c.szego.contour.rho);
        c.szego.contour.nodes = j.at("contour").value("nodes", c.szego.contour.nodes);
    }
    c.szego.cd_order = j.value("cd_order", c.szego.cd_order);
    c.szego.logh_degree = j.value("logh_degree", c.szego.logh_degree);
    require_increasing_list(c.n, "n");
    require_increasing_list(c.k, "k");
    if (c.N < 1) throw config_failure("N must be >= 1");
    if (c.order < 0 || c.order > 2) throw config_failure("order must be 0, 1 or 2");
    return c;
}

RunConfig load_config(const Options& o) {
    std::ifstream in(o.config_path);
    if (!in) throw config_failure("cannot open config '" + o.config_path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw config_failure(std::string("malformed JSON: ") + e.what());
    }
    RunConfig c;
    try {
        c = parse_config(j);
    } catch (const json::exception& e) {
        throw config_failure(std::string("bad config field: ") + e.what());
    }
    if (!o.quantities.empty()) c.quantities = o.quantities;
    if (o.order) c.order = *o.order;
    if (c.order < 0 || c.order > 2) throw config_failure("order must be 0, 1 or 2");
    return c;
}

mjw::Weight checked_weight(const mjw::WeightSpec& s) {
    try {
        return mjw::validate(s);
    } catch (const mjw::error& e) {
        throw config_failure(std::string("invalid weight: ") + e.what());
    }
}

// ---- output -----------------------------------------------------------------------

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Csv {
    std::ostringstream os;
    bool finite = true;

    void header(std::initializer_list<const char*> cols) {
        bool first = true;
        for (const char* c : cols) {
            os << (first ? "" : ",") << c;
            first = false;
        }
        os << '\n';
    }
    Csv& cell(double v, bool last = false) {
        finite = finite && std::isfinite(v);
        os << num(v) << (last ? '\n' : ',');
        return *this;
    }
    Csv& cell(long v, bool last = false) {
        os << v << (last ? '\n' : ',');
        return *this;
    }
    Csv& cell(const std::string& v, bool last = false) {
        os << v << (last ? '\n' : ',');
        return *this;
    }
};

bool all_finite(const json& j) {
    if (j.is_number_float()) return std::isfinite(j.get<double>());
    if (j.is_null()) return false;
    if (j.is_array() || j.is_object())
        for (const auto& v : j)
            if (!all_finite(v)) return false;
    return true;
}

int emit(const Options& o, const std::string& text, bool finite) {
    if (!finite) {
        std::cerr << json{{"error", "numerical"}, {"message", "non-finite value in output"}}.dump() << '\n';
        return numerical_error;
    }
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) throw config_failure("cannot open output '" + o.out_path + "'");
        out << text;
    }
    return ok;
}

int emit_json(const Options& o, const json& j) { return emit(o, j.dump(2) + "\n", all_finite(j)); }

// ---- commands ---------------------------------------------------------------------

int cmd_recurrence(const Options& o) {
    const RunConfig c = load_config(o);
    const auto w = checked_weight(c.weight);
    const auto t = mjw::stieltjes_recurrence(w, c.N + 1);
    if (o.json_out()) {
        json j{{"N", c.N}, {"log_mu0", t.log_mu0()}};
        json n = json::array(), a = json::array(), b = json::array(), g = json::array();
        for (int k = 0; k <= c.N; ++k) {
            n.push_back(k);
            a.push_back(k == 0 ? 0.0 : t.a(k));
            b.push_back(t.b(k));
            g.push_back(t.log_gamma(k));
        }
        j["n"] = n;
        j["a"] = a;
        j["b"] = b;
        j["log_gamma"] = g;
        return emit_json(o, j);
    }
    Csv csv;
    csv.header({"n", "a_n", "b_n", "log_gamma_n"});
    for (int k = 0; k <= c.N; ++k)
        csv.cell(long(k)).cell(k == 0 ? 0.0 : t.a(k)).cell(t.b(k)).cell(t.log_gamma(k), true);
    return emit(o, csv.os.str(), csv.finite);
}

int cmd_asymptotics(const Options& o) {
    const RunConfig c = load_config(o);
    const mjw::SzegoData s(checked_weight(c.weight), c.szego);
    const auto k = mjw::asym_coeffs(s);
    const std::vector<std::pair<const char*, double>> fields{
        {"alpha", k.alpha}, {"beta", k.beta},     {"D_inf", k.D_inf},   {"c0", k.c0},
        {"d0", k.d0},       {"Gamma1", k.Gamma1}, {"Gamma2", k.Gamma2}, {"A2", k.A2},
        {"A3", k.A3},       {"A4", k.A4},         {"B2", k.B2},         {"B3", k.B3},
        {"B4", k.B4},       {"hankel_exponent", k.hankel_exponent}};
    if (!o.json_out(true)) {
        Csv csv;
        csv.header({"name", "value"});
        for (const auto& [name, v] : fields) csv.cell(std::string(name)).cell(v + 0.0, true);
        return emit(o, csv.os.str(), csv.finite);
    }
    json j;
    for (const auto& [name, v] : fields) j[name] = v + 0.0;  // no negative zeros
    j["c"] = s.c();
    j["d"] = s.d();
    j["labels"] = {
        {"D_inf", "Szego function at infinity"},
        {"c0", "endpoint +1 coefficient c_0 (contour integral)"},
        {"d0", "endpoint -1 coefficient d_0 (contour integral)"},
        {"Gamma1", "leading coefficient expansion, 1/n term"},
        {"Gamma2", "leading coefficient expansion, 1/n^2 term"},
        {"A2", "a_n expansion, 1/n^2 term"},
        {"A3", "a_n expansion, 1/n^3 term"},
        {"A4", "a_n expansion, 1/n^4 term"},
        {"B2", "b_n expansion, 1/n^2 term"},
        {"B3", "b_n expansion, 1/n^3 term"},
        {"B4", "b_n expansion, 1/n^4 term"},
        {"hankel_exponent", "Hankel determinant power of n"},
    };
    return emit_json(o, j);
}

std::vector<int> default_ns(const std::string& q) {
    if (q == "hankel") return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    if (q == "zeros") return {20, 40, 60, 80, 100};
    if (q == "bulk") return {10, 20, 40, 60, 80};
    if (q == "edge") return {20, 40, 60, 80, 100};
    std::vector<int> v;
    for (int n = 8; n <= 96; n += 8) v.push_back(n);
    return v;
}

json report_json(const mjw::ConvergenceReport& r) {
    return {{"quantity", r.quantity}, {"n", r.n},
            {"error", r.error},       {"fitted_slope", r.fitted_slope},
            {"target_slope", r.target_slope}, {"constant_estimate", r.constant_estimate},
            {"pass", r.pass}};
}

std::vector<mjw::ConvergenceReport> run_quantity(const RunConfig& c, const mjw::SzegoData& s,
                                                 const std::string& q) {
    const auto it = c.n_by_quantity.find(q);
    const std::vector<int> ns = it != c.n_by_quantity.end() ? it->second : c.n.empty() ? default_ns(q) : c.n;
    const int N = ns.back() + 2;
    const auto t = mjw::stieltjes_recurrence(s.weight(), N);
    std::vector<mjw::ConvergenceReport> out;
    if (q == "outer") {
        const auto zs = c.z.empty() ? std::vector<mjw::cplx>{{1.5, 0.5}} : c.z;
        for (auto z : zs) out.push_back(mjw::outer_study(s, t, z, c.order, ns));
    } else if (q == "gamma") {
        out.push_back(mjw::gamma_study(s, t, ns, c.tol_constant));
    } else if (q == "an") {
        out.push_back(mjw::an_study(s, t, ns, c.tol_constant));
    } else if (q == "bn") {
        out.push_back(mjw::bn_study(s, t, ns, c.tol_constant));
    } else if (q == "hankel") {
        out.push_back(mjw::hankel_study(s, t, ns));
    } else if (q == "bulk") {
        std::vector<double> xs = c.x;
        if (xs.empty())
            for (int i = 0; i <= 60; ++i) xs.push_back(-0.6 + 0.02 * i);
        out.push_back(mjw::bulk_study(s, t, ns, xs));
    } else if (q == "edge") {
        std::vector<double> us = c.u;
        if (us.empty())
            for (int i = 0; i <= 22; ++i) us.push_back(0.5 + 0.25 * i);
        out.push_back(mjw::edge_study(s, t, ns, us));
    } else if (q == "zeros") {
        for (int k : c.k) out.push_back(mjw::zero_convergence_check(t, s.alpha(), ns, k, c.tol_zeros_rel));
    } else {
        throw config_failure("unknown quantity '" + q + "'");
    }
    return out;
}

int cmd_convergence(const Options& o) {
    RunConfig c = load_config(o);
    if (c.quantities.empty()) c.quantities = {"outer"};
    const mjw::SzegoData s(checked_weight(c.weight), c.szego);
    std::vector<mjw::ConvergenceReport> reports;
    for (const auto& q : c.quantities)
        for (auto& r : run_quantity(c, s, q)) reports.push_back(std::move(r));
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    int rc;
    if (o.json_out()) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        rc = emit_json(o, arr.size() == 1 ? arr[0] : arr);
    } else {
        Csv csv;
        csv.header({"quantity", "n", "error", "fitted_slope", "target_slope", "constant_estimate", "pass"});
        for (const auto& r : reports)
            for (std::size_t i = 0; i < r.n.size(); ++i)
                csv.cell(r.quantity).cell(long(r.n[i])).cell(r.error[i]).cell(r.fitted_slope)
                    .cell(r.target_slope).cell(r.constant_estimate).cell(std::string(r.pass ? "true" : "false"), true);
        rc = emit(o, csv.os.str(), csv.finite);
    }
    if (rc != ok) return rc;
    return all_pass ? ok : fit_failed;
}

int cmd_zeros(const Options& o) {
    const RunConfig c = load_config(o);
    const auto w = checked_weight(c.weight);
    const std::vector<int> ns = c.n.empty() ? default_ns("zeros") : c.n;
    const auto t = mjw::stieltjes_recurrence(w, ns.back() + 1);
    Csv csv;
    json rows = json::array();
    csv.header({"n", "k", "oracle_zero", "predicted_zero", "scaled_gap", "bessel_limit"});
    for (int n : ns) {
        const auto z = mjw::polynomial_zeros(t, n);
        for (int k : c.k) {
            const double pred = mjw::largest_zero_prediction(w.alpha(), n, k);
            const double j = mjw::bessel_zero(w.alpha(), k);
            const double gap = double(n) * n * (1.0 - z[k - 1]);
            csv.cell(long(n)).cell(long(k)).cell(z[k - 1]).cell(pred).cell(gap).cell(j * j / 2.0, true);
            rows.push_back({{"n", n}, {"k", k}, {"oracle_zero", z[k - 1]}, {"predicted_zero", pred},
                            {"scaled_gap", gap}, {"bessel_limit", j * j / 2.0}});
        }
    }
    if (o.json_out()) return emit_json(o, rows);
    return emit(o, csv.os.str(), csv.finite);
}

int cmd_eval(const Options& o) {
    const RunConfig c = load_config(o);
    const mjw::SzegoData s(checked_weight(c.weight), c.szego);
    const std::vector<int> ns = c.n.empty() ? std::vector<int>{10, 20, 40} : c.n;
    const auto t = mjw::stieltjes_recurrence(s.weight(), ns.back() + 1);
    json rows = json::array();
    std::ostringstream out;
    Csv zc, xc;
    zc.header({"n", "re_z", "im_z", "log_abs_oracle", "arg_oracle", "log_abs_pred", "arg_pred", "rel_error"});
    xc.header({"n", "x", "regime", "oracle_scaled", "pred_scaled", "abs_error_scaled"});
    for (int n : ns) {
        for (auto z : c.z) {
            const auto orc = mjw::eval_monic(t, n, z);
            const auto pr = mjw::outer_prediction(s, z, n, c.order);
            const double rel = std::abs(std::exp(pr.log_abs - orc.log_abs) * pr.phase / orc.phase - 1.0);
            zc.cell(long(n)).cell(z.real()).cell(z.imag()).cell(orc.log_abs).cell(std::arg(orc.phase))
                .cell(pr.log_abs).cell(std::arg(pr.phase)).cell(rel, true);
            rows.push_back({{"n", n}, {"z", {z.real(), z.imag()}}, {"log_abs_oracle", orc.log_abs},
                            {"arg_oracle", std::arg(orc.phase)}, {"log_abs_pred", pr.log_abs},
                            {"arg_pred", std::arg(pr.phase)}, {"rel_error", rel}});
        }
        for (double x : c.x) {
            const bool edge = std::abs(x) >= 1.0 - mjw::default_edge_delta;
            if (edge && x < 0) throw config_failure("edge points are supported near +1 only");
            const double pred = (edge ? mjw::edge_prediction(s, x, n) : mjw::bulk_prediction(s, x, n)) *
                                std::ldexp(1.0, n);
            const double orc = mjw::detail::scaled_monic(t, n, x);
            xc.cell(long(n)).cell(x).cell(std::string(edge ? "edge" : "bulk")).cell(orc).cell(pred)
                .cell(std::abs(pred - orc), true);
            rows.push_back({{"n", n}, {"x", x}, {"regime", edge ? "edge" : "bulk"}, {"oracle_scaled", orc},
                            {"pred_scaled", pred}, {"abs_error_scaled", std::abs(pred - orc)}});
        }
    }
    if (o.json_out()) return emit_json(o, rows);
    std::string text;
    if (!c.z.empty()) text += zc.os.str();
    if (!c.x.empty()) text += (text.empty() ? "" : "\n") + xc.os.str();
    return emit(o, text, zc.finite && xc.finite);
}

void report_error(const char* kind, const std::string& msg) {
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Hilbert asymptotics for modified Jacobi weights, checked against a quadrature oracle"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "JSON run configuration")->required();
        sub->add_option("--out", o.out_path, "output file (default stdout)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", o.seed, "accepted for interface compatibility; unused");
    };
    auto* rec = app.add_subcommand("recurrence", "oracle a_n, b_n, log gamma_n table");
    auto* asy = app.add_subcommand("asymptotics", "closed-form expansion constants");
    auto* con = app.add_subcommand("convergence", "oracle-vs-formula rate fits");
    auto* zer = app.add_subcommand("zeros", "largest zeros against the Bessel prediction");
    auto* ev = app.add_subcommand("eval", "pointwise oracle and prediction values");
    for (auto* s : {rec, asy, con, zer, ev}) add_common(s);
    con->add_option("--quantity", o.quantities, "outer|gamma|an|bn|hankel|bulk|edge|zeros");
    for (auto* s : {con, ev}) s->add_option("--order", o.order, "outer expansion order 0..2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config_error;
    }
    try {
        if (*rec) return cmd_recurrence(o);
        if (*asy) return cmd_asymptotics(o);
        if (*con) return cmd_convergence(o);
        if (*zer) return cmd_zeros(o);
        if (*ev) return cmd_eval(o);
    } catch (const config_failure& e) {
        report_error("config", e.what());
        return config_error;
    } catch (const mjw::error& e) {
        const bool cfg = e.kind() == mjw::errc::parameter || e.kind() == mjw::errc::analyticity ||
                         e.kind() == mjw::errc::domain || e.kind() == mjw::errc::indexing ||
                         e.kind() == mjw::errc::contour || e.kind() == mjw::errc::truncation;
        report_error(mjw::to_string(e.kind()), e.what());
        return cfg ? config_error : numerical_error;
    } catch (const std::exception& e) {
        report_error("numerical", e.what());
        return numerical_error;
    }
    return ok;
}
