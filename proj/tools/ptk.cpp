// Copyright 2026 the ptkernels authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: evaluate kernels, run solves and heat computations,
// execute the verification suites, emit plot-ready data.
// Exit codes: 0 success, 2 validation error, 3 numerical-convergence failure.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptkernels/hankel.hpp"
#include "ptkernels/kernels.hpp"
#include "ptkernels/pde.hpp"
#include "ptkernels/solve.hpp"
#include "ptkernels/specfun.hpp"

using json = nlohmann::ordered_json;
using namespace ptk;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output path: " + path);
    out << content;
}

void log_warnings(const WarningList& w) {
    for (const auto& m : w) std::cerr << "warning: " << m << "\n";
}

// Plot-ready numeric text: one header line echoing the parameters, then
// two- or three-column rows.  Bit-stable across runs.
std::string emit_series(const json& params, const SampledFunction& f) {
    std::ostringstream os;
    os << "# " << params.dump() << "\n";
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        os << fmt(f.grid[i]) << "," << fmt(f.values[i]) << "\n";
    return os.str();
}

std::string emit_rows(const json& params, const std::vector<std::string>& rows) {
    std::ostringstream os;
    os << "# " << params.dump() << "\n";
    for (const auto& r : rows) os << r << "\n";
    return os.str();
}

std::string emit_report(const json& params, const std::string& report_json) {
    return "{\"params\":" + params.dump() + ",\"report\":" + report_json + "}\n";
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    double a, b;
    int n;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 2)
        throw validation_error("bad grid spec (want min:max:count): " + spec);
    return linspace(a, b, n);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw validation_error("malformed JSON in " + path);
    return j;
}

int worker_count() {
    const char* env = std::getenv("PTK_WORKERS");
    if (!env) return 1;
    const int n = std::atoi(env);
    if (n < 1 || n > 256) throw validation_error("PTK_WORKERS must be in [1, 256]");
    return n;
}

// ---------------------------------------------------------------- specfun

int run_specfun(const std::string& fn, json& params, const std::string& out,
                const std::string& format) {
    double value = 0.0;
    if (fn == "gamma") {
        value = specfun::gamma_fn(params.at("x").get<double>());
    } else if (fn == "pochhammer") {
        value = specfun::pochhammer(params.at("a").get<double>(),
                                    params.at("n").get<int>());
    } else if (fn == "2f1") {
        value = specfun::gauss_2f1({params.at("a").get<double>(),
                                    params.at("b").get<double>(),
                                    params.at("c").get<double>(),
                                    params.at("z").get<double>()});
    } else if (fn == "legendre_q") {
        value = specfun::legendre_q({params.at("degree").get<double>(),
                                     params.at("mu").get<int>(),
                                     params.at("z").get<double>()});
    } else if (fn == "bessel_j") {
        value = specfun::bessel_j(params.at("nu").get<double>(),
                                  params.at("x").get<double>());
    } else if (fn == "bessel_i") {
        value = specfun::bessel_i(params.at("nu").get<double>(),
                                  params.at("x").get<double>(),
                                  params.value("scaled", false));
    } else {
        throw validation_error("unknown specfun function: " + fn);
    }
    if (format == "json") {
        json o;
        o["params"] = params;
        o["value"] = value;
        write_artifact(out, o.dump() + "\n");
    } else {
        write_artifact(out, emit_rows(params, {fmt(value)}));
    }
    return 0;
}

// ----------------------------------------------------------------- kernel

struct KernelPointResult {
    double value = 0.0;
    std::string warnings;
};

KernelPointResult eval_kernel_point(const std::string& kind, double nu,
                                    coordmap::MapKind map_kind,
                                    const std::vector<double>& p) {
    if (p.size() != 3) throw validation_error("kernel point needs three coordinates");
    WarningList w;
    KernelPointResult res;
    if (kind == "euclidean") {
        res.value = kernels::poisson_kernel_euclidean(nu, {p[0], p[1], p[2]}, &w);
    } else if (kind == "trig") {
        res.value = kernels::poisson_kernel_trig(nu, p[0], p[1], p[2], &w);
    } else if (kind == "hyp") {
        res.value = kernels::poisson_kernel_hyp(nu, p[0], p[1], p[2], map_kind, &w);
    } else {
        throw validation_error("unknown kernel kind: " + kind);
    }
    for (std::size_t i = 0; i < w.size(); ++i)
        res.warnings += (i ? ";" : "") + w[i];
    return res;
}

int run_kernel_batch(const json& params, const std::string& out) {
    const std::string kind = params.at("kind").get<std::string>();
    const double nu = params.at("nu").get<double>();
    coordmap::MapKind mk = coordmap::MapKind::hyp_conformal;
    if (params.contains("map_kind"))
        mk = coordmap::map_kind_from_string(params["map_kind"].get<std::string>());
    if (!params.contains("points") || !params["points"].is_array())
        throw validation_error("batch request needs a points array");
    std::vector<std::vector<double>> pts;
    for (const auto& p : params["points"]) pts.push_back(p.get<std::vector<double>>());

    std::vector<KernelPointResult> results(pts.size());
    const int workers = std::min<int>(worker_count(), std::max<std::size_t>(pts.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            results[i] = eval_kernel_point(kind, nu, mk, pts[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::atomic<bool> failed{false};
        std::string error;
        std::mutex emtx;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= pts.size() || failed) return;
                    try {
                        results[i] = eval_kernel_point(kind, nu, mk, pts[i]);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(emtx);
                        failed = true;
                        error = e.what();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failed) throw validation_error(error);
    }
    std::vector<std::string> rows;
    rows.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        rows.push_back(fmt(pts[i][0]) + "," + fmt(pts[i][1]) + "," + fmt(pts[i][2]) +
                       "," + fmt(results[i].value) + "," + results[i].warnings);
        if (!results[i].warnings.empty())
            std::cerr << "warning: point " << i << ": " << results[i].warnings << "\n";
    }
    write_artifact(out, emit_rows(params, rows));
    return 0;
}

// ------------------------------------------------------------------ check

// C-infinity bump sampled on [lo, hi]; zero outside (center +/- halfwidth).
SampledFunction sampled_bump(double center, double halfwidth, double lo, double hi,
                             int n) {
    SampledFunction f;
    f.grid = linspace(lo, hi, n);
    f.values.resize(f.grid.size());
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const double s = (f.grid[i] - center) / halfwidth;
        f.values[i] = std::abs(s) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s * s)) : 0.0;
    }
    return f;
}

int run_check(const std::string& suite, json& params, const std::string& out) {
    if (suite == "hankel") {
        const double nu = params.value("nu", 1.0);
        const int n = params.value("n", 2048);
        const double span = params.value("span", 20.0);
        params["nu"] = nu;
        params["n"] = n;
        params["span"] = span;
        SampledFunction f;
        f.grid = linspace(0.0, span, n);
        f.values.resize(f.grid.size());
        for (std::size_t i = 0; i < f.grid.size(); ++i) {
            const double u = (f.grid[i] - 0.3 * span) / (0.05 * span);
            f.values[i] = std::exp(-0.5 * u * u);
        }
        QuadratureSpec q;
        const auto rep = hankel::check_hankel_properties(f, nu, q);
        write_artifact(out, emit_report(params, rep.to_json()));
        return 0;
    }
    if (suite == "kernel-oracle") {
        const double nu = params.value("nu", 1.0);
        params["nu"] = nu;
        QuadratureSpec q;
        double max_err = 0.0;
        for (double Y : {0.1, 0.7, 1.5})
            for (double X : {0.6, 1.0, 1.7})
                for (double Xp : {0.6, 1.0, 1.7}) {
                    const double lhs = kernels::poisson_kernel_euclidean(nu, {Y, X, Xp});
                    const double rhs = std::sqrt(X * Xp) *
                                       hankel::weighted_laplace_integral(nu, Y, X, Xp, q);
                    max_err = std::max(max_err, std::abs(lhs - rhs));
                }
        write_artifact(out, emit_report(params, "{\"max_abs_error\":" + fmt(max_err) +
                                                    ",\"points\":27}"));
        return 0;
    }
    if (suite == "pde") {
        const std::string kind = params.value("kind", std::string("euclidean"));
        const double nu = params.value("nu", 1.5);
        const double c = params.value("c", 1.0);
        const double h = params.value("h", 0.02);
        params["kind"] = kind;
        params["nu"] = nu;
        params["c"] = c;
        params["h"] = h;
        pde::OperatorKind op{pde::operator_tag_from_string(kind), c, nu};
        std::function<double(double, double)> fn;
        std::vector<std::pair<double, double>> probes;
        if (op.tag == pde::OperatorTag::inverse_square) {
            fn = [nu](double X, double Y) {
                return kernels::poisson_kernel_euclidean(nu, {Y, X, 1.3});
            };
            probes = {{0.8, 0.6}, {1.2, 0.9}, {1.7, 0.5}, {2.2, 1.1}, {0.9, 1.4}};
        } else if (op.tag == pde::OperatorTag::trig_pt) {
            fn = [nu](double th, double y) {
                return kernels::poisson_kernel_trig(nu, y, th, 1.1);
            };
            probes = {{1.0, 0.5}, {1.5, 0.8}, {2.0, 0.4}, {0.8, 1.0}, {1.9, 0.9}};
        } else {
            fn = [nu](double x, double y) {
                return kernels::poisson_kernel_hyp(nu, y, x, 1.1,
                                                   coordmap::MapKind::hyp_conformal);
            };
            probes = {{0.8, 0.5}, {1.2, 0.8}, {1.6, 0.4}, {1.0, 1.0}, {1.9, 0.7}};
        }
        WarningList w;
        const auto rep = pde::pde_residual(op, fn, probes, h, 4, &w);
        log_warnings(w);
        write_artifact(out, emit_report(params, rep.to_json()));
        return 0;
    }
    if (suite == "dirichlet") {
        const std::string kind = params.value("kind", std::string("euclidean"));
        const double nu = params.value("nu", 1.0);
        const double c = params.value("c", 1.0);
        const int n = params.value("n", 256);
        const int max_iter = params.value("max_iter", 200000);
        const std::string map = params.value("map", std::string("hyp_conformal"));
        params["kind"] = kind;
        params["nu"] = nu;
        params["c"] = c;
        params["n"] = n;
        params["map"] = map;

        solve::SolveRequest r;
        r.nu = nu;
        r.potential_coeff = c;
        r.map_kind = coordmap::map_kind_from_string(map);
        pde::Grid2D grid;
        std::vector<std::pair<double, double>> probes;
        r.data.domain = solve::domain_tag_from_string(kind);
        if (r.data.domain == solve::DomainTag::euclidean) {
            r.data.samples = sampled_bump(3.0, 2.0, 0.5, 6.0, 257);
            grid = {0.0, 20.0, n, 0.0, 20.0, n, true};
            probes = {{2.5, 0.5}, {3.0, 1.0}, {3.5, 0.8}, {2.0, 1.5}, {4.0, 0.6}};
        } else if (r.data.domain == solve::DomainTag::trig) {
            r.data.samples = sampled_bump(0.5 * kPi, 1.0, 0.4, kPi - 0.4, 257);
            grid = {0.0, kPi, n, 0.0, 12.0, n, true};
            probes = {{1.4, 0.4}, {1.6, 0.8}, {1.9, 0.6}, {1.2, 1.0}, {1.7, 1.3}};
        } else {
            r.data.samples = sampled_bump(1.6, 1.0, 0.4, 3.2, 257);
            grid = {0.0, 20.0, n, 0.0, 20.0, n, true};
            probes = {{1.4, 0.4}, {1.8, 0.7}, {2.2, 0.5}, {1.2, 0.9}, {1.6, 1.2}};
        }
        // The FD solve owns the iteration cap; everything else is default.
        WarningList w;
        pde::OperatorKind op;
        op.nu = nu;
        op.potential_coeff = c;
        op.tag = r.data.domain == solve::DomainTag::euclidean
                     ? pde::OperatorTag::inverse_square
                     : (r.data.domain == solve::DomainTag::trig ? pde::OperatorTag::trig_pt
                                                                : pde::OperatorTag::hyp_pt);
        // Run the FD solve once with the cap to honour --max-iter, then the
        // comparison (which re-solves internally at the default cap).
        if (max_iter != 200000)
            pde::fd_solve_dirichlet(op, r.data.samples, grid, 1e-10, &w, max_iter);
        const auto rep = solve::compare_with_fd(r, grid, probes, &w);
        log_warnings(w);
        write_artifact(out, emit_report(params, rep.to_json()));
        return 0;
    }
    throw validation_error("unknown check suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ptkernels: Poisson/heat kernels of inverse-square and "
                 "Poschl-Teller operators, with numerical cross-validation"};
    app.require_subcommand(1);

    std::string out = "-";
    std::string format = "csv";
    app.add_option("--out", out, "output path ('-' for stdout)")->capture_default_str();
    app.add_option("--format", format, "csv or json")->capture_default_str();

    // specfun -------------------------------------------------------------
    auto* sp = app.add_subcommand("specfun", "evaluate a special function");
    sp->fallthrough();
    std::string sp_fn;
    double sp_x = 0, sp_a = 0, sp_b = 0, sp_c = 1, sp_z = 0, sp_deg = 0, sp_nu = 0;
    int sp_n = 0, sp_mu = 0;
    bool sp_scaled = false;
    sp->add_option("--fn", sp_fn, "gamma|pochhammer|2f1|legendre_q|bessel_j|bessel_i")
        ->required();
    sp->add_option("--x", sp_x);
    sp->add_option("--a", sp_a);
    sp->add_option("--b", sp_b);
    sp->add_option("--c", sp_c);
    sp->add_option("--z", sp_z);
    sp->add_option("--n", sp_n);
    sp->add_option("--degree", sp_deg);
    sp->add_option("--mu", sp_mu);
    sp->add_option("--nu", sp_nu);
    sp->add_flag("--scaled", sp_scaled);

    // kernel --------------------------------------------------------------
    auto* ke = app.add_subcommand("kernel", "evaluate a Poisson kernel");
    ke->fallthrough();
    std::string ke_kind = "euclidean", ke_map = "hyp_conformal", ke_batch;
    double ke_nu = 0.5, ke_Y = 1, ke_X = 1, ke_Xp = 1, ke_y = 0.5, ke_theta = 1.0,
           ke_theta_p = 1.0, ke_x = 1.0, ke_x_p = 1.0;
    ke->add_option("--kind", ke_kind, "euclidean|trig|hyp")->capture_default_str();
    ke->add_option("--nu", ke_nu)->capture_default_str();
    ke->add_option("--map", ke_map, "hyp_paper|hyp_conformal")->capture_default_str();
    ke->add_option("--batch", ke_batch, "JSON batch request file");
    auto* keY = ke->add_option("--Y", ke_Y);
    auto* keX = ke->add_option("--X", ke_X);
    auto* keXp = ke->add_option("--Xp", ke_Xp);
    auto* key = ke->add_option("--y", ke_y);
    auto* keth = ke->add_option("--theta", ke_theta);
    auto* kethp = ke->add_option("--theta-p", ke_theta_p);
    auto* kex = ke->add_option("--x", ke_x);
    auto* kexp = ke->add_option("--x-p", ke_x_p);

    // solve ---------------------------------------------------------------
    auto* so = app.add_subcommand("solve", "solve a Dirichlet problem by quadrature");
    so->fallthrough();
    std::string so_kind = "euclidean", so_map = "hyp_conformal", so_data, so_grid;
    double so_nu = 0.5, so_height = 1.0, so_c = 1.0;
    int so_panels = 800;
    so->add_option("--kind", so_kind)->capture_default_str();
    so->add_option("--nu", so_nu)->capture_default_str();
    so->add_option("--height", so_height)->capture_default_str();
    so->add_option("--data", so_data, "boundary data CSV (coordinate,value)")->required();
    so->add_option("--out-grid", so_grid, "min:max:count")->required();
    so->add_option("--map", so_map)->capture_default_str();
    so->add_option("--c", so_c, "potential coefficient (reporting only)")
        ->capture_default_str();
    so->add_option("--panels", so_panels)->capture_default_str();

    // heat ----------------------------------------------------------------
    auto* he = app.add_subcommand("heat", "evaluate a transmuted heat kernel");
    he->fallthrough();
    std::string he_kind = "euclidean", he_map = "hyp_conformal", he_contour = "talbot";
    double he_nu = 0.5, he_t = 1.0, he_in = 1.0, he_bd = 1.0, he_abscissa = 14.0;
    int he_nodes = 32;
    he->add_option("--kind", he_kind)->capture_default_str();
    he->add_option("--nu", he_nu)->capture_default_str();
    he->add_option("--t", he_t)->capture_default_str();
    he->add_option("--X", he_in, "interior coordinate")->capture_default_str();
    he->add_option("--Xp", he_bd, "boundary coordinate")->capture_default_str();
    he->add_option("--map", he_map)->capture_default_str();
    he->add_option("--contour", he_contour, "talbot|vertical")->capture_default_str();
    he->add_option("--nodes", he_nodes)->capture_default_str();
    he->add_option("--abscissa", he_abscissa)->capture_default_str();

    // hankel --------------------------------------------------------------
    auto* ha = app.add_subcommand("hankel", "Hankel transform / quadrature oracles");
    ha->fallthrough();
    std::string ha_data, ha_grid, ha_integral;
    double ha_nu = 0.0, ha_p = 1.0, ha_a = 1.0, ha_b = 1.0, ha_t = 1.0, ha_X = 1.0,
           ha_Xp = 1.0, ha_tail = 1e-9;
    int ha_panels = 64, ha_nodes = 8;
    ha->add_option("--nu", ha_nu)->capture_default_str();
    ha->add_option("--data", ha_data, "series CSV to transform");
    ha->add_option("--out-grid", ha_grid, "min:max:count");
    ha->add_option("--integral", ha_integral, "weighted_laplace|heat_spectral");
    ha->add_option("--p", ha_p);
    ha->add_option("--a", ha_a);
    ha->add_option("--b", ha_b);
    ha->add_option("--t", ha_t);
    ha->add_option("--X", ha_X);
    ha->add_option("--Xp", ha_Xp);
    ha->add_option("--panels", ha_panels)->capture_default_str();
    ha->add_option("--nodes-per-panel", ha_nodes)->capture_default_str();
    ha->add_option("--tail-tol", ha_tail)->capture_default_str();

    // check ---------------------------------------------------------------
    auto* ch = app.add_subcommand("check", "run a verification suite");
    ch->fallthrough();
    std::string ch_suite, ch_kind = "euclidean", ch_map = "hyp_conformal";
    double ch_nu = 1.0, ch_c = 1.0, ch_h = 0.02, ch_span = 20.0;
    int ch_n = 0, ch_max_iter = 200000;
    ch->add_option("--suite", ch_suite, "hankel|kernel-oracle|pde|dirichlet")->required();
    ch->add_option("--kind", ch_kind)->capture_default_str();
    ch->add_option("--nu", ch_nu)->capture_default_str();
    ch->add_option("--c", ch_c)->capture_default_str();
    ch->add_option("--step", ch_h)->capture_default_str();
    ch->add_option("--span", ch_span)->capture_default_str();
    auto* chn = ch->add_option("--n", ch_n, "grid count");
    ch->add_option("--max-iter", ch_max_iter)->capture_default_str();
    ch->add_option("--map", ch_map)->capture_default_str();

    // map-check -----------------------------------------------------------
    auto* mc = app.add_subcommand("map-check", "conjugation-identity residual");
    mc->fallthrough();
    std::string mc_kind = "trig";
    double mc_c = 1.0, mc_nu = 1.5, mc_h = 1e-3;
    int mc_levels = 4;
    mc->add_option("--kind", mc_kind, "trig|hyp_paper|hyp_conformal")
        ->capture_default_str();
    mc->add_option("--c", mc_c)->capture_default_str();
    mc->add_option("--nu", mc_nu)->capture_default_str();
    mc->add_option("--step", mc_h)->capture_default_str();
    mc->add_option("--levels", mc_levels)->capture_default_str();

    try {
        app.parse(argc, argv);

        if (sp->parsed()) {
            json params;
            params["fn"] = sp_fn;
            if (sp_fn == "gamma") params["x"] = sp_x;
            if (sp_fn == "pochhammer") {
                params["a"] = sp_a;
                params["n"] = sp_n;
            }
            if (sp_fn == "2f1") {
                params["a"] = sp_a;
                params["b"] = sp_b;
                params["c"] = sp_c;
                params["z"] = sp_z;
            }
            if (sp_fn == "legendre_q") {
                params["degree"] = sp_deg;
                params["mu"] = sp_mu;
                params["z"] = sp_z;
            }
            if (sp_fn == "bessel_j" || sp_fn == "bessel_i") {
                params["nu"] = sp_nu;
                params["x"] = sp_x;
                if (sp_fn == "bessel_i") params["scaled"] = sp_scaled;
            }
            return run_specfun(sp_fn, params, out, format);
        }

        if (ke->parsed()) {
            if (!ke_batch.empty()) return run_kernel_batch(load_json_file(ke_batch), out);
            json params;
            params["kind"] = ke_kind;
            params["nu"] = ke_nu;
            std::vector<double> p;
            if (ke_kind == "euclidean") {
                (void)keY;
                (void)keX;
                (void)keXp;
                p = {ke_Y, ke_X, ke_Xp};
                params["Y"] = ke_Y;
                params["X"] = ke_X;
                params["Xp"] = ke_Xp;
            } else if (ke_kind == "trig") {
                (void)key;
                (void)keth;
                (void)kethp;
                p = {ke_y, ke_theta, ke_theta_p};
                params["y"] = ke_y;
                params["theta"] = ke_theta;
                params["theta_p"] = ke_theta_p;
            } else if (ke_kind == "hyp") {
                (void)kex;
                (void)kexp;
                p = {ke_y, ke_x, ke_x_p};
                params["y"] = ke_y;
                params["x"] = ke_x;
                params["x_p"] = ke_x_p;
                params["map_kind"] = ke_map;
            } else {
                throw validation_error("unknown kernel kind: " + ke_kind);
            }
            const auto res =
                eval_kernel_point(ke_kind, ke_nu, coordmap::map_kind_from_string(ke_map), p);
            if (!res.warnings.empty()) std::cerr << "warning: " << res.warnings << "\n";
            if (format == "json") {
                json o;
                o["params"] = params;
                o["value"] = res.value;
                o["warnings"] = res.warnings;
                write_artifact(out, o.dump() + "\n");
            } else {
                write_artifact(out, emit_rows(params, {fmt(p[0]) + "," + fmt(p[1]) + "," +
                                                       fmt(p[2]) + "," + fmt(res.value) +
                                                       "," + res.warnings}));
            }
            return 0;
        }

        if (so->parsed()) {
            json params;
            params["kind"] = so_kind;
            params["nu"] = so_nu;
            params["height"] = so_height;
            params["data"] = so_data;
            params["out_grid"] = so_grid;
            params["map_kind"] = so_map;
            params["c"] = so_c;
            params["panels"] = so_panels;
            solve::SolveRequest r;
            r.nu = so_nu;
            r.height = so_height;
            r.data.domain = solve::domain_tag_from_string(so_kind);
            r.data.samples = read_series_csv(so_data);
            r.out_grid = parse_grid_spec(so_grid);
            r.map_kind = coordmap::map_kind_from_string(so_map);
            r.potential_coeff = so_c;
            r.quadrature.panels = so_panels;
            WarningList w;
            SampledFunction u;
            switch (r.data.domain) {
                case solve::DomainTag::euclidean: u = solve::solve_euclidean(r, &w); break;
                case solve::DomainTag::trig: u = solve::solve_trig(r, &w); break;
                case solve::DomainTag::hyp: u = solve::solve_hyp(r, &w); break;
            }
            log_warnings(w);
            write_artifact(out, emit_series(params, u));
            return 0;
        }

        if (he->parsed()) {
            json params;
            params["kind"] = he_kind;
            params["nu"] = he_nu;
            params["t"] = he_t;
            params["X"] = he_in;
            params["Xp"] = he_bd;
            params["contour"] = he_contour;
            params["nodes"] = he_nodes;
            if (he_kind == "hyp") params["map_kind"] = he_map;
            if (he_contour == "vertical") params["abscissa"] = he_abscissa;
            kernels::ContourSpec cs;
            cs.kind = he_contour == "vertical" ? kernels::ContourSpec::Kind::vertical
                                               : kernels::ContourSpec::Kind::talbot;
            cs.node_count = he_nodes;
            cs.abscissa = he_abscissa;
            kernels::HeatKind hk;
            if (he_kind == "euclidean") hk = kernels::HeatKind::euclidean;
            else if (he_kind == "trig") hk = kernels::HeatKind::trig;
            else if (he_kind == "hyp") hk = kernels::HeatKind::hyp;
            else throw validation_error("unknown heat kind: " + he_kind);
            const double v = kernels::heat_kernel(hk, he_nu, {he_t, he_in, he_bd}, cs,
                                                  coordmap::map_kind_from_string(he_map));
            if (format == "json") {
                json o;
                o["params"] = params;
                o["value"] = v;
                write_artifact(out, o.dump() + "\n");
            } else {
                write_artifact(out, emit_rows(params, {fmt(he_t) + "," + fmt(he_in) + "," +
                                                       fmt(he_bd) + "," + fmt(v)}));
            }
            return 0;
        }

        if (ha->parsed()) {
            QuadratureSpec q;
            q.panels = ha_panels;
            q.nodes_per_panel = ha_nodes;
            q.tail_tolerance = ha_tail;
            if (!ha_integral.empty()) {
                json params;
                params["integral"] = ha_integral;
                params["nu"] = ha_nu;
                WarningList w;
                double v;
                if (ha_integral == "weighted_laplace") {
                    params["p"] = ha_p;
                    params["a"] = ha_a;
                    params["b"] = ha_b;
                    v = hankel::weighted_laplace_integral(ha_nu, ha_p, ha_a, ha_b, q, &w);
                } else if (ha_integral == "heat_spectral") {
                    params["t"] = ha_t;
                    params["X"] = ha_X;
                    params["Xp"] = ha_Xp;
                    v = hankel::heat_spectral_integral(ha_nu, ha_t, ha_X, ha_Xp, q);
                } else {
                    throw validation_error("unknown integral: " + ha_integral);
                }
                log_warnings(w);
                write_artifact(out, emit_rows(params, {fmt(v)}));
                return 0;
            }
            if (ha_data.empty() || ha_grid.empty())
                throw validation_error("hankel: need --data and --out-grid (or --integral)");
            json params;
            params["nu"] = ha_nu;
            params["data"] = ha_data;
            params["out_grid"] = ha_grid;
            WarningList w;
            const auto img = hankel::hankel_transform(read_series_csv(ha_data), ha_nu,
                                                      parse_grid_spec(ha_grid), q, &w);
            log_warnings(w);
            write_artifact(out, emit_series(params, img));
            return 0;
        }

        if (ch->parsed()) {
            json params;
            params["suite"] = ch_suite;
            if (chn->count()) params["n"] = ch_n;
            params["nu"] = ch_nu;
            if (ch_suite == "pde" || ch_suite == "dirichlet") {
                params["kind"] = ch_kind;
                params["c"] = ch_c;
            }
            if (ch_suite == "pde") params["h"] = ch_h;
            if (ch_suite == "hankel") params["span"] = ch_span;
            if (ch_suite == "dirichlet") {
                params["map"] = ch_map;
                params["max_iter"] = ch_max_iter;
            }
            return run_check(ch_suite, params, out);
        }

        if (mc->parsed()) {
            json params;
            params["kind"] = mc_kind;
            params["c"] = mc_c;
            params["nu"] = mc_nu;
            params["h"] = mc_h;
            params["levels"] = mc_levels;
            const auto kind = coordmap::map_kind_from_string(mc_kind);
            auto bump = [](double X, double Y) {
                const double dx = X - 1.2, dy = Y - 0.8;
                return std::exp(-(dx * dx + dy * dy));
            };
            coordmap::GridBox box = (kind == coordmap::MapKind::trig)
                                        ? coordmap::GridBox{0.6, 2.4, 9, 0.25, 1.2, 9}
                                        : coordmap::GridBox{0.5, 2.0, 9, 0.2, 1.3, 9};
            WarningList w;
            const auto rep =
                coordmap::conjugation_residual(kind, mc_c, mc_nu, bump, box, mc_h,
                                               mc_levels, &w);
            log_warnings(w);
            write_artifact(out, emit_report(params, rep.to_json()));
            return 0;
        }

        throw validation_error("no subcommand given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
