// hpq: half-plane quantization toolbox.
// Batch subcommands with JSON configuration and CSV outputs; every output
// file gets a .meta.json sidecar carrying the config hash and tool version.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include "hpq/geometry.hpp"
#include "hpq/io.hpp"
#include "hpq/kac.hpp"
#include "hpq/l1.hpp"
#include "hpq/mackey.hpp"
#include "hpq/quantize.hpp"
#include "hpq/version.hpp"

namespace fs = std::filesystem;
using hpq::cplx;
using json = nlohmann::json;

namespace {

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    long seed = 0;
    double tolerance = -1.0; // subcommand default when negative
    bool quiet = false;
};

void say(const Options& opt, const std::string& msg) {
    if (!opt.quiet) std::cout << msg << "\n";
}

std::string out_path(const Options& opt, const std::string& name) {
    fs::create_directories(opt.out_dir);
    return (fs::path(opt.out_dir) / name).string();
}

json load_config(const Options& opt) {
    if (opt.config_path.empty()) throw hpq::InputError("missing --config <path>");
    return hpq::io::load_json_file(opt.config_path);
}

hpq::PhaseGrid grid_from_json(const json& j) {
    hpq::io::reject_unknown_keys(j, {"u_min", "u_max", "n_u", "a_min", "a_max", "n_a"},
                                 "grid");
    hpq::PhaseGrid g;
    g.u_min = j.at("u_min").get<double>();
    g.n_u = j.at("n_u").get<int>();
    g.du = (j.at("u_max").get<double>() - g.u_min) / g.n_u;
    g.a_min = j.at("a_min").get<double>();
    g.n_a = j.at("n_a").get<int>();
    g.da = (j.at("a_max").get<double>() - g.a_min) / g.n_a;
    return g;
}

hpq::PhaseGrid phase_grid(const json& cfg) {
    const int refine = cfg.value("refine", 1);
    if (cfg.contains("grid")) return grid_from_json(cfg.at("grid"));
    return hpq::PhaseGrid::standard(refine);
}

hpq::RhoGrid rho_grid(const json& cfg, const hpq::PhaseGrid& pg) {
    if (cfg.contains("rho_grid")) {
        const json& j = cfg.at("rho_grid");
        hpq::io::reject_unknown_keys(j, {"u_min", "u_max"}, "rho_grid");
        hpq::RhoGrid r;
        r.du = pg.du;
        r.u_min = j.at("u_min").get<double>();
        r.n = static_cast<int>(
            std::llround((j.at("u_max").get<double>() - r.u_min) / r.du));
        return r;
    }
    const int refine = cfg.value("refine", 1);
    return hpq::RhoGrid::standard(refine);
}

hpq::GridFunction function_from_json(const json& j, const hpq::PhaseGrid& g) {
    if (j.contains("csv")) {
        hpq::io::reject_unknown_keys(j, {"csv"}, "function");
        return hpq::io::read_grid_function_csv(j.at("csv").get<std::string>());
    }
    hpq::io::reject_unknown_keys(j, {"preset", "u0", "a0", "sigma1", "sigma2"},
                                 "function");
    if (j.value("preset", "") != "gaussian")
        throw hpq::InputError("function: unknown preset (expected \"gaussian\")");
    return hpq::GridFunction::gaussian(g, j.value("u0", 0.0), j.value("a0", 0.0),
                                       j.value("sigma1", 1.0), j.value("sigma2", 1.0));
}

int sign_from_json(const json& cfg) {
    const std::string s = cfg.value("sign", "+");
    if (s == "+") return +1;
    if (s == "-") return -1;
    throw hpq::InputError("sign must be \"+\" or \"-\"");
}

hpq::KernelPath path_from_json(const json& cfg) {
    const std::string p = cfg.value("path", "fast");
    if (p == "fast") return hpq::KernelPath::fast;
    if (p == "quadrature") return hpq::KernelPath::quadrature;
    throw hpq::InputError("path must be \"fast\" or \"quadrature\"");
}

hpq::SemidirectProduct group_from_config(const json& cfg) {
    const json& g = cfg.at("group");
    if (g.is_string()) return hpq::io::catalog_group(g.get<std::string>());
    if (g.is_object()) return hpq::io::semidirect_from_json(g);
    throw hpq::InputError("group: expected a name or an action-table object");
}

void write_json_report(const std::string& path, const json& report,
                       const std::string& hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hpq::InputError("cannot write file: " + path);
    out << report.dump(2) << "\n";
    hpq::io::write_sidecar(path, hash, json::object());
}

// ---------------------------------------------------------------------------

int run_quantize(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(
        cfg, {"hbar", "sign", "refine", "grid", "rho_grid", "function", "path"},
        "quantize");
    const hpq::PhaseGrid pg = phase_grid(cfg);
    const hpq::RhoGrid rg = rho_grid(cfg, pg);
    const hpq::GridFunction f = function_from_json(cfg.at("function"), pg);
    const double hbar = cfg.value("hbar", 1.0);
    double edge = 0.0;
    const hpq::HalfLineOperator op = quantize(f, sign_from_json(cfg), hbar, rg,
                                              path_from_json(cfg), &edge);
    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    hpq::io::write_kernel_csv(out_path(opt, "kernel.csv"), op, hash);
    say(opt, "kernel.csv written (band-edge amplitude " +
                 hpq::io::format_number(edge) + ")");
    return 0;
}

int run_dequantize(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"kernel_plus", "kernel_minus", "probes"},
                                 "dequantize");
    const bool has_p = cfg.contains("kernel_plus");
    const bool has_m = cfg.contains("kernel_minus");
    if (!has_p && !has_m)
        throw hpq::InputError("dequantize: need kernel_plus and/or kernel_minus");
    std::vector<hpq::HalfLineOperator> ops;
    if (has_p)
        ops.push_back(hpq::io::read_kernel_csv(cfg.at("kernel_plus").get<std::string>()));
    if (has_m)
        ops.push_back(hpq::io::read_kernel_csv(cfg.at("kernel_minus").get<std::string>()));

    const json& pj = cfg.at("probes");
    hpq::io::reject_unknown_keys(pj, {"k_min", "k_max", "a_values"}, "probes");
    const int k_min = pj.at("k_min").get<int>();
    const int k_max = pj.at("k_max").get<int>();
    const std::vector<double> a_values = pj.at("a_values").get<std::vector<double>>();

    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    const std::string path = out_path(opt, "dequantized.csv");
    std::ofstream out(path, std::ios::binary);
    out << "lambda,a,re,im\n";
    for (int k = k_min; k <= k_max; ++k) {
        const double lambda = std::exp(k * ops[0].grid.du);
        for (double a : a_values) {
            cplx v{0.0, 0.0};
            for (const auto& op : ops) v += dequantize(op, hpq::AffineElement{lambda, a});
            out << hpq::io::format_number(lambda) << ',' << hpq::io::format_number(a)
                << ',' << hpq::io::format_number(v.real()) << ','
                << hpq::io::format_number(v.imag()) << '\n';
        }
    }
    out.close();
    hpq::io::write_sidecar(path, hash, json::object());
    say(opt, "dequantized.csv written");
    return 0;
}

int run_plancherel(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg,
                                 {"hbar", "refine", "grid", "rho_grid", "function",
                                  "path", "tolerance", "kernel_plus", "kernel_minus"},
                                 "plancherel");
    const hpq::PhaseGrid pg = phase_grid(cfg);
    const hpq::RhoGrid rg = rho_grid(cfg, pg);
    const hpq::GridFunction f = function_from_json(cfg.at("function"), pg);
    const double hbar = cfg.value("hbar", 1.0);
    const double tol =
        opt.tolerance > 0 ? opt.tolerance : cfg.value("tolerance", 1e-2);
    hpq::PlancherelAffineReport rep;
    if (cfg.contains("kernel_plus") || cfg.contains("kernel_minus")) {
        // dual side from previously written kernels
        if (!cfg.contains("kernel_plus") || !cfg.contains("kernel_minus"))
            throw hpq::InputError("plancherel: need both kernel_plus and kernel_minus");
        rep.l2_sq = l2_norm_sq(f);
        double dual = 0.0;
        for (const char* key : {"kernel_plus", "kernel_minus"}) {
            const hpq::HalfLineOperator op =
                hpq::io::read_kernel_csv(cfg.at(key).get<std::string>());
            dual += std::real(weight_pm(op.adjointed().composed(op)));
        }
        rep.dual_sum = dual;
        rep.abs_residual = std::abs(rep.l2_sq - rep.dual_sum);
        rep.rel_residual = rep.abs_residual / rep.l2_sq;
    } else {
        rep = plancherel_residual(f, hbar, rg, path_from_json(cfg));
    }
    json report{{"l2_sq", rep.l2_sq},
                {"dual_sum", rep.dual_sum},
                {"abs_residual", rep.abs_residual},
                {"rel_residual", rep.rel_residual},
                {"tolerance", tol}};
    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    write_json_report(out_path(opt, "plancherel.json"), report, hash);
    say(opt, "plancherel relative residual " + hpq::io::format_number(rep.rel_residual));
    return rep.rel_residual <= tol ? 0 : 2;
}

int run_wigner(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"hbar", "refine", "state", "sweep", "kernel"},
                                 "wigner");
    const double hbar = cfg.value("hbar", 1.0);
    const int refine = cfg.value("refine", 1);
    const hpq::RhoGrid rg = hpq::RhoGrid::standard(refine);
    const json& sj = cfg.at("state");
    hpq::io::reject_unknown_keys(sj, {"preset", "u0", "sigma"}, "state");
    if (sj.value("preset", "") != "gaussian")
        throw hpq::InputError("state: unknown preset (expected \"gaussian\")");
    const hpq::StateVector xi =
        hpq::StateVector::gaussian(rg, sj.value("u0", 0.0), sj.value("sigma", 1.0));

    const json& sw = cfg.at("sweep");
    hpq::io::reject_unknown_keys(sw, {"k_min", "k_max", "a_min", "a_max", "n_a"},
                                 "sweep");
    const int k_min = sw.at("k_min").get<int>();
    const int k_max = sw.at("k_max").get<int>();
    const double a_min = sw.at("a_min").get<double>();
    const double a_max = sw.at("a_max").get<double>();
    const int n_a = sw.at("n_a").get<int>();

    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    const std::string path = out_path(opt, "wigner.csv");
    std::ofstream out(path, std::ios::binary);
    out << "lambda,a,re,im\n";
    for (int k = k_min; k <= k_max; ++k) {
        const double lambda = std::exp(k * rg.du);
        for (int i = 0; i < n_a; ++i) {
            const double a = a_min + i * (a_max - a_min) / n_a;
            const cplx w = wigner(xi, hbar, hpq::AffineElement{lambda, a});
            out << hpq::io::format_number(lambda) << ',' << hpq::io::format_number(a)
                << ',' << hpq::io::format_number(w.real()) << ','
                << hpq::io::format_number(w.imag()) << '\n';
        }
    }
    out.close();
    hpq::io::write_sidecar(path, hash, json::object());
    if (cfg.contains("kernel")) {
        // expectation value of the kernel operator in the state
        const hpq::HalfLineOperator op =
            hpq::io::read_kernel_csv(cfg.at("kernel").get<std::string>());
        if (!(op.grid == rg))
            throw hpq::InputError("wigner: kernel grid differs from the state grid");
        const cplx e = expectation(op, xi);
        const std::string epath = out_path(opt, "expectation.csv");
        std::ofstream eout(epath, std::ios::binary);
        eout << "re,im\n"
             << hpq::io::format_number(e.real()) << ','
             << hpq::io::format_number(e.imag()) << '\n';
        eout.close();
        hpq::io::write_sidecar(epath, hash, json::object());
    }
    say(opt, "wigner.csv written");
    return 0;
}

int run_orbits(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"input"}, "orbits");
    const std::string in_path = cfg.at("input").get<std::string>();
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw hpq::InputError("cannot open file: " + in_path);
    std::string line;
    if (!std::getline(in, line)) throw hpq::InputError(in_path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "eta_A,eta_L")
        throw hpq::InputError(in_path + ":1: expected header 'eta_A,eta_L'");

    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    const std::string path = out_path(opt, "orbits.csv");
    std::ofstream out(path, std::ios::binary);
    out << "eta_A,eta_L,class,kirillov_coeff\n";
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw hpq::InputError(in_path + ":" + std::to_string(lineno) +
                                  ": expected two columns");
        hpq::CoadjointPoint eta;
        try {
            eta.eta_A = std::stod(line.substr(0, comma));
            eta.eta_L = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw hpq::InputError(in_path + ":" + std::to_string(lineno) +
                                  ": bad number");
        }
        const hpq::OrbitClass cls = classify_orbit(eta);
        const char* name = cls.family == hpq::OrbitFamily::plus_halfplane
                               ? "plus_halfplane"
                               : cls.family == hpq::OrbitFamily::minus_halfplane
                                     ? "minus_halfplane"
                                     : "point";
        out << hpq::io::format_number(eta.eta_A) << ','
            << hpq::io::format_number(eta.eta_L) << ',' << name << ','
            << hpq::io::format_number(kirillov_form(eta)) << '\n';
    }
    out.close();
    hpq::io::write_sidecar(path, hash, json::object());
    say(opt, "orbits.csv written");
    return 0;
}

int run_kac_verify(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"group", "tolerance"}, "kac-verify");
    const hpq::SemidirectProduct G = group_from_config(cfg);
    const double tol =
        opt.tolerance > 0 ? opt.tolerance : cfg.value("tolerance", 1e-12);
    const hpq::kac::KacReport rep = hpq::kac::kac_axiom_report(G.as_group());
    json residuals = json::object();
    for (const auto& [k, v] : rep.residuals) residuals[k] = v;
    json report{{"group", G.name()},
                {"order", G.order()},
                {"residuals", residuals},
                {"max_residual", rep.max_residual},
                {"tolerance", tol}};
    if (G.as_group().is_abelian()) {
        const auto p = hpq::kac::pontryagin_check(G.as_group());
        report["pontryagin_max_residual"] = p.max_residual;
    }
    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    write_json_report(out_path(opt, "kac_report.json"), report, hash);
    say(opt, "kac-verify max residual " + hpq::io::format_number(rep.max_residual));
    return rep.max_residual <= tol ? 0 : 2;
}

int run_mackey(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"group", "tolerance", "dump_matrices"},
                                 "mackey");
    const hpq::SemidirectProduct G = group_from_config(cfg);
    const double tol =
        opt.tolerance > 0 ? opt.tolerance : cfg.value("tolerance", 1e-12);

    const auto labels = hpq::mackey::classify_dual(G);
    std::vector<hpq::mackey::FiniteRep> reps;
    json jlabels = json::array();
    int sum_dim_sq = 0;
    for (const auto& l : labels) {
        reps.push_back(hpq::mackey::induced_rep(G, l));
        sum_dim_sq += l.dim * l.dim;
        jlabels.push_back(
            {{"kind", l.kind == hpq::mackey::DualLabel::Kind::orbit ? "orbit"
                                                                    : "s_character"},
             {"n_char", l.n_char},
             {"orbit", l.orbit},
             {"s_char", l.s_char},
             {"dim", l.dim}});
    }

    // deterministic random test function from the seed
    std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed) + 1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::VectorXcd f(G.order());
    for (int i = 0; i < G.order(); ++i) f[i] = cplx(d(rng), d(rng));

    const auto pl = hpq::mackey::plancherel_report(G, reps, f);
    std::vector<Eigen::MatrixXcd> fh;
    for (const auto& r : reps) fh.push_back(hpq::mackey::rep_of_l1(G, r, f));
    const Eigen::VectorXcd back = hpq::mackey::fourier_inversion(G, reps, fh);
    const double inv_res = (back - f).cwiseAbs().maxCoeff();

    double coc = 0.0;
    for (int r = 0; r < G.S().order(); ++r)
        for (int x = 0; x < G.order(); ++x)
            for (int y = 0; y < G.order(); ++y) {
                const int yr = G.S().product(G.s_part(y), r);
                const int lhs = G.N().product(hpq::mackey::cocycle(G, yr, x),
                                              hpq::mackey::cocycle(G, r, y));
                if (lhs != hpq::mackey::cocycle(G, r, G.product(x, y))) coc = 1.0;
            }

    json gen = json::array();
    double max_res = std::max({pl.residual, inv_res, coc});
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto gr = hpq::mackey::generator_check(G, reps[i]);
        gen.push_back({{"label", static_cast<int>(i)},
                       {"unitarity", gr.unitarity},
                       {"coproduct", gr.coproduct},
                       {"pentagonal", gr.pentagonal}});
        max_res = std::max(max_res, gr.max_residual);
    }

    json report{{"group", G.name()},
                {"order", G.order()},
                {"labels", jlabels},
                {"sum_dim_sq", sum_dim_sq},
                {"plancherel_residual", pl.residual},
                {"inversion_residual", inv_res},
                {"cocycle_residual", coc},
                {"generator", gen},
                {"max_residual", max_res},
                {"tolerance", tol}};
    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    write_json_report(out_path(opt, "mackey_report.json"), report, hash);

    if (cfg.value("dump_matrices", false)) {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const std::string path =
                out_path(opt, "rep_" + std::to_string(i) + ".csv");
            std::ofstream out(path, std::ios::binary);
            out << "element,row,col,re,im\n";
            for (int x = 0; x < G.order(); ++x)
                for (int r = 0; r < reps[i].dim; ++r)
                    for (int c = 0; c < reps[i].dim; ++c) {
                        const cplx z = reps[i].mats[x](r, c);
                        out << x << ',' << r << ',' << c << ','
                            << hpq::io::format_number(z.real()) << ','
                            << hpq::io::format_number(z.imag()) << '\n';
                    }
            out.close();
            hpq::io::write_sidecar(path, hash, json::object());
        }
    }
    say(opt, "mackey max residual " + hpq::io::format_number(max_res));
    return max_res <= tol && sum_dim_sq == G.order() ? 0 : 2;
}

int run_convolve(const Options& opt) {
    const json cfg = load_config(opt);
    hpq::io::reject_unknown_keys(cfg, {"f", "g", "grid", "refine"}, "convolve");
    const hpq::PhaseGrid pg = phase_grid(cfg);
    const hpq::GridFunction f = function_from_json(cfg.at("f"), pg);
    const hpq::GridFunction g = function_from_json(cfg.at("g"), pg);
    const hpq::GridFunction h = convolve(f, g);
    const std::string hash = hpq::io::config_hash_hex(cfg, opt.seed);
    hpq::io::write_grid_function_csv(out_path(opt, "convolution.csv"), h, hash);
    say(opt, "convolution.csv written");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-plane quantization toolbox"};
    app.set_version_flag("--version", hpq::kVersion);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "JSON config file");
    app.add_option("--out", opt.out_dir, "output directory (default .)");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");
    app.add_option("--tolerance", opt.tolerance, "override the residual tolerance");
    app.add_flag("--quiet", opt.quiet, "suppress progress output");

    int (*handler)(const Options&) = nullptr;
    const std::pair<const char*, std::pair<const char*, int (*)(const Options&)>>
        subs[] = {
            {"quantize",
             {"build the signed kernel of a phase-space function", run_quantize}},
            {"dequantize", {"evaluate f_pm from kernel CSVs at probes", run_dequantize}},
            {"plancherel", {"Parseval identity report for a function", run_plancherel}},
            {"wigner", {"phase-space distribution of a state", run_wigner}},
            {"orbits", {"classify coadjoint points from CSV", run_orbits}},
            {"kac-verify", {"finite Kac-algebra axiom residuals", run_kac_verify}},
            {"mackey",
             {"finite dual classification and residual report", run_mackey}},
            {"convolve", {"group convolution of two grid functions", run_convolve}},
        };
    for (const auto& [name, desc_fn] : subs) {
        auto fn = desc_fn.second;
        CLI::App* sub = app.add_subcommand(name, desc_fn.first);
        sub->fallthrough();
        sub->callback([&handler, fn] { handler = fn; });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        return handler(opt);
    } catch (const hpq::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const hpq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
