// zappl: sparse-grid interpolation with hierarchical bases built from
// nested global 1-D families, using sequential-summation transforms.
//
// Subcommands: grid, fit, eval, verify, cost.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zappl/basis1d.hpp"
#include "zappl/costmodel.hpp"
#include "zappl/csv.hpp"
#include "zappl/index_set.hpp"
#include "zappl/smolyak.hpp"
#include "zappl/test_functions.hpp"
#include "zappl/transform.hpp"

namespace {

struct JobConfig {
    int dim = 2;
    int budget = 4;
    std::string basis = "chebyshev";
    std::string points_file;  // user-supplied axis points; empty -> Leja
    std::optional<double> seed_point;
    std::string function = "genz-oscillatory";
    double fparam = 1.0;
    std::string values_file;
    std::string out;
};

// JSON config provides defaults; command-line flags override.
void load_config_file(const std::string& path, JobConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    is >> j;
    if (j.contains("dim")) cfg.dim = j["dim"].get<int>();
    if (j.contains("budget")) cfg.budget = j["budget"].get<int>();
    if (j.contains("basis")) cfg.basis = j["basis"].get<std::string>();
    if (j.contains("points")) cfg.points_file = j["points"].get<std::string>();
    if (j.contains("seed_point")) cfg.seed_point = j["seed_point"].get<double>();
    if (j.contains("function")) cfg.function = j["function"].get<std::string>();
    if (j.contains("fparam")) cfg.fparam = j["fparam"].get<double>();
    if (j.contains("values")) cfg.values_file = j["values"].get<std::string>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
}

zappl::BasisFamily make_family(const JobConfig& cfg) {
    return {zappl::basis_kind_from_name(cfg.basis), -1.0, 1.0};
}

std::vector<zappl::Zappl1D> make_axes(const JobConfig& cfg) {
    const zappl::BasisFamily family = make_family(cfg);
    zappl::PointSequence seq;
    if (!cfg.points_file.empty()) {
        std::ifstream is(cfg.points_file);
        if (!is) throw std::runtime_error("cannot open points file " + cfg.points_file);
        seq.points = zappl::read_points_csv(is);
        seq.generator = zappl::PointGenerator::UserSupplied;
    } else {
        const double seed = cfg.seed_point.value_or(family.midpoint());
        seq = zappl::make_leja_points(family, cfg.budget + 1, seed);
    }
    const zappl::Zappl1D axis = zappl::build_zappl(family, seq, cfg.budget + 1);
    return std::vector<zappl::Zappl1D>(cfg.dim, axis);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

int cmd_grid(const JobConfig& cfg) {
    const auto axes = make_axes(cfg);
    std::vector<std::vector<double>> pts;
    for (const auto& z : axes) pts.push_back(z.points);
    zappl::SparseGrid grid(zappl::SimplexIndexSet(cfg.dim, cfg.budget), std::move(pts));
    std::ofstream file;
    zappl::write_grid_csv(open_out(file, cfg.out), grid);
    return 0;
}

std::vector<double> gather_values(const JobConfig& cfg, const zappl::SimplexIndexSet& set,
                                  const std::vector<zappl::Zappl1D>& axes) {
    if (!cfg.values_file.empty()) {
        std::ifstream is(cfg.values_file);
        if (!is) throw std::runtime_error("cannot open values file " + cfg.values_file);
        const zappl::VectorCsv vc = zappl::read_vector_csv(is);
        if (vc.dim != cfg.dim) throw std::runtime_error("values file dimension mismatch");
        if (vc.data.size() != set.size())
            throw std::runtime_error("values file has " + std::to_string(vc.data.size()) +
                                     " rows, grid has " + std::to_string(set.size()));
        return vc.data;
    }
    const zappl::TestFunction f = zappl::make_test_function(cfg.function, cfg.dim, cfg.fparam);
    std::vector<double> values(set.size());
    std::vector<int> idx(cfg.dim);
    std::vector<double> x(cfg.dim);
    for (std::uint64_t o = 0; o < set.size(); ++o) {
        set.unrank(o, idx);
        for (int k = 0; k < cfg.dim; ++k) x[k] = axes[k].points[idx[k] - 1];
        values[o] = f(x);
    }
    return values;
}

int cmd_fit(const JobConfig& cfg) {
    const auto axes = make_axes(cfg);
    zappl::SimplexIndexSet set(cfg.dim, cfg.budget);
    const std::vector<double> values = gather_values(cfg, set, axes);

    zappl::MultCounter counter;
    const std::vector<double> coeffs = zappl::hierarchize(values, axes, set, &counter);

    std::ofstream file;
    zappl::write_vector_csv(open_out(file, cfg.out), set, coeffs);

    // node residuals
    zappl::Interpolant itp(axes, set, coeffs);
    double max_resid = 0.0;
    double scale = 0.0;
    std::vector<int> idx(cfg.dim);
    std::vector<double> x(cfg.dim);
    for (std::uint64_t o = 0; o < set.size(); ++o) {
        set.unrank(o, idx);
        for (int k = 0; k < cfg.dim; ++k) x[k] = axes[k].points[idx[k] - 1];
        max_resid = std::max(max_resid, std::abs(zappl::eval_interpolant(itp, x) - values[o]));
        scale = std::max(scale, std::abs(values[o]));
    }
    std::cerr << "fit report\n"
              << "  N_sparse            " << set.size() << "\n"
              << "  mults measured      " << counter.count << "\n"
              << "  mults closed form   "
              << zappl::int128_to_string(zappl::n_mult_sequential(cfg.dim, cfg.budget)) << "\n"
              << "  max node residual   " << max_resid / std::max(scale, 1.0) << " (relative)\n";
    return 0;
}

int cmd_eval(const JobConfig& cfg, const std::string& coeffs_path, const std::string& points_path) {
    std::ifstream cis(coeffs_path);
    if (!cis) throw std::runtime_error("cannot open coefficient file " + coeffs_path);
    const zappl::VectorCsv vc = zappl::read_vector_csv(cis);
    if (vc.dim != cfg.dim)
        throw std::runtime_error("coefficient file is " + std::to_string(vc.dim) +
                                 "-dimensional, --dim says " + std::to_string(cfg.dim));
    if (vc.data.size() != zappl::SimplexIndexSet::count(cfg.dim, cfg.budget))
        throw std::runtime_error("coefficient file row count does not match (dim, budget)");

    const auto axes = make_axes(cfg);
    zappl::Interpolant itp(axes, zappl::SimplexIndexSet(cfg.dim, cfg.budget), vc.data);

    std::ifstream pis(points_path);
    if (!pis) throw std::runtime_error("cannot open points file " + points_path);
    const auto pts = zappl::read_eval_points_csv(pis, cfg.dim);

    std::ofstream file;
    std::ostream& os = open_out(file, cfg.out);
    for (const auto& x : pts) {
        for (double v : x) os << zappl::format_double(v) << ',';
        os << zappl::format_double(zappl::eval_interpolant(itp, x)) << '\n';
    }
    return 0;
}

double rel_max_dev(std::span<const double> got, std::span<const double> want) {
    double dev = 0.0, scale = 0.0;
    for (size_t i = 0; i < got.size(); ++i) {
        dev = std::max(dev, std::abs(got[i] - want[i]));
        scale = std::max(scale, std::abs(want[i]));
    }
    return dev / std::max(scale, 1e-30);
}

int cmd_verify(const JobConfig& cfg, int dmax, int bmax, double perturb) {
    std::mt19937_64 rng(424242u);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    bool all_ok = true;
    auto report = [&](const std::string& check, int d, int b, double dev, double tol) {
        const bool ok = dev <= tol;
        all_ok = all_ok && ok;
        std::cout << check << " D=" << d << " b=" << b << " dev=" << dev << " tol=" << tol
                  << (ok ? " PASS" : " FAIL") << '\n';
    };

    for (int d = 1; d <= dmax; ++d)
        for (int b = 0; b <= bmax; ++b) {
            JobConfig sub = cfg;
            sub.dim = d;
            sub.budget = b;
            const auto axes = make_axes(sub);
            zappl::SimplexIndexSet set(d, b);

            std::vector<double> values(set.size());
            for (double& v : values) v = unif(rng);

            // dense oracle vs sequential transform
            auto fast = zappl::hierarchize(values, axes, set);
            fast[0] += perturb;  // sensitivity injection, 0 by default
            const auto oracle = zappl::dense_oracle(values, axes, set);
            report("dense_oracle", d, b, rel_max_dev(fast, oracle), 1e-8);

            // chop/invert interchange
            double nf = std::pow(static_cast<double>(b + 1), d);
            if (nf <= 4096.0) {
                const auto chop = zappl::verify_chop_identity(axes, d, b);
                report("chop_identity", d, b, chop.max_deviation, 1e-12);
            }

            // delta-operator baseline equivalence
            {
                zappl::Interpolant itp(axes, set, fast);
                zappl::DeltaBaseline base(axes, set, values);
                double dev = 0.0, scale = 0.0;
                std::vector<double> x(d);
                for (int t = 0; t < 100; ++t) {
                    for (double& v : x) v = unif(rng);
                    const double u = zappl::eval_interpolant(itp, x);
                    const double v = zappl::eval_delta_baseline(base, x);
                    dev = std::max(dev, std::abs(u - v));
                    scale = std::max(scale, std::abs(v));
                }
                report("delta_baseline", d, b, dev / std::max(scale, 1e-30), 1e-9);
            }

            // instrumented multiplication count vs closed form
            std::string detail;
            const bool ok = zappl::count_verify(d, b, axes, &detail);
            all_ok = all_ok && ok;
            std::cout << "count_verify D=" << d << " b=" << b << " " << detail
                      << (ok ? " PASS" : " FAIL") << '\n';
        }
    return all_ok ? 0 : 1;
}

int cmd_cost(const JobConfig& cfg, int dmax, std::vector<int> blist) {
    if (blist.empty()) blist = {4, 9, 14};
    const auto rows = zappl::cost_sweep(1, dmax, blist);
    std::ofstream file;
    open_out(file, cfg.out) << zappl::cost_csv(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse-grid interpolation via hierarchical bases and sequential summation"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string config_path;
    int dmax = 4, bmax = 5, cost_dmax = 20;
    std::vector<int> blist;
    std::string coeffs_path, eval_points_path;

    // pre-scan for --config so flags can override file values
    for (int i = 1; i < argc - 1; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    try {
        if (!config_path.empty()) load_config_file(config_path, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override)");
        sub->add_option("--dim,-D", cfg.dim, "number of dimensions");
        sub->add_option("--budget,-b", cfg.budget, "simplex budget b");
        sub->add_option("--basis", cfg.basis, "basis family: chebyshev | monomial");
        sub->add_option("--points", cfg.points_file, "CSV of axis points (one per line)");
        sub->add_option_function<double>(
               "--seed-point", [&](double v) { cfg.seed_point = v; },
               "first Leja point (default: domain midpoint)")
            ->expected(1);
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };

    CLI::App* grid = app.add_subcommand("grid", "export the sparse grid as CSV");
    add_common(grid);

    CLI::App* fit = app.add_subcommand("fit", "compute basis coefficients from grid values");
    add_common(fit);
    fit->add_option("--function", cfg.function, "builtin test function name");
    fit->add_option("--fparam", cfg.fparam, "builtin function parameter");
    fit->add_option("--values", cfg.values_file, "value CSV joined to the grid by offset");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a fitted interpolant at points");
    add_common(eval);
    eval->add_option("--coeffs", coeffs_path, "coefficient CSV from fit")->required();
    eval->add_option("--at", eval_points_path, "CSV of evaluation points (x_1..x_D per line)")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-checks");
    add_common(verify);
    double perturb = 0.0;
    verify->add_option("--dmax", dmax, "max dimension (default 4)");
    verify->add_option("--bmax", bmax, "max budget (default 5)");
    verify->add_option("--perturb", perturb,
                       "add this to one computed coefficient before checking");

    CLI::App* cost = app.add_subcommand("cost", "emit the operation-count table");
    add_common(cost);
    cost->add_option("--dmax", cost_dmax, "max dimension (default 20)");
    cost->add_option("--blist", blist, "budgets to tabulate (default 4 9 14)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (grid->parsed()) return cmd_grid(cfg);
        if (fit->parsed()) return cmd_fit(cfg);
        if (eval->parsed()) return cmd_eval(cfg, coeffs_path, eval_points_path);
        if (verify->parsed()) return cmd_verify(cfg, dmax, bmax, perturb);
        if (cost->parsed()) return cmd_cost(cfg, cost_dmax, blist);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
