#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "perronkit/bench.hpp"
#include "perronkit/bounds.hpp"
#include "perronkit/errors.hpp"
#include "perronkit/generators.hpp"
#include "perronkit/io.hpp"
#include "perronkit/markov.hpp"
#include "perronkit/power.hpp"
#include "perronkit/primitivity.hpp"

#ifndef PERRONKIT_VERSION
#define PERRONKIT_VERSION "0.0.0"
#endif

namespace perronkit::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::map<std::string, SideChoice> kSides{
    {"auto", SideChoice::Auto}, {"row", SideChoice::Row}, {"col", SideChoice::Column}};
const std::map<std::string, StoppingRule> kStops{
    {"range", StoppingRule::RangeError}, {"delta", StoppingRule::DeltaError}};
const std::map<std::string, io::Format> kFormats{
    {"auto", io::Format::Auto}, {"mm", io::Format::MatrixMarket}, {"csv", io::Format::Csv}};

json interval(const Interval& i) { return json::array({i.lo, i.hi}); }

json matrix_json(const NonnegMatrix& a) {
    if (a.storage() == Storage::Dense) return {{"order", a.order()}, {"storage", "dense"}, {"rows", a.to_rows()}};
    return {{"order", a.order()},
            {"storage", "csr"},
            {"row_ptr", std::vector<std::size_t>(a.row_ptr().begin(), a.row_ptr().end())},
            {"col_idx", std::vector<std::size_t>(a.col_idx().begin(), a.col_idx().end())},
            {"values", std::vector<double>(a.values().begin(), a.values().end())}};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path + "'");
    f.precision(17);
    return f;
}

struct SolverFlags {
    double tol = 1e-8;
    std::optional<std::size_t> max_iter;
    std::string side = "auto";
    std::string stop = "range";
    std::size_t window = 20;
    double factor = 0.999;

    void attach(CLI::App* app) {
        app->add_option("--tol", tol, "Tolerance")->capture_default_str();
        app->add_option("--max-iter", max_iter, "Iteration cap (default 100000 or $PERRONKIT_MAX_ITER)");
        app->add_option("--side", side, "Sum side")->check(CLI::IsMember({"auto", "row", "col"}))->capture_default_str();
        app->add_option("--stop", stop, "Stopping rule")->check(CLI::IsMember({"range", "delta"}))->capture_default_str();
        app->add_option("--stagnation-window", window, "Stagnation window")->capture_default_str();
        app->add_option("--stagnation-factor", factor, "Stagnation factor")->capture_default_str();
    }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.tolerance = tol;
        cfg.max_iterations = max_iter.value_or(default_max_iterations());
        cfg.side = kSides.at(side);
        cfg.stopping = kStops.at(stop);
        cfg.stagnation_window = window;
        cfg.stagnation_factor = factor;
        cfg.validate();
        return cfg;
    }
};

json config_json(const SolverConfig& cfg) {
    return {{"tolerance", cfg.tolerance},
            {"max_iterations", cfg.max_iterations},
            {"side", to_string(cfg.side)},
            {"stopping", to_string(cfg.stopping)},
            {"stagnation_window", cfg.stagnation_window},
            {"stagnation_factor", cfg.stagnation_factor}};
}

void write_trace(const std::string& path, const ConvergenceHistory& h) {
    auto f = open_output(path);
    f << "iter,rmin,rmax\n";
    for (std::size_t t = 0; t < h.size(); ++t) {
        f << t << ',' << io::format_real(h.rmin[t]) << ',' << io::format_real(h.rmax[t]) << '\n';
    }
}

json bench_summary(const std::vector<BenchRecord>& records) {
    std::size_t converged = 0;
    double spread = 0.0;
    std::vector<double> ratio, it_a, it_b, it_p;
    for (const auto& r : records) {
        if (r.algo_a.converged() && r.algo_b.converged() && r.power.converged()) {
            ++converged;
            const double lo = std::min({r.algo_a.root, r.algo_b.root, r.power.root});
            const double hi = std::max({r.algo_a.root, r.algo_b.root, r.power.root});
            spread = std::max(spread, hi - lo);
        }
        if (r.ratio) {
            ratio.push_back(*r.ratio);
            it_a.push_back(static_cast<double>(r.algo_a.iterations));
            it_b.push_back(static_cast<double>(r.algo_b.iterations));
            it_p.push_back(static_cast<double>(r.power.iterations));
        }
    }
    json s = {{"records", records.size()}, {"all_methods_converged", converged}, {"max_root_spread", spread}};
    if (ratio.size() >= 2) {
        s["rank_correlation_ratio_vs_iterations"] = {{"algo_a", rank_correlation(ratio, it_a)},
                                                     {"algo_b", rank_correlation(ratio, it_b)},
                                                     {"power", rank_correlation(ratio, it_p)}};
    }
    return s;
}

}  // namespace

int exit_code(Status status) noexcept {
    switch (status) {
        case Status::Converged: return kExitOk;
        case Status::Stagnated: return kExitStagnated;
        case Status::MaxIterations: return kExitMaxIterations;
    }
    return kExitOk;
}

std::size_t default_max_iterations() {
    if (const char* env = std::getenv("PERRONKIT_MAX_ITER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return SolverConfig{}.max_iterations;
}

json run_record(const std::string& command, const std::string& input, json config, json result,
                double timing_ms) {
    return {{"command", command},       {"input", input},         {"config", std::move(config)},
            {"result", std::move(result)}, {"timing_ms", timing_ms}, {"version", PERRONKIT_VERSION}};
}

json to_json(const PerronResult& r, bool full) {
    json j = {{"root", r.root},
              {"root_lo", r.root_lo},
              {"root_hi", r.root_hi},
              {"iterations", r.iterations},
              {"side_used", to_string(r.side_used)},
              {"status", to_string(r.status)},
              {"eigenvector", r.eigenvector ? json(*r.eigenvector) : json(nullptr)}};
    if (full) {
        j["balanced"] = matrix_json(r.balanced);
        j["history"] = {{"rmin", r.history.rmin}, {"rmax", r.history.rmax}};
        j["scaling"] = r.scaling ? json(std::vector<double>(r.scaling->values().begin(), r.scaling->values().end()))
                                 : json(nullptr);
    }
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perron root and vector of primitive nonnegative matrices", "perronkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", PERRONKIT_VERSION);

    std::string input;
    std::string format = "auto";
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Matrix file (Matrix Market or CSV)")->required();
        sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "mm", "csv"}))->capture_default_str();
    };

    // perron
    auto* perron = app.add_subcommand("perron", "Perron root by iterative balancing");
    SolverFlags perron_flags;
    std::string algo = "b";
    std::string trace_path, discs_path;
    bool full_json = false;
    add_input(perron);
    perron_flags.attach(perron);
    perron->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember({"a", "b"}))->capture_default_str();
    perron->add_option("--trace", trace_path, "CSV trace: iter,rmin,rmax");
    perron->add_option("--discs", discs_path, "CSV discs: iter,index,center,radius");
    perron->add_flag("--json", full_json, "Full result record (balanced matrix, history, scaling)");

    // power
    auto* power = app.add_subcommand("power", "Power-method baseline");
    SolverFlags power_flags;
    add_input(power);
    power_flags.attach(power);
    power->add_flag("--json", full_json, "Include the eigenvector");

    auto* bounds = app.add_subcommand("bounds", "Frobenius and Minc intervals");
    add_input(bounds);

    auto* prim = app.add_subcommand("primitivity", "Exact irreducibility and primitivity tests");
    add_input(prim);

    // stationary
    auto* stat = app.add_subcommand("stationary", "Stationary distribution of a row-stochastic matrix");
    SolverFlags stat_flags;
    double alpha = 0.85;
    bool normalize = false;
    add_input(stat);
    stat_flags.attach(stat);
    stat->add_option("--alpha", alpha, "Damping factor in (0,1]; 1 disables damping")->capture_default_str();
    stat->add_flag("--normalize", normalize, "Row-normalize near-stochastic input");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate test matrices (Matrix Market)");
    gen->require_subcommand(1);
    std::string gen_out, layout = "coordinate";
    std::size_t gen_n = 0;
    double ta = 3.0, tb = 2.0, tc = 1.0, density = 0.3;
    std::uint64_t seed = 1;
    auto gen_common = [&](CLI::App* sub) {
        sub->add_option("--n", gen_n, "Order")->required();
        sub->add_option("-o,--output", gen_out, "Output file (default stdout)");
        sub->add_option("--layout", layout, "Matrix Market layout")
            ->check(CLI::IsMember({"array", "coordinate"}))
            ->capture_default_str();
    };
    auto* gen_tri = gen->add_subcommand("tridiag", "T(n; c, a, b)");
    gen_common(gen_tri);
    gen_tri->add_option("--a", ta, "Diagonal")->capture_default_str();
    gen_tri->add_option("--b", tb, "Superdiagonal")->capture_default_str();
    gen_tri->add_option("--c", tc, "Subdiagonal")->capture_default_str();
    auto* gen_rand = gen->add_subcommand("random", "Random primitive matrix");
    gen_common(gen_rand);
    gen_rand->add_option("--density", density, "Off-diagonal density")->capture_default_str();
    gen_rand->add_option("--seed", seed, "Seed")->capture_default_str();
    auto* gen_cycle = gen->add_subcommand("cycle", "Cyclic permutation (imprimitive)");
    gen_common(gen_cycle);

    // bench
    auto* bench = app.add_subcommand("bench", "Compare Algorithm A, Algorithm B and the power method");
    SolverFlags bench_flags;
    std::string suite_name = "default", summary_path, csv_path;
    std::vector<std::size_t> orders{5, 10, 20, 50};
    int jobs = 1;
    bench_flags.attach(bench);
    bench->add_option("--suite", suite_name, "Suite")->check(CLI::IsMember({"default", "tridiag"}))->capture_default_str();
    bench->add_option("--orders", orders, "Orders for the tridiagonal suite");
    bench->add_option("--jobs", jobs, "Concurrent cases")->capture_default_str();
    bench->add_option("--summary", summary_path, "JSON summary file (default: stderr)");
    bench->add_option("-o,--output", csv_path, "CSV file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << PERRONKIT_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        const auto start = Clock::now();
        auto load = [&] { return io::parse_matrix(input, kFormats.at(format)); };

        if (*perron) {
            const SolverConfig cfg = perron_flags.config();
            const NonnegMatrix a = load();
            std::optional<std::ofstream> discs;
            std::vector<double> diag;
            IterationObserver observer;
            if (!discs_path.empty()) {
                discs.emplace(open_output(discs_path));
                *discs << "iter,index,center,radius\n";
                diag = a.diagonal();
                observer = [&](std::size_t t, std::span<const double> r) {
                    for (std::size_t i = 0; i < r.size(); ++i) {
                        *discs << t << ',' << i << ',' << io::format_real(diag[i]) << ','
                               << io::format_real(std::max(0.0, r[i] - diag[i])) << '\n';
                    }
                };
            }
            const PerronResult r = algo == "a" ? algorithm_a(a, cfg, observer) : algorithm_b(a, cfg, observer);
            if (!trace_path.empty()) write_trace(trace_path, r.history);
            json config = config_json(cfg);
            config["algorithm"] = algo;
            out << run_record("perron", input, config, to_json(r, full_json), elapsed_ms(start)).dump(2) << '\n';
            if (r.status == Status::Stagnated) err << "stagnated: matrix does not appear to be primitive\n";
            return exit_code(r.status);
        }

        if (*power) {
            const SolverConfig cfg = power_flags.config();
            NonnegMatrix a = load();
            if (cfg.side == SideChoice::Column) a = a.transpose();
            const PowerResult r = power_method(a, cfg.tolerance, cfg.max_iterations);
            json result = {{"eigenvalue", r.eigenvalue},
                           {"iterations", r.iterations},
                           {"status", to_string(r.status)},
                           {"residual", r.residual}};
            if (full_json) result["eigenvector"] = r.eigenvector;
            json config = {{"tolerance", cfg.tolerance}, {"max_iterations", cfg.max_iterations},
                           {"side", cfg.side == SideChoice::Column ? "col" : "row"}};
            out << run_record("power", input, config, result, elapsed_ms(start)).dump(2) << '\n';
            return r.status == PowerStatus::Converged ? kExitOk : kExitMaxIterations;
        }

        if (*bounds) {
            const BoundsReport b = bounds_report(load());
            json result = {{"frobenius_row", interval(b.frobenius_row)},
                           {"frobenius_col", interval(b.frobenius_col)},
                           {"minc_row", interval(b.minc_row)},
                           {"minc_col", interval(b.minc_col)}};
            out << run_record("bounds", input, json::object(), result, elapsed_ms(start)).dump(2) << '\n';
            return kExitOk;
        }

        if (*prim) {
            const NonnegMatrix a = load();
            json result = {{"irreducible", is_irreducible(a)},
                           {"primitive", is_primitive(a)},
                           {"wielandt_bound", wielandt_bound(a.order())}};
            out << run_record("primitivity", input, json::object(), result, elapsed_ms(start)).dump(2) << '\n';
            return kExitOk;
        }

        if (*stat) {
            SolverConfig cfg = stat_flags.config();
            if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("--alpha must lie in (0, 1]");
            const NonnegMatrix a = load();
            StochasticMatrix p = normalize ? make_stochastic(a) : StochasticMatrix::verify(a);
            if (alpha < 1.0) p = damp(p, alpha);
            const StationaryDistribution s = stationary(p, cfg);
            const auto order = ranked_order(s.u);
            json result = {{"u", s.u},          {"ranking", order},         {"residual", s.residual},
                           {"root", s.root},    {"iterations", s.iterations}, {"status", to_string(s.status)}};
            json config = config_json(cfg);
            config["side"] = "row";
            config["alpha"] = alpha;
            config["normalize"] = normalize;
            out << run_record("stationary", input, config, result, elapsed_ms(start)).dump(2) << '\n';
            return exit_code(s.status);
        }

        if (*gen) {
            std::optional<NonnegMatrix> m;
            if (*gen_tri) m = tridiagonal(gen_n, tc, ta, tb);
            if (*gen_rand) m = random_primitive(gen_n, density, seed);
            if (*gen_cycle) m = cyclic_permutation(gen_n);
            const auto lay = layout == "array" ? io::MatrixMarketLayout::Array : io::MatrixMarketLayout::Coordinate;
            if (gen_out.empty()) {
                io::write_matrix_market(out, *m, lay);
            } else {
                auto f = open_output(gen_out);
                io::write_matrix_market(f, *m, lay);
            }
            return kExitOk;
        }

        if (*bench) {
            BenchConfig cfg;
            cfg.solver = bench_flags.config();
            cfg.jobs = jobs;
            const auto suite = suite_name == "tridiag" ? tridiagonal_suite(orders) : default_suite();
            const auto records = run_bench(suite, cfg);
            if (csv_path.empty()) {
                write_bench_csv(out, records);
            } else {
                auto f = open_output(csv_path);
                write_bench_csv(f, records);
            }
            const std::string summary = bench_summary(records).dump(2);
            if (summary_path.empty()) {
                err << summary << '\n';
            } else {
                open_output(summary_path) << summary << '\n';
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace perronkit::cli
