#include "perronkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <ostream>

#include "perronkit/errors.hpp"
#include "perronkit/generators.hpp"
#include "perronkit/io.hpp"
#include "perronkit/power.hpp"

namespace perronkit {

namespace {

template <class F>
MethodRun timed(F&& run) {
    MethodRun out;
    const auto start = std::chrono::steady_clock::now();
    try {
        run(out);
    } catch (const std::exception& e) {
        out.status = std::string("error: ") + e.what();
    }
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

BenchRecord bench_one(const BenchCase& c, const BenchConfig& cfg) {
    BenchRecord rec;
    rec.label = c.label;
    rec.n = c.matrix.order();
    rec.ratio = c.ratio;
    rec.algo_a = timed([&](MethodRun& m) {
        const auto r = algorithm_a(c.matrix, cfg.solver);
        m.iterations = r.iterations;
        m.root = r.root;
        m.status = to_string(r.status);
    });
    rec.algo_b = timed([&](MethodRun& m) {
        const auto r = algorithm_b(c.matrix, cfg.solver);
        m.iterations = r.iterations;
        m.root = r.root;
        m.status = to_string(r.status);
    });
    rec.power = timed([&](MethodRun& m) {
        const auto r = power_method(c.matrix, cfg.solver.tolerance, cfg.solver.max_iterations);
        m.iterations = r.iterations;
        m.root = r.eigenvalue;
        m.status = to_string(r.status);
    });
    return rec;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::vector<double> ranks(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

}  // namespace

std::vector<BenchCase> tridiagonal_suite(const std::vector<std::size_t>& orders) {
    std::vector<BenchCase> suite;
    for (std::size_t n : orders) {
        const auto eig = tridiagonal_eigs(n, 1.0, 3.0, 2.0);
        suite.push_back({"tridiag_" + std::to_string(n), tridiagonal(n, 1.0, 3.0, 2.0),
                         std::abs(eig[1] / eig[0])});
    }
    return suite;
}

std::vector<BenchCase> default_suite() {
    auto suite = tridiagonal_suite({5, 10, 20, 50});
    suite.push_back({"equal_rows_4",
                     NonnegMatrix::from_dense({{1, 2, 0, 1}, {0, 3, 1, 0}, {2, 0, 1, 1}, {1, 1, 1, 1}}),
                     std::nullopt});
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        suite.push_back({"random_dense_64_s" + std::to_string(seed), random_primitive(64, 0.3, seed),
                         std::nullopt});
    }
    suite.push_back({"random_sparse_5000", random_primitive(5000, 0.002, 7, Storage::Csr), std::nullopt});
    return suite;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& suite, const BenchConfig& cfg) {
    std::vector<BenchRecord> records(suite.size());
    const auto count = static_cast<std::int64_t>(suite.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs > 0 ? cfg.jobs : 1) if (cfg.jobs > 1)
    for (std::int64_t k = 0; k < count; ++k) {
        records[static_cast<std::size_t>(k)] = bench_one(suite[static_cast<std::size_t>(k)], cfg);
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "label,n,ratio,iter_a,iter_b,iter_power,root_a,root_b,root_power,"
           "status_a,status_b,status_power,ms_a,ms_b,ms_power\n";
    for (const auto& r : records) {
        out << csv_field(r.label) << ',' << r.n << ',' << (r.ratio ? io::format_real(*r.ratio) : "") << ','
            << r.algo_a.iterations << ',' << r.algo_b.iterations << ',' << r.power.iterations << ','
            << io::format_real(r.algo_a.root) << ',' << io::format_real(r.algo_b.root) << ','
            << io::format_real(r.power.root) << ',' << csv_field(r.algo_a.status) << ','
            << csv_field(r.algo_b.status) << ',' << csv_field(r.power.status) << ',' << r.algo_a.wall_ms
            << ',' << r.algo_b.wall_ms << ',' << r.power.wall_ms << '\n';
    }
}

double rank_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) throw DomainError("rank correlation needs two equal-length samples");
    const auto ra = ranks(a), rb = ranks(b);
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace perronkit
