// Compares the serial reference hierarchization against the OpenMP-parallel
// pencil kernels on a few (D, b) configurations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zappl/basis1d.hpp"
#include "zappl/index_set.hpp"
#include "zappl/transform.hpp"

namespace {

double seconds_of(const std::function<void()>& body, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel path runs serially\n");
#endif
    std::printf("%4s %4s %12s %12s %12s %8s %10s\n", "D", "b", "N_sparse", "serial[s]",
                "parallel[s]", "speedup", "max|diff|");

    const std::vector<std::pair<int, int>> cases = {{3, 12}, {4, 10}, {5, 9}, {6, 8}, {8, 7}};
    for (auto [d, b] : cases) {
        const zappl::BasisFamily family{zappl::BasisKind::Chebyshev1, -1.0, 1.0};
        const zappl::Zappl1D axis =
            zappl::build_zappl(family, zappl::make_leja_points(family, b + 1, 0.0), b + 1);
        const std::vector<zappl::Zappl1D> axes(d, axis);
        const zappl::SimplexIndexSet set(d, b);

        std::mt19937_64 rng(7u);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        std::vector<double> values(set.size());
        for (double& v : values) v = unif(rng);

        std::vector<double> serial_out, parallel_out;
        const int reps = set.size() > 100000 ? 3 : 10;
        const double ts =
            seconds_of([&] { serial_out = zappl::hierarchize(values, axes, set); }, reps);
        const double tp = seconds_of(
            [&] { parallel_out = zappl::hierarchize_parallel(values, axes, set); }, reps);

        double diff = 0.0;
        for (size_t i = 0; i < serial_out.size(); ++i)
            diff = std::max(diff, std::abs(serial_out[i] - parallel_out[i]));

        std::printf("%4d %4d %12llu %12.3e %12.3e %8.2f %10.2e\n", d, b,
                    static_cast<unsigned long long>(set.size()), ts, tp, ts / tp, diff);
    }
    return 0;
}
