// Times the exact-arithmetic kernels in their serial and OpenMP forms on a
// random cloud and cross-checks that both produce identical results.
//
//   bench_vr [n_points] [dim_cap]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fuzz/simplicial.hpp"

using Clock = std::chrono::steady_clock;

namespace {

// Coordinates with 8 decimal digits, the shape rationalized inputs take.
fuzz::PointCloud random_cloud(int n, int dims, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> numerator(0, 1999999999L);
    std::vector<std::vector<fuzz::Rational>> points;
    points.reserve(n);
    while (static_cast<int>(points.size()) < n) {
        std::vector<fuzz::Rational> p;
        for (int d = 0; d < dims; ++d) p.push_back(fuzz::ratio(numerator(rng), 100000000L));
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(std::move(p));
    }
    return fuzz::make_point_cloud(std::move(points));
}

// Two rounds each: the first pays the allocator's first-touch cost, the
// second shows the steady-state scan.
template <typename F>
std::pair<double, double> timed_twice(F&& body) {
    const auto t0 = Clock::now();
    body();
    const auto t1 = Clock::now();
    body();
    const auto t2 = Clock::now();
    return {std::chrono::duration<double>(t1 - t0).count(),
            std::chrono::duration<double>(t2 - t1).count()};
}

void report(const std::string& name, std::pair<double, double> serial,
            std::pair<double, double> parallel) {
    std::cout << std::left << std::setw(20) << name << std::right << " cold " << std::setw(9)
              << serial.first << " /" << std::setw(9) << parallel.first << "  ("
              << serial.first / parallel.first << "x)   warm " << std::setw(9) << serial.second
              << " /" << std::setw(9) << parallel.second << "  ("
              << serial.second / parallel.second << "x)\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 192;
    const int dim_cap = argc > 2 ? std::atoi(argv[2]) : 2;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "points:  " << n << ", dim_cap: " << dim_cap << "\n";
    std::cout << "times in seconds, serial / parallel\n\n";
    std::cout << std::setprecision(4);

    const fuzz::PointCloud cloud = random_cloud(n, 3, 20240817);

    std::vector<fuzz::Rational> pairs_serial, pairs_parallel;
    const auto t_pairs_serial = timed_twice(
        [&] { pairs_serial = pairwise_squared_distances(cloud, fuzz::Execution::Serial); });
    const auto t_pairs_parallel = timed_twice(
        [&] { pairs_parallel = pairwise_squared_distances(cloud, fuzz::Execution::Parallel); });
    if (pairs_serial != pairs_parallel) {
        std::cerr << "MISMATCH in pair grades\n";
        return 1;
    }
    report("pairwise distances", t_pairs_serial, t_pairs_parallel);

    const auto simplices = fuzz::level_simplices(n, dim_cap);
    std::vector<std::size_t> pos_serial, pos_parallel;
    const auto t_pos_serial = timed_twice([&] {
        pos_serial = diameter_pair_positions(simplices, pairs_serial, n, fuzz::Execution::Serial);
    });
    const auto t_pos_parallel = timed_twice([&] {
        pos_parallel =
            diameter_pair_positions(simplices, pairs_serial, n, fuzz::Execution::Parallel);
    });
    if (pos_serial != pos_parallel) {
        std::cerr << "MISMATCH in diameter positions\n";
        return 1;
    }
    report("diameter scan", t_pos_serial, t_pos_parallel);

    const std::vector<fuzz::Rational> diam_serial =
        simplex_diameters(simplices, pairs_serial, n, fuzz::Execution::Serial);
    if (diam_serial != simplex_diameters(simplices, pairs_serial, n, fuzz::Execution::Parallel)) {
        std::cerr << "MISMATCH in diameters\n";
        return 1;
    }

    fuzz::Rational threshold = 0;
    for (const auto& g : pairs_serial) threshold = std::max(threshold, g);
    threshold /= 2;
    std::size_t count_serial = 0, count_parallel = 0;
    const auto t_count_serial = timed_twice([&] {
        count_serial = count_within(diam_serial, threshold, false, fuzz::Execution::Serial);
    });
    const auto t_count_parallel = timed_twice([&] {
        count_parallel = count_within(diam_serial, threshold, false, fuzz::Execution::Parallel);
    });
    if (count_serial != count_parallel) {
        std::cerr << "MISMATCH in threshold counts\n";
        return 1;
    }
    report("threshold counting", t_count_serial, t_count_parallel);

    // end-to-end build, including the serial carrier assembly
    fuzz::VRSystem built_serial, built_parallel;
    const auto t_build_serial = timed_twice([&] {
        built_serial = vr_build(cloud, std::nullopt, dim_cap, fuzz::DistanceMode::Squared, 12,
                                fuzz::Execution::Serial);
    });
    const auto t_build_parallel = timed_twice([&] {
        built_parallel = vr_build(cloud, std::nullopt, dim_cap, fuzz::DistanceMode::Squared, 12,
                                  fuzz::Execution::Parallel);
    });
    for (int k = 0; k <= dim_cap; ++k)
        if (!(built_serial.complex.levels[k] == built_parallel.complex.levels[k])) {
            std::cerr << "MISMATCH at level " << k << "\n";
            return 1;
        }
    report("whole build", t_build_serial, t_build_parallel);

    std::cout << "\nsimplices graded: " << simplices.size() << ", within half the max grade: "
              << count_serial << "\n";
    std::cout << "results identical across schedules\n";
    return 0;
}
