#include "ghzcert/scan.hpp"
#include "ghzcert/states.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s %12.2f %12.2f %10.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs OpenMP timing for the scan kernels"};
    int grid_n = 13;
    int batch = 64;
    int repeats = 3;
    app.add_option("--grid", grid_n, "angle lattice points per axis")->check(CLI::Range(2, 100));
    app.add_option("--states", batch, "random states in the certify batch")
        ->check(CLI::Range(1, 100000));
    app.add_option("--repeat", repeats, "repetitions, best time wins")->check(CLI::Range(1, 100));
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-24s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

    {
        const double serial = best_of(repeats, [&] { ghzcert::angle_scan_serial(grid_n); });
        const double parallel = best_of(repeats, [&] { ghzcert::angle_scan(grid_n); });
        char name[64];
        std::snprintf(name, sizeof name, "angle_scan(%d^3)", grid_n);
        report(name, serial, parallel);
    }
    {
        std::vector<ghzcert::DensityMatrix> states;
        states.reserve(batch);
        for (int i = 0; i < batch; ++i)
            states.push_back(ghzcert::random_density(1000 + static_cast<std::uint64_t>(i)));
        const double serial = best_of(repeats, [&] { ghzcert::certify_batch_serial(states); });
        const double parallel = best_of(repeats, [&] { ghzcert::certify_batch(states); });
        char name[64];
        std::snprintf(name, sizeof name, "certify_batch(%d)", batch);
        report(name, serial, parallel);
    }
    return 0;
}
