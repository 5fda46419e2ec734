// Compares the OpenMP sweep kernels against their serial references and
// reports timings plus a bitwise equality check.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "tc/perturbation.hpp"
#include "tc/thermal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        const auto grid = tc::log_grid(0.1, 100.0, 120);
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = tc::temperature_scan_serial(60, 10.0, grid);
        const double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto parallel = tc::temperature_scan(60, 10.0, grid);
        const double t_parallel = ms_since(t0);

        bool identical = serial.size() == parallel.size();
        for (size_t i = 0; identical && i < serial.size(); ++i)
            identical = std::memcmp(&serial[i], &parallel[i], sizeof(serial[i])) == 0;
        std::printf("temperature_scan  N=60, 120 pts : serial %8.1f ms | parallel %8.1f ms | x%.2f | bitwise %s\n",
                    t_serial, t_parallel, t_serial / t_parallel, identical ? "equal" : "DIFFER");
    }

    {
        const tc::HalfInt r = tc::half(25);
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = tc::branch_deviation_sweep_serial(r, 0, 4000);
        const double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto parallel = tc::branch_deviation_sweep(r, 0, 4000);
        const double t_parallel = ms_since(t0);

        auto same_double = [](double a, double b) {
            return std::memcmp(&a, &b, sizeof(double)) == 0;  // NaN-safe bit compare
        };
        bool identical = serial.size() == parallel.size();
        for (size_t i = 0; identical && i < serial.size(); ++i)
            identical = serial[i].M == parallel[i].M &&
                        same_double(serial[i].dev_nearby, parallel[i].dev_nearby) &&
                        same_double(serial[i].dev_remote, parallel[i].dev_remote);
        std::printf("branch_dev_sweep  r=25/2, M<=4000: serial %8.1f ms | parallel %8.1f ms | x%.2f | bitwise %s\n",
                    t_serial, t_parallel, t_serial / t_parallel, identical ? "equal" : "DIFFER");
    }
    return 0;
}
