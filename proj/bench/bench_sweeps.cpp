// Compares the serial reference sweep runner with the OpenMP path on the
// heavier verification sweeps.  The Groebner cache is cleared before each
// measurement so both paths do the same work.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polygauss/verify.hpp"

using namespace polygauss;

namespace {

double time_ms(const std::function<void()>& fn) {
    groebner_cache_clear();
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    for (int rep = 0; rep < reps; ++rep) {
        double dm_serial = time_ms([] { check_dedekind_mertens(false); });
        double dm_parallel = time_ms([] { check_dedekind_mertens(true); });
        report("dedekind-mertens sweep (50 pairs)", dm_serial, dm_parallel);

        double pw_serial = time_ms([] { check_power_substitution(false); });
        double pw_parallel = time_ms([] { check_power_substitution(true); });
        report("power substitution sweep (50 cases)", pw_serial, pw_parallel);

        double tm_serial = time_ms([] { check_invertibility_crosscheck(false); });
        double tm_parallel = time_ms([] { check_invertibility_crosscheck(true); });
        report("invertibility cross-check (catalog)", tm_serial, tm_parallel);
    }
    return 0;
}
