// Compares the serial and OpenMP fixed-point summation kernels for
// series (I) at a few desk-scale term counts. Checks bit-identical results.

#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "basel/evaluator.hpp"

int main(int argc, char** argv) {
    long scale = 15;
    long max_n = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 2000000;

    std::printf("threads=%d scale=%ld\n", omp_get_max_threads(), scale);
    std::printf("%10s %12s %12s %8s %s\n", "N", "serial(s)", "openmp(s)", "speedup", "match");
    for (long n = 62500; n <= max_n; n *= 4) {
        double t0 = omp_get_wtime();
        basel::FixedPointDecimal s =
            basel::partial_sum_fixed_serial(basel::SeriesId::basel, n, scale);
        double t1 = omp_get_wtime();
        basel::FixedPointDecimal p = basel::basel_sum_fixed_parallel(n, scale);
        double t2 = omp_get_wtime();
        bool match = s.mantissa == p.mantissa && s.error_ulps == p.error_ulps;
        std::printf("%10ld %12.4f %12.4f %8.2f %s\n", n, t1 - t0, t2 - t1,
                    (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0, match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
