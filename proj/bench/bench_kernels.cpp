// Serial reference vs OpenMP kernels. Usage: bench_kernels [ell_max] [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghost/padic.hpp"
#include "ghost/scan.hpp"
#include "ghost/semilinear.hpp"

namespace {

template <typename F>
double time_it(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint32_t ell_max = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 24;
    int jobs = 1;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (argc > 2) jobs = std::atoi(argv[2]);

    ghost::ScanConfig config;
    config.ell_max = ell_max;

    std::size_t serial_n = 0;
    std::size_t parallel_n = 0;
    const double serial = time_it([&] { serial_n = ghost::scan_serial(config).records.size(); });
    const double parallel =
        time_it([&] { parallel_n = ghost::scan_parallel(config, jobs).records.size(); });
    std::printf("scan ell<=%u           %8zu patterns  serial %8.3f s  parallel(%d) %8.3f s  x%.2f\n",
                ell_max, serial_n, serial, jobs, parallel, serial / parallel);

    const auto target = ghost::PadicInt::make(12345L, 24);
    const double dserial = time_it([&] { ghost::density_probe_serial(target, ell_max); });
    const double dparallel = time_it([&] { ghost::density_probe_parallel(target, ell_max, jobs); });
    std::printf("density-probe ell<=%u                     serial %8.3f s  parallel(%d) %8.3f s  x%.2f\n",
                ell_max, dserial, jobs, dparallel, dserial / dparallel);

    const std::uint64_t bound = 3000000;
    const double fserial = time_it([&] { ghost::dy_fiber_indicator(1, 20, bound); });
    const double fparallel = time_it([&] { ghost::dy_fiber_indicator_parallel(1, 20, bound, jobs); });
    std::printf("fiber indicator C<=%llu                 serial %8.3f s  parallel(%d) %8.3f s  x%.2f\n",
                static_cast<unsigned long long>(bound), fserial, jobs, fparallel, fserial / fparallel);
    return 0;
}
