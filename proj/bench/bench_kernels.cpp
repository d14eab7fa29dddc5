// Serial vs OpenMP timings for the two hot kernels.
//   bench_kernels [egf_order] [p] [N]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "changhee/egf.hpp"
#include "changhee/padic.hpp"
#include "changhee/sequences.hpp"

using namespace changhee;

namespace {

template <class F>
double seconds(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t order = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 32;
    const unsigned p = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10)) : 5;
    const unsigned N = argc > 3 ? static_cast<unsigned>(std::strtoul(argv[3], nullptr, 10)) : 7;

    std::printf("threads: %d\n", omp_get_max_threads());

    // dense operands in lambda and x
    const auto a = EgfSeries(deg_changhee2_table(static_cast<unsigned>(order)));
    const auto b = EgfSeries(deg_euler_table(static_cast<unsigned>(order)));
    EgfSeries par(0), ser(0);
    const double t_par = seconds([&] { par = egf_mul(a, b); }, 3);
    const double t_ser = seconds([&] { ser = egf_mul_serial(a, b); }, 3);
    std::printf("egf_mul order %zu: serial %.4fs, parallel %.4fs, speedup %.2fx, equal=%s\n", order, t_ser, t_par,
                t_ser / t_par, par == ser ? "yes" : "NO");

    const auto level = FermionicLevel::make(p, N);
    const auto coeffs = Integrand::lambda_falling(6, 5).coefficients();
    Integer s_par, s_ser;
    const double f_par = seconds([&] { s_par = fermionic_sum(level, coeffs); }, 3);
    const double f_ser = seconds([&] { s_ser = fermionic_sum_serial(level, coeffs); }, 3);
    std::printf("fermionic_sum p=%u N=%u: serial %.4fs, parallel %.4fs, speedup %.2fx, equal=%s\n", p, N, f_ser, f_par,
                f_ser / f_par, s_par == s_ser ? "yes" : "NO");
    return par == ser && s_par == s_ser ? 0 : 1;
}
