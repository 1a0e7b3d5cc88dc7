// Times the OpenMP counting kernels against the serial reference on a few
// representative workloads and checks they agree on the way.

#include "flattorus/counting.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace flattorus;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench(const char* label, const Marking& m, const Rational& T, bool po) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t serial =
        po ? count_po_total(m, T, Exec::serial) : count_sc_total(m, T, Exec::serial);
    auto t1 = std::chrono::steady_clock::now();
    std::uint64_t parallel =
        po ? count_po_total(m, T, Exec::parallel) : count_sc_total(m, T, Exec::parallel);
    auto t2 = std::chrono::steady_clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-28s count=%12llu   serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
                label, static_cast<unsigned long long>(serial), ts, tp, ts / tp,
                serial == parallel ? "match" : "MISMATCH");
}

Marking two_marked_half(std::uint64_t horizon) {
    std::vector<TorusPoint> pts;
    pts.emplace_back(PlanarVector(Rational(0), Rational(0)));
    pts.emplace_back(PlanarVector(Rational(1, 2), Rational(0)));
    return Marking(pts, horizon);
}

Marking two_marked_fib(std::uint64_t horizon) {
    std::vector<TorusPoint> pts;
    pts.emplace_back(PlanarVector(Rational(0), Rational(0)));
    pts.emplace_back(PlanarVector(Rational(10946, 17711), Rational(0)));
    return Marking(pts, horizon);
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    Marking half = two_marked_half(10000);
    Marking fib = two_marked_fib(15000);

    bench("sc (0,1/2) T=300", half, Rational(300 * scale), false);
    bench("sc (0,1/2) T=600", half, Rational(600 * scale), false);
    bench("sc fibonacci T=400", fib, Rational(400 * scale), false);
    bench("po (0,1/2) T=1500", half, Rational(1500 * scale), true);
    bench("po fibonacci T=1500", fib, Rational(1500 * scale), true);
    return 0;
}
