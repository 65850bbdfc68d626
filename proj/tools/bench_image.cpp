// Times the OpenMP image-size kernel against the serial reference on the
// standard families and checks that both report the same exact counts.

#include "reduct/expansion.hpp"
#include "reduct/parse.hpp"

#include <chrono>
#include <cstdio>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace reduct;
using Clock = std::chrono::steady_clock;

namespace {

MPoly P(const char* text) { return std::get<MPoly>(parse_poly(text)); }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void run(const char* label, const MPoly& poly, const std::vector<Rat>& A, bool run_serial) {
    auto t0 = Clock::now();
    unsigned long long par = image_size(poly, A, A);
    double tp = seconds_since(t0);

    if (run_serial) {
        t0 = Clock::now();
        unsigned long long ser = image_size_serial(poly, A, A);
        double ts = seconds_since(t0);
        // With one thread the ratio measures the compiled kernel against the
        // plain reference; extra threads widen it further.
        std::printf("%-24s N=%6zu  image=%10llu  kernel %8.3fs  reference %8.3fs  ratio %.1fx%s\n",
                    label, A.size(), par, tp, ts, ts / tp, par == ser ? "" : "  MISMATCH");
    } else {
        std::printf("%-24s N=%6zu  image=%10llu  kernel %8.3fs\n", label, A.size(), par, tp);
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    for (long long n : {256, 1024}) run("x+y on AP", P("x+y"), ap_set(Rat(0), Rat(1), n), true);
    run("x+y on AP", P("x+y"), ap_set(Rat(0), Rat(1), 4096), false);
    for (long long n : {256, 512}) run("x*y on GP", P("x*y"), gp_set(Rat(1), Rat(2), n), true);
    run("x*y on GP", P("x*y"), gp_set(Rat(1), Rat(2), 4096), false);
    for (long long n : {256, 512}) run("x^2+y^3 on 1..N", P("x^2+y^3"), ap_set(Rat(1), Rat(1), n), true);
    return 0;
}
