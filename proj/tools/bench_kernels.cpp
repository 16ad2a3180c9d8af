// Benchmark: serial reference kernels vs the OpenMP versions.
#include <omp.h>

#include <cstdio>

#include "maxsym/fieldsim/evolve.hpp"
#include "maxsym/fieldsim/flatness.hpp"

using namespace maxsym::fieldsim;

namespace {

double time_sweeps(const Grid& g, bool use_omp, int reps) {
    FieldState s = zero_state(g);
    PlaneWave w;
    w.mode = {1, 2, 0};
    w.eps = {2, -1, 0};
    w.amp = 0.05;
    s = wave_state(g, w);
    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) step(s, use_omp);
    return (omp_get_wtime() - t0) / reps;
}

double time_relax(int n, bool use_omp, int reps) {
    FieldState2 s = sin_state2(n, 0.7, 0.4, 2, 3);
    Grid2 g = s.g;
    Scalar F;
    const double tau = g.h * g.h / 5.0, inv = 1.0 / g.h;
    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) {
        curl2(g, s.A1, s.A2, F, use_omp);
        if (use_omp) {
#pragma omp parallel for schedule(static)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    size_t at = g.idx(i, j);
                    s.A1[at] += -tau * (F[at] - F[g.widx(i, j - 1)]) * inv;
                    s.A2[at] += tau * (F[at] - F[g.widx(i - 1, j)]) * inv;
                }
        } else {
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    size_t at = g.idx(i, j);
                    s.A1[at] += -tau * (F[at] - F[g.widx(i, j - 1)]) * inv;
                    s.A2[at] += tau * (F[at] - F[g.widx(i - 1, j)]) * inv;
                }
        }
    }
    return (omp_get_wtime() - t0) / reps;
}

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "omp ms", "speedup");
    for (int n : {32, 64, 96}) {
        Grid g{n, n, n, 1.0 / n, 0.5 / n};
        int reps = n <= 32 ? 40 : 10;
        double ts = 1e3 * time_sweeps(g, false, reps);
        double tp = 1e3 * time_sweeps(g, true, reps);
        std::printf("leapfrog step %3d^3          %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }
    for (int n : {128, 256, 512}) {
        int reps = n <= 256 ? 200 : 50;
        double ts = 1e3 * time_relax(n, false, reps);
        double tp = 1e3 * time_relax(n, true, reps);
        std::printf("flatness relax sweep %4d^2  %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }
    return 0;
}
