#include "maxsym/fieldsim/flatness.hpp"

#include <cmath>
#include <stdexcept>

namespace maxsym::fieldsim {

FieldState2 zero_state2(const Grid2& g) {
    return FieldState2{g, Scalar(g.cells(), 0.0), Scalar(g.cells(), 0.0)};
}

FieldState2 sin_state2(int n, double a1, double a2, int m1, int m2) {
    Grid2 g{n, n, 1.0 / n};
    FieldState2 s = zero_state2(g);
    const double k1 = 2.0 * M_PI * m1, k2 = 2.0 * M_PI * m2;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double x = i * g.h, y = j * g.h;
            s.A1[g.idx(i, j)] = -(a2 / k2) * std::sin(k2 * y);  // at (x+h/2, y)
            s.A2[g.idx(i, j)] = (a1 / k1) * std::sin(k1 * x);   // at (x, y+h/2)
        }
    return s;
}

void curl2(const Grid2& g, const Scalar& A1, const Scalar& A2, Scalar& F, bool use_omp) {
    if (F.size() != g.cells()) F.assign(g.cells(), 0.0);
    const double inv = 1.0 / g.h;
    if (use_omp) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                F[g.idx(i, j)] = (A2[g.widx(i + 1, j)] - A2[g.idx(i, j)]) * inv -
                                 (A1[g.widx(i, j + 1)] - A1[g.idx(i, j)]) * inv;
    } else {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                F[g.idx(i, j)] = (A2[g.widx(i + 1, j)] - A2[g.idx(i, j)]) * inv -
                                 (A1[g.widx(i, j + 1)] - A1[g.idx(i, j)]) * inv;
    }
}

static double max_dev(const Grid2& g, const Scalar& F, double mean) {
    double m = 0;
    for (size_t t = 0; t < g.cells(); ++t) m = std::max(m, std::fabs(F[t] - mean));
    return m;
}

static double mean_of(const Grid2& g, const Scalar& F) {
    double acc = 0;
    for (double v : F) acc += v;
    return acc / double(g.cells());
}

FlatnessReport ld2_flatness(FieldState2& s, const FlatnessOptions& opt) {
    const Grid2& g = s.g;
    Scalar F(g.cells());
    curl2(g, s.A1, s.A2, F);
    FlatnessReport rep;
    rep.mean_initial = mean_of(g, F);
    rep.initial_dev = max_dev(g, F, rep.mean_initial);
    rep.history.push_back(rep.initial_dev);
    double prev = rep.initial_dev;
    const double tau = g.h * g.h / 5.0;  // all Fourier modes damped, max principle holds
    const double inv = 1.0 / g.h;
    for (long it = 1; it <= opt.max_iters; ++it) {
        curl2(g, s.A1, s.A2, F, opt.use_omp);
        // A1 += -tau d2 F, A2 += tau d1 F  =>  dF/dt = Laplacian F
        if (opt.use_omp) {
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
        if (it % opt.history_every == 0 || it == 1) {
            curl2(g, s.A1, s.A2, F, opt.use_omp);
            double mean = mean_of(g, F);
            double dev = max_dev(g, F, mean);
            rep.history.push_back(dev);
            if (dev > prev + 1e-13) rep.monotone = false;
            prev = dev;
            if (dev < opt.tol) {
                rep.converged = true;
                rep.iters = it;
                rep.final_dev = dev;
                rep.mean_final = mean;
                return rep;
            }
        }
    }
    curl2(g, s.A1, s.A2, F);
    rep.mean_final = mean_of(g, F);
    rep.final_dev = max_dev(g, F, rep.mean_final);
    rep.iters = opt.max_iters;
    if (!rep.converged)
        throw std::runtime_error("ld2_flatness: iteration cap reached before tolerance");
    return rep;
}

}  // namespace maxsym::fieldsim
