#pragma once

#include <vector>

#include "maxsym/fieldsim/grid.hpp"

namespace maxsym::fieldsim {

struct Grid2 {
    int nx = 0, ny = 0;
    double h = 0;
    size_t cells() const { return static_cast<size_t>(nx) * ny; }
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) + static_cast<size_t>(nx) * static_cast<size_t>(j);
    }
    int wrap(int v, int n) const { return (v % n + n) % n; }
    size_t widx(int i, int j) const { return idx(wrap(i, nx), wrap(j, ny)); }
};

// 2D potential on the unit torus; A1 on x-edges, A2 on y-edges.
struct FieldState2 {
    Grid2 g;
    Scalar A1, A2;
};

FieldState2 zero_state2(const Grid2& g);
// A1 = -(a2/2 pi m2) sin(2 pi m2 y), A2 = (a1/2 pi m1) sin(2 pi m1 x):
// F_12 = a1 cos(2 pi m1 x) + a2 cos(2 pi m2 y).
FieldState2 sin_state2(int n, double a1, double a2, int m1 = 1, int m2 = 1);

void curl2(const Grid2& g, const Scalar& A1, const Scalar& A2, Scalar& F, bool use_omp = false);

struct FlatnessOptions {
    double tol = 1e-10;
    long max_iters = 5'000'000;
    bool use_omp = true;
    int history_every = 64;
};

struct FlatnessReport {
    bool converged = false;
    long iters = 0;
    double initial_dev = 0, final_dev = 0;
    double mean_initial = 0, mean_final = 0;
    bool monotone = true;
    std::vector<double> history;  // max |F - mean| samples
};

// Relax A until d_mu pi[A_nu mu] = 0 holds with the sigma=1 Legendre momenta,
// i.e. until F_12 is spatially constant. Explicit flow on A whose induced F
// motion is the 5-point heat equation; max deviation decreases monotonically
// and the mean of F is preserved exactly.
FlatnessReport ld2_flatness(FieldState2& s, const FlatnessOptions& opt);

}  // namespace maxsym::fieldsim
