#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace maxsym::fieldsim {

// Uniform periodic grid on the unit torus [0,1)^3; h = 1/nx etc.
struct Grid {
    int nx = 0, ny = 0, nz = 0;
    double h = 0, dt = 0;

    size_t cells() const { return static_cast<size_t>(nx) * ny * nz; }
    size_t idx(int i, int j, int k) const {
        return static_cast<size_t>(i) + static_cast<size_t>(nx) * (static_cast<size_t>(j) +
               static_cast<size_t>(ny) * static_cast<size_t>(k));
    }
    int wrap(int v, int n) const { return (v % n + n) % n; }
    size_t widx(int i, int j, int k) const { return idx(wrap(i, nx), wrap(j, ny), wrap(k, nz)); }
};

using Scalar = std::vector<double>;
// Vector field: component c lives on c-edges (Yee placement), shifted by h/2
// along axis c.
using Field3 = std::array<Scalar, 3>;

Field3 make_field(const Grid& g);

// A is stored at t + dt/2, E = Pi[A_i, 0] at t (leapfrog staggering).
struct FieldState {
    Grid g;
    Field3 A;
    Field3 E;
    double t = 0;
};

FieldState zero_state(const Grid& g);

// Traveling vacuum wave A = amp * eps * sin(2 pi m.x - w t), w = 2 pi |m|,
// eps orthogonal to m. Samples honor the Yee staggering.
struct PlaneWave {
    std::array<int, 3> mode{1, 0, 0};
    std::array<double, 3> eps{0, 1, 0};
    double amp = 1.0;
    double omega() const;
    double A_at(int c, double x, double y, double z, double t) const;
    double E_at(int c, double x, double y, double z, double t) const;
};

FieldState wave_state(const Grid& g, const PlaneWave& w, double t0 = 0);

// L2 distance between the state's potential and the analytic wave at the
// potential's time level.
double l2_error_A(const FieldState& s, const PlaneWave& w);

}  // namespace maxsym::fieldsim
