#include "maxsym/fieldsim/grid.hpp"

#include <cmath>

namespace maxsym::fieldsim {

Field3 make_field(const Grid& g) {
    return Field3{Scalar(g.cells(), 0.0), Scalar(g.cells(), 0.0), Scalar(g.cells(), 0.0)};
}

FieldState zero_state(const Grid& g) { return FieldState{g, make_field(g), make_field(g), 0.0}; }

double PlaneWave::omega() const {
    double m2 = 0;
    for (int c = 0; c < 3; ++c) m2 += double(mode[c]) * mode[c];
    return 2.0 * M_PI * std::sqrt(m2);
}

double PlaneWave::A_at(int c, double x, double y, double z, double t) const {
    double phase = 2.0 * M_PI * (mode[0] * x + mode[1] * y + mode[2] * z) - omega() * t;
    return amp * eps[static_cast<size_t>(c)] * std::sin(phase);
}

double PlaneWave::E_at(int c, double x, double y, double z, double t) const {
    double phase = 2.0 * M_PI * (mode[0] * x + mode[1] * y + mode[2] * z) - omega() * t;
    return -amp * omega() * eps[static_cast<size_t>(c)] * std::cos(phase);
}

FieldState wave_state(const Grid& g, const PlaneWave& w, double t0) {
    FieldState s = zero_state(g);
    s.t = t0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double p[3] = {i * g.h, j * g.h, k * g.h};
                for (int c = 0; c < 3; ++c) {
                    double q[3] = {p[0], p[1], p[2]};
                    q[c] += 0.5 * g.h;  // edge position of component c
                    s.A[static_cast<size_t>(c)][g.idx(i, j, k)] =
                        w.A_at(c, q[0], q[1], q[2], t0 + 0.5 * g.dt);
                    s.E[static_cast<size_t>(c)][g.idx(i, j, k)] = w.E_at(c, q[0], q[1], q[2], t0);
                }
            }
    return s;
}

double l2_error_A(const FieldState& s, const PlaneWave& w) {
    const Grid& g = s.g;
    double tA = s.t + 0.5 * g.dt;
    double acc = 0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double p[3] = {i * g.h, j * g.h, k * g.h};
                for (int c = 0; c < 3; ++c) {
                    double q[3] = {p[0], p[1], p[2]};
                    q[c] += 0.5 * g.h;
                    double d = s.A[static_cast<size_t>(c)][g.idx(i, j, k)] -
                               w.A_at(c, q[0], q[1], q[2], tA);
                    acc += d * d;
                }
            }
    return std::sqrt(acc * g.h * g.h * g.h);
}

}  // namespace maxsym::fieldsim
