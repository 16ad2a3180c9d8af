#include "maxsym/fieldsim/slices.hpp"

#include <cmath>

namespace maxsym::fieldsim {

static double bump_chi(const SliceFunctional& f, double x, double y, double z) {
    auto b = [&](double u) { return std::pow(4.0 * u * (1.0 - u), f.bump_p); };
    auto fr = [](double u) { return u - std::floor(u); };
    return f.amp * b(fr(x)) * b(fr(y)) * b(fr(z));
}

double evaluate_slice_functional(const FieldState& s, const SliceFunctional& f) {
    if (f.kind == SliceFunctional::Kind::Energy) return total_energy(s);
    const Grid& g = s.g;
    double h3 = g.h * g.h * g.h, acc = 0;
    if (f.kind == SliceFunctional::Kind::PGradient) {
        // phi_i = D+_i chi lives exactly on the i-edges
        for (int kk = 0; kk < g.nz; ++kk)
            for (int jj = 0; jj < g.ny; ++jj)
                for (int ii = 0; ii < g.nx; ++ii) {
                    double x = ii * g.h, y = jj * g.h, z = kk * g.h;
                    double chi = bump_chi(f, x, y, z);
                    double dphi[3] = {(bump_chi(f, x + g.h, y, z) - chi) / g.h,
                                      (bump_chi(f, x, y + g.h, z) - chi) / g.h,
                                      (bump_chi(f, x, y, z + g.h) - chi) / g.h};
                    size_t at = g.idx(ii, jj, kk);
                    for (int ci = 0; ci < 3; ++ci)
                        acc += dphi[ci] * s.E[static_cast<size_t>(ci)][at];
                }
        return acc * h3;
    }
    double c[3], m[3][3];
    for (int i = 0; i < 3; ++i) {
        c[i] = to_double(f.c[static_cast<size_t>(i)]);
        for (int j = 0; j < 3; ++j)
            m[i][j] = to_double(f.m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    for (int kk = 0; kk < g.nz; ++kk)
        for (int jj = 0; jj < g.ny; ++jj)
            for (int ii = 0; ii < g.nx; ++ii) {
                double p[3] = {ii * g.h, jj * g.h, kk * g.h};
                for (int ci = 0; ci < 3; ++ci) {
                    double q[3] = {p[0], p[1], p[2]};
                    q[ci] += 0.5 * g.h;
                    double phi = c[ci];
                    for (int j = 0; j < 3; ++j) phi += m[ci][j] * q[j];
                    acc += phi * s.E[static_cast<size_t>(ci)][g.idx(ii, jj, kk)];
                }
            }
    return acc * h3;
}

// Symbolic gate: build the P_phi observable for the functional's phi family
// and ask the classification. Base axis 1 is time; phi has no time component.
static void gate_dynamical(const SliceFunctional& f) {
    ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
    std::array<Poly, 4> phi{Poly(), Poly(), Poly(), Poly()};
    if (f.kind == SliceFunctional::Kind::PLinear) {
        for (int i = 0; i < 3; ++i) {
            Poly p(f.c[static_cast<size_t>(i)]);
            for (int j = 0; j < 3; ++j)
                p += Poly::var(chart->base(j + 2)) *
                     f.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            phi[static_cast<size_t>(i + 1)] = p;
        }
    } else {
        // chi = prod (4 x_c (1 - x_c))^p as an exact chart polynomial
        Poly chi(Rat(1));
        for (int cdim = 2; cdim <= 4; ++cdim) {
            Poly u = Poly::var(chart->base(cdim));
            chi = chi * ((u * Rat(4) - u * u * Rat(4)).pow(f.bump_p));
        }
        for (int i = 0; i < 3; ++i)
            phi[static_cast<size_t>(i + 1)] = chi.derivative(chart->base(i + 2));
    }
    ObservableForm P = make_P_phi(chart, phi);
    if (!P.xi || !is_dynamical(P, hamiltonian_ddw(chart)))
        throw NonDynamical("slice_invariance: the functional's observable is not dynamical");
}

SliceInvariance slice_invariance(FieldState s, int steps, const SliceFunctional& f, bool use_omp) {
    if (f.kind != SliceFunctional::Kind::Energy) gate_dynamical(f);
    SliceInvariance out;
    out.value_t0 = evaluate_slice_functional(s, f);
    EvolveOptions opt;
    opt.steps = steps;
    opt.use_omp = use_omp;
    evolve(s, opt);
    out.value_t1 = evaluate_slice_functional(s, f);
    double denom = std::max(std::fabs(out.value_t0), 1e-300);
    out.delta = std::fabs(out.value_t1 - out.value_t0) / denom;
    return out;
}

}  // namespace maxsym::fieldsim
