#pragma once

#include "maxsym/fieldsim/evolve.hpp"
#include "maxsym/observables.hpp"

namespace maxsym::fieldsim {

struct NonDynamical : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Observable functional on a constant-time slice. Energy integrates the
// Hamiltonian density. PLinear integrates phi_i E^i with
// phi_i(x) = c_i + sum_j m_ij x_j (rational coefficients so the symbolic
// dynamical gate runs on the same data; only the constant part is periodic
// on the torus). PGradient takes phi = grad chi for the periodic bump
// chi = amp prod_c (4 u_c (1-u_c))^p, discretized as the exact grid gradient
// of the sampled chi.
struct SliceFunctional {
    enum class Kind { Energy, PLinear, PGradient } kind = Kind::Energy;
    std::array<Rat, 3> c{};
    std::array<std::array<Rat, 3>, 3> m{};
    int bump_p = 4;
    double amp = 1.0;
    static SliceFunctional energy() { return {}; }
    static SliceFunctional p_const(std::array<Rat, 3> cc) {
        SliceFunctional f;
        f.kind = Kind::PLinear;
        f.c = cc;
        return f;
    }
    static SliceFunctional p_gradient(int p, double amplitude) {
        SliceFunctional f;
        f.kind = Kind::PGradient;
        f.bump_p = p;
        f.amp = amplitude;
        return f;
    }
};

struct SliceInvariance {
    double value_t0 = 0, value_t1 = 0;
    double delta = 0;  // relative
};

// Evaluates the functional at the state's time and after `steps` more steps.
// PLinear functionals are admitted only when the symbolic classification
// accepts them as dynamical (refused otherwise).
SliceInvariance slice_invariance(FieldState s, int steps, const SliceFunctional& f,
                                 bool use_omp = true);

double evaluate_slice_functional(const FieldState& s, const SliceFunctional& f);

}  // namespace maxsym::fieldsim
