#pragma once

#include <stdexcept>

#include "maxsym/fieldsim/kernels.hpp"

namespace maxsym::fieldsim {

struct SimInstability : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvolveOptions {
    int steps = 0;
    double blowup_factor = 50.0;  // instability threshold relative to the start
    bool use_omp = true;
    int check_every = 8;
};

// One leapfrog step: E^{n+1} = E^n - dt curl(curl A^{n+1/2}),
// A^{n+3/2} = A^{n+1/2} + dt E^{n+1}.
void step(FieldState& s, bool use_omp);

// steps() with norm-growth instability detection.
void evolve(FieldState& s, const EvolveOptions& opt);

// Conserved discrete energy 1/2 h^3 (<E^n, E^{n+1}> + |curl A|^2); exactly
// invariant under step() for the linear update.
double total_energy(const FieldState& s);

// Gauss constraint residual |div E| (preserved exactly by the update).
double gauss_residual_linf(const FieldState& s);
double gauss_residual_l2(const FieldState& s);

}  // namespace maxsym::fieldsim
