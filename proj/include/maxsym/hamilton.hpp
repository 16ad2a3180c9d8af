#pragma once

#include "maxsym/legendre.hpp"

namespace maxsym {

// An n-fold wedge of frame vectors X_a = @_a + Theta_{a mu} @A_mu + Ups_a @e
// + Ups_a^{Amu nu} (momentum directions) [+ W_a @sigma on ld2 charts], with all
// coefficients fresh jet-like symbols. On constrained charts the momentum
// directions enter only through the Dirac-paired combinations.
struct GeneralVectorField {
    ChartPtr chart;  // phase-space chart
    ChartPtr ext;    // chart extended with the coefficient symbols
    Multivector X;   // X_1 ^ ... ^ X_n
    int theta_sym(int alpha, int mu) const;
    int ups_sym(int alpha) const;
    int upsm_sym(int alpha, int mu, int nu) const;
    int w_sym(int alpha) const;
    bool has_energy_dir = true;
};

GeneralVectorField build_general_vectorfield(const ChartPtr& chart);

// Fully expanded contraction X _| Omega, reduced by the chart constraints.
Form contract_general(const GeneralVectorField& X, const Form& Om);

struct PDESystem {
    ChartPtr chart;
    ChartPtr render_chart;            // extension carrying the jet/F symbols
    std::vector<Relation> raw;        // matched system in the Theta/Ups symbols
    std::vector<Relation> relations;  // after the jet substitution step
    std::vector<Relation> on_shell;   // momenta identified with F symbols
    std::string hamiltonian_ref;
};

// Coefficient-match X _| Omega = (-1)^n dH on the independent cotangent basis,
// then substitute Theta -> dA jets and Ups -> momentum/energy divergences.
PDESystem derive(const ChartPtr& chart, const HamiltonianFn& H);

// ld2 derivation at a fixed numeric sigma (the regular stratum).
PDESystem derive_ld2(const ChartPtr& chart, const Rat& sigma);

// Pre-multisymplectic dynamics: (Xi _| Omega0)|_Gamma = 0 over the admissible
// field and paired momentum directions.
PDESystem derive_premulti(const ChartPtr& chart);

}  // namespace maxsym
