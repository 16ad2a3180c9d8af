#pragma once

#include "maxsym/fieldsim/grid.hpp"

namespace maxsym::fieldsim {

// Node-centered 4x4 tensor field; component (a,b) with a,b in 1..4 (1 = time).
struct TensorField {
    Grid g;
    std::array<Scalar, 16> c;
    Scalar& at(int a, int b) { return c[static_cast<size_t>((a - 1) * 4 + (b - 1))]; }
    const Scalar& at(int a, int b) const { return c[static_cast<size_t>((a - 1) * 4 + (b - 1))]; }
};

// Canonical stress-energy tensor S^a_b = delta^a_b L - F^{la} d_b A_l,
// evaluated from node-averaged fields and centered-difference jets.
TensorField stress_energy(const FieldState& s);

// Symmetric (Belinfante-completed) tensor Sbar^{ab}.
TensorField stress_energy_sym(const FieldState& s);

// Hamiltonian tensor h^a_b = delta^a_b H(e,Pi) - <p, frame with slot a -> @_b>,
// assembled from the symbolic pairing and evaluated on the state's momenta.
// On Legendre-graph states h^a_b = -S^a_b.
TensorField hamiltonian_tensor(const FieldState& s);

// max_{nodes, a, b} |h^a_b + S^a_b|.
double hamiltonian_vs_stress_linf(const FieldState& s);

// max |h^1_1 - (E^2+B^2)/2| over nodes.
double energy_density_check_linf(const FieldState& s);

}  // namespace maxsym::fieldsim
