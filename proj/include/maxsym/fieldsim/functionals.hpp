#pragma once

#include <functional>

#include "maxsym/fieldsim/evolve.hpp"

namespace maxsym::fieldsim {

// Smooth test function with its analytic gradient, sampled on grid positions.
struct TestFunction {
    std::function<double(double, double, double)> f;
    std::array<std::function<double(double, double, double)>, 3> grad;
    bool compact_support = true;
};

// Separable bump prod_c (4 u_c (1-u_c))^p, periodically shifted; C^{p-1} on the
// torus, so midpoint sums converge spectrally fast in practice.
TestFunction poly_bump(int p, std::array<double, 3> shift = {0, 0, 0});
TestFunction constant_test_function(double value);

// E^k(s) = sum F^{k0} s h^3 and B^k(s) = -1/2 eps^{kij} sum F_ij s h^3,
// midpoint quadrature on the component's staggered positions; k is 1..3.
double functional_E(const FieldState& s, int k, const TestFunction& tf);
double functional_B(const FieldState& s, int k, const TestFunction& tf);

// Discrete {B^k(s1), E^i(s2)} = -eps^{kij} sum (d_j s1) s2 h^3 (analytic
// derivative sampled at nodes). The EE and BB companions vanish identically.
double smeared_bracket_BE(const Grid& g, const TestFunction& s1, const TestFunction& s2, int k,
                          int i);
double smeared_bracket_EE(const Grid& g, const TestFunction& s1, const TestFunction& s2, int k,
                          int i);
double smeared_bracket_BB(const Grid& g, const TestFunction& s1, const TestFunction& s2, int k,
                          int i);

// Slice functional of P_phi with constant phi: integral of phi_i E^i over the
// time slice. Exactly conserved by the discrete update.
double functional_P_const(const FieldState& s, const std::array<double, 3>& phi);

int eps3(int a, int b, int c);

}  // namespace maxsym::fieldsim
