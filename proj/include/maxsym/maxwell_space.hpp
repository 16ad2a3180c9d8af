#pragma once

#include "maxsym/form.hpp"

namespace maxsym {

// Canonical Poincare-Cartan n-form of the chart's flavor:
//   ddw / maxwell-dirac:  e dy + Pi[Amu,nu] dA_mu ^ dy_nu      (all 16 momenta)
//   ld2:                  adds sigma dA_1 ^ dA_2
//   premulti:             the ddw form with e and the dependent momenta
//                         eliminated by the constraint relations
Form theta(const ChartPtr& chart);

// omega = dext(theta); closed by construction.
Form omega(const ChartPtr& chart);

// Tangent directions compatible with the Dirac constraint set: base, field
// (and energy on maxwell-dirac) directions unchanged, momentum directions as
// paired combinations @Pi[Amu,nu] - @Pi[Anu,mu] for mu<nu. Diagonal momentum
// directions are identically zero and excluded.
std::vector<Multivector> admissible_vectorfield_basis(const ChartPtr& chart);

// True when the degree-1 field is tangent to the constraint set (momentum
// components antisymmetric in the paired sense; no energy component on
// premulti charts). Unconstrained charts accept everything.
bool admissible(const Multivector& xi);

}  // namespace maxsym
