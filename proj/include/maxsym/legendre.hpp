#pragma once

#include <array>

#include "maxsym/form.hpp"
#include "maxsym/maxwell_space.hpp"

namespace maxsym {

// lhs = rhs, stored with both sides; diff() is the normalized residual.
struct Relation {
    Poly lhs, rhs;
    std::string provenance;
    Poly diff() const { return lhs - rhs; }
    // Residual scaled so the leading coefficient is +1 (comparison canonical form).
    Poly monic_diff() const;
};

// Complete assignment of velocity symbols Z_{nu mu} = d_nu A_mu over an
// extended chart carrying one jet coordinate per (field mu, base nu).
struct VelocityAssignment {
    ChartPtr chart;                       // extension of the phase-space chart
    std::map<std::pair<int, int>, int> z; // (mu,nu) -> jet coordinate index
    Poly at(int mu, int nu) const { return Poly::var(z.at({mu, nu})); }
    int idx(int mu, int nu) const { return z.at({mu, nu}); }
};

VelocityAssignment standard_jets(const ChartPtr& chart);

// <p,v> = theta(Z_1 ^ ... ^ Z_n) on the lifted frame Z_a = @_a + Z_{a mu} @A_mu.
// Computed by contraction, never hand-coded.
Poly pairing(const ChartPtr& chart, const VelocityAssignment& v);

// F_{mu nu} = d_mu A_nu - d_nu A_mu as a Poly in jets (lowered indices).
Poly faraday_lower(const VelocityAssignment& v, int mu, int nu);
// F^{mu nu} raised with the chart metric.
Poly faraday_upper(const ChartPtr& chart, const VelocityAssignment& v, int mu, int nu);

// Vacuum Maxwell Lagrangian -(1/4) F_{mu nu} F^{mu nu} (+ J^mu A_mu when a
// current is supplied; J entries are Polys in the base coordinates).
Poly maxwell_lagrangian(const ChartPtr& chart, const VelocityAssignment& v,
                        const std::array<Poly, 4>* current = nullptr);
// 2D: (1/2) (F_12)^2.
Poly ld2_lagrangian(const ChartPtr& chart, const VelocityAssignment& v);

// d<p,v>/dZ_{nu mu} = dL/dZ_{nu mu}, one relation per (mu,nu).
std::vector<Relation> legendre_relations(const ChartPtr& chart, const VelocityAssignment& v,
                                         const Poly& L);

struct RatioPoly {
    Poly num, den;
};

struct Ld2Degenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Velocities as rational functions of the ld2 momenta via Cramer's rule on the
// Legendre relations; common denominator is the functional determinant.
struct Ld2Inverse {
    ChartPtr chart;
    VelocityAssignment v;
    std::map<std::pair<int, int>, RatioPoly> vel;  // (mu,nu) -> d_nu A_mu
    Poly det;                                      // (2-sigma) sigma^3
};
Ld2Inverse invert_ld2(const ChartPtr& chart, const Poly& sigma);

struct HamiltonianFn {
    Poly expr;
    ChartPtr chart;
};

// DDW Hamiltonian through the degenerate-transform convention: the velocity
// dependence collapses onto the Legendre image and the quadratic form is then
// read back in the momenta. The returned Poly is verified to pull back to
// pairing - L under Pi -> F(Z).
HamiltonianFn hamiltonian_ddw(const ChartPtr& chart, const std::array<Poly, 4>* current = nullptr);

struct Ld2Hamiltonian {
    Poly num, den;  // H = num/den, den a polynomial in sigma only
    ChartPtr chart;
};
Ld2Hamiltonian hamiltonian_ld2(const ChartPtr& chart, const Poly& sigma);

// det d pi / d(d_rho A_sigma) assembled from legendre_relations; equals
// (2 - sigma) sigma^3.
Poly functional_det(const ChartPtr& chart, const Poly& sigma);

enum class Stratum { Regular, SigmaZero, SigmaTwo, NotInP };

struct PseudofiberReport {
    Stratum stratum;
    int dim_enlarged = 2;  // dim P_q(z)
    int dim_fiber = 1;     // dim P^h_q(z)
    std::string detail;
};

struct Ld2Point {
    Rat e;
    Rat pi11, pi12, pi21, pi22;
    Rat sigma;
};

PseudofiberReport pseudofiber_classify(const Ld2Point& p);

}  // namespace maxsym
