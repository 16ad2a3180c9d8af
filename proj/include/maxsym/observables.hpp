#pragma once

#include <array>
#include <optional>

#include "maxsym/hamilton.hpp"

namespace maxsym {

// An (n-1)-form together with its infinitesimal symplectomorphism, when one
// exists: contract(xi, Omega) + dext(form) = 0 exactly on the chart.
struct ObservableForm {
    Form form;
    std::optional<Multivector> xi;
    bool algebraic = false;
    bool dynamical = false;
    std::string family = "custom";
};

// Solve Xi _| Omega + dext(phi) = 0 for Xi by coefficient matching over the
// chart's admissible directions; nullopt when no exact solution exists.
std::optional<Multivector> solve_xi(const Form& phi);

// P_phi = phi_mu(x) Pi[Amu,nu] dy_nu with phi polynomial in the base only.
ObservableForm make_P_phi(const ChartPtr& chart, const std::array<Poly, 4>& phi);

// Q_psi = 1/2 psi^{mu nu}(x) A ^ dy_{mu nu} = psi^{mu nu} A_mu dy_nu with psi
// antisymmetric and polynomial in the base only.
ObservableForm make_Q_psi(const ChartPtr& chart,
                          const std::array<std::array<Poly, 4>, 4>& psi);

// Generalized momentum form P_zeta = zeta _| theta for zeta = X^rho(x) @_rho +
// Theta_mu(x,A) @A_mu, with the lifted symplectomorphism solved exactly.
struct ZetaLift {
    Multivector zeta;
    Multivector zeta_bar;
    ObservableForm P;
};
ZetaLift lift_zeta(const ChartPtr& chart, const std::array<Poly, 4>& X,
                   const std::array<Poly, 4>& Theta);

// {a,b} = contract(Xi_a ^ Xi_b, Omega); the equivalent routes -Xi_b _| da and
// Xi_a _| db are computed as well and must agree exactly.
Form poisson(const ObservableForm& a, const ObservableForm& b);

bool is_algebraic(const Multivector& xi);
bool is_dynamical(const ObservableForm& o, const HamiltonianFn& H);

// dH(Xi) as a Poly (the Eq.-residual used by the classification tests).
Poly dH_along(const Multivector& xi, const HamiltonianFn& H);

// {H dy, o} = -Xi(o) _| (dH ^ dy).
Form external_bracket(const HamiltonianFn& H, const ObservableForm& o);

// Graph restriction data: first/second order A jets, the Legendre
// identification Pi -> F(A jets) and momentum jets -> F derivatives.
struct GraphData {
    ChartPtr ext;
    JetMap jets;
    std::map<int, Poly> coord_subst;
};
GraphData make_legendre_graph(const ChartPtr& chart);

// graph_pullback(dext(o.form)) = graph_pullback(external_bracket(H,o)).
Relation dynamical_check(const ObservableForm& o, const HamiltonianFn& H, const GraphData& g);

struct JacobiDefect {
    Form lhs, rhs;
    bool equal;
};
// lhs = {{a,b},c} + {{b,c},a} + {{c,a},b}; rhs = dext(Xi_a^Xi_b^Xi_c _| Omega).
// The inner bracket's symplectomorphism is re-solved; throws when it fails.
JacobiDefect jacobi_defect(const ObservableForm& a, const ObservableForm& b,
                           const ObservableForm& c);

// 2D copolarization obstruction: a pair X, Xbar of decomposable 2-vectors with
// equal contractions against Omega but different evaluations of d(rho_1),
// rho_1 = dA_1 ^ pi, found by deterministic search over a small rational grid.
struct CopolarWitness {
    bool found = false;
    int grid_halfwidth = 1;
    std::map<std::string, Rat> X, Xbar;
    Rat drho1_X, drho1_Xbar;
};
CopolarWitness copolar_obstruction();

}  // namespace maxsym
