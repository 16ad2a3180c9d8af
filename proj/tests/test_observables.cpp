#include <doctest.h>

#include "maxsym/observables.hpp"

using namespace maxsym;

namespace {

ChartPtr dirac() { return Chart::build(Flavor::MaxwellDirac); }

std::array<Poly, 4> zero4() { return {Poly(), Poly(), Poly(), Poly()}; }

std::array<std::array<Poly, 4>, 4> antisym(const ChartPtr& c,
                                           std::function<Poly(int, int)> entry) {
    std::array<std::array<Poly, 4>, 4> psi;
    for (int mu = 1; mu <= c->n; ++mu)
        for (int nu = mu + 1; nu <= c->n; ++nu) {
            Poly p = entry(mu, nu);
            psi[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)] = p;
            psi[static_cast<size_t>(nu - 1)][static_cast<size_t>(mu - 1)] = -p;
        }
    return psi;
}

}  // namespace

TEST_CASE("make_P_phi: defining equation and constant-phi shape") {
    ChartPtr c = dirac();
    std::array<Poly, 4> phi = zero4();
    phi[0] = Poly(Rat(2));
    phi[2] = Poly::var(c->base(1));  // phi_3 = x1
    ObservableForm P = make_P_phi(c, phi);
    REQUIRE(P.xi.has_value());
    CHECK(P.algebraic);
    CHECK((reduce(contract(*P.xi, omega(c))) + reduce(dext(P.form))).is_zero());
    // xi = phi_mu @A_mu - (d_nu phi_mu Pi^{mu nu}) @e
    CHECK(P.xi->coeff(Key{c->field(1)}) == Poly(Rat(2)));
    CHECK(P.xi->coeff(Key{c->field(3)}) == Poly::var(c->base(1)));
    // -d_1 phi_3 Pi^{3 1}, reduced to the independent momenta
    CHECK(P.xi->coeff(Key{c->energy()}) == Poly::var(c->momentum(1, 3)));

    // constant phi: no energy term
    std::array<Poly, 4> cphi = zero4();
    cphi[1] = Poly(Rat(5));
    ObservableForm Pc = make_P_phi(c, cphi);
    CHECK(Pc.xi->coeff(Key{c->energy()}).is_zero());

    std::array<Poly, 4> bad = zero4();
    bad[0] = Poly::var(c->field(1));
    CHECK_THROWS(make_P_phi(c, bad));
}

TEST_CASE("make_P_phi: pre-multisymplectic variant loses the energy term") {
    ChartPtr pre = Chart::build(Flavor::Premulti);
    std::array<Poly, 4> phi = zero4();
    phi[0] = Poly(Rat(3));
    phi[3] = Poly(Rat(-1));
    ObservableForm P = make_P_phi(pre, phi);
    REQUIRE(P.xi.has_value());
    CHECK(P.algebraic);
    CHECK(P.xi->coeff(Key{pre->field(1)}) == Poly(Rat(3)));
    for (const auto& [k, p] : P.xi->m) CHECK(k[0] != pre->energy());
}

TEST_CASE("make_Q_psi: defining equation, derived xi sign, zero psi") {
    ChartPtr c = dirac();
    auto psi = antisym(c, [&](int mu, int nu) {
        return mu == 1 && nu == 2 ? Poly::var(c->base(3)) : Poly(Rat(mu + nu));
    });
    ObservableForm Q = make_Q_psi(c, psi);
    REQUIRE(Q.xi.has_value());
    CHECK(Q.algebraic);
    CHECK((reduce(contract(*Q.xi, omega(c))) + reduce(dext(Q.form))).is_zero());
    // the solved momentum coefficient carries the minus sign (the defining
    // equation forces it; the bracket table below depends on it)
    CHECK(Q.xi->coeff(Key{c->momentum(1, 2)}) == -Poly::var(c->base(3)));
    // constant psi: no energy component
    auto cpsi = antisym(c, [&](int mu, int nu) { return Poly(Rat(mu * nu)); });
    ObservableForm Qc = make_Q_psi(c, cpsi);
    CHECK(Qc.xi->coeff(Key{c->energy()}).is_zero());

    auto zero_psi = antisym(c, [](int, int) { return Poly(); });
    ObservableForm Q0 = make_Q_psi(c, zero_psi);
    CHECK(Q0.form.is_zero());
    CHECK(Q0.xi->m.empty());

    auto bad = zero_psi;
    bad[0][1] = Poly(Rat(1));  // not antisymmetric
    CHECK_THROWS(make_Q_psi(c, bad));
}

TEST_CASE("poisson: table brackets and antisymmetry") {
    ChartPtr c = dirac();
    std::array<Poly, 4> phi = zero4(), phi2 = zero4();
    phi[0] = Poly::var(c->base(2));
    phi[1] = Poly(Rat(1));
    phi2[2] = Poly::var(c->base(1)) * Poly::var(c->base(1));
    auto psi = antisym(c, [&](int mu, int nu) { return Poly(Rat(mu - nu)); });
    auto psi2 = antisym(c, [&](int mu, int nu) { return Poly::var(c->base(mu)) * Rat(nu); });
    ObservableForm P = make_P_phi(c, phi), P2 = make_P_phi(c, phi2);
    ObservableForm Q = make_Q_psi(c, psi), Q2 = make_Q_psi(c, psi2);

    CHECK(poisson(Q, Q2).is_zero());
    CHECK(poisson(P, P2).is_zero());
    CHECK(poisson(P, P).is_zero());

    Form qp = poisson(Q, P);
    Form expect = Form::zero(3, c);
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu)
            expect += dy_hook(c, {nu}) * (psi[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)] *
                                          phi[static_cast<size_t>(mu - 1)] * Rat(-1));
    CHECK(qp == expect);
    CHECK((poisson(Q, P) + poisson(P, Q)).is_zero());

    ObservableForm noxi;
    noxi.form = Q.form;
    CHECK_THROWS(poisson(noxi, P));
}

TEST_CASE("is_algebraic accepts generated xi and rejects raw momentum directions") {
    ChartPtr c = dirac();
    std::array<Poly, 4> phi = zero4();
    phi[1] = Poly::var(c->base(4));
    ObservableForm P = make_P_phi(c, phi);
    CHECK(is_algebraic(*P.xi));
    CHECK_FALSE(is_algebraic(Multivector::basis(c, c->momentum(1, 2))));  // inadmissible alone
    CHECK(is_algebraic(Multivector::zero(1, c)));
}

TEST_CASE("is_dynamical: the Prop.-family conditions") {
    ChartPtr c = dirac();
    HamiltonianFn H = hamiltonian_ddw(c);
    // constant phi: dH has no A dependence, P is dynamical
    std::array<Poly, 4> cphi = zero4();
    cphi[0] = Poly(Rat(1));
    cphi[3] = Poly(Rat(2));
    CHECK(is_dynamical(make_P_phi(c, cphi), H));
    // gradient-type phi (d_nu phi_mu symmetric) is dynamical as well
    std::array<Poly, 4> gphi = zero4();
    for (int mu = 1; mu <= 4; ++mu) gphi[static_cast<size_t>(mu - 1)] = Poly::var(c->base(mu));
    CHECK(is_dynamical(make_P_phi(c, gphi), H));
    // generic linear phi is not
    std::array<Poly, 4> nphi = zero4();
    nphi[0] = Poly::var(c->base(2));
    CHECK_FALSE(is_dynamical(make_P_phi(c, nphi), H));

    // a bare Q with generic constant psi fails the residual test: the
    // Ups = 0 requirement of the classification leaves (1/2) psi Pi behind
    auto cpsi = antisym(c, [](int mu, int nu) { return Poly(Rat(mu + 2 * nu)); });
    ObservableForm Qc = make_Q_psi(c, cpsi);
    CHECK_FALSE(is_dynamical(Qc, H));
    CHECK_FALSE(dH_along(*Qc.xi, H).is_zero());

    // the dynamical family pairs the Theta part with Ups = dTheta (raised,
    // divergence-free): rho = Pi^{mu nu} Theta_mu dy_nu + Ups^{mu nu} A_mu dy_nu
    Rat m[4][4];
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) m[mu][nu] = Rat(mu - 2 * nu, 3);
    Form rho = Form::zero(3, c);
    const Metric& g = c->metric;
    for (int mu = 1; mu <= 4; ++mu) {
        Poly theta_mu(Rat(0));
        for (int rho_i = 1; rho_i <= 4; ++rho_i)
            theta_mu += Poly::var(c->base(rho_i)) * m[mu - 1][rho_i - 1];
        for (int nu = 1; nu <= 4; ++nu) {
            rho += dy_hook(c, {nu}) * (Poly::var(c->momentum(mu, nu)) * theta_mu);
            // the form-side coefficient is minus the vector-side one that the
            // defining equation solves for
            Rat G = m[nu - 1][mu - 1] - m[mu - 1][nu - 1];  // d_mu Theta_nu - d_nu Theta_mu
            Rat up = Rat(-g.eta(mu - 1) * g.eta(nu - 1)) * G;
            rho += dy_hook(c, {nu}) * (Poly::var(c->field(mu)) * up);
        }
    }
    ObservableForm combined;
    combined.form = reduce(rho);
    combined.xi = solve_xi(combined.form);
    REQUIRE(combined.xi.has_value());
    CHECK(is_dynamical(combined, H));
}

TEST_CASE("external brackets against the computation-block displays") {
    ChartPtr c = dirac();
    HamiltonianFn H = hamiltonian_ddw(c);
    std::array<Poly, 4> phi = zero4();
    phi[0] = Poly::var(c->base(2)), phi[1] = Poly(Rat(3));
    ObservableForm P = make_P_phi(c, phi);
    // {H dy, P_phi} = (-phi_mu dH/dA_mu + d_nu phi_mu Pi^{mu nu}) dy; dH/dA = 0
    Form got = external_bracket(H, P);
    Form expect = volume(c) * reduce(Poly::var(c->momentum(1, 2)), *c);  // d_2 phi_1 Pi^{1 2}
    CHECK(got == expect);

    // momentum-constant H (only the free energy coordinate): the dH/dPi
    // term drops and the bracket reduces to the d phi Pi term
    HamiltonianFn Hc{Poly::var(c->energy()) + Poly(Rat(7)), c};
    CHECK(external_bracket(Hc, P) == expect);

    auto psi = antisym(c, [&](int mu, int nu) {
        return mu == 1 && nu == 2 ? Poly::var(c->base(1)) : Poly();
    });
    ObservableForm Q = make_Q_psi(c, psi);
    // {H dy, Q_psi} = (A_mu d_nu psi^{mu nu} + psi^{mu nu} dH/dPi^{mu nu}) dy
    Form gotq = external_bracket(H, Q);
    Poly expq = Poly::var(c->field(2)) * Rat(-1);  // A_mu d_nu psi^{mu nu} = -A_2
    // + psi^{mu nu} dH/dPi^{mu nu} summed over the antisymmetric pair
    Poly dHdPi = reduce(H.expr, *c).derivative(c->momentum(1, 2));
    expq += Poly::var(c->base(1)) * dHdPi;
    CHECK(gotq == volume(c) * reduce(expq, *c));
}

TEST_CASE("dynamical_check recovers the evolution relations") {
    ChartPtr c = dirac();
    GraphData g = make_legendre_graph(c);
    // with a symbolic current J: d_nu F^{mu nu} = J^mu from the P bracket
    ChartPtr cur = c->extended({jet_coord("J1"), jet_coord("J2"), jet_coord("J3"), jet_coord("J4")});
    GraphData gj = make_legendre_graph(cur);
    std::array<Poly, 4> J{Poly::var(cur->require("J1")), Poly::var(cur->require("J2")),
                          Poly::var(cur->require("J3")), Poly::var(cur->require("J4"))};
    HamiltonianFn HJ = hamiltonian_ddw(cur, &J);

    std::array<Poly, 4> phi = zero4();
    phi[0] = Poly(Rat(1));
    ObservableForm P = make_P_phi(cur, phi);
    Relation r = dynamical_check(P, HJ, gj);
    // phi_mu (d_nu F^{mu nu} - J^mu) = 0 with phi = (1,0,0,0)
    Poly expect;
    const Metric& m = cur->metric;
    auto d2 = [&](int a, int b, int mu) {
        int lo = std::min(a, b), hi = std::max(a, b);
        return Poly::var(gj.ext->require(jet_name(lo, jet_name(hi, "A" + std::to_string(mu)))));
    };
    for (int nu = 1; nu <= 4; ++nu)
        expect += (d2(nu, 1, nu) - d2(nu, nu, 1)) * Rat(m.eta(0) * m.eta(nu - 1));
    expect -= Poly::var(gj.ext->require("J1"));
    Poly got = Relation{r.lhs - r.rhs, Poly(), ""}.monic_diff();
    CHECK(got == Relation{expect, Poly(), ""}.monic_diff());

    // Q side: F_{mu nu} = d_mu A_nu - d_nu A_mu along the graph, i.e. the
    // check is an identity once Pi is eliminated through the Legendre graph
    auto psi = antisym(c, [](int mu, int nu) { return Poly(Rat(mu + nu)); });
    ObservableForm Q = make_Q_psi(c, psi);
    HamiltonianFn H = hamiltonian_ddw(c);
    Relation rq = dynamical_check(Q, H, g);
    CHECK((rq.lhs - rq.rhs).is_zero());

    // constant A, J = 0: both sides vanish for the P relation
    Relation r0 = dynamical_check(make_P_phi(c, phi), H, g);
    Poly both = r0.lhs - r0.rhs;
    for (const auto& [mono, coeff] : both.t)
        for (const auto& [v, e] : mono) CHECK(g.ext->at(v).role == Role::Jet);
}

TEST_CASE("jacobi defect: exactness, repeated entries, constant coefficients") {
    ChartPtr c = dirac();
    std::array<Poly, 4> phi = zero4(), phi2 = zero4();
    phi[1] = Poly::var(c->base(1));
    phi2[2] = Poly::var(c->base(4));
    auto psi = antisym(c, [&](int mu, int nu) { return Poly::var(c->base(mu)) * Rat(nu - mu); });
    ObservableForm P = make_P_phi(c, phi), P2 = make_P_phi(c, phi2), Q = make_Q_psi(c, psi);

    JacobiDefect j = jacobi_defect(Q, P, P2);
    CHECK(j.equal);

    JacobiDefect rep = jacobi_defect(P, P, Q);
    CHECK(rep.equal);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.rhs.is_zero());

    std::array<Poly, 4> cphi = zero4();
    cphi[0] = Poly(Rat(1));
    auto cpsi = antisym(c, [](int mu, int nu) { return Poly(Rat(mu + nu)); });
    JacobiDefect cst = jacobi_defect(make_P_phi(c, cphi), make_Q_psi(c, cpsi), P);
    CHECK(cst.equal);
}

TEST_CASE("lift_zeta: time translation, field-only reduction, zero") {
    ChartPtr c = Chart::build(Flavor::Ddw);
    // time translation: P = @_1 _| theta (the energy-momentum form)
    std::array<Poly, 4> X = zero4(), Th = zero4();
    X[0] = Poly(Rat(1));
    ZetaLift z = lift_zeta(c, X, Th);
    Form expect = contract(Multivector::basis(c, c->base(1)), theta(c));
    CHECK(z.P.form == expect);
    CHECK(z.P.algebraic);
    CHECK(is_algebraic(z.zeta_bar));

    // X = 0: zeta_bar keeps only field/energy/momentum parts
    std::array<Poly, 4> X0 = zero4(), Th0 = zero4();
    Th0[0] = Poly::var(c->field(2));
    ZetaLift z0 = lift_zeta(c, X0, Th0);
    for (int mu = 1; mu <= 4; ++mu) CHECK(z0.zeta_bar.coeff(Key{c->base(mu)}).is_zero());
    CHECK(z0.P.algebraic);

    ZetaLift zz = lift_zeta(c, zero4(), zero4());
    CHECK(zz.P.form.is_zero());
}

TEST_CASE("copolar obstruction witness") {
    CopolarWitness w = copolar_obstruction();
    REQUIRE(w.found);
    CHECK(w.grid_halfwidth == 1);
    CHECK(w.drho1_X != w.drho1_Xbar);
    // identical inputs give identical evaluations: the witness must differ in
    // at least one unconstrained coefficient
    bool differs = false;
    for (const auto& [k, v] : w.X) differs = differs || (w.Xbar.at(k) != v);
    CHECK(differs);

    // identical inputs evaluate identically (the search never reports X == Xbar)
    CHECK(w.X != w.Xbar);
}
