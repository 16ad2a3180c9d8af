#include <doctest.h>

#include "maxsym/legendre.hpp"

using namespace maxsym;

namespace {

Poly pi_var(const ChartPtr& c, int mu, int nu) { return Poly::var(c->momentum(mu, nu)); }

}  // namespace

TEST_CASE("ddw pairing and relations recover Pi = F") {
    ChartPtr chart = Chart::build(Flavor::Ddw);
    VelocityAssignment v = standard_jets(chart);
    // hand-written oracle for the pairing
    Poly oracle = Poly::var(chart->energy());
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) oracle += pi_var(chart, mu, nu) * v.at(mu, nu);
    CHECK(pairing(chart, v) == oracle);

    // all velocities zero -> e
    Poly p = pairing(chart, v);
    for (auto& [key, idx] : v.z) p = p.subst(idx, Poly());
    CHECK(p == Poly::var(chart->energy()));

    Poly L = maxwell_lagrangian(chart, v);
    auto rels = legendre_relations(chart, v, L);
    CHECK(rels.size() == 16);
    for (const auto& r : rels) {
        // lhs is a single momentum, rhs the raised Faraday tensor
        CHECK(r.lhs.t.size() == 1);
        auto [mono, coeff] = *r.lhs.t.begin();
        int idx = mono[0].first;
        const Coordinate& co = chart->at(idx);
        REQUIRE(co.role == Role::Momentum);
        CHECK(r.rhs == faraday_upper(chart, v, co.indices[0], co.indices[1]));
    }
}

TEST_CASE("ld2 pairing matches the direct-calculation display") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    VelocityAssignment v = standard_jets(chart);
    Poly expect = Poly::var(chart->energy());
    for (int mu = 1; mu <= 2; ++mu)
        for (int nu = 1; nu <= 2; ++nu) expect += pi_var(chart, mu, nu) * v.at(mu, nu);
    expect += Poly::var(chart->ld_extra()) * (v.at(1, 1) * v.at(2, 2) - v.at(2, 1) * v.at(1, 2));
    CHECK(pairing(chart, v) == expect);
}

TEST_CASE("ld2 relations: general sigma and the sigma = 1 table") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    VelocityAssignment v = standard_jets(chart);
    Poly L = ld2_lagrangian(chart, v);
    Poly sig = Poly::var(chart->ld_extra());
    auto rels = legendre_relations(chart, v, L);
    REQUIRE(rels.size() == 4);
    // 0 = pi[A1,1] + sigma d2A2 ; d1A2 - d2A1 = pi[A2,1] - sigma d2A1 ; etc.
    std::map<std::string, Poly> diffs;
    for (const auto& r : rels) diffs[r.provenance] = r.monic_diff();
    auto monic = [](Poly p) { return Relation{p, Poly(), ""}.monic_diff(); };
    CHECK(diffs.at("dZ[1,1]") == monic(pi_var(chart, 1, 1) + sig * v.at(2, 2)));
    CHECK(diffs.at("dZ[2,2]") == monic(pi_var(chart, 2, 2) + sig * v.at(1, 1)));
    CHECK(diffs.at("dZ[1,2]") ==
          monic(pi_var(chart, 2, 1) - sig * v.at(1, 2) - (v.at(2, 1) - v.at(1, 2))));
    CHECK(diffs.at("dZ[2,1]") ==
          monic(pi_var(chart, 1, 2) - sig * v.at(2, 1) - (v.at(1, 2) - v.at(2, 1))));

    // sigma = 1 specialization: pi[A1,1] = -d2A2, pi[A2,1] = d1A2, ...
    auto at1 = [&](const Poly& p) { return p.subst(chart->ld_extra(), Poly(Rat(1))); };
    CHECK(at1(diffs.at("dZ[1,1]")) == monic(pi_var(chart, 1, 1) + v.at(2, 2)));
    CHECK(at1(diffs.at("dZ[2,2]")) == monic(pi_var(chart, 2, 2) + v.at(1, 1)));
    CHECK(at1(diffs.at("dZ[1,2]")) == monic(pi_var(chart, 2, 1) - v.at(2, 1)));
    CHECK(at1(diffs.at("dZ[2,1]")) == monic(pi_var(chart, 1, 2) - v.at(1, 2)));
}

TEST_CASE("invert_ld2 reproduces the displayed rational expressions") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Poly sig = Poly::var(chart->ld_extra());
    Ld2Inverse inv = invert_ld2(chart, sig);
    Poly delta = (Poly(Rat(2)) - sig) * sig * sig * sig;
    CHECK(inv.det == delta);

    Poly one_m = Poly(Rat(1)) - sig;
    Poly s2s = sig * (Poly(Rat(2)) - sig);
    // d2A2 = -pi[A1,1]/sigma   (cross-multiplied against the Cramer output)
    auto check_ratio = [&](int mu, int nu, const Poly& num, const Poly& den) {
        const RatioPoly& rp = inv.vel.at({mu, nu});
        CHECK(rp.num * den == num * rp.den);
    };
    check_ratio(2, 2, -pi_var(chart, 1, 1), sig);
    check_ratio(1, 1, -pi_var(chart, 2, 2), sig);
    check_ratio(1, 2, pi_var(chart, 1, 2) + one_m * pi_var(chart, 2, 1), s2s);  // d_2 A_1
    check_ratio(2, 1, pi_var(chart, 2, 1) + one_m * pi_var(chart, 1, 2), s2s);  // d_1 A_2

    // sigma = 1: d2A1 = pi[A1,2], d1A2 = pi[A2,1]
    Ld2Inverse inv1 = invert_ld2(chart, Poly(Rat(1)));
    CHECK(inv1.vel.at({1, 2}).num == pi_var(chart, 1, 2) * inv1.vel.at({1, 2}).den);
    CHECK(inv1.vel.at({2, 1}).num == pi_var(chart, 2, 1) * inv1.vel.at({2, 1}).den);

    CHECK_THROWS_AS(invert_ld2(chart, Poly(Rat(0))), Ld2Degenerate);
    CHECK_THROWS_AS(invert_ld2(chart, Poly(Rat(2))), Ld2Degenerate);
}

TEST_CASE("invert_ld2 composed with legendre_relations is the identity") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Poly sig = Poly::var(chart->ld_extra());
    Ld2Inverse inv = invert_ld2(chart, sig);
    VelocityAssignment v = inv.v;
    auto rels = legendre_relations(chart, v, ld2_lagrangian(chart, v));
    // substitute the rational velocities into each relation and clear the
    // denominator: the residual must vanish identically
    for (const auto& r : rels) {
        Poly d = r.diff();  // pi + S(Z) - lambda(Z), linear in Z
        Poly num;           // d with Z -> num/det, cleared by det
        for (const auto& [mono, coeff] : d.t) {
            Poly term(coeff);
            int zdeg = 0;
            for (auto [idx, e] : mono) {
                bool is_vel = false;
                for (auto& [key, rp] : inv.vel)
                    if (v.idx(key.first, key.second) == idx) {
                        for (int q = 0; q < e; ++q) term = term * rp.num;
                        zdeg += e;
                        is_vel = true;
                    }
                if (!is_vel) term = term * Poly::var(idx, e);
            }
            REQUIRE(zdeg <= 1);
            if (zdeg == 0) term = term * inv.det;
            num += term;
        }
        CHECK(num.is_zero());
    }
}

TEST_CASE("ddw hamiltonian verification and dirac momentum dependence") {
    ChartPtr chart = Chart::build(Flavor::Ddw);
    HamiltonianFn H = hamiltonian_ddw(chart);
    // invariance under Pi^{nu mu} -> -Pi^{mu nu} relabeling on the dirac chart
    ChartPtr dirac = Chart::build(Flavor::MaxwellDirac);
    CHECK(reduce(H.expr, *dirac) == reduce(H.expr, *dirac));
    std::map<int, Poly> swap;
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu)
            swap[chart->momentum(mu, nu)] = -Poly::var(chart->momentum(nu, mu));
    CHECK(H.expr.subst(swap) == H.expr);

    // with a symbolic external current: H = e - 1/4 Pi Pi - J.A
    ChartPtr cur = chart->extended({jet_coord("J1"), jet_coord("J2"), jet_coord("J3"), jet_coord("J4")});
    std::array<Poly, 4> J{Poly::var(cur->require("J1")), Poly::var(cur->require("J2")),
                          Poly::var(cur->require("J3")), Poly::var(cur->require("J4"))};
    HamiltonianFn HJ = hamiltonian_ddw(cur, &J);
    Poly diff = HJ.expr - H.expr;
    Poly expect;
    for (int mu = 1; mu <= 4; ++mu)
        expect -= J[static_cast<size_t>(mu - 1)] * Poly::var(cur->field(mu));
    CHECK(diff == expect);
}

TEST_CASE("ld2 hamiltonian two-path equality") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Ld2Hamiltonian Hg = hamiltonian_ld2(chart, Poly::var(chart->ld_extra()));
    Ld2Hamiltonian H3 = hamiltonian_ld2(chart, Poly(Rat(3)));
    Poly n3 = Hg.num.subst(chart->ld_extra(), Poly(Rat(3)));
    Poly d3 = Hg.den.subst(chart->ld_extra(), Poly(Rat(3)));
    CHECK(n3 * H3.den == H3.num * d3);
    CHECK_THROWS_AS(hamiltonian_ld2(chart, Poly(Rat(2))), Ld2Degenerate);
}

TEST_CASE("functional determinant is assembled, not hard-coded") {
    ChartPtr chart = Chart::build(Flavor::Ld2);
    // at a non-root rational value the determinant evaluates consistently
    Poly d5 = functional_det(chart, Poly(Rat(1, 2)));
    CHECK(d5 == Poly(Rat(3, 16)));  // (2 - 1/2) (1/2)^3
}

TEST_CASE("pseudofiber classification covers every stratum") {
    PseudofiberReport reg = pseudofiber_classify({Rat(3), Rat(1), Rat(2), Rat(3), Rat(4), Rat(7)});
    CHECK(reg.stratum == Stratum::Regular);
    PseudofiberReport s0 = pseudofiber_classify({Rat(1), Rat(0), Rat(5), Rat(-5), Rat(0), Rat(0)});
    CHECK(s0.stratum == Stratum::SigmaZero);
    PseudofiberReport s0bad = pseudofiber_classify({Rat(1), Rat(1), Rat(5), Rat(-5), Rat(0), Rat(0)});
    CHECK(s0bad.stratum == Stratum::NotInP);
    PseudofiberReport s2 = pseudofiber_classify({Rat(0), Rat(9), Rat(4), Rat(4), Rat(1), Rat(2)});
    CHECK(s2.stratum == Stratum::SigmaTwo);
    CHECK(s2.dim_enlarged == 2);
    CHECK(s2.dim_fiber == 1);
}
