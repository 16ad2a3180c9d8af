#include "maxsym/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "maxsym/fieldsim/flatness.hpp"
#include "maxsym/fieldsim/slices.hpp"
#include "maxsym/fieldsim/functionals.hpp"
#include "maxsym/fieldsim/tensors.hpp"
#include "maxsym/observables.hpp"

namespace maxsym {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed + 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // small rational in [-max, max]
    Rat rat(int max = 2) {
        int span = 2 * max + 1;
        int num = int(next() % uint64_t(span)) - max;
        int den = 1 + int(next() % 3);
        return Rat(num, den);
    }
};

// random polynomial in the given coordinates, degree <= 2, a few terms
Poly random_poly(Rng& rng, const std::vector<int>& vars, int terms = 3) {
    Poly p(rng.rat());
    for (int t = 0; t < terms; ++t) {
        Mono m;
        int v1 = vars[static_cast<size_t>(rng.next() % vars.size())];
        m.emplace_back(v1, 1);
        if (rng.next() % 2) {
            int v2 = vars[static_cast<size_t>(rng.next() % vars.size())];
            if (v2 == v1)
                m.back().second += 1;
            else
                m.emplace_back(v2, 1);
        }
        std::sort(m.begin(), m.end());
        p += Poly::term(rng.rat(), m);
    }
    return p;
}

Poly expected_ddw_hamiltonian(const ChartPtr& chart) {
    Poly H = Poly::var(chart->energy());
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu)
            H += Poly::var(chart->momentum(mu, nu), 2) *
                 Rat(-chart->metric.eta(mu - 1) * chart->metric.eta(nu - 1), 4);
    return H;
}

// ---------------------------------------------------------------- criterion 1
Check c1() {
    Timer t;
    ChartPtr chart = Chart::build(Flavor::Ddw);
    HamiltonianFn H = hamiltonian_ddw(chart);
    bool ok = (H.expr == expected_ddw_hamiltonian(chart));
    return Check{"criterion-1 ddw-hamiltonian",
                 ok, ok ? "H = e - 1/4 eta eta Pi Pi exactly" : "mismatch", t.seconds()};
}

// ---------------------------------------------------------------- criterion 2
Check c2() {
    Timer t;
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Poly sig = Poly::var(chart->ld_extra());
    Ld2Hamiltonian Hg = hamiltonian_ld2(chart, sig);

    Poly p11 = Poly::var(chart->momentum(1, 1)), p12 = Poly::var(chart->momentum(1, 2));
    Poly p21 = Poly::var(chart->momentum(2, 1)), p22 = Poly::var(chart->momentum(2, 2));
    Poly two_minus(Rat(2));
    two_minus -= sig;
    // H = -pibar/sigma + (pi_oo + pi_bb)/(2 sigma (2-sigma))
    //     + [(sigma-3)/(2-sigma)^2 + 2/(sigma (2-sigma)^2)] pi_ob
    // plus the free energy coordinate the pairing carries (the momentum part
    // alone is often quoted without it)
    Poly den_exp = sig * two_minus * two_minus * Rat(2);
    Poly num_exp = -(p11 * p22) * Rat(2) * two_minus * two_minus +
                   (p12 * p12 + p21 * p21) * two_minus +
                   (p12 * p21) * (sig * (sig - Poly(Rat(3))) * Rat(2) + Poly(Rat(4))) +
                   Poly::var(chart->energy()) * den_exp;
    bool general_ok = (Hg.num * den_exp == num_exp * Hg.den);

    // two-path agreement at sigma = 1
    Poly Hs1_num = Hg.num.subst(chart->ld_extra(), Poly(Rat(1)));
    Poly Hs1_den = Hg.den.subst(chart->ld_extra(), Poly(Rat(1)));
    Ld2Hamiltonian Hd = hamiltonian_ld2(chart, Poly(Rat(1)));
    bool twopath_ok = (Hs1_num * Hd.den == Hd.num * Hs1_den);

    Poly H1_exp = Poly::var(chart->energy()) - (p11 * p22) + (p12 * p12 + p21 * p21) * Rat(1, 2);
    bool value_ok = (Hd.num == H1_exp * Hd.den);

    bool ok = general_ok && twopath_ok && value_ok;
    std::ostringstream d;
    d << "general-sigma match " << general_ok << ", two-path " << twopath_ok << ", sigma=1 value "
      << value_ok;
    return Check{"criterion-2 ld2-hamiltonian", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 3
bool find_monic(const std::vector<Relation>& rels, const std::string& prov, const Poly& expected) {
    Poly e = Relation{expected, Poly(), ""}.monic_diff();
    for (const auto& r : rels)
        if (r.provenance == prov && r.monic_diff() == e) return true;
    return false;
}

Check c3() {
    Timer t;
    std::ostringstream d;
    bool ok = true;

    {  // maxwell-dirac: F = dA and momentum divergence
        ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
        PDESystem sys = derive(chart, hamiltonian_ddw(chart));
        const Chart& rc = *sys.render_chart;
        for (int mu = 1; mu <= 4 && ok; ++mu)
            for (int nu = mu + 1; nu <= 4 && ok; ++nu) {
                std::string pname = chart->at(chart->momentum(mu, nu)).name;
                std::string aname = "A" + std::to_string(mu), bname = "A" + std::to_string(nu);
                // F[mu,nu] = d_mu A_nu - d_nu A_mu
                Poly expect = Poly::var(rc.require("F[" + std::to_string(mu) + "," +
                                                   std::to_string(nu) + "]")) -
                              Poly::var(rc.require(jet_name(mu, bname))) +
                              Poly::var(rc.require(jet_name(nu, aname)));
                ok = find_monic(sys.on_shell, "d" + pname, expect);
                if (!ok) d << "missing F=dA relation for " << pname << "; ";
            }
        for (int mu = 1; mu <= 4 && ok; ++mu) {
            Poly expect;
            for (int nu = 1; nu <= 4; ++nu) {
                if (nu == mu) continue;
                expect += Poly::var(rc.require(
                              jet_name(nu, chart->at(chart->momentum(mu, nu)).name))) -
                          Poly::var(rc.require(
                              jet_name(nu, chart->at(chart->momentum(nu, mu)).name)));
            }
            ok = find_monic(sys.relations, "dA" + std::to_string(mu), expect);
            if (!ok) d << "missing divergence relation for A" << mu << "; ";
        }
        if (ok) d << "maxwell-dirac: F=dA and d.(Pi-Pi^T)=0; ";
    }

    if (ok) {  // unconstrained ddw: d_nu A_mu = -1/2 F_{mu nu}, plus failure residual
        ChartPtr chart = Chart::build(Flavor::Ddw);
        PDESystem sys = derive(chart, hamiltonian_ddw(chart));
        const Chart& rc = *sys.render_chart;
        auto fsym = [&](int mu, int nu) -> Poly {
            if (mu == nu) return Poly();
            int lo = std::min(mu, nu), hi = std::max(mu, nu);
            Poly f = Poly::var(rc.require("F[" + std::to_string(lo) + "," + std::to_string(hi) + "]"));
            return mu < nu ? f : -f;
        };
        for (int mu = 1; mu <= 4 && ok; ++mu)
            for (int nu = 1; nu <= 4 && ok; ++nu) {
                if (mu == nu) continue;
                Poly expect = Poly::var(rc.require(jet_name(nu, "A" + std::to_string(mu)))) +
                              fsym(mu, nu) * Rat(1, 2);
                ok = find_monic(sys.on_shell, "d" + chart->at(chart->momentum(mu, nu)).name, expect);
                if (!ok) d << "ddw velocity relation missing for Pi[" << mu << "," << nu << "]; ";
            }
        if (ok) {
            // the documented failure: 1/2 F_{mu nu} - d_mu A_nu nonzero in the jets
            VelocityAssignment v = standard_jets(chart);
            Poly resid = faraday_lower(v, 1, 2) * Rat(1, 2) - v.at(2, 1);  // d_1 A_2
            ok = !resid.is_zero();
            d << (ok ? "ddw failure residual nonzero; " : "ddw failure residual vanished?!; ");
        }
    }

    if (ok) {  // ld2 at sigma = 1
        ChartPtr chart = Chart::build(Flavor::Ld2);
        PDESystem sys = derive_ld2(chart, Rat(1));
        const Chart& rc = *sys.render_chart;
        auto jet = [&](int a, const std::string& base) { return Poly::var(rc.require(jet_name(a, base))); };
        auto piv = [&](int mu, int nu) { return Poly::var(chart->momentum(mu, nu)); };
        ok = find_monic(sys.relations, "dpi[A1,1]", jet(1, "A1") + piv(2, 2)) &&
             find_monic(sys.relations, "dpi[A2,2]", jet(2, "A2") + piv(1, 1)) &&
             find_monic(sys.relations, "dpi[A2,1]", jet(1, "A2") - piv(2, 1)) &&
             find_monic(sys.relations, "dpi[A1,2]", jet(2, "A1") - piv(1, 2));
        for (int mu = 1; mu <= 2 && ok; ++mu) {
            Poly expect;
            for (int nu = 1; nu <= 2; ++nu)
                expect += Poly::var(rc.require(jet_name(nu, chart->at(chart->momentum(mu, nu)).name)));
            ok = find_monic(sys.relations, "dA" + std::to_string(mu), expect);
        }
        d << (ok ? "ld2 sigma=1: Legendre + divergence relations" : "ld2 sigma=1 mismatch");
    }
    return Check{"criterion-3 maxwell-recovery", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 4
Check c4() {
    Timer t;
    ChartPtr base = Chart::build(Flavor::MaxwellDirac);
    // fully symbolic linear coefficients
    std::vector<Coordinate> extra;
    for (int mu = 1; mu <= 4; ++mu)
        for (int a = 0; a <= 4; ++a) {
            extra.push_back(jet_coord("c[" + std::to_string(mu) + "," + std::to_string(a) + "]"));
            extra.push_back(jet_coord("cc[" + std::to_string(mu) + "," + std::to_string(a) + "]"));
        }
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu)
            for (int a = 0; a <= 4; ++a) {
                extra.push_back(jet_coord("s[" + std::to_string(mu) + std::to_string(nu) + "," +
                                          std::to_string(a) + "]"));
                extra.push_back(jet_coord("ss[" + std::to_string(mu) + std::to_string(nu) + "," +
                                          std::to_string(a) + "]"));
            }
    ChartPtr chart = base->extended(extra);
    auto lin = [&](const std::string& pre, int mu) {
        Poly p = Poly::var(chart->require(pre + "[" + std::to_string(mu) + ",0]"));
        for (int a = 1; a <= 4; ++a)
            p += Poly::var(chart->require(pre + "[" + std::to_string(mu) + "," + std::to_string(a) + "]")) *
                 Poly::var(chart->base(a));
        return p;
    };
    auto anti = [&](const std::string& pre) {
        std::array<std::array<Poly, 4>, 4> psi;
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = mu + 1; nu <= 4; ++nu) {
                Poly p = Poly::var(chart->require(pre + "[" + std::to_string(mu) + std::to_string(nu) + ",0]"));
                for (int a = 1; a <= 4; ++a)
                    p += Poly::var(chart->require(pre + "[" + std::to_string(mu) + std::to_string(nu) +
                                                  "," + std::to_string(a) + "]")) *
                         Poly::var(chart->base(a));
                psi[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)] = p;
                psi[static_cast<size_t>(nu - 1)][static_cast<size_t>(mu - 1)] = -p;
            }
        return psi;
    };
    std::array<Poly, 4> phi{lin("c", 1), lin("c", 2), lin("c", 3), lin("c", 4)};
    std::array<Poly, 4> phi2{lin("cc", 1), lin("cc", 2), lin("cc", 3), lin("cc", 4)};
    auto psi = anti("s");
    auto psi2 = anti("ss");
    ObservableForm P = make_P_phi(chart, phi), P2 = make_P_phi(chart, phi2);
    ObservableForm Q = make_Q_psi(chart, psi), Q2 = make_Q_psi(chart, psi2);
    bool solved = P.algebraic && P2.algebraic && Q.algebraic && Q2.algebraic;
    bool qq = poisson(Q, Q2).is_zero();
    bool pp = poisson(P, P2).is_zero();
    Form qp = poisson(Q, P);
    Form expected = Form::zero(3, chart);
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu)
            expected += dy_hook(chart, {nu}) *
                        (psi[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)] *
                         phi[static_cast<size_t>(mu - 1)] * Rat(-1));
    bool table = (qp == expected);
    bool aa = poisson(P, P).is_zero() && poisson(Q, Q).is_zero();
    bool ok = solved && qq && pp && table && aa;
    std::ostringstream d;
    d << "xi solved " << solved << ", {Q,Q}=0 " << qq << ", {P,P}=0 " << pp
      << ", {Q,P}=-psi phi dy " << table << ", {a,a}=0 " << aa << " (three-path agreement enforced)";
    return Check{"criterion-4 bracket-table", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 5
Check c5(uint64_t seed) {
    Timer t;
    Rng rng(seed);
    // the zeta lift lives on the unconstrained ddw chart; the dynamical
    // residual is evaluated there and then restricted by the Dirac relations
    ChartPtr chart = Chart::build(Flavor::Ddw);
    ChartPtr dirac = Chart::build(Flavor::MaxwellDirac);
    std::vector<int> xs, xAs;
    for (int a = 1; a <= 4; ++a) xs.push_back(chart->base(a));
    xAs = xs;
    for (int mu = 1; mu <= 4; ++mu) xAs.push_back(chart->field(mu));
    bool lifts_ok = true;
    for (int trial = 0; trial < 50 && lifts_ok; ++trial) {
        std::array<Poly, 4> X, Th;
        for (int i = 0; i < 4; ++i) {
            X[static_cast<size_t>(i)] = random_poly(rng, xs, 2);
            Th[static_cast<size_t>(i)] = random_poly(rng, xAs, 2);
        }
        ZetaLift z = lift_zeta(chart, X, Th);
        // defining identity dP = -zeta_bar _| Omega is re-verified inside; also
        // require the lift to be an infinitesimal symplectomorphism
        lifts_ok = z.P.algebraic && is_algebraic(z.zeta_bar);
    }

    // Poincare family: residual of dH(Xi) vanishes exactly
    HamiltonianFn H = hamiltonian_ddw(chart);
    const Metric& g = chart->metric;
    bool poincare_ok = true;
    for (int trial = 0; trial < 10 && poincare_ok; ++trial) {
        Rat w[4][4];  // lowered antisymmetric generator
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) w[a][b] = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                w[a][b] = rng.rat();
                w[b][a] = -w[a][b];
            }
        std::array<Poly, 4> X, Th;
        Rat m[4][4];
        for (int nu = 1; nu <= 4; ++nu) {
            Poly x(rng.rat());
            for (int rho = 1; rho <= 4; ++rho)
                x += Poly::var(chart->base(rho)) * (Rat(g.eta(nu - 1)) * w[nu - 1][rho - 1]);
            X[static_cast<size_t>(nu - 1)] = x;
        }
        for (int mu = 1; mu <= 4; ++mu) {
            Poly th(rng.rat());
            for (int rho = 1; rho <= 4; ++rho) {
                m[mu - 1][rho - 1] = rng.rat();
                th += Poly::var(chart->base(rho)) * m[mu - 1][rho - 1];
            }
            Th[static_cast<size_t>(mu - 1)] = th;
        }
        ZetaLift z = lift_zeta(chart, X, Th);
        // chi with Ups^{mu nu} = eta eta (d_mu Theta_nu - d_nu Theta_mu)
        std::vector<std::pair<int, Poly>> comps;
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = 1; nu <= 4; ++nu) {
                Rat G = m[nu - 1][mu - 1] - m[mu - 1][nu - 1];  // d_mu Theta_nu - d_nu Theta_mu
                Rat up = Rat(g.eta(mu - 1) * g.eta(nu - 1)) * G;
                if (up != 0) comps.emplace_back(chart->momentum(mu, nu), Poly(up));
            }
        Multivector xi = z.zeta_bar;
        if (!comps.empty()) xi += Multivector::from_components(chart, comps);
        poincare_ok = reduce(dH_along(xi, H), *dirac).is_zero();
    }

    // violating instances give a nonzero residual
    Multivector bad = Multivector::basis(chart, chart->energy());  // Ups = 1
    bool violation_ok = !reduce(dH_along(bad, H), *dirac).is_zero();
    {
        std::array<Poly, 4> X{Poly::var(chart->base(1)), Poly(), Poly(), Poly()};  // div X != 0
        std::array<Poly, 4> Th{};
        ZetaLift z = lift_zeta(chart, X, Th);
        violation_ok = violation_ok && !reduce(dH_along(z.zeta_bar, H), *dirac).is_zero();
    }
    bool ok = lifts_ok && poincare_ok && violation_ok;
    std::ostringstream d;
    d << "50 random lifts exact " << lifts_ok << ", Poincare residual vanishes " << poincare_ok
      << ", violating instance nonzero " << violation_ok;
    return Check{"criterion-5 classification-oracles", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 6
Check c6(uint64_t seed) {
    Timer t;
    Rng rng(seed ^ 0xabcdef);
    ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
    std::vector<int> xs;
    for (int a = 1; a <= 4; ++a) xs.push_back(chart->base(a));
    auto rand_P = [&]() {
        std::array<Poly, 4> phi;
        for (auto& p : phi) p = random_poly(rng, xs, 2);
        return make_P_phi(chart, phi);
    };
    auto rand_Q = [&]() {
        std::array<std::array<Poly, 4>, 4> psi;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) {
                Poly p = random_poly(rng, xs, 2);
                psi[static_cast<size_t>(mu)][static_cast<size_t>(nu)] = p;
                psi[static_cast<size_t>(nu)][static_cast<size_t>(mu)] = -p;
            }
        return make_Q_psi(chart, psi);
    };
    bool ok = true;
    std::ostringstream d;
    for (int trial = 0; trial < 10 && ok; ++trial) {
        ObservableForm a, b, c;
        switch (trial % 3) {
            case 0: a = rand_Q(); b = rand_P(); c = rand_P(); break;
            case 1: a = rand_P(); b = rand_Q(); c = rand_Q(); break;
            default: a = rand_Q(); b = rand_Q(); c = rand_P(); break;
        }
        JacobiDefect j = jacobi_defect(a, b, c);
        ok = j.equal;
        if (!ok) d << "triple " << trial << " failed";
    }
    if (ok) d << "10 random triples satisfy lhs = d(Xi^Xi^Xi _| Omega) exactly";
    return Check{"criterion-6 jacobi-modulo-exact", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 7
Check c7() {
    Timer t;
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Poly sig = Poly::var(chart->ld_extra());
    Poly det = functional_det(chart, sig);
    Poly expect = (Poly(Rat(2)) - sig) * sig * sig * sig;
    bool det_ok = (det == expect);
    bool vals_ok = det.subst(chart->ld_extra(), Poly(Rat(1))) == Poly(Rat(1)) &&
                   det.subst(chart->ld_extra(), Poly(Rat(0))).is_zero() &&
                   det.subst(chart->ld_extra(), Poly(Rat(2))).is_zero();
    PseudofiberReport r1 = pseudofiber_classify({Rat(3), Rat(7), Rat(1), Rat(-4), Rat(2), Rat(1)});
    PseudofiberReport r2 = pseudofiber_classify({Rat(0), Rat(0), Rat(5), Rat(-5), Rat(0), Rat(0)});
    PseudofiberReport r3 = pseudofiber_classify({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(2)});
    PseudofiberReport r4 = pseudofiber_classify({Rat(1), Rat(0), Rat(1), Rat(1), Rat(0), Rat(2)});
    bool strata_ok = r1.stratum == Stratum::Regular && r2.stratum == Stratum::SigmaZero &&
                     r3.stratum == Stratum::NotInP && r4.stratum == Stratum::SigmaTwo;
    bool dims_ok = r1.dim_enlarged == 2 && r1.dim_fiber == 1;
    bool ok = det_ok && vals_ok && strata_ok && dims_ok;
    std::ostringstream d;
    d << "det = (2-s)s^3 " << det_ok << ", roots " << vals_ok << ", strata " << strata_ok
      << ", dims (2,1) " << dims_ok;
    return Check{"criterion-7 determinant-pseudofibers", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 9
Check c9() {
    Timer t;
    // epsilon contraction over all 4D index choices (Minkowski raise)
    int eta[4] = {1, -1, -1, -1};
    bool eps_ok = true;
    for (int al = 1; al <= 4 && eps_ok; ++al)
        for (int be = 1; be <= 4 && eps_ok; ++be)
            for (int la = 1; la <= 4 && eps_ok; ++la)
                for (int si = 1; si <= 4 && eps_ok; ++si) {
                    Rat lhs = 0;
                    for (int r = 1; r <= 4; ++r)
                        for (int s = 1; s <= 4; ++s) {
                            int up = epsilon4(la, si, r, s) * eta[la - 1] * eta[si - 1] *
                                     eta[r - 1] * eta[s - 1];
                            lhs += Rat(epsilon4(al, be, r, s) * up);
                        }
                    Rat rhs = Rat(-2) * ((al == la && be == si ? 1 : 0) - (al == si && be == la ? 1 : 0));
                    eps_ok = (lhs == rhs);
                }

    // F ^ *F = -1/2 F_{ab} F^{ab} dy for fully symbolic F
    std::vector<Coordinate> cs;
    for (int mu = 1; mu <= 4; ++mu) cs.push_back({"x" + std::to_string(mu), Role::Base, {mu}});
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu)
            cs.push_back(jet_coord("f[" + std::to_string(mu) + "," + std::to_string(nu) + "]"));
    ChartPtr chart = Chart::generic(4, cs, Metric{4, {1, -1, -1, -1}});
    Form F(2, chart);
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu)
            F += wedge(Form::basis(chart, chart->base(mu)), Form::basis(chart, chart->base(nu))) *
                 Poly::var(chart->require("f[" + std::to_string(mu) + "," + std::to_string(nu) + "]"));
    Form lhs = wedge(F, hodge2(F));
    Poly f2;  // F_{ab} F^{ab} = 2 sum_{mu<nu} eta eta f^2
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu)
            f2 += Poly::var(chart->require("f[" + std::to_string(mu) + "," + std::to_string(nu) + "]"), 2) *
                  Rat(2 * eta[mu - 1] * eta[nu - 1]);
    Form rhs = volume(chart) * (f2 * Rat(-1, 2));
    bool hodge_ok = (lhs == rhs);
    bool ok = eps_ok && hodge_ok;
    std::ostringstream d;
    d << "epsilon identity " << eps_ok << ", F^*F identity " << hodge_ok;
    return Check{"criterion-9 epsilon-hodge", ok, d.str(), t.seconds()};
}

// ---------------------------------------------------------------- criterion 8
Check c8() {
    Timer t;
    CopolarWitness w = copolar_obstruction();
    bool ok = w.found && w.grid_halfwidth == 1 && w.drho1_X != w.drho1_Xbar;
    std::ostringstream d;
    if (w.found) {
        d << "witness on the {-1,0,1} grid: drho1(X) = " << to_string(w.drho1_X)
          << ", drho1(Xbar) = " << to_string(w.drho1_Xbar) << "; differing coefficients:";
        for (const auto& [k, v] : w.X)
            if (w.Xbar.at(k) != v)
                d << " " << k << ": " << to_string(v) << " vs " << to_string(w.Xbar.at(k));
    } else {
        d << "no witness found";
    }
    return Check{"criterion-8 copolar-obstruction", ok, d.str(), t.seconds()};
}

// --------------------------------------------------------------- numeric part
namespace fs = maxsym::fieldsim;

fs::Grid make_grid(int n) {
    fs::Grid g;
    g.nx = g.ny = g.nz = n;
    g.h = 1.0 / n;
    g.dt = g.h / 2;
    return g;
}

Check c10(bool quick) {
    Timer t;
    std::ostringstream d;
    // oblique traveling wave: discrete L2 error and Gauss residual refine at O(h^2)
    fs::PlaneWave oblique;
    oblique.mode = {1, 2, 0};
    oblique.eps = {2, -1, 0};
    oblique.amp = 0.05;
    std::vector<int> ns = quick ? std::vector<int>{8, 16, 32} : std::vector<int>{16, 32, 64};
    std::vector<double> errs, gauss;
    for (int n : ns) {
        fs::FieldState s = fs::wave_state(make_grid(n), oblique);
        gauss.push_back(fs::gauss_residual_linf(s));
        fs::EvolveOptions opt;
        opt.steps = n / 4;  // fixed T = 1/8
        fs::evolve(s, opt);
        errs.push_back(fs::l2_error_A(s, oblique));
    }
    bool l2_ok = true, gauss_ok = true;
    for (size_t i = 0; i + 1 < errs.size(); ++i) {
        double r = errs[i] / errs[i + 1];
        l2_ok = l2_ok && r >= 3.0 && r <= 5.0;
        d << "L2 ratio " << r << "; ";
    }
    for (size_t i = 0; i + 1 < gauss.size(); ++i) {
        double r = gauss[i] / gauss[i + 1];
        gauss_ok = gauss_ok && r >= 3.0 && r <= 5.0;
        d << "gauss ratio " << r << "; ";
    }
    // energy drift on the axis wave
    fs::PlaneWave axis;
    axis.mode = {1, 0, 0};
    axis.eps = {0, 1, 0};
    axis.amp = 0.1;
    fs::FieldState s = fs::wave_state(make_grid(quick ? 16 : 32), axis);
    double e0 = fs::total_energy(s);
    double drift = 0;
    for (int n = 0; n < 100; ++n) {
        fs::step(s, true);
        drift = std::max(drift, std::fabs(fs::total_energy(s) - e0) / e0);
    }
    bool drift_ok = drift < 1e-6;
    d << "energy drift " << drift;
    bool ok = l2_ok && gauss_ok && drift_ok;
    return Check{"criterion-10 numeric-convergence", ok, d.str(), t.seconds()};
}

// exact integral over [0,1] of b_p(frac(u - s1)) * b_q'(frac(u - s2)) style
// products, via univariate rational polynomials
struct Uni {
    // coefficients c[k] of u^k
    std::vector<Rat> c;
    static Uni bump(int p) {  // (4u(1-u))^p
        Uni b;
        b.c.assign(1, Rat(1));
        Uni base;
        base.c = {Rat(0), Rat(4), Rat(-4)};  // 4u - 4u^2
        for (int i = 0; i < p; ++i) b = b.mul(base);
        return b;
    }
    Uni mul(const Uni& o) const {
        Uni r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    Uni deriv() const {
        Uni r;
        if (c.size() <= 1) {
            r.c.assign(1, Rat(0));
            return r;
        }
        r.c.assign(c.size() - 1, Rat(0));
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Rat(static_cast<long>(i));
        return r;
    }
    Uni shift(const Rat& a) const {  // u -> u + a
        Uni r;
        r.c.assign(c.size(), Rat(0));
        for (size_t k = 0; k < c.size(); ++k) {
            // (u+a)^k expansion
            std::vector<Rat> binom(k + 1, Rat(0));
            binom[0] = Rat(1);
            for (size_t i = 1; i <= k; ++i)
                for (size_t j = i; j > 0; --j) binom[j] += binom[j - 1];
            Rat apow(1);
            for (size_t j = 0; j <= k; ++j) {
                r.c[k - j] += c[k] * binom[j] * apow;
                apow *= a;
            }
        }
        return r;
    }
    Rat integral(const Rat& a, const Rat& b) const {
        Rat acc = 0, pa = a, pb = b;
        for (size_t k = 0; k < c.size(); ++k) {
            acc += c[k] * (pb - pa) / Rat(static_cast<long>(k + 1));
            pa *= a;
            pb *= b;
        }
        return acc;
    }
};

// integral over one period of f(frac(u - s1)) g(frac(u - s2)) for rational shifts
Rat periodic_product_integral(const Uni& f, const Rat& s1, const Uni& g, const Rat& s2) {
    // substitute w = frac(u - s1): integral of f(w) g(frac(w + s1 - s2)) dw
    Rat delta = s1 - s2;
    while (delta < 0) delta += 1;
    while (delta >= 1) delta -= 1;
    // piece 1: w in [0, 1-delta): g(w + delta); piece 2: g(w + delta - 1)
    Uni g1 = g.shift(delta), g2 = g.shift(delta - 1);
    return f.mul(g1).integral(Rat(0), Rat(1) - delta) + f.mul(g2).integral(Rat(1) - delta, Rat(1));
}

Check c11(bool quick) {
    Timer t;
    (void)quick;  // the tolerance is pinned at the reference resolution
    fs::Grid g = make_grid(32);
    const int p1 = 8, p2 = 7;
    std::array<double, 3> sh1{0, 0, 0}, sh2{0.25, 0.125, 0.375};
    fs::TestFunction s1 = fs::poly_bump(p1, sh1), s2 = fs::poly_bump(p2, sh2);
    Uni b1 = Uni::bump(p1), b2 = Uni::bump(p2);
    std::array<Rat, 3> rs1{Rat(0), Rat(0), Rat(0)}, rs2{Rat(1, 4), Rat(1, 8), Rat(3, 8)};
    bool ok = true;
    std::ostringstream d;
    for (auto [k, i] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}, {2, 1}}) {
        double disc = fs::smeared_bracket_BE(g, s1, s2, k, i);
        // analytic: -eps^{kij} int d_j s1 s2 (separable)
        Rat exact = 0;
        for (int j = 1; j <= 3; ++j) {
            int e = fs::eps3(k, i, j);
            if (!e) continue;
            Rat val(1);
            for (int ax = 1; ax <= 3; ++ax) {
                const Uni& fa = (ax == j) ? b1.deriv() : b1;
                val = val * periodic_product_integral(fa, rs1[static_cast<size_t>(ax - 1)], b2,
                                                      rs2[static_cast<size_t>(ax - 1)]);
            }
            exact += Rat(-e) * val;
        }
        double ex = to_double(exact);
        double rel = std::fabs(disc - ex) / std::fabs(ex);
        ok = ok && rel < 1e-6 && std::fabs(ex) > 1e-8;
        d << "(" << k << "," << i << ") rel " << rel << "; ";
    }
    bool zeros = fs::smeared_bracket_EE(g, s1, s2, 1, 2) == 0.0 &&
                 fs::smeared_bracket_BB(g, s1, s2, 1, 2) == 0.0;
    ok = ok && zeros;
    d << "EE/BB identically zero " << zeros;
    return Check{"criterion-11 smeared-brackets", ok, d.str(), t.seconds()};
}

Check c12(bool quick) {
    Timer t;
    std::ostringstream d;
    // symbolic gate: constant-phi P is dynamical
    ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
    std::array<Poly, 4> phi{Poly(Rat(0)), Poly(Rat(1)), Poly(Rat(2)), Poly(Rat(0))};
    ObservableForm P = make_P_phi(chart, phi);
    bool gate = P.algebraic && is_dynamical(P, hamiltonian_ddw(chart));

    fs::PlaneWave axis;
    axis.mode = {1, 0, 0};
    axis.eps = {0, 1, 0};
    axis.amp = 0.1;
    int n = quick ? 16 : 32;
    fs::FieldState s = fs::wave_state(make_grid(n), axis);
    // uniform background E so the P functional has a nonzero value
    for (auto& v : s.E[1]) v += 0.3;
    fs::SliceInvariance se = fs::slice_invariance(s, 100, fs::SliceFunctional::energy());
    fs::SliceInvariance sp =
        fs::slice_invariance(s, 100, fs::SliceFunctional::p_const({Rat(0), Rat(1), Rat(0)}));
    bool slice_ok = se.delta < 1e-6 && sp.delta < 1e-6;
    d << "energy slice delta " << se.delta << ", P_phi slice delta " << sp.delta << "; ";

    // O(h^2) refinement of the discrete energy toward the analytic value
    double exact = 0.5 * axis.omega() * axis.omega() * axis.amp * axis.amp;  // (E^2+B^2)/2 integral
    std::vector<int> ns = quick ? std::vector<int>{8, 16, 32} : std::vector<int>{16, 32, 64};
    std::vector<double> errs;
    for (int nn : ns) {
        fs::FieldState w = fs::wave_state(make_grid(nn), axis);
        errs.push_back(std::fabs(fs::total_energy(w) - exact));
    }
    bool refine_ok = true;
    for (size_t i = 0; i + 1 < errs.size(); ++i) {
        double r = errs[i] / errs[i + 1];
        refine_ok = refine_ok && r >= 3.0 && r <= 5.0;
        d << "energy error ratio " << r << "; ";
    }
    bool ok = gate && slice_ok && refine_ok;
    d << "dynamical gate " << gate;
    return Check{"criterion-12 slice-independence", ok, d.str(), t.seconds()};
}

Check c13(bool quick) {
    Timer t;
    int n = quick ? 64 : 128;
    fs::FieldState2 s = fs::sin_state2(n, 0.7, 0.4, 2, 3);
    fs::FlatnessOptions opt;
    opt.tol = 1e-10;
    fs::FlatnessReport rep = fs::ld2_flatness(s, opt);
    bool ok = rep.converged && rep.final_dev < 1e-10 && rep.monotone &&
              std::fabs(rep.mean_final - rep.mean_initial) < 1e-12;
    std::ostringstream d;
    d << "iters " << rep.iters << ", max |F - mean| " << rep.final_dev << ", monotone "
      << rep.monotone << ", flux preserved " << std::fabs(rep.mean_final - rep.mean_initial);
    return Check{"criterion-13 ld2-flatness", ok, d.str(), t.seconds()};
}

}  // namespace

std::vector<Check> verify_symbolic(uint64_t seed) {
    std::vector<Check> out;
    out.push_back(c1());
    out.push_back(c2());
    out.push_back(c3());
    out.push_back(c4());
    out.push_back(c5(seed));
    out.push_back(c6(seed));
    out.push_back(c7());
    out.push_back(c9());
    return out;
}

std::vector<Check> verify_obstruction() { return {c8()}; }

std::vector<Check> verify_numeric(bool quick) {
    std::vector<Check> out;
    out.push_back(c10(quick));
    out.push_back(c11(quick));
    out.push_back(c12(quick));
    out.push_back(c13(quick));
    return out;
}

std::vector<Check> verify_all(uint64_t seed, bool quick) {
    std::vector<Check> out = verify_symbolic(seed);
    auto ob = verify_obstruction();
    out.insert(out.end(), ob.begin(), ob.end());
    auto nu = verify_numeric(quick);
    out.insert(out.end(), nu.begin(), nu.end());
    return out;
}

bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

}  // namespace maxsym
