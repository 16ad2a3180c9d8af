#include "maxsym/legendre.hpp"

namespace maxsym {

Poly Relation::monic_diff() const {
    Poly d = lhs - rhs;
    if (d.is_zero()) return d;
    Rat lead = d.t.begin()->second;
    return d * (Rat(1) / lead);
}

VelocityAssignment standard_jets(const ChartPtr& chart) {
    std::vector<Coordinate> extra;
    for (int mu = 1; mu <= chart->n_fields(); ++mu)
        for (int nu = 1; nu <= chart->n; ++nu)
            extra.push_back(jet_coord(jet_name(nu, chart->at(chart->field(mu)).name)));
    VelocityAssignment v;
    v.chart = chart->extended(extra);
    for (int mu = 1; mu <= chart->n_fields(); ++mu)
        for (int nu = 1; nu <= chart->n; ++nu)
            v.z[{mu, nu}] = v.chart->require(jet_name(nu, chart->at(chart->field(mu)).name));
    return v;
}

Poly pairing(const ChartPtr& chart, const VelocityAssignment& v) {
    const ChartPtr& ec = v.chart;
    Multivector frame = Multivector::scalar(ec, Poly(Rat(1)));
    for (int a = 1; a <= chart->n; ++a) {
        std::vector<std::pair<int, Poly>> comps{{ec->base(a), Poly(Rat(1))}};
        for (int mu = 1; mu <= chart->n_fields(); ++mu) comps.emplace_back(ec->field(mu), v.at(mu, a));
        frame = wedge(frame, Multivector::from_components(ec, comps));
    }
    return contract(frame, theta(chart)).scalar_part();
}

Poly faraday_lower(const VelocityAssignment& v, int mu, int nu) {
    return v.at(nu, mu) - v.at(mu, nu);
}

Poly faraday_upper(const ChartPtr& chart, const VelocityAssignment& v, int mu, int nu) {
    Rat s(chart->metric.eta(mu - 1) * chart->metric.eta(nu - 1));
    return faraday_lower(v, mu, nu) * s;
}

Poly maxwell_lagrangian(const ChartPtr& chart, const VelocityAssignment& v,
                        const std::array<Poly, 4>* current) {
    Poly L;
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = 1; nu <= chart->n; ++nu)
            L += faraday_lower(v, mu, nu) * faraday_upper(chart, v, mu, nu) * Rat(-1, 4);
    if (current)
        for (int mu = 1; mu <= chart->n; ++mu)
            L += (*current)[static_cast<size_t>(mu - 1)] * Poly::var(chart->field(mu));
    return L;
}

Poly ld2_lagrangian(const ChartPtr& chart, const VelocityAssignment& v) {
    (void)chart;
    Poly f = faraday_lower(v, 1, 2);
    return f * f * Rat(1, 2);
}

std::vector<Relation> legendre_relations(const ChartPtr& chart, const VelocityAssignment& v,
                                         const Poly& L) {
    Poly pv = pairing(chart, v);
    std::vector<Relation> rels;
    for (int mu = 1; mu <= chart->n_fields(); ++mu)
        for (int nu = 1; nu <= chart->n; ++nu) {
            Relation r;
            r.lhs = pv.derivative(v.idx(mu, nu));
            r.rhs = L.derivative(v.idx(mu, nu));
            r.provenance = "dZ[" + std::to_string(nu) + "," + std::to_string(mu) + "]";
            rels.push_back(std::move(r));
        }
    return rels;
}

// Laplace expansion; exact, used only for small matrices.
static Poly poly_det(const std::vector<std::vector<Poly>>& a) {
    const size_t n = a.size();
    if (n == 1) return a[0][0];
    Poly d;
    for (size_t i = 0; i < n; ++i) {
        if (a[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Poly> row(a[r].begin() + 1, a[r].end());
            minor.push_back(std::move(row));
        }
        Poly term = a[i][0] * poly_det(minor);
        d += (i % 2 == 0) ? term : -term;
    }
    return d;
}

// Momentum expression pi(Z) solved from each relation, ordered lexicographically
// in (mu,nu), together with the matching velocity order (rho,sigma).
struct Ld2System {
    VelocityAssignment v;
    std::vector<std::pair<int, int>> mom_order, vel_order;
    std::vector<Poly> pi_expr;  // pi[mu,nu] as Poly in (Z, sigma)
};

static Ld2System ld2_system(const ChartPtr& chart, const Poly& sigma) {
    Ld2System s;
    s.v = standard_jets(chart);
    Poly L = ld2_lagrangian(chart, s.v);
    auto rels = legendre_relations(chart, s.v, L);
    std::map<int, Poly> sig_sub{{chart->ld_extra(), sigma}};
    for (int mu = 1; mu <= 2; ++mu)
        for (int nu = 1; nu <= 2; ++nu) {
            s.mom_order.emplace_back(mu, nu);
            s.vel_order.emplace_back(mu, nu);
        }
    for (auto [mu, nu] : s.mom_order) {
        int pidx = chart->momentum(mu, nu);
        // relation: pi + S(Z) = dL/dZ  =>  pi = dL/dZ - S(Z)
        Poly expr;
        bool found = false;
        for (const auto& r : rels) {
            Poly d = r.diff();
            if (d.degree_in(pidx) == 1) {
                expr = Poly::var(pidx) - d;  // d = pi - (rhs - S) has unit pi coefficient
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("ld2_system: momentum missing from relations");
        s.pi_expr.push_back(expr.subst(sig_sub));
    }
    return s;
}

Poly functional_det(const ChartPtr& chart, const Poly& sigma) {
    Ld2System s = ld2_system(chart, sigma);
    std::vector<std::vector<Poly>> jac(4, std::vector<Poly>(4));
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) {
            auto [rho, sig] = s.vel_order[c];
            jac[r][c] = s.pi_expr[r].derivative(s.v.idx(sig, rho));  // d(pi)/d(d_rho A_sigma)
        }
    return poly_det(jac);
}

Ld2Inverse invert_ld2(const ChartPtr& chart, const Poly& sigma) {
    if (sigma.is_constant()) {
        Rat sv = sigma.constant_value();
        if (sv == 0)
            throw Ld2Degenerate("degenerate Legendre correspondence at sigma=0 "
                                "(Delta=(2-sigma)sigma^3 vanishes; sigma=0 pseudofiber stratum)");
        if (sv == 2)
            throw Ld2Degenerate("degenerate Legendre correspondence at sigma=2 "
                                "(Delta=(2-sigma)sigma^3 vanishes; sigma=2 pseudofiber stratum)");
    }
    Ld2System s = ld2_system(chart, sigma);
    // linear system N z = b with b = pi coordinates minus the z-independent part
    std::vector<std::vector<Poly>> N(4, std::vector<Poly>(4));
    std::vector<Poly> b(4);
    for (size_t r = 0; r < 4; ++r) {
        Poly rest = s.pi_expr[r];
        for (size_t c = 0; c < 4; ++c) {
            auto [rho, sig] = s.vel_order[c];
            N[r][c] = s.pi_expr[r].derivative(s.v.idx(sig, rho));
            rest = rest.subst(s.v.idx(sig, rho), Poly());
        }
        auto [mu, nu] = s.mom_order[r];
        b[r] = Poly::var(chart->momentum(mu, nu)) - rest;
    }
    Poly det = poly_det(N);
    if (det.is_zero()) throw Ld2Degenerate("degenerate Legendre correspondence (zero determinant)");
    Ld2Inverse inv;
    inv.chart = s.v.chart;
    inv.v = s.v;
    inv.det = det;
    for (size_t c = 0; c < 4; ++c) {
        std::vector<std::vector<Poly>> M = N;
        for (size_t r = 0; r < 4; ++r) M[r][c] = b[r];
        auto [rho, sig] = s.vel_order[c];
        inv.vel[{sig, rho}] = RatioPoly{poly_det(M), det};  // d_rho A_sigma
    }
    return inv;
}

HamiltonianFn hamiltonian_ddw(const ChartPtr& chart, const std::array<Poly, 4>* current) {
    VelocityAssignment v = standard_jets(chart);
    Poly L = maxwell_lagrangian(chart, v, current);
    Poly pv = pairing(chart, v);
    // eliminate momenta toward the Legendre image: Pi[Amu,nu] -> F^{mu nu}(Z)
    std::map<int, Poly> onto_image;
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = 1; nu <= chart->n; ++nu)
            onto_image[chart->momentum(mu, nu)] = faraday_upper(chart, v, mu, nu);
    Poly h_jets = pv.subst(onto_image) - L;
    // candidate per Eq. of the quadratic form in the momenta
    Poly H = Poly::var(chart->energy());
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = 1; nu <= chart->n; ++nu) {
            Rat w = Rat(-chart->metric.eta(mu - 1) * chart->metric.eta(nu - 1), 4);
            H += Poly::var(chart->momentum(mu, nu), 2) * w;
        }
    if (current)
        for (int mu = 1; mu <= chart->n; ++mu)
            H -= (*current)[static_cast<size_t>(mu - 1)] * Poly::var(chart->field(mu));
    if (H.subst(onto_image) != h_jets)
        throw std::runtime_error("hamiltonian_ddw: momentum rewrite failed verification");
    return HamiltonianFn{H, chart};
}

// Substitute velocities with a shared denominator into a Poly of z-degree <= 2.
static void subst_ratio(const Poly& p, const std::map<int, RatioPoly>& vals, const Poly& den,
                        Poly& out_num, Poly& out_den) {
    out_den = den * den;
    out_num = Poly();
    for (const auto& [mono, c] : p.t) {
        Poly target(c);
        int zdeg = 0;
        for (const auto& [vidx, e] : mono) {
            auto it = vals.find(vidx);
            if (it == vals.end()) {
                target = target * Poly::var(vidx, e);
            } else {
                for (int k = 0; k < e; ++k) target = target * it->second.num;
                zdeg += e;
            }
        }
        if (zdeg > 2) throw std::runtime_error("subst_ratio: degree bound exceeded");
        for (int k = zdeg; k < 2; ++k) target = target * den;
        out_num += target;
    }
}

Ld2Hamiltonian hamiltonian_ld2(const ChartPtr& chart, const Poly& sigma) {
    Ld2Inverse inv = invert_ld2(chart, sigma);
    Poly pv = pairing(chart, inv.v);
    Poly L = ld2_lagrangian(chart, inv.v);
    std::map<int, Poly> sig_sub{{chart->ld_extra(), sigma}};
    Poly hz = (pv - L).subst(sig_sub);
    std::map<int, RatioPoly> vals;
    for (const auto& [key, rp] : inv.vel) {
        auto [mu, nu] = key;  // d_nu A_mu
        vals[inv.v.idx(mu, nu)] = rp;
    }
    Ld2Hamiltonian H;
    H.chart = chart;
    subst_ratio(hz, vals, inv.det, H.num, H.den);
    return H;
}

PseudofiberReport pseudofiber_classify(const Ld2Point& p) {
    PseudofiberReport r;
    if (p.sigma != 0 && p.sigma != 2) {
        r.stratum = Stratum::Regular;
        r.detail = "sigma not in {0,2}: regular stratum of P_q";
        return r;
    }
    if (p.sigma == 0) {
        bool member = (p.pi11 == 0) && (p.pi22 == 0) && (p.pi12 + p.pi21 == 0);
        r.stratum = member ? Stratum::SigmaZero : Stratum::NotInP;
        r.detail = member ? "sigma=0 stratum: pi[A1,1]=pi[A2,2]=pi[A1,2]+pi[A2,1]=0"
                          : "sigma=0 but pi[A1,1]=pi[A2,2]=pi[A1,2]+pi[A2,1]=0 fails: not in P_q";
        return r;
    }
    bool member = (p.pi12 - p.pi21 == 0);
    r.stratum = member ? Stratum::SigmaTwo : Stratum::NotInP;
    r.detail = member ? "sigma=2 stratum: pi[A1,2]-pi[A2,1]=0"
                      : "sigma=2 but pi[A1,2]-pi[A2,1]=0 fails: not in P_q";
    return r;
}

}  // namespace maxsym
