#include "maxsym/observables.hpp"

#include <set>

namespace maxsym {

namespace {

// Admissible non-base solve directions with display names.
struct Directions {
    std::vector<Multivector> dirs;
    std::vector<std::string> names;
};

Directions solve_directions(const ChartPtr& chart) {
    Directions d;
    auto add = [&](Multivector mv, std::string n) {
        d.dirs.push_back(std::move(mv));
        d.names.push_back(std::move(n));
    };
    for (int mu = 1; mu <= chart->n; ++mu)
        add(Multivector::basis(chart, chart->base(mu)), chart->at(chart->base(mu)).name);
    for (int mu = 1; mu <= chart->n_fields(); ++mu)
        add(Multivector::basis(chart, chart->field(mu)), chart->at(chart->field(mu)).name);
    if (chart->flavor != Flavor::Premulti) add(Multivector::basis(chart, chart->energy()), "e");
    if (chart->constrained()) {
        for (int mu = 1; mu <= chart->n; ++mu)
            for (int nu = mu + 1; nu <= chart->n; ++nu)
                add(Multivector::basis(chart, chart->momentum(mu, nu)) -
                        Multivector::basis(chart, chart->momentum(nu, mu)),
                    "D" + chart->at(chart->momentum(mu, nu)).name);
    } else {
        for (int mu = 1; mu <= chart->n_fields(); ++mu)
            for (int nu = 1; nu <= chart->n; ++nu)
                add(Multivector::basis(chart, chart->momentum(mu, nu)),
                    chart->at(chart->momentum(mu, nu)).name);
        if (chart->flavor == Flavor::Ld2) add(Multivector::basis(chart, chart->ld_extra()), "sigma");
    }
    return d;
}

struct LinRow {
    std::map<size_t, Poly> mult;
    Poly cst;
};

}  // namespace

std::optional<Multivector> solve_xi(const Form& phi) {
    const ChartPtr& chart = phi.chart;
    Form Om = omega(chart);
    Directions dd = solve_directions(chart);
    std::vector<Form> B;
    B.reserve(dd.dirs.size());
    for (const auto& dir : dd.dirs) B.push_back(reduce(contract(dir, Om)));
    Form dphi = reduce(dext(phi));

    std::map<Key, LinRow> rows;
    for (const auto& [k, p] : dphi.m) rows[k].cst = p;
    for (size_t u = 0; u < B.size(); ++u)
        for (const auto& [k, p] : B[u].m) rows[k].mult[u] = p;

    std::vector<std::optional<Poly>> val(dd.dirs.size());
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& [k, row] : rows) {
            size_t candidate = 0;
            int live = 0;
            for (const auto& [u, c] : row.mult)
                if (!val[u]) {
                    ++live;
                    candidate = u;
                }
            if (live != 1) continue;
            const Poly& c = row.mult.at(candidate);
            if (!c.is_constant() || c.is_zero()) continue;
            Poly acc = row.cst;
            for (const auto& [u, m] : row.mult)
                if (val[u]) acc += m * *val[u];
            val[candidate] = acc * (Rat(-1) / c.constant_value());
            progress = true;
        }
    }
    for (auto& v : val)
        if (!v) v = Poly();
    // verify every row
    for (const auto& [k, row] : rows) {
        Poly acc = row.cst;
        for (const auto& [u, m] : row.mult) acc += m * *val[u];
        if (!acc.is_zero()) return std::nullopt;
    }
    Multivector xi(1, chart);
    for (size_t u = 0; u < dd.dirs.size(); ++u)
        if (!val[u]->is_zero()) xi += dd.dirs[u] * *val[u];
    if (xi.m.empty()) xi = Multivector::zero(1, chart);
    return xi;
}

// "Depends on x only": base coordinates plus formal scalar symbols.
static bool base_only(const ChartPtr& chart, const Poly& p) {
    for (const auto& [m, c] : p.t)
        for (const auto& [v, e] : m)
            if (chart->at(v).role != Role::Base && chart->at(v).role != Role::Jet) return false;
    return true;
}

static ObservableForm finish(const ChartPtr& chart, Form f, const std::string& family) {
    ObservableForm o;
    o.form = reduce(f);
    o.family = family;
    o.xi = solve_xi(o.form);
    if (o.xi) {
        // defining equation, re-verified rather than assumed
        Form resid = reduce(contract(*o.xi, omega(chart))) + reduce(dext(o.form));
        o.algebraic = resid.is_zero();
        if (!o.algebraic) o.xi.reset();
    }
    return o;
}

ObservableForm make_P_phi(const ChartPtr& chart, const std::array<Poly, 4>& phi) {
    Form f = Form::zero(chart->n - 1, chart);
    for (int mu = 1; mu <= chart->n; ++mu) {
        if (!base_only(chart, phi[static_cast<size_t>(mu - 1)]))
            throw std::runtime_error("make_P_phi: phi must depend on base coordinates only");
        for (int nu = 1; nu <= chart->n; ++nu)
            f += dy_hook(chart, {nu}) *
                 (phi[static_cast<size_t>(mu - 1)] * Poly::var(chart->momentum(mu, nu)));
    }
    return finish(chart, f, "P_phi");
}

ObservableForm make_Q_psi(const ChartPtr& chart,
                          const std::array<std::array<Poly, 4>, 4>& psi) {
    for (int mu = 0; mu < chart->n; ++mu)
        for (int nu = 0; nu < chart->n; ++nu) {
            size_t m = static_cast<size_t>(mu), n = static_cast<size_t>(nu);
            if (!(psi[m][n] + psi[n][m]).is_zero())
                throw std::runtime_error("make_Q_psi: psi must be antisymmetric");
            if (!base_only(chart, psi[m][n]))
                throw std::runtime_error("make_Q_psi: psi must depend on base coordinates only");
        }
    // 1/2 psi^{mu nu} A ^ dy_{mu nu} = psi^{mu nu} A_mu dy_nu
    Form f = Form::zero(chart->n - 1, chart);
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = 1; nu <= chart->n; ++nu) {
            const Poly& ps = psi[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)];
            if (ps.is_zero()) continue;
            f += dy_hook(chart, {nu}) * (ps * Poly::var(chart->field(mu)));
        }
    return finish(chart, f, "Q_psi");
}

ZetaLift lift_zeta(const ChartPtr& chart, const std::array<Poly, 4>& X,
                   const std::array<Poly, 4>& Theta) {
    for (const auto& x : X)
        if (!base_only(chart, x))
            throw std::runtime_error("lift_zeta: X must depend on x only");
    for (const auto& th : Theta)
        for (const auto& [m, c] : th.t)
            for (const auto& [v, e] : m)
                if (chart->at(v).role != Role::Base && chart->at(v).role != Role::Field &&
                    chart->at(v).role != Role::Jet)
                    throw std::runtime_error("lift_zeta: Theta must depend on (x, A) only");
    std::vector<std::pair<int, Poly>> comps;
    for (int mu = 1; mu <= chart->n; ++mu)
        comps.emplace_back(chart->base(mu), X[static_cast<size_t>(mu - 1)]);
    for (int mu = 1; mu <= chart->n; ++mu)
        comps.emplace_back(chart->field(mu), Theta[static_cast<size_t>(mu - 1)]);
    ZetaLift z;
    z.zeta = Multivector::from_components(chart, comps);
    Form P = reduce(contract(z.zeta, theta(chart)));
    z.P = finish(chart, P, "P_zeta");
    if (!z.P.xi) throw std::runtime_error("lift_zeta: no symplectomorphism found");
    z.zeta_bar = *z.P.xi;
    return z;
}

Form poisson(const ObservableForm& a, const ObservableForm& b) {
    if (!a.xi || !b.xi) throw std::runtime_error("poisson: missing xi");
    const ChartPtr& chart = a.form.chart;
    Form p1 = reduce(contract(wedge(*a.xi, *b.xi), omega(chart)));
    Form p2 = -reduce(contract(*b.xi, reduce(dext(a.form))));
    Form p3 = reduce(contract(*a.xi, reduce(dext(b.form))));
    if (!(p1 == p2 && p2 == p3)) throw std::runtime_error("poisson: computation paths disagree");
    return p1;
}

bool is_algebraic(const Multivector& xi) {
    if (!admissible(xi)) return false;
    return dext(reduce(contract(xi, omega(xi.chart)))).is_zero();
}

Poly dH_along(const Multivector& xi, const HamiltonianFn& H) {
    // ambient pairing first, constraint substitution on the resulting scalar
    Form dH = dext(Form::scalar(H.chart, H.expr));
    return reduce(contract(xi, dH).scalar_part(), *H.chart);
}

bool is_dynamical(const ObservableForm& o, const HamiltonianFn& H) {
    if (!o.xi) throw std::runtime_error("is_dynamical: missing xi");
    return dH_along(*o.xi, H).is_zero();
}

Form external_bracket(const HamiltonianFn& H, const ObservableForm& o) {
    if (!o.xi) throw std::runtime_error("external_bracket: missing xi");
    const ChartPtr& chart = o.form.chart;
    Form dH = reduce(dext(Form::scalar(chart, reduce(H.expr, *chart))));
    return -reduce(contract(*o.xi, wedge(dH, volume(chart))));
}

GraphData make_legendre_graph(const ChartPtr& chart) {
    const int n = chart->n;
    std::vector<Coordinate> extra;
    auto second_name = [&](int a, int b, const std::string& base) {
        int lo = std::min(a, b), hi = std::max(a, b);
        return jet_name(lo, jet_name(hi, base));
    };
    for (int mu = 1; mu <= n; ++mu) {
        std::string Aname = chart->at(chart->field(mu)).name;
        for (int a = 1; a <= n; ++a) extra.push_back(jet_coord(jet_name(a, Aname)));
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) extra.push_back(jet_coord(second_name(a, b, Aname)));
    }
    GraphData g;
    g.ext = chart->extended(extra);
    auto d1 = [&](int a, int mu) {
        return Poly::var(g.ext->require(jet_name(a, chart->at(chart->field(mu)).name)));
    };
    auto d2 = [&](int a, int b, int mu) {
        return Poly::var(g.ext->require(second_name(a, b, chart->at(chart->field(mu)).name)));
    };
    for (int mu = 1; mu <= n; ++mu) {
        std::vector<Poly> v;
        for (int a = 1; a <= n; ++a) v.push_back(d1(a, mu));
        g.jets[chart->field(mu)] = v;
    }
    const Metric& m = chart->metric;
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
            Rat w(m.eta(mu - 1) * m.eta(nu - 1));
            g.coord_subst[chart->momentum(mu, nu)] = (d1(mu, nu) - d1(nu, mu)) * w;
            std::vector<Poly> v;
            for (int a = 1; a <= n; ++a) v.push_back((d2(a, mu, nu) - d2(a, nu, mu)) * w);
            g.jets[chart->momentum(mu, nu)] = v;
        }
    return g;
}

static Poly pulled_scalar(Form f, const GraphData& g) {
    Form lifted(f.deg, g.ext);
    for (const auto& [k, p] : f.m) lifted.add_term(k, p);
    Form onbase = graph_pullback(lifted, g.jets);
    Key vol;
    for (int mu = 1; mu <= g.ext->n; ++mu) vol.push_back(g.ext->base(mu));
    std::sort(vol.begin(), vol.end());
    return onbase.coeff(vol).subst(g.coord_subst);
}

Relation dynamical_check(const ObservableForm& o, const HamiltonianFn& H, const GraphData& g) {
    Relation r;
    r.lhs = pulled_scalar(reduce(dext(o.form)), g);
    r.rhs = pulled_scalar(external_bracket(H, o), g);
    r.provenance = "graph";
    return r;
}

JacobiDefect jacobi_defect(const ObservableForm& a, const ObservableForm& b,
                           const ObservableForm& c) {
    const ChartPtr& chart = a.form.chart;
    auto bracket_obs = [&](const ObservableForm& x, const ObservableForm& y) {
        ObservableForm o;
        o.form = poisson(x, y);
        o.xi = solve_xi(o.form);
        if (!o.xi) throw std::runtime_error("jacobi_defect: bracket form is not algebraic");
        o.algebraic = true;
        return o;
    };
    JacobiDefect j;
    j.lhs = poisson(bracket_obs(a, b), c) + poisson(bracket_obs(b, c), a) +
            poisson(bracket_obs(c, a), b);
    Form trip = reduce(contract(wedge(wedge(*a.xi, *b.xi), *c.xi), omega(chart)));
    j.rhs = dext(trip);
    j.equal = (j.lhs - j.rhs).is_zero();
    return j;
}

CopolarWitness copolar_obstruction() {
    ChartPtr chart = Chart::build_ddw_family(2, Flavor::MaxwellDirac);
    Form Om = omega(chart);
    // Faraday (n-2)-form (a 0-form in 2D) and rho_1 = dA_1 ^ pi
    Form pi = Form::zero(0, chart);
    for (int mu = 1; mu <= 2; ++mu)
        for (int nu = 1; nu <= 2; ++nu)
            pi += dy_hook(chart, {mu, nu}) * (Poly::var(chart->momentum(mu, nu)) * Rat(1, 2));
    Form drho1 = dext(wedge(Form::basis(chart, chart->field(1)), pi));

    struct Coeffs {
        Rat th[2][2];  // Theta_{alpha mu}
        Rat u[2];      // Ups_alpha^{A1 2} (paired); Ups^{A2 1} kept 0
        Rat ue[2];     // Ups_alpha (energy direction)
    };
    auto build = [&](const Coeffs& co) {
        Multivector X = Multivector::scalar(chart, Poly(Rat(1)));
        for (int a = 0; a < 2; ++a) {
            std::vector<std::pair<int, Poly>> comps{{chart->base(a + 1), Poly(Rat(1))}};
            for (int mu = 0; mu < 2; ++mu)
                comps.emplace_back(chart->field(mu + 1), Poly(co.th[a][mu]));
            comps.emplace_back(chart->energy(), Poly(co.ue[a]));
            comps.emplace_back(chart->momentum(1, 2), Poly(co.u[a]));
            comps.emplace_back(chart->momentum(2, 1), Poly(-co.u[a]));
            X = wedge(X, Multivector::from_components(chart, comps));
        }
        return X;
    };
    auto record = [&](const Coeffs& co, std::map<std::string, Rat>& out) {
        for (int a = 0; a < 2; ++a) {
            for (int mu = 0; mu < 2; ++mu)
                out["Theta[" + std::to_string(a + 1) + "," + std::to_string(mu + 1) + "]"] =
                    co.th[a][mu];
            out["Ups[" + std::to_string(a + 1) + ",A1,2]"] = co.u[a];
            out["Ups[" + std::to_string(a + 1) + ",A2,1]"] = 0;
            out["Ups[" + std::to_string(a + 1) + "]"] = co.ue[a];
        }
    };

    // sign with which Ups_a enters the dx^a coefficient of the contraction
    Rat ue_sign[2];
    for (int a = 0; a < 2; ++a) {
        Coeffs probe{};
        probe.ue[a] = 1;
        Form c = reduce(contract(build(probe), Om));
        ue_sign[a] = c.coeff(Key{chart->base(a + 1)}).constant_value();
    }

    for (int half = 1; half <= 2; ++half) {
        std::vector<Rat> grid;
        for (int v = -half; v <= half; ++v) grid.push_back(v);
        for (const Rat& t11 : grid)
            for (const Rat& t12 : grid)
                for (const Rat& t21 : grid)
                    for (const Rat& t22 : grid)
                        for (const Rat& u1 : grid)
                            for (const Rat& u2 : grid)
                                for (const Rat& bt11 : grid)
                                    for (const Rat& bt22 : grid) {
                                        Coeffs cx{{{t11, t12}, {t21, t22}}, {u1, u2}, {0, 0}};
                                        Coeffs cb = cx;
                                        cb.th[0][0] = bt11;
                                        cb.th[1][1] = bt22;
                                        Multivector X = build(cx);
                                        Form cX = reduce(contract(X, Om));
                                        Multivector Xb0 = build(cb);
                                        Form cXb = reduce(contract(Xb0, Om));
                                        // absorb the dx-row mismatch into Ups_bar
                                        for (int a = 0; a < 2; ++a) {
                                            Poly diff = cX.coeff(Key{chart->base(a + 1)}) -
                                                        cXb.coeff(Key{chart->base(a + 1)});
                                            cb.ue[a] = diff.constant_value() / ue_sign[a];
                                        }
                                        Multivector Xb = build(cb);
                                        if (!(reduce(contract(Xb, Om)) == cX)) continue;
                                        Rat vX = reduce(contract(X, drho1))
                                                     .scalar_part()
                                                     .constant_value();
                                        Rat vXb = reduce(contract(Xb, drho1))
                                                      .scalar_part()
                                                      .constant_value();
                                        if (vX == vXb) continue;
                                        CopolarWitness w;
                                        w.found = true;
                                        w.grid_halfwidth = half;
                                        record(cx, w.X);
                                        record(cb, w.Xbar);
                                        w.drho1_X = vX;
                                        w.drho1_Xbar = vXb;
                                        return w;
                                    }
    }
    return CopolarWitness{};
}

}  // namespace maxsym
