#include "maxsym/hamilton.hpp"

#include <set>

namespace maxsym {

static std::string th_name(int a, int mu) {
    return "Th[" + std::to_string(a) + "," + std::to_string(mu) + "]";
}
static std::string ue_name(int a) { return "Ue[" + std::to_string(a) + "]"; }
static std::string um_name(int a, int mu, int nu) {
    return "Um[" + std::to_string(a) + "," + std::to_string(mu) + "," + std::to_string(nu) + "]";
}
static std::string us_name(int a) { return "Us[" + std::to_string(a) + "]"; }

int GeneralVectorField::theta_sym(int a, int mu) const { return ext->require(th_name(a, mu)); }
int GeneralVectorField::ups_sym(int a) const { return ext->require(ue_name(a)); }
int GeneralVectorField::upsm_sym(int a, int mu, int nu) const { return ext->require(um_name(a, mu, nu)); }
int GeneralVectorField::w_sym(int a) const { return ext->require(us_name(a)); }

GeneralVectorField build_general_vectorfield(const ChartPtr& chart) {
    GeneralVectorField g;
    g.chart = chart;
    g.has_energy_dir = chart->flavor != Flavor::Premulti;
    std::vector<Coordinate> extra;
    const int n = chart->n, nf = chart->n_fields();
    for (int a = 1; a <= n; ++a) {
        for (int mu = 1; mu <= nf; ++mu) extra.push_back(jet_coord(th_name(a, mu)));
        if (g.has_energy_dir) extra.push_back(jet_coord(ue_name(a)));
        for (int mu = 1; mu <= nf; ++mu)
            for (int nu = 1; nu <= n; ++nu) {
                if (chart->constrained() && mu == nu) continue;
                extra.push_back(jet_coord(um_name(a, mu, nu)));
            }
        if (chart->flavor == Flavor::Ld2) extra.push_back(jet_coord(us_name(a)));
    }
    g.ext = chart->extended(extra);
    g.X = Multivector::scalar(g.ext, Poly(Rat(1)));
    for (int a = 1; a <= n; ++a) {
        std::vector<std::pair<int, Poly>> comps{{g.ext->base(a), Poly(Rat(1))}};
        for (int mu = 1; mu <= nf; ++mu)
            comps.emplace_back(g.ext->field(mu), Poly::var(g.theta_sym(a, mu)));
        if (g.has_energy_dir) comps.emplace_back(g.ext->energy(), Poly::var(g.ups_sym(a)));
        if (chart->constrained()) {
            // paired directions: component of @Pi[Amu,nu] is Um[a,mu,nu] - Um[a,nu,mu]
            for (int mu = 1; mu <= nf; ++mu)
                for (int nu = 1; nu <= n; ++nu) {
                    if (mu == nu) continue;
                    Poly c = Poly::var(g.upsm_sym(a, mu, nu)) - Poly::var(g.upsm_sym(a, nu, mu));
                    comps.emplace_back(g.ext->momentum(mu, nu), c);
                }
        } else {
            for (int mu = 1; mu <= nf; ++mu)
                for (int nu = 1; nu <= n; ++nu)
                    comps.emplace_back(g.ext->momentum(mu, nu), Poly::var(g.upsm_sym(a, mu, nu)));
        }
        if (chart->flavor == Flavor::Ld2)
            comps.emplace_back(g.ext->ld_extra(), Poly::var(g.w_sym(a)));
        g.X = wedge(g.X, Multivector::from_components(g.ext, comps));
    }
    return g;
}

Form contract_general(const GeneralVectorField& X, const Form& Om) {
    return reduce(contract(X.X, Om));
}

// Chart extension holding the jets the substitution step introduces, plus the
// F symbols used for the on-shell presentation.
struct JetSymbols {
    ChartPtr ext2;
    std::map<int, Poly> sub;      // coefficient symbols -> jets
    std::map<int, Poly> onshell;  // momenta and momentum jets -> F symbols
};

static JetSymbols jet_substitution(const GeneralVectorField& g) {
    const ChartPtr& chart = g.chart;
    const int n = chart->n, nf = chart->n_fields();
    std::vector<Coordinate> extra;
    auto add = [&](const std::string& s) { extra.push_back(jet_coord(s)); };
    for (int a = 1; a <= n; ++a) {
        for (int mu = 1; mu <= nf; ++mu) add(jet_name(a, chart->at(chart->field(mu)).name));
        if (g.has_energy_dir) add(jet_name(a, "e"));
        for (int mu = 1; mu <= nf; ++mu)
            for (int nu = 1; nu <= n; ++nu) {
                if (chart->constrained() && mu == nu) continue;
                add(jet_name(a, chart->at(chart->momentum(mu, nu)).name));
            }
        if (chart->flavor == Flavor::Ld2) add(jet_name(a, "sigma"));
    }
    if (chart->flavor != Flavor::Ld2) {
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = mu + 1; nu <= n; ++nu) {
                std::string f = "F[" + std::to_string(mu) + "," + std::to_string(nu) + "]";
                add(f);
                for (int a = 1; a <= n; ++a) add(jet_name(a, f));
            }
    }
    JetSymbols js;
    js.ext2 = g.ext->extended(extra);
    for (int a = 1; a <= n; ++a) {
        for (int mu = 1; mu <= nf; ++mu)
            js.sub[g.theta_sym(a, mu)] =
                Poly::var(js.ext2->require(jet_name(a, chart->at(chart->field(mu)).name)));
        if (g.has_energy_dir)
            js.sub[g.ups_sym(a)] = Poly::var(js.ext2->require(jet_name(a, "e")));
        for (int mu = 1; mu <= nf; ++mu)
            for (int nu = 1; nu <= n; ++nu) {
                if (chart->constrained() && mu == nu) continue;
                js.sub[g.upsm_sym(a, mu, nu)] = Poly::var(
                    js.ext2->require(jet_name(a, chart->at(chart->momentum(mu, nu)).name)));
            }
        if (chart->flavor == Flavor::Ld2)
            js.sub[g.w_sym(a)] = Poly::var(js.ext2->require(jet_name(a, "sigma")));
    }
    if (chart->flavor != Flavor::Ld2) {
        auto fsym = [&](int mu, int nu) -> Poly {
            if (mu == nu) return Poly();
            int lo = std::min(mu, nu), hi = std::max(mu, nu);
            Poly f = Poly::var(
                js.ext2->require("F[" + std::to_string(lo) + "," + std::to_string(hi) + "]"));
            return mu < nu ? f : -f;
        };
        auto fjet = [&](int a, int mu, int nu) -> Poly {
            if (mu == nu) return Poly();
            int lo = std::min(mu, nu), hi = std::max(mu, nu);
            Poly f = Poly::var(js.ext2->require(
                jet_name(a, "F[" + std::to_string(lo) + "," + std::to_string(hi) + "]")));
            return mu < nu ? f : -f;
        };
        const Metric& m = chart->metric;
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = 1; nu <= n; ++nu) {
                Rat w(m.eta(mu - 1) * m.eta(nu - 1));
                js.onshell[chart->momentum(mu, nu)] = fsym(mu, nu) * w;  // Pi = F^{mu nu}
                for (int a = 1; a <= n; ++a) {
                    int j = js.ext2->find(jet_name(a, chart->at(chart->momentum(mu, nu)).name));
                    if (j >= 0) js.onshell[j] = fjet(a, mu, nu) * w;
                }
            }
    }
    return js;
}

static PDESystem decompose(const GeneralVectorField& g, const Form& lhs, const Form& rhs,
                           const std::string& href) {
    PDESystem sys;
    sys.chart = g.chart;
    sys.hamiltonian_ref = href;
    JetSymbols js = jet_substitution(g);
    sys.render_chart = js.ext2;
    std::set<Key> keys;
    for (const auto& [k, p] : lhs.m) keys.insert(k);
    for (const auto& [k, p] : rhs.m) keys.insert(k);
    for (const Key& k : keys) {
        Relation r;
        r.lhs = lhs.coeff(k);
        r.rhs = rhs.coeff(k);
        if ((r.lhs - r.rhs).is_zero()) continue;
        r.provenance = "d" + g.ext->at(k.at(0)).name;
        bool has_symbol = false;
        for (const auto& [idx, p] : js.sub)
            if (r.lhs.depends_on(idx) || r.rhs.depends_on(idx)) has_symbol = true;
        if (!has_symbol)
            throw std::runtime_error("derive: unmatched basis monomial " + r.provenance);
        sys.raw.push_back(r);
        Relation s{r.lhs.subst(js.sub), r.rhs.subst(js.sub), r.provenance};
        if (!js.onshell.empty())
            sys.on_shell.push_back(
                Relation{s.lhs.subst(js.onshell), s.rhs.subst(js.onshell), r.provenance});
        sys.relations.push_back(std::move(s));
    }
    return sys;
}

PDESystem derive(const ChartPtr& chart, const HamiltonianFn& H) {
    GeneralVectorField g = build_general_vectorfield(chart);
    Form lhs = contract_general(g, omega(chart));
    // (-1)^n = +1 for n in {2,4}
    Form rhs = reduce(dext(Form::scalar(g.ext, reduce(H.expr, *chart))));
    return decompose(g, lhs, rhs, "ddw");
}

static Form subst_coeffs(const Form& f, const std::map<int, Poly>& sub) {
    Form r(f.deg, f.chart);
    for (const auto& [k, p] : f.m) r.add_term(k, p.subst(sub));
    return r;
}

PDESystem derive_ld2(const ChartPtr& chart, const Rat& sigma) {
    Poly sig((Rat(sigma)));
    Ld2Hamiltonian H = hamiltonian_ld2(chart, sig);
    if (!H.den.is_constant()) throw std::runtime_error("derive_ld2: non-constant denominator");
    Poly h = H.num * (Rat(1) / H.den.constant_value());
    GeneralVectorField g = build_general_vectorfield(chart);
    // fix the sigma slice: substitute the constant into theta, then differentiate
    Form th = subst_coeffs(theta(chart), {{chart->ld_extra(), sig}});
    Form lhs = contract_general(g, dext(th));
    Form rhs = dext(Form::scalar(g.ext, h));
    PDESystem sys = decompose(g, lhs, rhs, "ld2 sigma=" + to_string(sigma));
    return sys;
}

PDESystem derive_premulti(const ChartPtr& chart) {
    if (chart->flavor != Flavor::Premulti)
        throw std::runtime_error("derive_premulti: premulti chart required");
    const int n = chart->n;
    Form Om = omega(chart);
    // jets for the graph restriction
    std::vector<Coordinate> extra;
    for (int mu = 1; mu <= n; ++mu)
        for (int a = 1; a <= n; ++a)
            extra.push_back(jet_coord(jet_name(a, chart->at(chart->field(mu)).name)));
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            for (int a = 1; a <= n; ++a)
                extra.push_back(jet_coord(jet_name(a, chart->at(chart->momentum(mu, nu)).name)));
    ChartPtr ext = chart->extended(extra);
    JetMap jets;
    auto jet_vec = [&](const std::string& base) {
        std::vector<Poly> v;
        for (int a = 1; a <= n; ++a) v.push_back(Poly::var(ext->require(jet_name(a, base))));
        return v;
    };
    for (int mu = 1; mu <= n; ++mu)
        jets[chart->field(mu)] = jet_vec(chart->at(chart->field(mu)).name);
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            jets[chart->momentum(mu, nu)] = jet_vec(chart->at(chart->momentum(mu, nu)).name);

    PDESystem sys;
    sys.chart = chart;
    sys.render_chart = ext;
    sys.hamiltonian_ref = "premulti level set";
    auto push = [&](const Multivector& dir, const std::string& prov) {
        Form f = reduce(contract(dir, Om));
        Form lifted(f.deg, ext);
        for (const auto& [k, p] : f.m) lifted.add_term(k, p);
        Form onbase = graph_pullback(lifted, jets);
        Poly rel = onbase.scalar_part();
        for (const auto& [k, p] : onbase.m)
            if (!k.empty()) rel = p;  // single dy monomial
        Relation r{rel, Poly(), prov};
        if (!r.diff().is_zero()) {
            sys.raw.push_back(r);
            sys.relations.push_back(r);
        }
    };
    for (int mu = 1; mu <= n; ++mu)
        push(Multivector::basis(chart, chart->field(mu)), "A" + std::to_string(mu));
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            Multivector d = Multivector::basis(chart, chart->momentum(mu, nu)) -
                            Multivector::basis(chart, chart->momentum(nu, mu));
            push(d, "Pi[A" + std::to_string(mu) + "," + std::to_string(nu) + "]");
        }
    return sys;
}

}  // namespace maxsym
