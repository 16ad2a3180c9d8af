#include "maxsym/form.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace maxsym {

static ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return a;
    if (a->extends(*b)) return a;
    if (b->extends(*a)) return b;
    throw std::runtime_error("mismatched charts");
}

template <bool COV>
GradedSum<COV> GradedSum<COV>::scalar(ChartPtr c, Poly p) {
    GradedSum r(0, std::move(c));
    if (!p.is_zero()) r.m.emplace(Key{}, std::move(p));
    return r;
}

template <bool COV>
GradedSum<COV> GradedSum<COV>::basis(ChartPtr c, int coordIdx) {
    if (c->at(coordIdx).role == Role::Jet)
        throw std::runtime_error("jet coordinates carry no differential or tangent direction");
    GradedSum r(1, std::move(c));
    r.m.emplace(Key{coordIdx}, Poly(Rat(1)));
    return r;
}

template <bool COV>
GradedSum<COV> GradedSum<COV>::from_components(ChartPtr c,
                                               const std::vector<std::pair<int, Poly>>& comps) {
    GradedSum r(1, c);
    for (const auto& [idx, p] : comps) {
        if (c->at(idx).role == Role::Jet)
            throw std::runtime_error("jet coordinates carry no differential or tangent direction");
        r.add_term(Key{idx}, p);
    }
    return r;
}

template <bool COV>
Poly GradedSum<COV>::scalar_part() const {
    auto it = m.find(Key{});
    return it == m.end() ? Poly() : it->second;
}

template <bool COV>
Poly GradedSum<COV>::coeff(const Key& k) const {
    auto it = m.find(k);
    return it == m.end() ? Poly() : it->second;
}

template <bool COV>
void GradedSum<COV>::add_term(Key k, Poly p) {
    if (p.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(std::move(k), std::move(p));
    } else {
        it->second += p;
        if (it->second.is_zero()) m.erase(it);
    }
}

template <bool COV>
GradedSum<COV>& GradedSum<COV>::operator+=(const GradedSum& o) {
    if (deg != o.deg) throw std::runtime_error("degree mismatch in sum");
    chart = common_chart(chart, o.chart);
    for (const auto& [k, p] : o.m) add_term(k, p);
    return *this;
}

template <bool COV>
GradedSum<COV> GradedSum<COV>::operator*(const Rat& c) const {
    GradedSum r(deg, chart);
    if (c == 0) return r;
    for (const auto& [k, p] : m) r.m.emplace(k, p * c);
    return r;
}

template <bool COV>
GradedSum<COV> GradedSum<COV>::operator*(const Poly& q) const {
    GradedSum r(deg, chart);
    for (const auto& [k, p] : m) r.add_term(k, p * q);
    return r;
}

template <bool COV>
bool GradedSum<COV>::operator==(const GradedSum& o) const {
    return deg == o.deg && m == o.m;
}

template class GradedSum<true>;
template class GradedSum<false>;

// Merge two ascending factor lists; zero on a repeated factor. The sign counts
// the transpositions needed to interleave b into a.
static bool merge_keys(const Key& a, const Key& b, Key& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    sign = 1;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return true;
}

template <bool COV>
GradedSum<COV> wedge(const GradedSum<COV>& a, const GradedSum<COV>& b) {
    GradedSum<COV> r(a.deg + b.deg, common_chart(a.chart, b.chart));
    Key k;
    int sign;
    for (const auto& [ka, pa] : a.m)
        for (const auto& [kb, pb] : b.m) {
            if (!merge_keys(ka, kb, k, sign)) continue;
            r.add_term(k, pa * pb * Rat(sign));
        }
    return r;
}

template Form wedge<true>(const Form&, const Form&);
template Multivector wedge<false>(const Multivector&, const Multivector&);

Form dext(const Form& f) {
    Form r(f.deg + 1, f.chart);
    for (const auto& [k, p] : f.m) {
        std::set<int> vars;
        for (const auto& [mono, c] : p.t)
            for (const auto& [v, e] : mono) vars.insert(v);
        for (int v : vars) {
            if (f.chart->at(v).role == Role::Jet) continue;
            Poly dp = p.derivative(v);
            if (dp.is_zero()) continue;
            // insert dv in front: dv ^ (dk1 ^ ...): merge {v} into k
            Key nk;
            int sign;
            if (!merge_keys(Key{v}, k, nk, sign)) continue;
            r.add_term(nk, dp * Rat(sign));
        }
    }
    return r;
}

// Interior product of the basis k-vector S (ascending, slots filled in order)
// into the basis form T. Returns false unless S is contained in T.
static bool hook_keys(const Key& S, const Key& T, Key& out, int& sign) {
    out.assign(T.begin(), T.end());
    sign = 1;
    for (int s : S) {
        auto it = std::lower_bound(out.begin(), out.end(), s);
        if (it == out.end() || *it != s) return false;
        auto pos = static_cast<int>(it - out.begin());
        if (pos % 2 == 1) sign = -sign;
        out.erase(it);
    }
    return true;
}

Form contract(const Multivector& x, const Form& f) {
    if (x.deg > f.deg) throw std::runtime_error("contract: multivector degree exceeds form degree");
    Form r(f.deg - x.deg, common_chart(x.chart, f.chart));
    Key k;
    int sign;
    for (const auto& [S, px] : x.m)
        for (const auto& [T, pf] : f.m) {
            if (!hook_keys(S, T, k, sign)) continue;
            r.add_term(k, px * pf * Rat(sign));
        }
    return r;
}

int epsilon4(int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

Form hodge2(const Form& f) {
    const ChartPtr& chart = f.chart;
    if (chart->n != 4) throw std::runtime_error("hodge2: base dimension must be 4");
    if (f.deg != 2) throw std::runtime_error("hodge2: degree-2 forms only");
    // components F_{mu nu} for mu<nu; reject non-base differentials
    std::map<std::pair<int, int>, Poly> comp;
    for (const auto& [k, p] : f.m) {
        int mu = -1, nu = -1;
        for (int i = 1; i <= 4; ++i) {
            if (k[0] == chart->base(i)) mu = i;
            if (k[1] == chart->base(i)) nu = i;
        }
        if (mu < 0 || nu < 0) throw std::runtime_error("hodge2: non-base differentials present");
        comp[{mu, nu}] = p;
    }
    auto F = [&](int mu, int nu) -> Poly {
        if (mu == nu) return Poly();
        auto it = comp.find({std::min(mu, nu), std::max(mu, nu)});
        if (it == comp.end()) return Poly();
        return mu < nu ? it->second : -it->second;
    };
    // eps^{mu nu}_{rho sigma} lowers the contravariant symbol (eps^{1..n}=+1)
    // with the metric; this is the orientation for which F ^ *F =
    // -1/2 F_{ab} F^{ab} dy holds on Minkowski charts.
    const Metric& g = chart->metric;
    Form r(2, chart);
    for (int rho = 1; rho <= 4; ++rho)
        for (int sig = rho + 1; sig <= 4; ++sig) {
            Poly c;
            for (int mu = 1; mu <= 4; ++mu)
                for (int nu = 1; nu <= 4; ++nu) {
                    int e = epsilon4(mu, nu, rho, sig);
                    if (!e) continue;
                    c += F(mu, nu) * Rat(e * g.eta(rho - 1) * g.eta(sig - 1), 2);
                }
            r.add_term(Key{chart->base(rho), chart->base(sig)}, c);
        }
    return r;
}

Form graph_pullback(const Form& f, const JetMap& jets) {
    const ChartPtr& chart = f.chart;
    Form r(f.deg, chart);
    for (const auto& [k, p] : f.m) {
        Form acc = Form::scalar(chart, p);
        for (int c : k) {
            Form factor(1, chart);
            if (chart->at(c).role == Role::Base) {
                factor = Form::basis(chart, c);
            } else {
                auto it = jets.find(c);
                if (it == jets.end())
                    throw std::runtime_error("graph_pullback: missing jet entry for " + chart->at(c).name);
                for (int nu = 1; nu <= chart->n; ++nu)
                    factor.add_term(Key{chart->base(nu)}, it->second.at(static_cast<size_t>(nu - 1)));
            }
            acc = wedge(acc, factor);
        }
        r += acc;
    }
    return r;
}

static Rat det(std::vector<std::vector<Rat>> a) {
    const size_t n = a.size();
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t rr = col + 1; rr < n; ++rr) {
            if (a[rr][col] == 0) continue;
            Rat fct = a[rr][col] / a[col][col];
            for (size_t cc = col; cc < n; ++cc) a[rr][cc] -= fct * a[col][cc];
        }
    }
    return d;
}

Rat eval_numeric(const Form& f, const std::map<int, Rat>& point,
                 const std::vector<std::vector<Rat>>& args) {
    if (static_cast<int>(args.size()) != f.deg)
        throw std::runtime_error("eval_numeric: argument count must equal the degree");
    Rat total = 0;
    const size_t k = args.size();
    for (const auto& [T, p] : f.m) {
        std::vector<std::vector<Rat>> mat(T.size(), std::vector<Rat>(k));
        for (size_t i = 0; i < T.size(); ++i)
            for (size_t j = 0; j < k; ++j) mat[i][j] = args[j].at(static_cast<size_t>(T[i]));
        total += p.eval(point) * (T.empty() ? Rat(1) : det(mat));
    }
    return total;
}

Poly reduce(const Poly& p, const Chart& chart) {
    if (!chart.constrained()) return p;
    std::map<int, Poly> sub;
    for (int mu = 1; mu <= chart.n; ++mu) {
        sub[chart.momentum(mu, mu)] = Poly();
        for (int nu = 1; nu < mu; ++nu)
            sub[chart.momentum(mu, nu)] = -Poly::var(chart.momentum(nu, mu));
    }
    if (chart.flavor == Flavor::Premulti) {
        // e = 1/4 eta eta Pi Pi, on the independent momenta
        Poly e;
        for (int mu = 1; mu <= chart.n; ++mu)
            for (int nu = mu + 1; nu <= chart.n; ++nu) {
                Rat w = Rat(chart.metric.eta(mu - 1) * chart.metric.eta(nu - 1), 2);
                e += Poly::var(chart.momentum(mu, nu), 2) * w;
            }
        sub[chart.energy()] = e;
    }
    return p.subst(sub);
}

Form reduce(const Form& f) {
    const ChartPtr& chart = f.chart;
    if (!chart->constrained()) return f;
    // factor substitutions for dependent coordinates
    std::map<int, Form> fsub;
    for (int mu = 1; mu <= chart->n; ++mu) {
        fsub[chart->momentum(mu, mu)] = Form::zero(1, chart);
        for (int nu = 1; nu < mu; ++nu)
            fsub[chart->momentum(mu, nu)] = -Form::basis(chart, chart->momentum(nu, mu));
    }
    if (chart->flavor == Flavor::Premulti) {
        Poly e = reduce(Poly::var(chart->energy()), *chart);
        Form de(1, chart);
        for (int mu = 1; mu <= chart->n; ++mu)
            for (int nu = mu + 1; nu <= chart->n; ++nu) {
                int c = chart->momentum(mu, nu);
                de.add_term(Key{c}, e.derivative(c));
            }
        fsub[chart->energy()] = de;
    }
    Form r(f.deg, chart);
    for (const auto& [k, p] : f.m) {
        Form acc = Form::scalar(chart, reduce(p, *chart));
        for (int c : k) {
            auto it = fsub.find(c);
            acc = wedge(acc, it == fsub.end() ? Form::basis(chart, c) : it->second);
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero()) r += acc;
    }
    return r;
}

Form volume(const ChartPtr& chart) {
    Key k;
    for (int mu = 1; mu <= chart->n; ++mu) k.push_back(chart->base(mu));
    std::sort(k.begin(), k.end());
    Form r(chart->n, chart);
    r.m.emplace(std::move(k), Poly(Rat(1)));
    return r;
}

Form dy_hook(const ChartPtr& chart, const std::vector<int>& base_idx) {
    Form f = volume(chart);
    for (auto it = base_idx.rbegin(); it != base_idx.rend(); ++it)
        f = contract(Multivector::basis(chart, chart->base(*it)), f);
    return f;
}

std::string render(const Form& f) {
    if (f.m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : f.m) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.render(*f.chart) << ")";
        for (int c : k) os << " d" << f.chart->at(c).name;
    }
    return os.str();
}

}  // namespace maxsym
