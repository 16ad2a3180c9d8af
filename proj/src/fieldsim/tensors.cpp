#include "maxsym/fieldsim/tensors.hpp"

#include <cmath>
#include <mutex>

#include "maxsym/fieldsim/kernels.hpp"
#include "maxsym/legendre.hpp"

namespace maxsym::fieldsim {

using maxsym::Chart;
using maxsym::ChartPtr;
using maxsym::Flavor;
using maxsym::Form;
using maxsym::Multivector;
using maxsym::Poly;
using maxsym::Rat;

// Dense-slot compiled polynomial (doubles; the symbolic side stays exact).
struct CompiledPoly {
    struct Term {
        double c;
        std::vector<std::pair<int, int>> pe;
    };
    std::vector<Term> terms;
    double eval(const std::vector<double>& v) const {
        double acc = 0;
        for (const Term& t : terms) {
            double m = t.c;
            for (auto [idx, e] : t.pe)
                for (int q = 0; q < e; ++q) m *= v[static_cast<size_t>(idx)];
            acc += m;
        }
        return acc;
    }
};

static CompiledPoly compile(const Poly& p) {
    CompiledPoly cp;
    for (const auto& [m, c] : p.t) {
        CompiledPoly::Term t;
        t.c = maxsym::to_double(c);
        for (auto [v, e] : m) t.pe.emplace_back(v, e);
        cp.terms.push_back(std::move(t));
    }
    return cp;
}

// Symbolic tensors over the ddw chart with first-order jets, built once.
struct TensorKit {
    ChartPtr ext;
    std::vector<CompiledPoly> h;  // h^a_b, 16 entries
    std::vector<CompiledPoly> S;  // S^a_b
    std::vector<CompiledPoly> Sb; // Sbar^{ab}
    CompiledPoly e_graph;         // e on the H=0 level set
    int slot_e = 0;
    int slot_pi[4][4] = {};
    int slot_jet[4][4] = {};      // d_a A_mu
};

static const TensorKit& kit() {
    static TensorKit K;
    static std::once_flag once;
    std::call_once(once, [] {
        ChartPtr chart = Chart::build(Flavor::Ddw);
        maxsym::VelocityAssignment v = maxsym::standard_jets(chart);
        ChartPtr ext = v.chart;
        K.ext = ext;
        Poly L = maxsym::maxwell_lagrangian(chart, v);
        Poly H = maxsym::hamiltonian_ddw(chart).expr;
        const maxsym::Metric& g = chart->metric;

        // pairing with one frame slot replaced: <p, Z_1 .. @_b at slot a .. Z_4>
        auto frame_vec = [&](int gamma) {
            std::vector<std::pair<int, Poly>> comps{{ext->base(gamma), Poly(Rat(1))}};
            for (int mu = 1; mu <= 4; ++mu) comps.emplace_back(ext->field(mu), v.at(mu, gamma));
            return Multivector::from_components(ext, comps);
        };
        Form th = maxsym::theta(chart);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                Multivector X = Multivector::scalar(ext, Poly(Rat(1)));
                for (int gamma = 1; gamma <= 4; ++gamma)
                    X = wedge(X, gamma == a ? Multivector::basis(ext, ext->base(b))
                                            : frame_vec(gamma));
                Poly pab = contract(X, th).scalar_part();
                Poly hab = (a == b ? H : Poly()) - pab;
                K.h.push_back(compile(hab));
                Poly sab = (a == b ? L : Poly());
                for (int lam = 1; lam <= 4; ++lam)
                    sab -= maxsym::faraday_upper(chart, v, lam, a) * v.at(lam, b);
                K.S.push_back(compile(sab));
                // Sbar^{ab} = F^{a l} F^b_l - 1/4 eta^{ab} F^2
                Poly sbar;
                for (int lam = 1; lam <= 4; ++lam)
                    sbar += maxsym::faraday_upper(chart, v, a, lam) *
                            maxsym::faraday_lower(v, b, lam) * Rat(g.eta(b - 1));
                if (a == b) {
                    Poly f2;
                    for (int mu = 1; mu <= 4; ++mu)
                        for (int nu = 1; nu <= 4; ++nu)
                            f2 += maxsym::faraday_lower(v, mu, nu) *
                                  maxsym::faraday_upper(chart, v, mu, nu);
                    sbar -= f2 * Rat(g.eta(a - 1), 4);
                }
                K.Sb.push_back(compile(sbar));
            }
        // e on the level set: e = L - Pi^{mu nu} d_nu A_mu (h = 0)
        Poly e = L;
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = 1; nu <= 4; ++nu) e -= Poly::var(chart->momentum(mu, nu)) * v.at(mu, nu);
        K.e_graph = compile(e);
        K.slot_e = chart->energy();
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = 1; nu <= 4; ++nu) K.slot_pi[mu - 1][nu - 1] = chart->momentum(mu, nu);
        for (int mu = 1; mu <= 4; ++mu)
            for (int a = 1; a <= 4; ++a) K.slot_jet[a - 1][mu - 1] = v.idx(mu, a);
    });
    return K;
}

// Node-centered samples: co-locate the staggered fields by averaging, then
// centered differences for the spatial jets.
struct NodeFields {
    Grid g;
    Field3 A, E;  // node values
};

static NodeFields node_fields(const FieldState& s) {
    NodeFields nf{s.g, make_field(s.g), make_field(s.g)};
    const Grid& g = s.g;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                size_t at = g.idx(i, j, k);
                size_t m[3] = {g.widx(i - 1, j, k), g.widx(i, j - 1, k), g.widx(i, j, k - 1)};
                for (int c = 0; c < 3; ++c) {
                    nf.A[static_cast<size_t>(c)][at] =
                        0.5 * (s.A[static_cast<size_t>(c)][at] + s.A[static_cast<size_t>(c)][m[c]]);
                    nf.E[static_cast<size_t>(c)][at] =
                        0.5 * (s.E[static_cast<size_t>(c)][at] + s.E[static_cast<size_t>(c)][m[c]]);
                }
            }
    return nf;
}

// Fill the chart-value vector at one node: temporal gauge, x^1 = time.
static void fill_values(const TensorKit& K, const NodeFields& nf, int i, int j, int k,
                        std::vector<double>& vals) {
    const Grid& g = nf.g;
    size_t at = g.idx(i, j, k);
    auto node = [&](const Scalar& f, int di, int dj, int dk) {
        return f[g.widx(i + di, j + dj, k + dk)];
    };
    double jet[4][4] = {};  // jet[a-1][mu-1] = d_a A_mu
    for (int c = 0; c < 3; ++c) {
        const Scalar& Ac = nf.A[static_cast<size_t>(c)];
        jet[0][c + 1] = nf.E[static_cast<size_t>(c)][at];  // d_t A_i = E_i
        jet[1][c + 1] = (node(Ac, 1, 0, 0) - node(Ac, -1, 0, 0)) / (2 * g.h);
        jet[2][c + 1] = (node(Ac, 0, 1, 0) - node(Ac, 0, -1, 0)) / (2 * g.h);
        jet[3][c + 1] = (node(Ac, 0, 0, 1) - node(Ac, 0, 0, -1)) / (2 * g.h);
    }
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) vals[static_cast<size_t>(K.slot_jet[a][mu])] = jet[a][mu];
    // momenta on the Legendre graph: Pi^{mu nu} = F^{mu nu} from the jets
    double eta[4] = {1, -1, -1, -1};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double F_lo = jet[mu][nu] - jet[nu][mu];
            vals[static_cast<size_t>(K.slot_pi[mu][nu])] = eta[mu] * eta[nu] * F_lo;
        }
    vals[static_cast<size_t>(K.slot_e)] = K.e_graph.eval(vals);
    // field values (enter only through J-free expressions; zero them anyway)
}

static TensorField eval_tensor(const FieldState& s, const std::vector<CompiledPoly>& comp) {
    const TensorKit& K = kit();
    NodeFields nf = node_fields(s);
    TensorField T;
    T.g = s.g;
    for (auto& sc : T.c) sc.assign(s.g.cells(), 0.0);
    std::vector<double> vals(static_cast<size_t>(K.ext->size()), 0.0);
    for (int k = 0; k < s.g.nz; ++k)
        for (int j = 0; j < s.g.ny; ++j)
            for (int i = 0; i < s.g.nx; ++i) {
                fill_values(K, nf, i, j, k, vals);
                size_t at = s.g.idx(i, j, k);
                for (int a = 1; a <= 4; ++a)
                    for (int b = 1; b <= 4; ++b)
                        T.at(a, b)[at] = comp[static_cast<size_t>((a - 1) * 4 + (b - 1))].eval(vals);
            }
    return T;
}

TensorField stress_energy(const FieldState& s) { return eval_tensor(s, kit().S); }
TensorField stress_energy_sym(const FieldState& s) { return eval_tensor(s, kit().Sb); }
TensorField hamiltonian_tensor(const FieldState& s) { return eval_tensor(s, kit().h); }

double hamiltonian_vs_stress_linf(const FieldState& s) {
    TensorField h = hamiltonian_tensor(s), S = stress_energy(s);
    double m = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (size_t t = 0; t < s.g.cells(); ++t)
                m = std::max(m, std::fabs(h.at(a, b)[t] + S.at(a, b)[t]));
    return m;
}

double energy_density_check_linf(const FieldState& s) {
    TensorField h = hamiltonian_tensor(s);
    NodeFields nf = node_fields(s);
    const Grid& g = s.g;
    Field3 W = make_field(g);
    curl_edge_to_face(g, s.A, W, false);
    double m = 0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                size_t at = g.idx(i, j, k);
                double E2 = 0;
                for (int c = 0; c < 3; ++c) {
                    double v = nf.E[static_cast<size_t>(c)][at];
                    E2 += v * v;
                }
                // B at the node: average the four surrounding faces per component
                double B2 = 0;
                for (int c = 0; c < 3; ++c) {
                    int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                    int d1[3] = {0, 0, 0}, d2[3] = {0, 0, 0}, d12[3] = {0, 0, 0};
                    d1[a1] = -1;
                    d2[a2] = -1;
                    d12[a1] = -1;
                    d12[a2] = -1;
                    const Scalar& Wc = W[static_cast<size_t>(c)];
                    double b = 0.25 * (Wc[at] + Wc[g.widx(i + d1[0], j + d1[1], k + d1[2])] +
                                       Wc[g.widx(i + d2[0], j + d2[1], k + d2[2])] +
                                       Wc[g.widx(i + d12[0], j + d12[1], k + d12[2])]);
                    B2 += b * b;
                }
                m = std::max(m, std::fabs(h.at(1, 1)[at] - 0.5 * (E2 + B2)));
            }
    return m;
}

}  // namespace maxsym::fieldsim
