#include "maxsym/serialize.hpp"

namespace maxsym {

std::string role_name(Role r) {
    switch (r) {
        case Role::Base: return "base";
        case Role::Field: return "field";
        case Role::Energy: return "energy";
        case Role::Momentum: return "momentum";
        case Role::LdExtra: return "ld-extra";
        case Role::Jet: return "jet";
    }
    return "?";
}

Json to_json(const Poly& p, const Chart& chart) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.t) {
        Json exps = Json::array();
        for (const auto& [v, e] : m) exps.push_back(Json::array({chart.at(v).name, e}));
        Json t;
        t["exps"] = exps;
        t["num"] = to_string(Rat(numerator(c)));
        t["den"] = to_string(Rat(denominator(c)));
        terms.push_back(t);
    }
    Json j;
    j["terms"] = terms;
    return j;
}

Poly poly_from_json(const Json& j, const Chart& chart) {
    Poly p;
    for (const auto& t : j.at("terms")) {
        Mono m;
        for (const auto& ev : t.at("exps"))
            m.emplace_back(chart.require(ev.at(0).get<std::string>()), ev.at(1).get<int>());
        std::sort(m.begin(), m.end());
        Rat num(t.at("num").get<std::string>());
        Rat den(t.at("den").get<std::string>());
        p += Poly::term(num / den, m);
    }
    return p;
}

template <bool COV>
static Json graded_to_json(const GradedSum<COV>& f) {
    Json mons = Json::array();
    for (const auto& [k, p] : f.m) {
        Json factors = Json::array();
        for (int c : k) factors.push_back(f.chart->at(c).name);
        Json mj;
        mj["factors"] = factors;
        mj["coeff"] = to_json(p, *f.chart);
        mons.push_back(mj);
    }
    Json j;
    j["degree"] = f.deg;
    j["monomials"] = mons;
    return j;
}

Json to_json(const Form& f) { return graded_to_json(f); }
Json to_json(const Multivector& f) { return graded_to_json(f); }

template <bool COV>
static GradedSum<COV> graded_from_json(const Json& j, const ChartPtr& chart) {
    GradedSum<COV> f(j.at("degree").get<int>(), chart);
    for (const auto& mj : j.at("monomials")) {
        Key k;
        for (const auto& name : mj.at("factors")) k.push_back(chart->require(name.get<std::string>()));
        Poly p = poly_from_json(mj.at("coeff"), *chart);
        int sign = 1;  // canonicalize the factor order
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t l = i + 1; l < k.size(); ++l) {
                if (k[i] == k[l]) throw std::runtime_error("repeated wedge factor");
                if (k[i] > k[l]) {
                    std::swap(k[i], k[l]);
                    sign = -sign;
                }
            }
        f.add_term(k, p * Rat(sign));
    }
    return f;
}

Form form_from_json(const Json& j, const ChartPtr& chart) { return graded_from_json<true>(j, chart); }
Multivector multivector_from_json(const Json& j, const ChartPtr& chart) {
    return graded_from_json<false>(j, chart);
}

Json to_json(const Chart& chart) {
    Json coords = Json::array();
    for (const auto& c : chart.coords) {
        Json cj;
        cj["name"] = c.name;
        cj["role"] = role_name(c.role);
        cj["indices"] = c.indices;
        coords.push_back(cj);
    }
    Json j;
    j["flavor"] = flavor_name(chart.flavor);
    j["n"] = chart.n;
    j["coords"] = coords;
    j["constraints"] = chart.constraints;
    return j;
}

Json to_json(const PDESystem& sys) {
    const Chart& rc = *sys.render_chart;
    Json rels = Json::array();
    for (const auto& r : sys.relations) {
        Json rj;
        rj["lhs"] = r.lhs.render(rc);
        rj["rhs"] = r.rhs.render(rc);
        rj["provenance"] = r.provenance;
        rels.push_back(rj);
    }
    Json on = Json::array();
    for (const auto& r : sys.on_shell) {
        Json rj;
        rj["lhs"] = r.lhs.render(rc);
        rj["rhs"] = r.rhs.render(rc);
        rj["provenance"] = r.provenance;
        on.push_back(rj);
    }
    Json j;
    j["chart"] = flavor_name(sys.chart->flavor);
    j["hamiltonian-ref"] = sys.hamiltonian_ref;
    j["relations"] = rels;
    if (!on.empty()) j["relations-on-shell"] = on;
    return j;
}

}  // namespace maxsym
