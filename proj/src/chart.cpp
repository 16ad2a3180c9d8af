#include "maxsym/chart.hpp"

namespace maxsym {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Generic: return "generic";
        case Flavor::Ddw: return "ddw";
        case Flavor::MaxwellDirac: return "maxwell-dirac";
        case Flavor::Premulti: return "premulti";
        case Flavor::Ld2: return "ld2";
    }
    return "?";
}

ChartPtr finalize_chart(std::shared_ptr<Chart> c) {
    c->base_.clear();
    c->field_.clear();
    c->mom_.assign(static_cast<size_t>(c->n) * static_cast<size_t>(c->n), -1);
    c->energy_ = c->sigma_ = -1;
    c->by_name_.clear();
    for (int i = 0; i < c->size(); ++i) {
        const Coordinate& co = c->coords[static_cast<size_t>(i)];
        if (c->by_name_.count(co.name))
            throw std::runtime_error("duplicate coordinate name: " + co.name);
        c->by_name_[co.name] = i;
        switch (co.role) {
            case Role::Base: c->base_.push_back(i); break;
            case Role::Field: c->field_.push_back(i); break;
            case Role::Energy: c->energy_ = i; break;
            case Role::Momentum: {
                int mu = co.indices.at(0), nu = co.indices.at(1);
                c->mom_[static_cast<size_t>((mu - 1) * c->n + (nu - 1))] = i;
                break;
            }
            case Role::LdExtra: c->sigma_ = i; break;
            case Role::Jet: break;
        }
    }
    return c;
}

static Coordinate coord(std::string name, Role role, std::vector<int> idx = {}) {
    return Coordinate{std::move(name), role, std::move(idx)};
}

ChartPtr Chart::build(Flavor f) {
    if (f == Flavor::Generic)
        throw std::runtime_error("build: generic charts are assembled via Chart::generic");
    auto c = std::make_shared<Chart>();
    c->flavor = f;
    if (f == Flavor::Ld2) {
        c->n = 2;
        c->metric = Metric{2, {+1, -1}};
        for (int mu = 1; mu <= 2; ++mu) c->coords.push_back(coord("x" + std::to_string(mu), Role::Base, {mu}));
        for (int mu = 1; mu <= 2; ++mu) c->coords.push_back(coord("A" + std::to_string(mu), Role::Field, {mu}));
        c->coords.push_back(coord("e", Role::Energy));
        for (int mu = 1; mu <= 2; ++mu)
            for (int nu = 1; nu <= 2; ++nu)
                c->coords.push_back(coord("pi[A" + std::to_string(mu) + "," + std::to_string(nu) + "]",
                                          Role::Momentum, {mu, nu}));
        c->coords.push_back(coord("sigma", Role::LdExtra));
        return finalize_chart(c);
    }
    return build_ddw_family(4, f);
}

ChartPtr Chart::build_ddw_family(int n_base, Flavor f) {
    auto c = std::make_shared<Chart>();
    c->flavor = f;
    c->n = n_base;
    std::vector<int> sig(static_cast<size_t>(n_base), -1);
    sig[0] = +1;
    c->metric = Metric{n_base, sig};
    for (int mu = 1; mu <= n_base; ++mu)
        c->coords.push_back(coord("x" + std::to_string(mu), Role::Base, {mu}));
    for (int mu = 1; mu <= n_base; ++mu)
        c->coords.push_back(coord("A" + std::to_string(mu), Role::Field, {mu}));
    c->coords.push_back(coord("e", Role::Energy));
    for (int mu = 1; mu <= n_base; ++mu)
        for (int nu = 1; nu <= n_base; ++nu)
            c->coords.push_back(coord("Pi[A" + std::to_string(mu) + "," + std::to_string(nu) + "]",
                                      Role::Momentum, {mu, nu}));
    if (f == Flavor::MaxwellDirac || f == Flavor::Premulti) {
        for (int mu = 1; mu <= n_base; ++mu)
            for (int nu = mu; nu <= n_base; ++nu) {
                std::string a = "Pi[A" + std::to_string(mu) + "," + std::to_string(nu) + "]";
                std::string b = "Pi[A" + std::to_string(nu) + "," + std::to_string(mu) + "]";
                if (mu == nu)
                    c->constraints.push_back(a + " = 0");
                else
                    c->constraints.push_back(a + " + " + b + " = 0");
            }
    }
    if (f == Flavor::Premulti)
        c->constraints.push_back("e = 1/4 eta_{mu rho} eta_{nu sigma} Pi[Amu,nu] Pi[Arho,sigma]");
    return finalize_chart(c);
}

ChartPtr Chart::generic(int n_base, std::vector<Coordinate> cs, Metric m) {
    auto c = std::make_shared<Chart>();
    c->flavor = Flavor::Generic;
    c->n = n_base;
    c->coords = std::move(cs);
    c->metric = m.dim ? m : Metric{n_base, std::vector<int>(static_cast<size_t>(n_base), +1)};
    return finalize_chart(c);
}

ChartPtr Chart::extended(std::vector<Coordinate> extra) const {
    auto c = std::make_shared<Chart>(*this);
    for (auto& e : extra) c->coords.push_back(std::move(e));
    return finalize_chart(c);
}

int Chart::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

int Chart::require(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::runtime_error("no such coordinate: " + name);
    return i;
}

bool Chart::extends(const Chart& other) const {
    if (size() < other.size()) return false;
    for (int i = 0; i < other.size(); ++i)
        if (coords[static_cast<size_t>(i)].name != other.coords[static_cast<size_t>(i)].name) return false;
    return true;
}

std::string jet_name(int dir, const std::string& base) {
    return "d" + std::to_string(dir) + base;
}

Coordinate jet_coord(const std::string& name) { return Coordinate{name, Role::Jet, {}}; }

}  // namespace maxsym
