#include "maxsym/maxwell_space.hpp"

namespace maxsym {

Form theta(const ChartPtr& chart) {
    if (chart->flavor == Flavor::Generic)
        throw std::runtime_error("theta: chart has no canonical form");
    Form th = volume(chart) * Poly::var(chart->energy());
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = 1; nu <= chart->n; ++nu) {
            Form t = wedge(Form::basis(chart, chart->field(mu)), dy_hook(chart, {nu}));
            th += t * Poly::var(chart->momentum(mu, nu));
        }
    if (chart->flavor == Flavor::Ld2) {
        Form t = wedge(Form::basis(chart, chart->field(1)), Form::basis(chart, chart->field(2)));
        th += t * Poly::var(chart->ld_extra());
    }
    if (chart->flavor == Flavor::Premulti) th = reduce(th);
    return th;
}

Form omega(const ChartPtr& chart) { return dext(theta(chart)); }

std::vector<Multivector> admissible_vectorfield_basis(const ChartPtr& chart) {
    if (!chart->constrained())
        throw std::runtime_error("admissible_vectorfield_basis: chart carries no constraints");
    std::vector<Multivector> dirs;
    for (int mu = 1; mu <= chart->n; ++mu) dirs.push_back(Multivector::basis(chart, chart->base(mu)));
    for (int mu = 1; mu <= chart->n; ++mu) dirs.push_back(Multivector::basis(chart, chart->field(mu)));
    if (chart->flavor == Flavor::MaxwellDirac)
        dirs.push_back(Multivector::basis(chart, chart->energy()));
    for (int mu = 1; mu <= chart->n; ++mu)
        for (int nu = mu + 1; nu <= chart->n; ++nu) {
            Multivector d = Multivector::basis(chart, chart->momentum(mu, nu)) -
                            Multivector::basis(chart, chart->momentum(nu, mu));
            dirs.push_back(d);
        }
    return dirs;
}

bool admissible(const Multivector& xi) {
    const ChartPtr& chart = xi.chart;
    if (!chart->constrained()) return true;
    if (xi.deg != 1) throw std::runtime_error("admissible: degree-1 fields only");
    for (int mu = 1; mu <= chart->n; ++mu) {
        if (!xi.coeff(Key{chart->momentum(mu, mu)}).is_zero()) return false;
        for (int nu = mu + 1; nu <= chart->n; ++nu) {
            Poly s = xi.coeff(Key{chart->momentum(mu, nu)}) + xi.coeff(Key{chart->momentum(nu, mu)});
            if (!reduce(s, *chart).is_zero()) return false;
        }
    }
    if (chart->flavor == Flavor::Premulti && !xi.coeff(Key{chart->energy()}).is_zero()) return false;
    return true;
}

}  // namespace maxsym
