#pragma once

#include <map>
#include <optional>
#include <vector>

#include "maxsym/chart.hpp"
#include "maxsym/poly.hpp"

namespace maxsym {

// Wedge-factor list: strictly increasing coordinate indices.
using Key = std::vector<int>;

// Degree-graded sum of wedge monomials with Poly coefficients. COV=true is a
// differential form (cotangent factors), COV=false a multivector (tangent
// factors). Monomial keys are strictly increasing in chart order with the
// permutation sign folded into the coefficient, so equality is map equality.
template <bool COV>
class GradedSum {
  public:
    int deg = 0;
    ChartPtr chart;
    std::map<Key, Poly> m;

    GradedSum() = default;
    GradedSum(int degree, ChartPtr c) : deg(degree), chart(std::move(c)) {}

    static GradedSum zero(int degree, ChartPtr c) { return GradedSum(degree, std::move(c)); }
    static GradedSum scalar(ChartPtr c, Poly p);
    // Single basis factor d(coord) or @(coord).
    static GradedSum basis(ChartPtr c, int coordIdx);
    // Degree-1 object sum_i p_i * basis(idx_i).
    static GradedSum from_components(ChartPtr c, const std::vector<std::pair<int, Poly>>& comps);

    bool is_zero() const { return m.empty(); }
    // Coefficient of the empty monomial (degree-0 objects).
    Poly scalar_part() const;
    Poly coeff(const Key& k) const;

    GradedSum& operator+=(const GradedSum& o);
    GradedSum operator+(const GradedSum& o) const { GradedSum r = *this; r += o; return r; }
    GradedSum operator-(const GradedSum& o) const { return *this + (o * Rat(-1)); }
    GradedSum operator*(const Rat& c) const;
    GradedSum operator*(const Poly& p) const;
    GradedSum operator-() const { return *this * Rat(-1); }
    bool operator==(const GradedSum& o) const;

    void add_term(Key k, Poly p);
};

using Form = GradedSum<true>;
using Multivector = GradedSum<false>;

// --- exterior algebra -------------------------------------------------------

template <bool COV>
GradedSum<COV> wedge(const GradedSum<COV>& a, const GradedSum<COV>& b);

// Exterior derivative; linear, Leibniz with sign, dext(dext(f)) == 0. Jet-role
// coordinates never acquire a differential.
Form dext(const Form& f);

// Iterated interior product: contract(X1^...^Xk, f) fills the first k slots of
// f with X1..Xk in order (equivalently Xk _| ( ... (X1 _| f))).
Form contract(const Multivector& x, const Form& f);

// Hodge star of a degree-2 base form on a 4D chart with diagonal metric:
// (*F)_{rho sigma} = 1/2 eps^{mu nu}_{rho sigma} F_{mu nu}.
Form hodge2(const Form& f);

// Levi-Civita sign of (i1..i4) as a permutation of (1..4); 0 on repeats.
int epsilon4(int a, int b, int c, int d);

// Replacement of every non-base differential dq by sum_nu jets[q][nu] dx^nu.
// jets maps coordinate index -> n Polys (one per base direction).
using JetMap = std::map<int, std::vector<Poly>>;
Form graph_pullback(const Form& f, const JetMap& jets);

// Exact evaluation by determinant expansion; args are tangent vectors given by
// their components along every chart coordinate.
Rat eval_numeric(const Form& f, const std::map<int, Rat>& point,
                 const std::vector<std::vector<Rat>>& args);

// --- constraint reduction ---------------------------------------------------

// Substitution of the chart's constraint relations into coefficients and
// factors (pullback to the independent coordinates): on maxwell-dirac charts
// Pi[Anu,mu] -> -Pi[Amu,nu] for mu<nu and Pi[Amu,mu] -> 0; premulti charts
// additionally eliminate e. Other flavors are returned unchanged.
Poly reduce(const Poly& p, const Chart& chart);
Form reduce(const Form& f);

// --- chart helpers ----------------------------------------------------------

// Volume form dy = dx^1 ^ ... ^ dx^n.
Form volume(const ChartPtr& chart);
// dy_{i1 i2 ... } = @_{i1} _| (@_{i2} _| ( ... _| dy)); indices are 1-based
// base labels, rightmost applied first.
Form dy_hook(const ChartPtr& chart, const std::vector<int>& base_idx);

std::string render(const Form& f);

}  // namespace maxsym
