#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxsym {

// Coordinate roles on a graded chart. Jet-role coordinates are formal scalar
// symbols: they appear in coefficients but never carry a differential or a
// tangent basis element.
enum class Role { Base, Field, Energy, Momentum, LdExtra, Jet };

struct Coordinate {
    std::string name;
    Role role = Role::Jet;
    std::vector<int> indices;  // e.g. (mu) for x^mu, (mu,nu) for Pi[Amu,nu]
};

// Diagonal constant metric on the base coordinates.
struct Metric {
    int dim = 0;
    std::vector<int> sig;  // entries +1 or -1
    int eta(int i) const { return sig.at(static_cast<size_t>(i)); }
};

enum class Flavor { Generic, Ddw, MaxwellDirac, Premulti, Ld2 };

std::string flavor_name(Flavor f);

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

// A named, ordered graded coordinate system. Chart order is the position in
// `coords`. Constraints are stored as relations and applied by substitution
// (see reduce() in form.hpp), never by quotienting the chart.
class Chart {
  public:
    Flavor flavor = Flavor::Generic;
    int n = 0;  // base dimension
    std::vector<Coordinate> coords;
    Metric metric;
    std::vector<std::string> constraints;

    static ChartPtr build(Flavor f);
    // ddw/maxwell-dirac/premulti chart over an n-dimensional base (n = 2 or 4).
    static ChartPtr build_ddw_family(int n_base, Flavor f);
    static ChartPtr generic(int n_base, std::vector<Coordinate> cs, Metric m = {});

    // New chart with extra coordinates appended; existing indices stay valid.
    ChartPtr extended(std::vector<Coordinate> extra) const;

    int size() const { return static_cast<int>(coords.size()); }
    const Coordinate& at(int i) const { return coords.at(static_cast<size_t>(i)); }

    // -1 when absent.
    int find(const std::string& name) const;
    int require(const std::string& name) const;

    int base(int mu) const { return base_.at(static_cast<size_t>(mu - 1)); }        // x^mu, 1-based
    int field(int mu) const { return field_.at(static_cast<size_t>(mu - 1)); }      // A_mu, 1-based
    int energy() const { return energy_; }
    int momentum(int mu, int nu) const {                                            // Pi[Amu,nu]
        return mom_.at(static_cast<size_t>((mu - 1) * n + (nu - 1)));
    }
    int ld_extra() const { return sigma_; }
    int n_fields() const { return static_cast<int>(field_.size()); }

    bool constrained() const { return flavor == Flavor::MaxwellDirac || flavor == Flavor::Premulti; }

    // True when `other` indexes a prefix of this chart (extension relation).
    bool extends(const Chart& other) const;

  private:
    friend ChartPtr finalize_chart(std::shared_ptr<Chart> c);
    std::vector<int> base_, field_, mom_;
    int energy_ = -1, sigma_ = -1;
    std::map<std::string, int> by_name_;
};

// Common jet-symbol names: jet_name(1,"A2") == "d1A2" (for d_1 A_2).
std::string jet_name(int dir, const std::string& base);
Coordinate jet_coord(const std::string& name);

}  // namespace maxsym
