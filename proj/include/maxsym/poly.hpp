#pragma once

#include <map>
#include <vector>

#include "maxsym/chart.hpp"
#include "maxsym/rational.hpp"

namespace maxsym {

// Exponent vector: (coordinate index, power) pairs, sorted by index, powers > 0.
using Mono = std::vector<std::pair<int, int>>;

// Sparse multivariate polynomial with exact rational coefficients.
// No stored zero coefficients; exponent vectors are canonical, so equality is
// a map comparison.
class Poly {
  public:
    std::map<Mono, Rat> t;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) t[{}] = c;
    }
    static Poly var(int idx, int pow = 1) {
        Poly p;
        p.t[{{idx, pow}}] = 1;
        return p;
    }
    static Poly term(const Rat& c, Mono m) {
        Poly p;
        if (c != 0) p.t[std::move(m)] = c;
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
    Rat constant_value() const { return t.empty() ? Rat(0) : t.begin()->second; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return t == o.t; }
    bool operator!=(const Poly& o) const { return t != o.t; }

    Poly pow(int k) const;
    Poly derivative(int idx) const;
    // Substitute coordinate idx by value (value may be any Poly).
    Poly subst(int idx, const Poly& value) const;
    Poly subst(const std::map<int, Poly>& values) const;
    Rat eval(const std::map<int, Rat>& point) const;
    bool depends_on(int idx) const;
    int degree_in(int idx) const;

    std::string render(const Chart& chart) const;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace maxsym
