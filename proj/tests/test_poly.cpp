#include <doctest.h>

#include "maxsym/poly.hpp"

using namespace maxsym;

namespace {

ChartPtr small_chart() {
    std::vector<Coordinate> cs;
    for (int i = 1; i <= 3; ++i) cs.push_back({"x" + std::to_string(i), Role::Base, {i}});
    cs.push_back(jet_coord("u"));
    cs.push_back(jet_coord("v"));
    return Chart::generic(3, cs);
}

struct Rng {
    uint64_t s = 12345;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rat rat() { return Rat(int(next() % 7) - 3, 1 + int(next() % 3)); }
    Poly poly(int nvars) {
        Poly p(rat());
        for (int t = 0; t < 3; ++t) {
            Mono m;
            int v = int(next() % uint64_t(nvars));
            m.emplace_back(v, 1 + int(next() % 2));
            p += Poly::term(rat(), m);
        }
        return p;
    }
};

}  // namespace

TEST_CASE("arithmetic is exact and canonical") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK((p - p).is_zero());
    CHECK(Poly(Rat(1, 3)) + Poly(Rat(1, 6)) == Poly(Rat(1, 2)));
    CHECK((x - x).t.empty());  // no stored zero coefficients
}

TEST_CASE("ring axioms on random instances") {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        Poly a = rng.poly(5), b = rng.poly(5), c = rng.poly(5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("derivative and substitution") {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly p = x * x * y + y * Rat(3);
    CHECK(p.derivative(0) == x * y * Rat(2));
    CHECK(p.derivative(1) == x * x + Poly(Rat(3)));
    CHECK(p.subst(0, y) == y * y * y + y * Rat(3));
    Rng rng;
    for (int i = 0; i < 20; ++i) {
        Poly a = rng.poly(4), b = rng.poly(4);
        CHECK((a * b).derivative(2) == a.derivative(2) * b + a * b.derivative(2));
    }
}

TEST_CASE("evaluation agrees with substitution") {
    Rng rng;
    for (int i = 0; i < 20; ++i) {
        Poly p = rng.poly(3);
        std::map<int, Rat> pt{{0, rng.rat()}, {1, rng.rat()}, {2, rng.rat()}};
        Poly sub = p;
        for (auto& [v, r] : pt) sub = sub.subst(v, Poly(r));
        CHECK(sub.is_constant());
        CHECK(sub.constant_value() == p.eval(pt));
    }
    CHECK_THROWS(Poly::var(0).eval({}));
}

TEST_CASE("rendering is deterministic") {
    ChartPtr c = small_chart();
    Poly p = Poly::var(0, 2) * Rat(-3, 4) + Poly::var(3) * Poly::var(1) + Poly(Rat(1, 2));
    CHECK(p.render(*c) == "1/2 - 3/4*x1^2 + x2*u");
}
