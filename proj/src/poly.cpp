#include "maxsym/poly.hpp"

#include <sstream>

namespace maxsym {

static void add_term(std::map<Mono, Rat>& t, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (a[i].first > b[j].first) r.push_back(b[j++]);
        else { r.emplace_back(a[i].first, a[i].second + b[j].second); ++i; ++j; }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t) add_term(t, m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t) add_term(t, m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t) r.t.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : t)
        for (const auto& [mb, cb] : o.t) add_term(r.t, mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : t) r.t.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int k) const {
    Poly r(Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(int idx) const {
    Poly r;
    for (const auto& [m, c] : t) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != idx) continue;
            Mono d = m;
            Rat coeff = c * m[i].second;
            if (d[i].second == 1) d.erase(d.begin() + static_cast<long>(i));
            else d[i].second -= 1;
            add_term(r.t, d, coeff);
        }
    }
    return r;
}

Poly Poly::subst(int idx, const Poly& value) const {
    Poly r;
    for (const auto& [m, c] : t) {
        Mono rest;
        int p = 0;
        for (const auto& [v, e] : m) {
            if (v == idx) p = e;
            else rest.emplace_back(v, e);
        }
        Poly piece = Poly::term(c, rest);
        if (p) piece = piece * value.pow(p);
        r += piece;
    }
    return r;
}

Poly Poly::subst(const std::map<int, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : t) {
        Mono rest;
        Poly piece = Poly::term(c, {});
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) rest.emplace_back(v, e);
            else piece = piece * it->second.pow(e);
        }
        r += piece * Poly::term(Rat(1), rest);
    }
    return r;
}

Rat Poly::eval(const std::map<int, Rat>& point) const {
    Rat r = 0;
    for (const auto& [m, c] : t) {
        Rat v = c;
        for (const auto& [idx, e] : m) {
            auto it = point.find(idx);
            if (it == point.end()) throw std::runtime_error("unassigned coordinate in eval");
            for (int k = 0; k < e; ++k) v *= it->second;
        }
        r += v;
    }
    return r;
}

bool Poly::depends_on(int idx) const {
    for (const auto& [m, c] : t)
        for (const auto& [v, e] : m)
            if (v == idx) return true;
    return false;
}

int Poly::degree_in(int idx) const {
    int d = 0;
    for (const auto& [m, c] : t)
        for (const auto& [v, e] : m)
            if (v == idx && e > d) d = e;
    return d;
}

std::string Poly::render(const Chart& chart) const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && !m.empty();
        if (!unit) os << to_string(a);
        bool lead = unit;
        for (const auto& [v, e] : m) {
            if (!lead) os << "*";
            lead = false;
            os << chart.at(v).name;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace maxsym
