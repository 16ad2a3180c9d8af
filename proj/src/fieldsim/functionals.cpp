#include "maxsym/fieldsim/functionals.hpp"

#include <cmath>

namespace maxsym::fieldsim {

int eps3(int a, int b, int c) {
    int v[3] = {a, b, c};
    int sign = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

static double frac(double u) { return u - std::floor(u); }

TestFunction poly_bump(int p, std::array<double, 3> shift) {
    auto b = [p](double u) { return std::pow(4.0 * u * (1.0 - u), p); };
    auto db = [p](double u) {
        if (p == 0) return 0.0;
        return p * std::pow(4.0 * u * (1.0 - u), p - 1) * 4.0 * (1.0 - 2.0 * u);
    };
    TestFunction tf;
    tf.f = [=](double x, double y, double z) {
        return b(frac(x - shift[0])) * b(frac(y - shift[1])) * b(frac(z - shift[2]));
    };
    for (int c = 0; c < 3; ++c)
        tf.grad[static_cast<size_t>(c)] = [=](double x, double y, double z) {
            double u[3] = {frac(x - shift[0]), frac(y - shift[1]), frac(z - shift[2])};
            double v = 1.0;
            for (int d = 0; d < 3; ++d) v *= (d == c) ? db(u[d]) : b(u[d]);
            return v;
        };
    return tf;
}

TestFunction constant_test_function(double value) {
    TestFunction tf;
    tf.f = [value](double, double, double) { return value; };
    for (int c = 0; c < 3; ++c) tf.grad[static_cast<size_t>(c)] = [](double, double, double) { return 0.0; };
    tf.compact_support = false;
    return tf;
}

double functional_E(const FieldState& s, int k, const TestFunction& tf) {
    if (k < 1 || k > 3) throw std::out_of_range("functional_E: axis");
    const Grid& g = s.g;
    const int c = k - 1;
    double h3 = g.h * g.h * g.h, acc = 0;
    for (int kk = 0; kk < g.nz; ++kk)
        for (int jj = 0; jj < g.ny; ++jj)
            for (int ii = 0; ii < g.nx; ++ii) {
                double q[3] = {ii * g.h, jj * g.h, kk * g.h};
                q[c] += 0.5 * g.h;
                acc += s.E[static_cast<size_t>(c)][g.idx(ii, jj, kk)] * tf.f(q[0], q[1], q[2]);
            }
    return acc * h3;
}

double functional_B(const FieldState& s, int k, const TestFunction& tf) {
    if (k < 1 || k > 3) throw std::out_of_range("functional_B: axis");
    const Grid& g = s.g;
    const int c = k - 1;
    Field3 W = make_field(g);
    curl_edge_to_face(g, s.A, W, false);
    // B^k = -(curl A)_k; W_k lives at the k-face (shifted along both other axes)
    double h3 = g.h * g.h * g.h, acc = 0;
    for (int kk = 0; kk < g.nz; ++kk)
        for (int jj = 0; jj < g.ny; ++jj)
            for (int ii = 0; ii < g.nx; ++ii) {
                double q[3] = {ii * g.h, jj * g.h, kk * g.h};
                q[(c + 1) % 3] += 0.5 * g.h;
                q[(c + 2) % 3] += 0.5 * g.h;
                acc += -W[static_cast<size_t>(c)][g.idx(ii, jj, kk)] * tf.f(q[0], q[1], q[2]);
            }
    return acc * h3;
}

double smeared_bracket_BE(const Grid& g, const TestFunction& s1, const TestFunction& s2, int k,
                          int i) {
    double h3 = g.h * g.h * g.h, acc = 0;
    for (int j = 1; j <= 3; ++j) {
        int e = eps3(k, i, j);
        if (!e) continue;
        double part = 0;
        for (int kk = 0; kk < g.nz; ++kk)
            for (int jj = 0; jj < g.ny; ++jj)
                for (int ii = 0; ii < g.nx; ++ii) {
                    double x = ii * g.h, y = jj * g.h, z = kk * g.h;
                    part += s1.grad[static_cast<size_t>(j - 1)](x, y, z) * s2.f(x, y, z);
                }
        acc += -double(e) * part;
    }
    return acc * h3;
}

double smeared_bracket_EE(const Grid&, const TestFunction&, const TestFunction&, int, int) {
    return 0.0;  // identically zero by construction
}

double smeared_bracket_BB(const Grid&, const TestFunction&, const TestFunction&, int, int) {
    return 0.0;  // identically zero by construction
}

double functional_P_const(const FieldState& s, const std::array<double, 3>& phi) {
    const Grid& g = s.g;
    double h3 = g.h * g.h * g.h, acc = 0;
    for (int c = 0; c < 3; ++c) {
        if (phi[static_cast<size_t>(c)] == 0.0) continue;
        double part = 0;
        for (double v : s.E[static_cast<size_t>(c)]) part += v;
        acc += phi[static_cast<size_t>(c)] * part;
    }
    return acc * h3;
}

}  // namespace maxsym::fieldsim
