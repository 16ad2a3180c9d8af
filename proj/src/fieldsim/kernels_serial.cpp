#include <cmath>

#include "maxsym/fieldsim/kernels.hpp"

namespace maxsym::fieldsim {

// W_c = D+_a A_b - D+_b A_a for (c,a,b) cyclic.
static inline void curl_ef_cell(const Grid& g, const Field3& A, Field3& W, int i, int j, int k) {
    const double inv = 1.0 / g.h;
    const size_t at = g.idx(i, j, k);
    const size_t ip = g.widx(i + 1, j, k), jp = g.widx(i, j + 1, k), kp = g.widx(i, j, k + 1);
    W[0][at] = (A[2][jp] - A[2][at]) * inv - (A[1][kp] - A[1][at]) * inv;
    W[1][at] = (A[0][kp] - A[0][at]) * inv - (A[2][ip] - A[2][at]) * inv;
    W[2][at] = (A[1][ip] - A[1][at]) * inv - (A[0][jp] - A[0][at]) * inv;
}

static inline void curl_fe_cell(const Grid& g, const Field3& W, double coef, Field3& E, int i,
                                int j, int k) {
    const double inv = coef / g.h;
    const size_t at = g.idx(i, j, k);
    const size_t im = g.widx(i - 1, j, k), jm = g.widx(i, j - 1, k), km = g.widx(i, j, k - 1);
    E[0][at] += (W[2][at] - W[2][jm]) * inv - (W[1][at] - W[1][km]) * inv;
    E[1][at] += (W[0][at] - W[0][km]) * inv - (W[2][at] - W[2][im]) * inv;
    E[2][at] += (W[1][at] - W[1][im]) * inv - (W[0][at] - W[0][jm]) * inv;
}

void curl_edge_to_face_serial(const Grid& g, const Field3& A, Field3& W) {
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) curl_ef_cell(g, A, W, i, j, k);
}

void add_curl_face_to_edge_serial(const Grid& g, const Field3& W, double coef, Field3& E) {
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) curl_fe_cell(g, W, coef, E, i, j, k);
}

void axpy_serial(const Grid& g, double a, const Field3& x, Field3& y) {
    const size_t n = g.cells();
    for (int c = 0; c < 3; ++c)
        for (size_t t = 0; t < n; ++t) y[static_cast<size_t>(c)][t] += a * x[static_cast<size_t>(c)][t];
}

double dot(const Grid& g, const Field3& a, const Field3& b) {
    const size_t n = g.cells();
    double acc = 0;
    for (int c = 0; c < 3; ++c)
        for (size_t t = 0; t < n; ++t) acc += a[static_cast<size_t>(c)][t] * b[static_cast<size_t>(c)][t];
    return acc;
}

double max_abs(const Grid& g, const Field3& a) {
    const size_t n = g.cells();
    double m = 0;
    for (int c = 0; c < 3; ++c)
        for (size_t t = 0; t < n; ++t) m = std::max(m, std::fabs(a[static_cast<size_t>(c)][t]));
    return m;
}

void divergence_edge_to_node(const Grid& g, const Field3& E, Scalar& out) {
    out.assign(g.cells(), 0.0);
    const double inv = 1.0 / g.h;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const size_t at = g.idx(i, j, k);
                out[at] = (E[0][at] - E[0][g.widx(i - 1, j, k)]) * inv +
                          (E[1][at] - E[1][g.widx(i, j - 1, k)]) * inv +
                          (E[2][at] - E[2][g.widx(i, j, k - 1)]) * inv;
            }
}

}  // namespace maxsym::fieldsim
