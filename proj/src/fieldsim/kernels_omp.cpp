#include "maxsym/fieldsim/kernels.hpp"

namespace maxsym::fieldsim {

void curl_edge_to_face_omp(const Grid& g, const Field3& A, Field3& W) {
    const double inv = 1.0 / g.h;
#pragma omp parallel for collapse(2) schedule(static)
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const size_t at = g.idx(i, j, k);
                const size_t ip = g.widx(i + 1, j, k), jp = g.widx(i, j + 1, k),
                             kp = g.widx(i, j, k + 1);
                W[0][at] = (A[2][jp] - A[2][at]) * inv - (A[1][kp] - A[1][at]) * inv;
                W[1][at] = (A[0][kp] - A[0][at]) * inv - (A[2][ip] - A[2][at]) * inv;
                W[2][at] = (A[1][ip] - A[1][at]) * inv - (A[0][jp] - A[0][at]) * inv;
            }
}

void add_curl_face_to_edge_omp(const Grid& g, const Field3& W, double coef, Field3& E) {
    const double inv = coef / g.h;
#pragma omp parallel for collapse(2) schedule(static)
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const size_t at = g.idx(i, j, k);
                const size_t im = g.widx(i - 1, j, k), jm = g.widx(i, j - 1, k),
                             km = g.widx(i, j, k - 1);
                E[0][at] += (W[2][at] - W[2][jm]) * inv - (W[1][at] - W[1][km]) * inv;
                E[1][at] += (W[0][at] - W[0][km]) * inv - (W[2][at] - W[2][im]) * inv;
                E[2][at] += (W[1][at] - W[1][im]) * inv - (W[0][at] - W[0][jm]) * inv;
            }
}

void axpy_omp(const Grid& g, double a, const Field3& x, Field3& y) {
    const long n = static_cast<long>(g.cells());
    for (int c = 0; c < 3; ++c) {
        double* yy = y[static_cast<size_t>(c)].data();
        const double* xx = x[static_cast<size_t>(c)].data();
#pragma omp parallel for schedule(static)
        for (long t = 0; t < n; ++t) yy[t] += a * xx[t];
    }
}

}  // namespace maxsym::fieldsim
