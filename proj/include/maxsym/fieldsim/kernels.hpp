#pragma once

#include "maxsym/fieldsim/grid.hpp"

namespace maxsym::fieldsim {

// Grid sweeps exist in a serial reference version and an OpenMP version; the
// two compute identical per-cell expressions and must agree bitwise.

// W = curl A, edge -> face (forward differences).
void curl_edge_to_face_serial(const Grid& g, const Field3& A, Field3& W);
void curl_edge_to_face_omp(const Grid& g, const Field3& A, Field3& W);

// E += coef * curl W, face -> edge (backward differences).
void add_curl_face_to_edge_serial(const Grid& g, const Field3& W, double coef, Field3& E);
void add_curl_face_to_edge_omp(const Grid& g, const Field3& W, double coef, Field3& E);

// y += a * x componentwise.
void axpy_serial(const Grid& g, double a, const Field3& x, Field3& y);
void axpy_omp(const Grid& g, double a, const Field3& x, Field3& y);

inline void curl_edge_to_face(const Grid& g, const Field3& A, Field3& W, bool omp) {
    omp ? curl_edge_to_face_omp(g, A, W) : curl_edge_to_face_serial(g, A, W);
}
inline void add_curl_face_to_edge(const Grid& g, const Field3& W, double c, Field3& E, bool omp) {
    omp ? add_curl_face_to_edge_omp(g, W, c, E) : add_curl_face_to_edge_serial(g, W, c, E);
}
inline void axpy(const Grid& g, double a, const Field3& x, Field3& y, bool omp) {
    omp ? axpy_omp(g, a, x, y) : axpy_serial(g, a, x, y);
}

// Fixed-order reductions (serial on purpose: deterministic diagnostics).
double dot(const Grid& g, const Field3& a, const Field3& b);
double max_abs(const Grid& g, const Field3& a);
// div E at nodes (backward differences); returns max |.| and l2 norm.
void divergence_edge_to_node(const Grid& g, const Field3& E, Scalar& out);

}  // namespace maxsym::fieldsim
