#include "maxsym/fieldsim/evolve.hpp"

#include <cmath>

namespace maxsym::fieldsim {

void step(FieldState& s, bool use_omp) {
    Field3 W = make_field(s.g);
    curl_edge_to_face(s.g, s.A, W, use_omp);
    add_curl_face_to_edge(s.g, W, -s.g.dt, s.E, use_omp);
    axpy(s.g, s.g.dt, s.E, s.A, use_omp);
    s.t += s.g.dt;
}

void evolve(FieldState& s, const EvolveOptions& opt) {
    double base = max_abs(s.g, s.A) + max_abs(s.g, s.E) + 1e-300;
    for (int n = 0; n < opt.steps; ++n) {
        step(s, opt.use_omp);
        if (opt.check_every > 0 && (n + 1) % opt.check_every == 0) {
            double now = max_abs(s.g, s.A) + max_abs(s.g, s.E);
            if (!std::isfinite(now) || now > opt.blowup_factor * base)
                throw SimInstability("field norm grew beyond the configured factor (step " +
                                     std::to_string(n + 1) + ")");
        }
    }
}

double total_energy(const FieldState& s) {
    Field3 W = make_field(s.g);
    curl_edge_to_face(s.g, s.A, W, false);
    Field3 En = s.E;
    add_curl_face_to_edge(s.g, W, -s.g.dt, En, false);  // E^{n+1}
    double h3 = s.g.h * s.g.h * s.g.h;
    return 0.5 * h3 * (dot(s.g, s.E, En) + dot(s.g, W, W));
}

double gauss_residual_linf(const FieldState& s) {
    Scalar d;
    divergence_edge_to_node(s.g, s.E, d);
    double m = 0;
    for (double v : d) m = std::max(m, std::fabs(v));
    return m;
}

double gauss_residual_l2(const FieldState& s) {
    Scalar d;
    divergence_edge_to_node(s.g, s.E, d);
    double acc = 0;
    for (double v : d) acc += v * v;
    return std::sqrt(acc * s.g.h * s.g.h * s.g.h);
}

}  // namespace maxsym::fieldsim
