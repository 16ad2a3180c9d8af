#include <doctest.h>

#include <cmath>

#include "maxsym/fieldsim/flatness.hpp"
#include "maxsym/fieldsim/functionals.hpp"
#include "maxsym/fieldsim/tensors.hpp"

using namespace maxsym::fieldsim;

namespace {

Grid grid(int n) { return Grid{n, n, n, 1.0 / n, 0.5 / n}; }

PlaneWave axis_wave() {
    PlaneWave w;
    w.mode = {1, 0, 0};
    w.eps = {0, 1, 0};
    w.amp = 0.1;
    return w;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree bitwise") {
    Grid g = grid(24);
    FieldState a = wave_state(g, axis_wave());
    FieldState b = a;
    for (int n = 0; n < 20; ++n) {
        step(a, false);
        step(b, true);
    }
    for (int c = 0; c < 3; ++c) {
        CHECK(a.A[static_cast<size_t>(c)] == b.A[static_cast<size_t>(c)]);
        CHECK(a.E[static_cast<size_t>(c)] == b.E[static_cast<size_t>(c)]);
    }
}

TEST_CASE("zero fields stay zero; uniform electric momentum is static") {
    Grid g = grid(8);
    FieldState s = zero_state(g);
    EvolveOptions opt;
    opt.steps = 25;
    evolve(s, opt);
    for (int c = 0; c < 3; ++c)
        for (double v : s.E[static_cast<size_t>(c)]) CHECK(v == 0.0);
    for (int c = 0; c < 3; ++c)
        for (double v : s.A[static_cast<size_t>(c)]) CHECK(v == 0.0);

    // uniform Pi^{10}: no curl, no gradients -> momentum unchanged
    FieldState u = zero_state(g);
    for (double& v : u.E[0]) v = 0.7;
    evolve(u, opt);
    for (double v : u.E[0]) CHECK(v == 0.7);
}

TEST_CASE("plane wave converges to the analytic translate at second order") {
    PlaneWave w = axis_wave();
    std::vector<double> errs;
    for (int n : {8, 16, 32}) {
        FieldState s = wave_state(grid(n), w);
        EvolveOptions opt;
        opt.steps = n / 2;  // fixed T = 1/4
        evolve(s, opt);
        errs.push_back(l2_error_A(s, w));
    }
    CHECK(errs[0] / errs[1] > 3.0);
    CHECK(errs[0] / errs[1] < 5.0);
    CHECK(errs[1] / errs[2] > 3.0);
    CHECK(errs[1] / errs[2] < 5.0);
}

TEST_CASE("instability detection trips on a CFL violation") {
    Grid g = grid(8);
    g.dt = 10 * g.h;
    FieldState s = wave_state(g, axis_wave());
    EvolveOptions opt;
    opt.steps = 200;
    opt.check_every = 4;
    CHECK_THROWS_AS(evolve(s, opt), SimInstability);
}

TEST_CASE("field functionals: constants, zero test function, plane wave") {
    Grid g = grid(16);
    FieldState s = zero_state(g);
    for (double& v : s.E[0]) v = 3.25;  // uniform E^1
    TestFunction bump = poly_bump(4);
    // normalize: sum s h^3
    double mass = 0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) mass += bump.f(i * g.h + g.h / 2, j * g.h, k * g.h);
    mass *= g.h * g.h * g.h;
    CHECK(functional_E(s, 1, bump) == doctest::Approx(3.25 * mass).epsilon(1e-12));
    CHECK(functional_E(s, 2, bump) == 0.0);
    CHECK_THROWS(functional_E(s, 4, bump));

    TestFunction zero = constant_test_function(0.0);
    CHECK(functional_E(s, 1, zero) == 0.0);
    CHECK(functional_B(s, 1, zero) == 0.0);

    // plane wave: B^3 = -d_x A_y and the functional matches the closed form
    // with a constant test function (integral of cos over the torus is 0)
    FieldState pw = wave_state(grid(32), axis_wave());
    TestFunction one = constant_test_function(1.0);
    CHECK(std::fabs(functional_B(pw, 3, one)) < 1e-12);
    // against the analytic value for a bump: quadrature error O(h^2)
    double got = functional_B(pw, 3, bump);
    double expect = 0;
    Grid g32 = grid(32);
    for (int k = 0; k < g32.nz; ++k)
        for (int j = 0; j < g32.ny; ++j)
            for (int i = 0; i < g32.nx; ++i) {
                double x = i * g32.h + g32.h / 2, y = j * g32.h + g32.h / 2, z = k * g32.h;
                double Bz = -2 * M_PI * 0.1 * std::cos(2 * M_PI * x - axis_wave().omega() * (pw.t + g32.dt / 2));
                expect += Bz * bump.f(x, y, z);
            }
    expect *= g32.h * g32.h * g32.h;
    CHECK(got == doctest::Approx(expect).epsilon(1e-3));
}

TEST_CASE("smeared brackets: constant s1, antisymmetry, zero companions") {
    Grid g = grid(16);
    TestFunction c1 = constant_test_function(2.0);
    TestFunction b1 = poly_bump(4), b2 = poly_bump(5, {0.25, 0.0, 0.125});
    CHECK(smeared_bracket_BE(g, c1, b2, 1, 2) == 0.0);  // gradient of a constant
    // swapping the epsilon roles flips the sign
    CHECK(smeared_bracket_BE(g, b1, b2, 1, 2) == -smeared_bracket_BE(g, b1, b2, 2, 1));
    CHECK(smeared_bracket_BE(g, b1, b2, 1, 1) == 0.0);
    CHECK(smeared_bracket_EE(g, b1, b2, 1, 2) == 0.0);
    CHECK(smeared_bracket_BB(g, b1, b2, 3, 1) == 0.0);
}

TEST_CASE("stress-energy and Hamiltonian tensors") {
    FieldState s = wave_state(grid(16), axis_wave());
    // symmetric tensor is symmetric pointwise by construction
    TensorField sb = stress_energy_sym(s);
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (size_t t = 0; t < s.g.cells(); ++t)
                CHECK(sb.at(a, b)[t] == doctest::Approx(sb.at(b, a)[t]).epsilon(1e-12));

    // h = -S on Legendre-graph states, within the stated 5 h^2 window
    double window = 5.0 * s.g.h * s.g.h;
    CHECK(hamiltonian_vs_stress_linf(s) < window);

    // energy density h^1_1 = (E^2 + B^2)/2 up to O(h^2)
    CHECK(energy_density_check_linf(s) < window);

    // zero field: all tensors vanish
    FieldState z = zero_state(grid(8));
    TensorField hz = hamiltonian_tensor(z), sz = stress_energy(z);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (size_t t = 0; t < z.g.cells(); ++t) {
                CHECK(hz.at(a, b)[t] == 0.0);
                CHECK(sz.at(a, b)[t] == 0.0);
            }
}

TEST_CASE("slice invariance of conserved functionals") {
    FieldState s = wave_state(grid(16), axis_wave());
    for (double& v : s.E[2]) v += 0.25;  // uniform background
    double e0 = total_energy(s);
    double p0 = functional_P_const(s, {0, 0, 1});
    double g0 = gauss_residual_linf(s);
    EvolveOptions opt;
    opt.steps = 60;
    evolve(s, opt);
    CHECK(total_energy(s) == doctest::Approx(e0).epsilon(1e-12));
    CHECK(functional_P_const(s, {0, 0, 1}) == doctest::Approx(p0).epsilon(1e-12));
    // the discrete update preserves the Gauss residual exactly
    CHECK(gauss_residual_linf(s) == doctest::Approx(g0).epsilon(1e-10));
}

TEST_CASE("ld2 flatness: constant curvature restored") {
    // already-flat data: residual zero immediately
    FieldState2 flat = zero_state2(Grid2{32, 32, 1.0 / 32});
    FlatnessOptions opt;
    opt.tol = 1e-10;
    FlatnessReport r0 = ld2_flatness(flat, opt);
    CHECK(r0.converged);
    CHECK(r0.iters <= 1);

    // sin pattern relaxes to the mean, monotonically, preserving the flux
    FieldState2 s = sin_state2(64, 0.5, 0.25, 2, 2);
    FlatnessReport rep = ld2_flatness(s, opt);
    CHECK(rep.converged);
    CHECK(rep.monotone);
    CHECK(rep.final_dev < 1e-10);
    CHECK(std::fabs(rep.mean_final - rep.mean_initial) < 1e-13);
    Scalar F;
    curl2(s.g, s.A1, s.A2, F);
    for (double v : F) CHECK(std::fabs(v - rep.mean_final) < 2e-10);
}

#include "maxsym/fieldsim/slices.hpp"

TEST_CASE("slice_invariance gates on the symbolic classification") {
    using maxsym::Rat;
    FieldState s = wave_state(grid(12), axis_wave());
    for (double& v : s.E[0]) v += 0.5;

    SliceInvariance e = slice_invariance(s, 40, SliceFunctional::energy(), false);
    CHECK(e.delta < 1e-12);

    SliceInvariance p = slice_invariance(s, 40, SliceFunctional::p_const({Rat(1), Rat(0), Rat(0)}), false);
    CHECK(p.delta < 1e-12);
    CHECK(p.value_t0 == doctest::Approx(0.5).epsilon(1e-9));

    // gradient of a periodic bump is divergence-compatible and conserved;
    // use an oblique wave so the functional's baseline value is nonzero
    PlaneWave ow;
    ow.mode = {1, 2, 0};
    ow.eps = {2, -1, 0};
    ow.amp = 0.1;
    // the functional smears the (frozen) discrete Gauss residual; start the
    // wave at a phase where that residual is not parity-orthogonal to the bump
    FieldState so = wave_state(grid(12), ow, 0.03);
    SliceInvariance gp = slice_invariance(so, 40, SliceFunctional::p_gradient(4, 1.0), false);
    CHECK(std::fabs(gp.value_t0) > 1e-8);
    CHECK(gp.delta < 1e-9);

    // rotational phi is refused: its observable is not dynamical
    SliceFunctional rot = SliceFunctional::p_const({Rat(0), Rat(0), Rat(0)});
    rot.m[0][1] = Rat(1, 2);
    rot.m[1][0] = Rat(-1, 2);
    CHECK_THROWS_AS(slice_invariance(s, 4, rot, false), NonDynamical);
}
