// Command-line front end: derivations, brackets, classification, simulation,
// and the verification suites, with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 degeneracy.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "maxsym/fieldsim/evolve.hpp"
#include "maxsym/fieldsim/functionals.hpp"
#include "maxsym/observables.hpp"
#include "maxsym/serialize.hpp"
#include "maxsym/verify.hpp"

namespace {

using namespace maxsym;

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const Json& j, const std::string& text) const {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream os(path);
            os << payload;
        }
    }
};

std::string render_relations(const PDESystem& sys) {
    const Chart& rc = *sys.render_chart;
    std::string out;
    out += "# chart: " + flavor_name(sys.chart->flavor) + "  (" + sys.hamiltonian_ref + ")\n";
    for (const auto& r : sys.relations)
        out += "[" + r.provenance + "]  " + r.lhs.render(rc) + " = " + r.rhs.render(rc) + "\n";
    if (!sys.on_shell.empty()) {
        out += "# with the momenta identified along the Legendre graph (Pi = F):\n";
        for (const auto& r : sys.on_shell)
            out += "[" + r.provenance + "]  " + r.lhs.render(rc) + " = " + r.rhs.render(rc) + "\n";
    }
    return out;
}

int cmd_hamiltonian(const std::string& flavor, const std::string& sigma, const Output& out) {
    if (flavor == "ddw") {
        ChartPtr chart = Chart::build(Flavor::Ddw);
        HamiltonianFn H = hamiltonian_ddw(chart);
        Json j;
        j["chart"] = "ddw";
        j["hamiltonian"] = to_json(H.expr, *chart);
        out.emit(j, "H = " + H.expr.render(*chart) + "\n");
        return 0;
    }
    ChartPtr chart = Chart::build(Flavor::Ld2);
    Poly sig;
    if (sigma == "symbolic" || sigma.empty()) {
        sig = Poly::var(chart->ld_extra());
    } else {
        try {
            sig = Poly(Rat(sigma));
        } catch (...) {
            std::cerr << "unparsable sigma: " << sigma << "\n";
            return 2;
        }
    }
    Ld2Hamiltonian H = hamiltonian_ld2(chart, sig);
    Json j;
    j["chart"] = "ld2";
    j["sigma"] = sigma.empty() ? "symbolic" : sigma;
    j["hamiltonian-num"] = to_json(H.num, *chart);
    j["hamiltonian-den"] = to_json(H.den, *chart);
    std::string text = "H = (" + H.num.render(*chart) + ") / (" + H.den.render(*chart) + ")\n";
    if (H.den.is_constant() && H.den.constant_value() == 1)
        text = "H = " + H.num.render(*chart) + "\n";
    out.emit(j, text);
    return 0;
}

int cmd_derive(const std::string& flavor, const std::string& sigma, const Output& out) {
    PDESystem sys;
    if (flavor == "maxwell-dirac") {
        ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
        sys = derive(chart, hamiltonian_ddw(chart));
    } else if (flavor == "ddw") {
        ChartPtr chart = Chart::build(Flavor::Ddw);
        sys = derive(chart, hamiltonian_ddw(chart));
    } else if (flavor == "premulti") {
        sys = derive_premulti(Chart::build(Flavor::Premulti));
    } else if (flavor == "ld2") {
        sys = derive_ld2(Chart::build(Flavor::Ld2), Rat(sigma.empty() ? "1" : sigma));
    } else {
        std::cerr << "unknown flavor: " << flavor << "\n";
        return 2;
    }
    out.emit(to_json(sys), render_relations(sys));
    // Maxwell recovery rows must be present on constrained flavors
    if (flavor == "maxwell-dirac" || flavor == "premulti" || flavor == "ld2") {
        bool momentum_rows = false, field_rows = false;
        for (const auto& r : sys.relations) {
            momentum_rows = momentum_rows || r.provenance.find("i[A") != std::string::npos;
            field_rows = field_rows || r.provenance.find("A") != std::string::npos;
        }
        return momentum_rows && field_rows ? 0 : 1;
    }
    return 0;
}

int cmd_bracket(const std::string& fam_a, const std::string& fam_b, const std::string& coeff_a,
                const std::string& coeff_b, const Output& out) {
    ChartPtr chart = Chart::build(Flavor::MaxwellDirac);
    auto load = [&](const std::string& path, const std::string& family) -> ObservableForm {
        std::ifstream is(path);
        if (!is) throw std::runtime_error("cannot open " + path);
        Json j = Json::parse(is);
        if (family == "P") {
            std::array<Poly, 4> phi;
            for (size_t mu = 0; mu < 4; ++mu) phi[mu] = poly_from_json(j.at("phi").at(mu), *chart);
            return make_P_phi(chart, phi);
        }
        std::array<std::array<Poly, 4>, 4> psi;
        for (size_t mu = 0; mu < 4; ++mu)
            for (size_t nu = 0; nu < 4; ++nu)
                psi[mu][nu] = poly_from_json(j.at("psi").at(mu).at(nu), *chart);
        return make_Q_psi(chart, psi);  // throws on a symmetry violation
    };
    ObservableForm a = load(coeff_a, fam_a);
    ObservableForm b = load(coeff_b, fam_b);
    Form br = poisson(a, b);
    auto raw = [](const std::string& path) {
        std::ifstream is(path);
        return Json::parse(is);
    };
    Json j;
    j["inputs"] = Json::array({Json{{"family", fam_a}, {"coefficients", raw(coeff_a)}},
                               Json{{"family", fam_b}, {"coefficients", raw(coeff_b)}}});
    j["lhs"] = to_json(br);
    out.emit(j, "{" + fam_a + "," + fam_b + "} = " + render(br) + "\n");
    return 0;
}

int cmd_classify(const std::vector<std::string>& vals, const Output& out) {
    Ld2Point p{Rat(vals[0]), Rat(vals[1]), Rat(vals[2]), Rat(vals[3]), Rat(vals[4]), Rat(vals[5])};
    PseudofiberReport r = pseudofiber_classify(p);
    const char* names[] = {"regular", "sigma=0 stratum", "sigma=2 stratum", "not in P_q"};
    Json j;
    j["stratum"] = names[static_cast<int>(r.stratum)];
    j["dim-enlarged-pseudofiber"] = r.dim_enlarged;
    j["dim-pseudofiber"] = r.dim_fiber;
    j["detail"] = r.detail;
    out.emit(j, std::string(names[static_cast<int>(r.stratum)]) + ": " + r.detail +
                    " (dim P_q(z) = " + std::to_string(r.dim_enlarged) +
                    ", dim P^h_q(z) = " + std::to_string(r.dim_fiber) + ")\n");
    return 0;
}

int cmd_simulate(const std::string& config_path, const Output& out) {
    namespace fs = maxsym::fieldsim;
    std::ifstream is(config_path);
    if (!is) {
        std::cerr << "cannot open config " << config_path << "\n";
        return 2;
    }
    Json cfg = Json::parse(is);
    fs::Grid g;
    auto dims = cfg.at("dims");
    g.nx = dims.at(0).get<int>();
    g.ny = dims.at(1).get<int>();
    g.nz = dims.at(2).get<int>();
    g.h = cfg.value("h", 1.0 / g.nx);
    g.dt = cfg.value("dt", g.h / 2);
    int steps = cfg.at("steps").get<int>();
    fs::FieldState s;
    std::string init = cfg.value("init", std::string("zero"));
    if (init == "plane-wave") {
        fs::PlaneWave w;
        if (cfg.contains("mode"))
            for (size_t i = 0; i < 3; ++i) w.mode[i] = cfg["mode"].at(i).get<int>();
        if (cfg.contains("eps"))
            for (size_t i = 0; i < 3; ++i) w.eps[i] = cfg["eps"].at(i).get<double>();
        w.amp = cfg.value("amplitude", 0.1);
        s = fs::wave_state(g, w);
    } else if (init == "zero") {
        s = fs::zero_state(g);
    } else {
        std::cerr << "unknown init: " << init << "\n";
        return 2;
    }
    fs::EvolveOptions opt;
    opt.steps = 1;
    opt.check_every = 1;
    opt.blowup_factor = cfg.value("tolerances", Json::object()).value("blowup", 50.0);
    int snap_every = cfg.value("snapshot_every", 0);
    std::string snap_path = cfg.value("snapshot_path", std::string());
    Json diag = Json::array();
    auto record = [&]() {
        Json d;
        d["t"] = s.t;
        d["energy"] = fs::total_energy(s);
        d["constraint_residual"] = fs::gauss_residual_linf(s);
        d["E1_functional"] = fs::functional_P_const(s, {1, 0, 0});
        diag.push_back(d);
    };
    std::ofstream snap;
    if (!snap_path.empty()) {
        snap.open(snap_path);
        snap << "t,ix,iy,iz,A1,A2,A3,Pi10,Pi20,Pi30,Pi12,Pi13,Pi23\n";
    }
    auto snapshot = [&]() {
        if (snap_path.empty()) return;
        fs::Field3 W = fs::make_field(s.g);
        fs::curl_edge_to_face(s.g, s.A, W, false);
        char line[320];
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    size_t at = g.idx(i, j, k);
                    // spatial momenta from the curl: Pi12 = W3, Pi13 = -W2, Pi23 = W1
                    std::snprintf(line, sizeof line,
                                  "%.9g,%d,%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                                  s.t, i, j, k, s.A[0][at], s.A[1][at], s.A[2][at], s.E[0][at],
                                  s.E[1][at], s.E[2][at], W[2][at], -W[1][at], W[0][at]);
                    snap << line;
                }
    };
    try {
        record();
        snapshot();
        for (int n = 0; n < steps; ++n) {
            fs::evolve(s, opt);
            if ((n + 1) % std::max(1, cfg.value("diag_every", 1)) == 0) record();
            if (snap_every > 0 && (n + 1) % snap_every == 0) snapshot();
        }
    } catch (const fs::SimInstability& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return 1;
    }
    Json j;
    j["steps"] = steps;
    j["diagnostics"] = diag;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", diag.back()["energy"].get<double>());
    out.emit(j, "simulated " + std::to_string(steps) + " steps; final energy " + buf + "\n");
    return 0;
}

int cmd_verify(const std::string& suite, bool quick, uint64_t seed, const Output& out) {
    std::vector<Check> checks;
    if (suite == "symbolic") checks = verify_symbolic(seed);
    else if (suite == "numeric") checks = verify_numeric(quick);
    else if (suite == "obstruction") checks = verify_obstruction();
    else if (suite == "all") checks = verify_all(seed, quick);
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    Json arr = Json::array();
    std::string text;
    for (const auto& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["detail"] = c.detail;
        arr.push_back(cj);
        text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + "  " + c.detail + "\n";
    }
    Json j;
    j["suite"] = suite;
    j["checks"] = arr;
    out.emit(j, text);
    return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multisymplectic Maxwell toolkit"};
    app.require_subcommand(1);
    Output out;
    uint64_t seed = 0;
    app.add_option("--format", out.format)->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.path);
    app.add_option("--seed", seed);

    std::string flavor, sigma;
    auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian function of a flavor");
    ham->add_option("flavor", flavor)->required()->check(CLI::IsMember({"ddw", "ld2"}));
    ham->add_option("--sigma", sigma);

    std::string dflavor, dsigma;
    auto* der = app.add_subcommand("derive", "generalized Hamilton equations");
    der->add_option("flavor", dflavor)->required();
    der->add_option("--sigma", dsigma);

    std::string fam_a, fam_b, coeff_a, coeff_b;
    auto* br = app.add_subcommand("bracket", "Poisson bracket of observable forms");
    br->add_option("family-a", fam_a)->required()->check(CLI::IsMember({"P", "Q"}));
    br->add_option("family-b", fam_b)->required()->check(CLI::IsMember({"P", "Q"}));
    br->add_option("--coeff-a", coeff_a)->required();
    br->add_option("--coeff-b", coeff_b)->required();

    std::vector<std::string> point;
    auto* cl = app.add_subcommand("classify", "pseudofiber stratum of an ld2 point");
    cl->add_option("point", point)->expected(6)->required();

    std::string config;
    auto* sim = app.add_subcommand("simulate", "discrete Maxwell evolution");
    sim->add_option("config", config)->required();

    std::string suite = "all";
    bool quick = false;
    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->add_option("suite", suite);
    ver->add_flag("--quick", quick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ham->parsed()) return cmd_hamiltonian(flavor, sigma, out);
        if (der->parsed()) return cmd_derive(dflavor, dsigma, out);
        if (br->parsed()) return cmd_bracket(fam_a, fam_b, coeff_a, coeff_b, out);
        if (cl->parsed()) return cmd_classify(point, out);
        if (sim->parsed()) return cmd_simulate(config, out);
        if (ver->parsed()) return cmd_verify(suite, quick, seed, out);
    } catch (const maxsym::Ld2Degenerate& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
