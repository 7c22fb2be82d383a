// hbilliard: simulate the elliptic billiard with a Hooke center, sweep its
// bifurcation diagram, print Fomenko graphs, and run the verification suite.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hooke/foliation.hpp"
#include "hooke/graph_io.hpp"
#include "hooke/io.hpp"
#include "hooke/sampling.hpp"
#include "hooke/svg.hpp"
#include "hooke/verify.hpp"

namespace {

// HBILLIARD_TOL_PROFILE scales the snap tolerances used to interpret CLI
// inputs: "strict" (x0.01), "default" (x1), "loose" (x100).
double profile_scale() {
    const char* env = std::getenv("HBILLIARD_TOL_PROFILE");
    if (!env) return 1.0;
    if (std::strcmp(env, "strict") == 0) return 0.01;
    if (std::strcmp(env, "loose") == 0) return 100.0;
    return 1.0;
}

struct TableOpts {
    double a = 2.0, b = 1.0, sigma = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--a", a, "major semi-axis squared");
        cmd->add_option("--b", b, "minor semi-axis squared");
        cmd->add_option("--sigma", sigma, "Hooke constant");
    }
    hooke::BilliardTable make() const { return {a, b, sigma}; }
};

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return false;
    }
    os << content;
    return os.good();
}

int cmd_simulate(const TableOpts& topt, double x, double y, double vx, double vy,
                 int bounces, const std::string& out, const std::string& svg) {
    const hooke::BilliardTable table = topt.make();
    const hooke::PhasePoint initial{{x, y}, {vx, vy}};
    const double slack = hooke::default_domain_slack(table) * profile_scale();
    if (!hooke::in_billiard_domain(table, initial, slack)) {
        std::cerr << "error: state not in billiard domain (p(0) = "
                  << hooke::format_g17(hooke::char_poly(table, initial).c0)
                  << ")\n";
        return 1;
    }
    const hooke::Trajectory traj = hooke::simulate(table, initial, bounces);
    const auto rows = hooke::trajectory_rows(table, traj);

    std::ostringstream csv;
    hooke::write_trajectory_csv(csv, rows);
    if (!write_file(out, csv.str())) return 1;
    if (!svg.empty() && !write_file(svg, hooke::trajectory_svg(table, traj))) return 1;
    return 0;
}

int cmd_diagram(const TableOpts& topt, int samples, const std::string& out,
                const std::string& svg) {
    const hooke::BilliardTable table = topt.make();
    const double a = table.a(), b = table.b(), s = table.sigma();
    hooke::Rng rng(hooke::kDefaultSeed);

    std::vector<hooke::DiagramCsvRow> rows;
    double e_max = 1.2 * s * (a + b);
    for (int i = 0; i < samples; ++i) {
        const hooke::PhasePoint st = hooke::random_domain_state(table, rng);
        const hooke::InvariantData m = hooke::momentum_map(table, st);
        e_max = std::max(e_max, m.E);
        rows.push_back({"sample", m.E, m.lambda2});
    }
    for (const hooke::PhasePoint& st : hooke::corner_probe_states(table, 1e-4)) {
        const hooke::InvariantData m = hooke::momentum_map(table, st);
        rows.push_back({"corner_sample", m.E, m.lambda2});
    }

    // Region boundary: top edge, the antidiagonal lambda1 = 0 segment, and
    // the bottom edge, traced at the sweep resolution.
    const int res = std::max(2, std::min(samples, 128));
    const double e1 = 0.5 * s * b, e3 = 0.5 * s * (a + b);
    for (int k = 0; k < res; ++k) {
        const double u = static_cast<double>(k) / (res - 1);
        rows.push_back({"region_boundary", e1 + u * (e_max - e1), a});
        rows.push_back({"region_boundary", e1 + u * (e3 - e1), a * (1.0 - u)});
        rows.push_back({"region_boundary", e3 + u * (e_max - e3), 0.0});
    }
    const auto set = hooke::bifurcation_set(table);
    const char* names[3] = {"halfline_a", "halfline_b", "halfline_0"};
    for (int i = 0; i < 3; ++i) {
        rows.push_back({names[i], set[i].e_min, set[i].lambda2});
        rows.push_back({names[i], e_max, set[i].lambda2});
    }

    std::ostringstream csv;
    hooke::write_diagram_csv(csv, rows);
    if (!write_file(out, csv.str())) return 1;
    if (!svg.empty() && !write_file(svg, hooke::diagram_svg(table, rows))) return 1;
    return 0;
}

int cmd_fomenko(const TableOpts& topt, double energy, bool json) {
    const hooke::BilliardTable table = topt.make();
    // Band membership snaps at the profile-scaled tolerance, so exact band
    // values typed with rounding still land on the critical graph.
    const double snap = hooke::tol::energy_snap * profile_scale();
    const hooke::FomenkoGraph g = hooke::fomenko_graph(table, energy, snap);
    std::cout << (json ? hooke::fomenko_to_json(g) : hooke::fomenko_to_dot(g));
    return 0;
}

int cmd_verify(std::uint64_t seed, bool fast, double drift_tol) {
    hooke::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.fast = fast;
    cfg.caustic_drift_tol = drift_tol;
    const hooke::VerificationReport report = hooke::run_verification(cfg);
    hooke::print_report(report, std::cout);
    hooke::print_timings(report, std::cerr);
    return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic billiard in a Hooke potential"};
    app.require_subcommand(1);

    TableOpts sim_t, dia_t, fom_t;

    auto* sim = app.add_subcommand("simulate", "integrate a trajectory to CSV");
    sim_t.attach(sim);
    double x = 0.0, y = 0.0, vx = 0.0, vy = 0.0;
    int bounces = 16;
    std::string sim_out, sim_svg;
    sim->add_option("--x", x, "initial x");
    sim->add_option("--y", y, "initial y");
    sim->add_option("--vx", vx, "initial vx");
    sim->add_option("--vy", vy, "initial vy");
    sim->add_option("--bounces", bounces, "number of bounces")
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--out", sim_out, "output CSV path")->required();
    sim->add_option("--svg", sim_svg, "optional SVG path");

    auto* dia = app.add_subcommand("diagram", "sweep the bifurcation diagram");
    dia_t.attach(dia);
    int samples = 2000;
    std::string dia_out, dia_svg;
    dia->add_option("--samples", samples, "random sweep size (>= 2)")
        ->check(CLI::Range(2, 100000000));
    dia->add_option("--out", dia_out, "output CSV path")->required();
    dia->add_option("--svg", dia_svg, "optional SVG path");

    auto* fom = app.add_subcommand("fomenko", "print the Fomenko graph at an energy");
    fom_t.attach(fom);
    double energy = 0.0;
    bool json = false;
    fom->add_option("--energy", energy, "total energy E")->required();
    fom->add_flag("--json", json, "emit JSON instead of DOT-like text");

    auto* ver = app.add_subcommand("verify", "run the property-verification suite");
    std::uint64_t seed = hooke::kDefaultSeed;
    bool fast = false;
    double drift_tol = 0.0;
    ver->add_option("--seed", seed, "RNG seed");
    ver->add_flag("--fast", fast, "reduced sample counts");
    ver->add_option("--caustic-drift-tol", drift_tol,
                    "override the caustic drift tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_t, x, y, vx, vy, bounces, sim_out, sim_svg);
        }
        if (dia->parsed()) return cmd_diagram(dia_t, samples, dia_out, dia_svg);
        if (fom->parsed()) return cmd_fomenko(fom_t, energy, json);
        if (ver->parsed()) return cmd_verify(seed, fast, drift_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
