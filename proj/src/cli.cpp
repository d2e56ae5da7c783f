#include "hkt/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hkt/error.hpp"
#include "hkt/lattice_io.hpp"
#include "hkt/quaternion_model.hpp"
#include "hkt/scan.hpp"
#include "hkt/scan_io.hpp"
#include "hkt/twistor_core.hpp"

namespace hkt::cli {
namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join(const Unit3& u) { return fmt17(u[0]) + "," + fmt17(u[1]) + "," + fmt17(u[2]); }
std::string join(const Ray& r) { return r[0].get_str() + "," + r[1].get_str() + "," + r[2].get_str(); }

std::string describe(const CP1Point& z) {
    if (z.infinite) return "inf";
    return fmt17(z.z.real()) + " " + (z.z.imag() < 0 ? "- " : "+ ") + fmt17(std::abs(z.z.imag())) + "i";
}

std::vector<std::size_t> parse_mask(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    for (const auto& r : parse_rational_list(text)) {
        if (r.get_den() != 1 || r < 0) throw Error(ErrorKind::ParseError, "mask entries must be non-negative integers");
        out.push_back(r.get_num().get_ui());
    }
    return out;
}

PeriodData load_period_data(const std::string& source) {
    LatticeSpec spec = load_lattice(source);
    return PeriodData::make(std::move(spec.lattice), std::move(spec.triple));
}

struct ScanOptions {
    std::string lattice = "U3";
    std::int64_t bound = 1;
    std::string mask;
    std::string out;
    std::string svg;
    unsigned threads = 1;
};

void add_scan_options(CLI::App* cmd, ScanOptions& o) {
    cmd->add_option("--lattice", o.lattice, "Built-in name (U3, K3, diag222) or JSON file")->capture_default_str();
    cmd->add_option("--bound", o.bound, "Coordinate box bound B")->capture_default_str();
    cmd->add_option("--mask", o.mask, "Comma separated basis indices to enumerate (default: all)");
    cmd->add_option("--out", o.out, "CSV output file (default: stdout)");
    cmd->add_option("--svg", o.svg, "Write an equal-area SVG plot of the cloud");
    cmd->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
}

int run_scan(const ScanOptions& o, bool algebraic, std::ostream& out) {
    const PeriodData data = load_period_data(o.lattice);
    ScanConfig config;
    config.box_bound = o.bound;
    config.coordinate_mask = parse_mask(o.mask);
    config.threads = o.threads;
    const PointCloud cloud = algebraic ? scan_algebraic(data, config) : scan_non_general_type(data, config);
    if (o.out.empty()) {
        write_cloud_csv(cloud, out);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + o.out + "'");
        write_cloud_csv(cloud, f);
    }
    if (!o.svg.empty()) {
        std::ofstream f(o.svg, std::ios::binary);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + o.svg + "'");
        write_cloud_svg(cloud, f, std::string(algebraic ? "algebraic" : "non-general-type") + " points, " + o.lattice +
                                      ", B = " + std::to_string(o.bound));
    }
    return kExitOk;
}

int run_validate(const std::string& source, std::ostream& out) {
    LatticeSpec spec = load_lattice(source);
    out << "lattice: " << spec.name << " (rank " << spec.lattice.rank() << ")\n";
    if (!spec.lattice.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "gram matrix is not symmetric");
    const SignatureReport sig = signature(spec.lattice);
    out << "signature: (" << sig.n_plus << ", " << sig.n_minus << ", " << sig.n_zero << ")\n";
    const PeriodData data = PeriodData::make(std::move(spec.lattice), std::move(spec.triple));
    out << "triple: OK (pairwise orthogonal, common norm " << data.triple().norm().get_str() << ")\n";
    const auto perp = perp_V_basis(data.lattice(), data.triple());
    const SignatureReport ps = signature(restricted_gram(data.lattice(), perp));
    out << "V-perp: rank " << perp.size() << ", signature (" << ps.n_plus << ", " << ps.n_minus << ", " << ps.n_zero
        << ")\n";
    if (ps.n_plus != 0 || ps.n_zero != 0)
        throw Error(ErrorKind::InvariantViolation, "V-perp is not negative definite");
    out << "status: OK\n";
    return kExitOk;
}

int run_project(const std::string& source, const std::string& omega_text, std::ostream& out) {
    const PeriodData data = load_period_data(source);
    const RationalVector omega = parse_rational_list(omega_text);
    if (!is_integral(omega)) throw Error(ErrorKind::ParseError, "--omega takes integers; use a file for rationals");
    const PositiveClass pc = pi_map(data, omega);
    const VCoords c = project_to_V(data.lattice(), data.triple(), omega);
    out << "omega: " << to_string(omega) << "\n";
    out << "q(omega,omega): " << q_eval(data.lattice(), omega, omega).get_str() << "\n";
    out << "projection: " << c[0].get_str() << "," << c[1].get_str() << "," << c[2].get_str() << "\n";
    out << "ray: " << join(pc.point.ray()) << "\n";
    out << "unit: " << join(pc.point.unit()) << "\n";
    out << "cp1: " << describe(stereographic(pc.point)) << "\n";
    return kExitOk;
}

int run_general_type(const std::string& source, const std::string& point_text, std::int64_t bound,
                     const std::string& mask, std::ostream& out) {
    const PeriodData data = load_period_data(source);
    std::optional<TwistorPoint> L;
    try {
        const RationalVector p = parse_rational_list(point_text);
        if (p.size() != 3) throw Error(ErrorKind::ParseError, "--point needs three coordinates");
        L = TwistorPoint::from_coords({p[0], p[1], p[2]});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParseError) throw;
        std::vector<double> v;
        std::stringstream ss(point_text);
        for (std::string tok; std::getline(ss, tok, ',');) {
            try {
                v.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad --point coordinate '" + tok + "'");
            }
        }
        if (v.size() != 3) throw Error(ErrorKind::ParseError, "--point needs three coordinates");
        L = TwistorPoint::from_unit({v[0], v[1], v[2]});
    }
    const auto mask_idx = parse_mask(mask);
    const GeneralTypeVerdict verdict = is_general_type(data, *L, bound, mask_idx);
    out << "point: " << (L->is_exact() ? "ray " + join(L->ray()) : "unit " + join(L->unit())) << "\n";
    if (const auto* ng = std::get_if<NotGeneralType>(&verdict)) {
        const auto ray = projection_ray(data.triple(), std::span<const Integer>(ng->witness));
        out << "verdict: NotGeneralType\n";
        out << "witness: " << to_string(ng->witness) << "\n";
        out << "witness projection ray: " << join(*ray) << "\n";
    } else {
        out << "verdict: GeneralTypeUpToBound(" << std::get<GeneralTypeUpToBound>(verdict).bound << ")\n";
    }
    return kExitOk;
}

int run_density(const ScanOptions& o, int grid, std::ostream& out) {
    const PeriodData data = load_period_data(o.lattice);
    ScanConfig config;
    config.coordinate_mask = parse_mask(o.mask);
    config.grid_resolution = grid;
    config.threads = o.threads;
    if (o.bound < 1) throw Error(ErrorKind::InvalidConfig, "box bound must be at least 1");
    out << "bound,points,covering_radius\n";
    for (std::int64_t b = 1; b <= o.bound; ++b) {
        config.box_bound = b;
        const PointCloud cloud = scan_algebraic(data, config);
        out << b << ',' << cloud.size() << ',' << fmt17(covering_radius(cloud, grid)) << "\n";
    }
    return kExitOk;
}

int run_demo(unsigned seed, int samples, std::ostream& out) {
    bool all = true;
    for (const auto& check : quat::verification_report(seed, samples)) {
        all = all && check.passed;
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << " (max error " << fmt17(check.max_error) << ")\n";
    }
    out << (all ? "all identities hold\n" : "some identities FAILED\n");
    return all ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twistor-sphere computations on integral period lattices", "hkt"};
    app.require_subcommand(1);

    std::string lattice = "U3";
    auto* validate = app.add_subcommand("validate", "Check signature and triple invariants");
    validate->add_option("--lattice", lattice, "Built-in name or JSON file")->capture_default_str();

    std::string omega;
    auto* project = app.add_subcommand("project", "Project an integral class to its twistor point");
    project->add_option("--lattice", lattice, "Built-in name or JSON file")->capture_default_str();
    project->add_option("--omega", omega, "Comma separated integer coordinates")->required();

    ScanOptions scan_opts;
    auto* scan_alg = app.add_subcommand("scan-algebraic", "Enumerate algebraic twistor points in a box");
    add_scan_options(scan_alg, scan_opts);
    auto* scan_ngt = app.add_subcommand("scan-ngt", "Enumerate non-general-type twistor points in a box");
    add_scan_options(scan_ngt, scan_opts);

    std::string point, gt_mask;
    std::int64_t gt_bound = 3;
    auto* general = app.add_subcommand("general-type", "Degree-2 general-type test at a twistor point");
    general->add_option("--lattice", lattice, "Built-in name or JSON file")->capture_default_str();
    general->add_option("--point", point, "a,b,c as integers, p/q rationals (exact) or decimals (box search)")
        ->required();
    general->add_option("--bound", gt_bound, "Box bound for the search at non-rational points")->capture_default_str();
    general->add_option("--mask", gt_mask, "Basis indices searched at non-rational points (default: all)");

    ScanOptions density_opts;
    int grid = 200;
    auto* density = app.add_subcommand("density", "Covering radius of algebraic points for bounds 1..B");
    density->add_option("--lattice", density_opts.lattice, "Built-in name or JSON file")->capture_default_str();
    density->add_option("--bound", density_opts.bound, "Largest box bound B")->capture_default_str();
    density->add_option("--grid", grid, "Fibonacci grid resolution G (G^2 samples)")->capture_default_str();
    density->add_option("--mask", density_opts.mask, "Basis indices to enumerate (default: all)");
    density->add_option("--threads", density_opts.threads, "Worker threads")->capture_default_str();

    unsigned seed = 20240601;
    int samples = 100;
    auto* demo = app.add_subcommand("demo-quaternion", "Verify the flat quaternionic model identities");
    demo->add_option("--seed", seed)->capture_default_str();
    demo->add_option("--samples", samples)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return run_validate(lattice, out);
        if (*project) return run_project(lattice, omega, out);
        if (*scan_alg) return run_scan(scan_opts, true, out);
        if (*scan_ngt) return run_scan(scan_opts, false, out);
        if (*general) return run_general_type(lattice, point, gt_bound, gt_mask, out);
        if (*density) return run_density(density_opts, grid, out);
        if (*demo) return run_demo(seed, samples, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace hkt::cli
