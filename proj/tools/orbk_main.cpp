// Command line surface for the orbk library: group and McKay inspection,
// crepant-resolution fiber reports, orbifold spec verification, Euler
// bookkeeping, and the self test battery.
//
// Exit codes: 0 = pass, 1 = verification failure, 2 = usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include "orbk/orbk.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format = "human";
    std::uint64_t seed = orbk::kDefaultCharacterSeed;
    std::size_t cap = orbk::kDefaultClosureCap;
};

std::string format_complex(const std::complex<double>& v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    if (std::abs(v.imag()) < 5e-5) {
        out << v.real();
    } else {
        out << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
    return out.str();
}

ordered_json complex_to_json(const std::complex<double>& v) {
    return ordered_json::array({v.real(), v.imag()});
}

ordered_json kpair_json(const orbk::KPair& p) {
    auto group = [](const orbk::FgAbGroup& g) {
        ordered_json j;
        j["free_rank"] = static_cast<long long>(g.free_rank);
        ordered_json torsion = ordered_json::array();
        for (const orbk::Int& d : g.torsion) torsion.push_back(d.convert_to<long long>());
        j["torsion"] = std::move(torsion);
        return j;
    };
    ordered_json j;
    j["k0"] = group(p.k0);
    j["k1"] = group(p.k1);
    return j;
}

int cmd_group(const GlobalOptions& opts, const std::string& label_text) {
    orbk::AdeLabel label = orbk::parse_ade_label(label_text);
    orbk::FiniteGroup g = orbk::build_group(label, opts.cap);
    orbk::CharacterTable t = orbk::character_table(g, opts.seed);

    if (opts.format == "structured") {
        ordered_json j;
        j["label"] = orbk::to_string(label);
        j["order"] = g.order();
        j["num_classes"] = g.num_classes();
        j["class_sizes"] = g.class_sizes();
        j["degrees"] = t.degrees;
        ordered_json rows = ordered_json::array();
        for (const auto& row : t.characters) {
            ordered_json cells = ordered_json::array();
            for (const auto& v : row) cells.push_back(complex_to_json(v));
            rows.push_back(std::move(cells));
        }
        j["characters"] = std::move(rows);
        ordered_json defining = ordered_json::array();
        for (const auto& v : t.defining_char) defining.push_back(complex_to_json(v));
        j["defining_character"] = std::move(defining);
        j["orthogonality_residual"] = t.orthogonality_residual();
        std::cout << j.dump(2) << "\n";
        return kExitPass;
    }

    std::cout << "group " << orbk::to_string(label) << "\n";
    std::cout << "  order:       " << g.order() << "\n";
    std::cout << "  classes:     " << g.num_classes() << "\n";
    std::cout << "  class sizes:";
    for (std::size_t s : g.class_sizes()) std::cout << " " << s;
    std::cout << "\n  degrees:    ";
    for (int d : t.degrees) std::cout << " " << d;
    std::cout << "\n  character table (rows = irreducibles, columns = classes):\n";
    for (const auto& row : t.characters) {
        std::cout << "   ";
        for (const auto& v : row) std::cout << " " << std::setw(16) << format_complex(v);
        std::cout << "\n";
    }
    std::cout << "  defining character:";
    for (const auto& v : t.defining_char) std::cout << " " << format_complex(v);
    std::cout << "\n  orthogonality residual: " << std::scientific << std::setprecision(2)
              << t.orthogonality_residual() << "\n";
    return kExitPass;
}

int cmd_mckay(const GlobalOptions& opts, const std::string& label_text,
              const std::string& export_format) {
    orbk::AdeLabel label = orbk::parse_ade_label(label_text);
    orbk::CharacterTable t =
        orbk::character_table(orbk::build_group(label, opts.cap), opts.seed);
    orbk::McKayGraph graph = orbk::mckay_graph(t);
    orbk::AdeLabel detected = orbk::dynkin_type(graph);

    if (export_format == "dot") {
        std::cout << orbk::dot_text(graph);
        return kExitPass;
    }
    if (export_format == "adjacency") {
        std::cout << orbk::adjacency_text(graph);
        return kExitPass;
    }

    if (opts.format == "structured") {
        ordered_json j;
        j["label"] = orbk::to_string(label);
        j["vertices"] = graph.vertex_count;
        j["adjacency"] = graph.adjacency;
        j["affine_vertex"] = graph.affine_vertex;
        j["degrees"] = graph.degrees;
        j["detected_type"] = orbk::to_string(detected);
        j["cartan_kernel_residual"] = graph.cartan_kernel_residual();
        std::cout << j.dump(2) << "\n";
        return kExitPass;
    }

    std::cout << "mckay graph of " << orbk::to_string(label) << "\n";
    std::cout << "  vertices: " << graph.vertex_count << " (affine vertex "
              << graph.affine_vertex << ")\n";
    std::cout << "  adjacency matrix:\n";
    for (const auto& row : graph.adjacency) {
        std::cout << "   ";
        for (int v : row) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "  degree vector:";
    for (int d : graph.degrees) std::cout << " " << d;
    std::cout << "\n  detected affine type: " << orbk::to_string(detected) << "\n";
    std::cout << "  cartan kernel residual: " << graph.cartan_kernel_residual() << "\n";
    return kExitPass;
}

int cmd_resolve(const GlobalOptions& opts, const std::string& label_text) {
    orbk::AdeLabel label = orbk::parse_ade_label(label_text);
    orbk::McKayVerdict v = orbk::verify_mckay_correspondence(label, opts.seed, opts.cap);
    const orbk::ExceptionalFiber& fiber = v.fiber;

    if (opts.format == "structured") {
        ordered_json j;
        j["label"] = orbk::to_string(label);
        j["sphere_count"] = fiber.sphere_count;
        j["intersection_graph"] = fiber.intersection_graph;
        j["fiber_k"] = kpair_json(v.fiber_side);
        j["group_algebra_k"] = kpair_json(v.group_algebra_side);
        j["detected_type"] = orbk::to_string(v.detected);
        j["mckay_correspondence"] = v.pass;
        std::cout << j.dump(2) << "\n";
        return v.pass ? kExitPass : kExitVerificationFailure;
    }

    std::cout << "crepant resolution fiber for " << orbk::to_string(label) << "\n";
    std::cout << "  spheres: " << fiber.sphere_count << "\n";
    std::cout << "  intersection tree (sphere: neighbors):\n";
    for (std::size_t i = 0; i < fiber.sphere_count; ++i) {
        std::cout << "    " << i << ":";
        for (std::size_t jx = 0; jx < fiber.sphere_count; ++jx)
            if (fiber.intersection_graph[i][jx]) std::cout << " " << jx;
        std::cout << "\n";
    }
    std::cout << "  fiber K-theory (cell topology):   " << v.fiber_side.to_string() << "\n";
    std::cout << "  group algebra K-theory (classes): " << v.group_algebra_side.to_string()
              << "\n";
    std::cout << "  mckay correspondence: " << (v.pass ? "pass" : "FAIL") << "\n";
    return v.pass ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const GlobalOptions& opts, const std::string& path, bool assume_degenerate) {
    orbk::OrbifoldSpec spec = orbk::parse_spec_file(path);
    orbk::VerifyOptions vopts;
    vopts.seed = opts.seed;
    vopts.cap = opts.cap;
    vopts.assume_degenerate_boundary = assume_degenerate;
    orbk::VerificationReport report = orbk::verdict(spec, vopts);
    if (opts.format == "structured") {
        std::cout << orbk::json_report(report);
    } else {
        std::cout << orbk::human_report(report);
    }
    return report.overall_pass ? kExitPass : kExitVerificationFailure;
}

int cmd_euler(const GlobalOptions& opts, const std::string& path) {
    orbk::OrbifoldSpec spec = orbk::parse_spec_file(path);
    orbk::VerifyOptions vopts;
    vopts.seed = opts.seed;
    vopts.cap = opts.cap;
    orbk::EulerCharacteristics e = orbk::euler_characteristics(spec, vopts);
    if (opts.format == "structured") {
        ordered_json j;
        j["name"] = spec.name;
        j["computed"] = e.computed;
        if (e.computed) {
            j["orbifold"] = e.orbifold;
            j["resolution"] = e.resolution;
        }
        std::cout << j.dump(2) << "\n";
    } else if (e.computed) {
        std::cout << "euler characteristic (orbifold side):   " << e.orbifold << "\n";
        std::cout << "euler characteristic (resolution side): " << e.resolution << "\n";
    } else {
        std::cout << "skipped: no regular_k supplied in " << spec.name << "\n";
    }
    if (!e.computed) return kExitPass;
    return e.orbifold == e.resolution ? kExitPass : kExitVerificationFailure;
}

int cmd_selftest(const GlobalOptions& opts) {
    std::vector<orbk::CheckResult> results = orbk::run_selftest(opts.seed);
    bool all = true;
    if (opts.format == "structured") {
        ordered_json j = ordered_json::array();
        for (const auto& r : results) {
            ordered_json rj;
            rj["name"] = r.name;
            rj["pass"] = r.pass;
            rj["detail"] = r.detail;
            rj["seconds"] = r.seconds;
            j.push_back(std::move(rj));
            all = all && r.pass;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(26) << r.name
                      << " " << r.detail << "\n";
            all = all && r.pass;
        }
        std::cout << (all ? "selftest: all criteria pass" : "selftest: FAILURES above") << "\n";
    }
    return all ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "orbk: K-theory bookkeeping for complex orbifolds with SU(2) singularities and their "
        "crepant resolutions.\n"
        "ADE labels: A<n> is the cyclic group Z/(n+1), D<n> (n >= 4) is the binary dihedral "
        "group of order 4(n-2), E6/E7/E8 are the binary tetrahedral, octahedral and "
        "icosahedral groups."};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for the character-table randomness")
        ->capture_default_str();
    app.add_option("--cap", opts.cap, "Element cap for multiplicative closure")
        ->capture_default_str();

    std::string label_text, path, export_format;
    bool assume_degenerate = false;

    CLI::App* group = app.add_subcommand("group", "Order, classes and character table");
    group->add_option("label", label_text, "ADE label, e.g. A1, D4, E8")->required();

    CLI::App* mckay = app.add_subcommand("mckay", "McKay graph of the defining representation");
    mckay->add_option("label", label_text, "ADE label")->required();
    mckay->add_option("--export", export_format, "Emit graph text instead of a report")
        ->check(CLI::IsMember({"dot", "adjacency"}));

    CLI::App* resolve =
        app.add_subcommand("resolve", "Exceptional fiber and the McKay correspondence check");
    resolve->add_option("label", label_text, "ADE label")->required();

    CLI::App* verify = app.add_subcommand("verify", "Verify an orbifold specification file");
    verify->add_option("path", path, "Specification file")->required();
    verify->add_flag("--assume-degenerate-boundary", assume_degenerate,
                     "Also report conditional total K-groups (consistency check only)");

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristics of both sides");
    euler->add_option("path", path, "Specification file")->required();

    app.add_subcommand("selftest", "Run the built-in acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (group->parsed()) return cmd_group(opts, label_text);
        if (mckay->parsed()) return cmd_mckay(opts, label_text, export_format);
        if (resolve->parsed()) return cmd_resolve(opts, label_text);
        if (verify->parsed()) return cmd_verify(opts, path, assume_degenerate);
        if (euler->parsed()) return cmd_euler(opts, path);
        return cmd_selftest(opts);
    } catch (const orbk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const orbk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
