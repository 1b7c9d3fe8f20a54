// hyperball — Möbius isometries of the complex hyperbolic ball on ℂⁿ:
// corpus generation, composition, classification, distances and the
// property-verification catalog. JSON in, JSON out, deterministic per seed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "hyperball/classify.hpp"
#include "hyperball/generate.hpp"
#include "hyperball/group.hpp"
#include "hyperball/json_io.hpp"
#include "hyperball/verify.hpp"

namespace {

using namespace hyperball;

// exit codes: 0 ok, 2 usage/parse, 3 undetermined classification,
// 4 mathematical precondition violation, 1 internal
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitMath = 4;

std::string format_fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

double default_tol() {
    if (const char* env = std::getenv("HYPERBALL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v > 0.0) return v;
        std::cerr << "hyperball: ignoring invalid HYPERBALL_TOL='" << env << "'\n";
    }
    return kDefaultTol;
}

bool family_predicate_holds(Family f, const GElement& g, double tol) {
    switch (f) {
        case Family::Uniform: return true;
        case Family::Normal: return is_normal_elem(g, tol);
        case Family::SelfAdjoint: return is_self_adjoint_elem(g, tol);
        case Family::Involutory: return is_involutory_elem(g, tol);
        case Family::Reducing: return reducing_eigenvalue(g, tol).has_value();
        case Family::Parabolic: return dynamical_type(g, tol).kind == Kind::Parabolic;
        case Family::Unitary: return is_unitary_elem(g, tol);
    }
    return false;
}

int cmd_gen(const std::string& family_name, const RunConfig& cfg, const std::string& out_dir) {
    const auto family = family_from_string(family_name);
    if (!family) {
        std::cerr << "hyperball gen: unknown family '" << family_name
                  << "' (expected uniform|normal|selfadjoint|involutory|reducing|parabolic|unitary)\n";
        return kExitUsage;
    }
    std::filesystem::create_directories(out_dir);
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const GElement g = random_element(*family, cfg.dim, rng);
        if (!preserves_form(g.matrix(), cfg.tol) || !family_predicate_holds(*family, g, cfg.tol)) {
            std::cerr << "hyperball gen: generated element #" << i
                      << " failed its family invariant\n";
            return kExitInternal;
        }
        char name[64];
        std::snprintf(name, sizeof(name), "%s_%04zu.gel.json", to_string(*family), i);
        write_text_file((std::filesystem::path(out_dir) / name).string(), to_json(g) + "\n");
    }
    std::cout << cfg.count << " " << to_string(*family) << " element(s) written to " << out_dir
              << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& input, double tol) {
    const GElement g = element_from_json(read_text_file(input), tol);
    const Classification c = dynamical_type(g, tol);
    std::cout << to_json(c) << "\n";
    return c.kind == Kind::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_dist(const std::string& x_file, const std::string& y_file) {
    const BallPoint x = ballpoint_from_json(read_text_file(x_file));
    const BallPoint y = ballpoint_from_json(read_text_file(y_file));
    std::cout << format_fixed12(caratheodory_distance(x, y)) << "\n";
    return kExitOk;
}

int cmd_compose(const std::vector<std::string>& files, const std::vector<std::size_t>& invert,
                double tol, const std::string& out_file) {
    for (std::size_t idx : invert) {
        if (idx < 1 || idx > files.size()) {
            std::cerr << "hyperball compose: --invert index " << idx << " out of range\n";
            return kExitUsage;
        }
    }
    std::vector<GElement> elems;
    elems.reserve(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        GElement g = element_from_json(read_text_file(files[i]), tol);
        const bool flip = std::find(invert.begin(), invert.end(), i + 1) != invert.end();
        elems.push_back(flip ? inverse(g) : g);
    }
    GElement product = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) product = compose(product, elems[i]);
    write_text_file(out_file, to_json(product) + "\n");
    std::cout << "composed element written to " << out_file << "\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const VerifyReport report = run_verification(cfg);
    std::cout << format_report(report);
    return report.all_passed() ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isometries of the complex hyperbolic ball: generate, compose, classify, measure, verify"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.tol = default_tol();

    // gen
    auto* gen = app.add_subcommand("gen", "write a seeded corpus of group elements (.gel.json)");
    std::string family = "uniform";
    std::string out_dir = ".";
    gen->add_option("--family", family, "uniform|normal|selfadjoint|involutory|reducing|parabolic|unitary")
        ->required();
    gen->add_option("--dim", cfg.dim, "ambient dimension n (>= 2)")->check(CLI::Range(2, 1 << 12));
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--count", cfg.count, "number of elements")->check(CLI::PositiveNumber);
    gen->add_option("--tol", cfg.tol, "validation tolerance");
    gen->add_option("--out", out_dir, "output directory");

    // classify
    auto* classify = app.add_subcommand("classify", "dynamical type and fixed points of an element");
    std::string classify_input;
    classify->add_option("input", classify_input, "element file (.gel.json or {\"M\":matrix})")
        ->required();
    classify->add_option("--tol", cfg.tol, "classification tolerance");

    // dist
    auto* dist = app.add_subcommand("dist", "Carathéodory distance between two ball points");
    std::string x_file, y_file;
    dist->add_option("x", x_file, "first point file")->required();
    dist->add_option("y", y_file, "second point file")->required();

    // compose
    auto* comp = app.add_subcommand("compose", "compose elements (optionally inverting some)");
    std::vector<std::string> comp_files;
    std::vector<std::size_t> comp_invert;
    std::string comp_out = "composed.gel.json";
    comp->add_option("files", comp_files, "element files, applied right-to-left")
        ->required()
        ->expected(-1);
    comp->add_option("--invert", comp_invert, "1-based indices of inputs to invert")
        ->delimiter(',');
    comp->add_option("--tol", cfg.tol, "canonicalization tolerance");
    comp->add_option("--out", comp_out, "output file");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full property catalog at n = 2, 8, 32");
    verify->add_option("--seed", cfg.seed, "generator seed");
    verify->add_option("--tol", cfg.tol, "threshold scale (1e-10 = nominal)");
    verify->add_option("--count", cfg.count, "instances per dimension per suite")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, cfg, out_dir);
        if (classify->parsed()) return cmd_classify(classify_input, cfg.tol);
        if (dist->parsed()) return cmd_dist(x_file, y_file);
        if (comp->parsed()) return cmd_compose(comp_files, comp_invert, cfg.tol, comp_out);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const ParseError& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimError& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfBall& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const FormViolation& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const NotUnitary& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const ReconstructionError& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const NotReducing& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const BadBasis& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const NearSingular& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "hyperball: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
