#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "biscornu/decoration.hpp"
#include "biscornu/designer.hpp"
#include "biscornu/errors.hpp"
#include "biscornu/obj_io.hpp"
#include "biscornu/relax.hpp"
#include "biscornu/svg.hpp"

namespace fs = std::filesystem;
using namespace biscornu;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << content;
}

void emit_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::vector<std::uint8_t> parse_bits(const std::string& bits, int expected) {
    std::vector<std::uint8_t> out;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidInput("seed bits must be 0/1, got '" + bits + "'");
        out.push_back(c == '1');
    }
    if (static_cast<int>(out.size()) != expected)
        throw InvalidInput("seed length must be n+1 = " + std::to_string(expected) + ", got " +
                           std::to_string(out.size()));
    return out;
}

SubgroupClass class_from_name(const std::string& name) {
    for (SubgroupClass cls : all_subgroup_classes())
        if (name == to_string(cls)) return cls;
    throw InvalidInput("unknown class '" + name + "' (expected one of C1 Cs C2_axial C2_prime "
                       "C4 D2 C2v S8cyc D4 C4v D4d)");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct SeamInputs {
    std::string b1, b2, pita;
    double offset = 0.0, fold = 0.0;
    bool offset_set = false, fold_set = false;
};

SeamSetup load_seam_setup(const SeamInputs& in, double targetEdge) {
    const bool dform = !in.b1.empty() || !in.b2.empty();
    const bool pita = !in.pita.empty();
    if (dform == pita)
        throw InvalidInput("give either --b1/--b2 (with --offset) or --pita (with --fold)");
    if (dform) {
        if (in.b1.empty() || in.b2.empty()) throw InvalidInput("--b1 and --b2 go together");
        BoundarySpec b1 = parse_boundary(read_file(in.b1));
        BoundarySpec b2 = parse_boundary(read_file(in.b2));
        return build_dform_sheets(b1, b2, in.offset, targetEdge);
    }
    BoundarySpec b = parse_boundary(read_file(in.pita));
    return build_pita_sheet(b, in.fold, targetEdge);
}

int run(int argc, char** argv) {
    CLI::App app{"biscornu: stitch charts, antiprismatic symmetry, and seam geometry"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a stitch chart");
    int gen_n = 8;
    std::string gen_rows, gen_cols, gen_out;
    bool gen_random = false;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 1;
    gen->add_option("--n", gen_n, "cells per side")->required();
    gen->add_option("--rows", gen_rows, "row seed bits, length n+1");
    gen->add_option("--cols", gen_cols, "column seed bits, length n+1");
    gen->add_flag("--random", gen_random, "aleatoric chart instead of hitomezashi");
    gen->add_option("--density", gen_density, "segment probability for --random (default 0.5)");
    gen->add_option("--seed", gen_seed, "rng seed for --random (default 1)");
    gen->add_option("--out", gen_out, "output .chart path (default stdout)");

    // classify-square
    auto* csq = app.add_subcommand("classify-square", "symmetry class of a chart");
    std::string csq_file;
    csq->add_option("file", csq_file, "input .chart")->required();

    // classify-biscornu
    auto* cbi = app.add_subcommand("classify-biscornu", "symmetry class of a decoration");
    std::string cbi_file;
    cbi->add_option("file", cbi_file, "input .bis")->required();

    // sampler
    auto* sampler = app.add_subcommand("sampler", "write the eleven-class exemplar corpus");
    std::string sampler_dir;
    int sampler_n = 8;
    sampler->add_option("--out", sampler_dir, "output directory")->required();
    sampler->add_option("--n", sampler_n, "chart size (default 8)");

    // design
    auto* design = app.add_subcommand("design", "search for a decoration with a target class");
    std::string design_target, design_space = "seeds", design_out;
    int design_n = 8;
    long design_budget = 10000;
    std::uint64_t design_seed = 1;
    design->add_option("--target", design_target, "subgroup class label")->required();
    design->add_option("--n", design_n, "chart size (default 8)");
    design->add_option("--space", design_space, "seeds | random (default seeds)");
    design->add_option("--budget", design_budget, "candidates to try (default 10000)");
    design->add_option("--seed", design_seed, "rng seed (default 1)");
    design->add_option("--out", design_out, "output .bis path (default stdout)");

    // seam
    auto* seam = app.add_subcommand("seam", "report a seam pairing");
    SeamInputs seam_in;
    seam->add_option("--b1", seam_in.b1, "first boundary .bnd");
    seam->add_option("--b2", seam_in.b2, "second boundary .bnd");
    seam->add_option("--offset", seam_in.offset, "seam start offset (arclength)");
    seam->add_option("--pita", seam_in.pita, "single boundary .bnd");
    seam->add_option("--fold", seam_in.fold, "fold point (arclength)");

    // relax
    auto* rlx = app.add_subcommand("relax", "run the 3D relaxation solver");
    SeamInputs rlx_in;
    double rlx_edge = 0.15;
    RelaxParams rlx_params;
    std::string rlx_out;
    rlx->add_option("--b1", rlx_in.b1, "first boundary .bnd");
    rlx->add_option("--b2", rlx_in.b2, "second boundary .bnd");
    rlx->add_option("--offset", rlx_in.offset, "seam start offset (arclength)");
    rlx->add_option("--pita", rlx_in.pita, "single boundary .bnd");
    rlx->add_option("--fold", rlx_in.fold, "fold point (arclength)");
    rlx->add_option("--target-edge", rlx_edge, "mesh edge length (default 0.15)");
    rlx->add_option("--iters", rlx_params.iterations, "solver iterations (default 2000)");
    rlx->add_option("--step", rlx_params.stepSize, "bending step size (default 0.1)");
    rlx->add_option("--tol", rlx_params.lengthTolerance, "strain tolerance (default 0.01)");
    rlx->add_option("--seed", rlx_params.perturbationSeed, "perturbation seed (default 1)");
    rlx->add_option("--out", rlx_out, "output .obj path")->required();

    // svg
    auto* svg = app.add_subcommand("svg", "render a chart or decoration to SVG");
    std::string svg_in, svg_out;
    svg->add_option("file", svg_in, "input .chart or .bis")->required();
    svg->add_option("--out", svg_out, "output .svg path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (gen->parsed()) {
        StitchChart chart = [&] {
            if (gen_random) {
                if (!gen_rows.empty() || !gen_cols.empty())
                    throw InvalidInput("--random excludes --rows/--cols");
                return random_chart(gen_n, gen_density, gen_seed);
            }
            if (gen_rows.empty() || gen_cols.empty())
                throw InvalidInput("need --rows and --cols, or --random");
            SeedPair seeds{parse_bits(gen_rows, gen_n + 1), parse_bits(gen_cols, gen_n + 1)};
            return hitomezashi(seeds, gen_n);
        }();
        emit_output(gen_out, emit_chart(chart));
        return 0;
    }

    if (csq->parsed()) {
        StitchChart chart = parse_chart(read_file(csq_file));
        std::cout << to_string(classify_square(chart)) << "\n";
        return 0;
    }

    if (cbi->parsed()) {
        BiscornuDecoration d = parse_decoration(read_file(cbi_file));
        auto stab = stabilizer(d);
        std::cout << to_string(classify_subgroup(stab)) << "\n";
        std::cout << "stabilizer:";
        for (GroupElement g : stab) std::cout << " " << element_name(g);
        std::cout << "\n";
        return 0;
    }

    if (sampler->parsed()) {
        fs::create_directories(sampler_dir);
        auto library = exemplar_library(sampler_n);
        std::ostringstream manifest, report;
        int matched = 0;
        for (const auto& [decoration, cls] : library) {
            std::string name = std::string("biscornu_") + to_string(cls) + ".bis";
            write_file((fs::path(sampler_dir) / name).string(), emit_decoration(decoration));
            manifest << name << " " << to_string(cls) << "\n";
            SubgroupClass verified = classify_subgroup(stabilizer(decoration));
            bool ok = verified == cls;
            matched += ok;
            report << name << " expected " << to_string(cls) << " classified "
                   << to_string(verified) << (ok ? " ok" : " MISMATCH") << "\n";
        }
        write_file((fs::path(sampler_dir) / "manifest.txt").string(), manifest.str());
        report << matched << "/" << library.size() << " classes matched\n";
        write_file((fs::path(sampler_dir) / "verification.txt").string(), report.str());
        std::cout << matched << "/" << library.size() << " classes matched\n";
        return matched == static_cast<int>(library.size()) ? 0 : 2;
    }

    if (design->parsed()) {
        SubgroupClass target = class_from_name(design_target);
        SearchSpace space = [&] {
            if (design_space == "seeds") return SearchSpace::HitomezashiSeeds;
            if (design_space == "random") return SearchSpace::RandomCharts;
            throw InvalidInput("--space must be 'seeds' or 'random'");
        }();
        auto found = search(target, design_n, space, design_budget, design_seed);
        if (!found) {
            std::cout << "NotFound\n";
            return 2;
        }
        emit_output(design_out, emit_decoration(*found));
        if (!design_out.empty()) std::cout << "found " << to_string(target) << "\n";
        return 0;
    }

    if (seam->parsed()) {
        const bool pita = !seam_in.pita.empty();
        if (pita) {
            BoundarySpec b = parse_boundary(read_file(seam_in.pita));
            SeamPairing p = make_pita_pairing(b, seam_in.fold);
            const double P = p.perimeter;
            std::cout << "mode pita\nperimeter " << fmt(P) << "\nfold " << fmt(p.param) << "\n";
            std::cout << "fixed " << fmt(p.param) << " " << fmt(std::fmod(p.param + P / 2.0, P))
                      << "\n";
            for (int i = 0; i < 8; ++i) {
                double s = P * i / 8.0;
                std::cout << "pair " << fmt(s) << " -> " << fmt(p.partner(s)) << "\n";
            }
        } else {
            BoundarySpec b1 = parse_boundary(read_file(seam_in.b1));
            BoundarySpec b2 = parse_boundary(read_file(seam_in.b2));
            SeamPairing p = make_dform_pairing(b1, b2, seam_in.offset);
            std::cout << "mode dform\nperimeter1 " << fmt(b1.perimeter()) << "\nperimeter2 "
                      << fmt(b2.perimeter()) << "\noffset " << fmt(p.param) << "\n";
            for (int i = 0; i < 8; ++i) {
                double s = b1.perimeter() * i / 8.0;
                std::cout << "pair " << fmt(s) << " -> " << fmt(p.partner(s)) << "\n";
            }
        }
        return 0;
    }

    if (rlx->parsed()) {
        SeamSetup setup = load_seam_setup(rlx_in, rlx_edge);
        EmbeddingResult result = relax(setup.sheets, setup.pairing, rlx_params);
        write_file(rlx_out, embedding_obj(result));
        std::cout << "maxEdgeStrain " << fmt(result.maxEdgeStrain) << "\n"
                  << "bendingEnergy " << fmt(result.bendingEnergy) << "\n"
                  << "hullFraction " << fmt(convex_hull_check(result, 2.0 * rlx_edge)) << "\n"
                  << "converged " << (result.converged ? "yes" : "no") << "\n";
        return result.converged ? 0 : 2;
    }

    if (svg->parsed()) {
        std::string ext = fs::path(svg_in).extension().string();
        std::string rendered;
        if (ext == ".bis")
            rendered = decoration_svg(parse_decoration(read_file(svg_in)));
        else if (ext == ".chart")
            rendered = chart_svg(parse_chart(read_file(svg_in)));
        else
            throw InvalidInput("svg input must end in .chart or .bis");
        emit_output(svg_out, rendered);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
