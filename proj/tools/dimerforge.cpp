#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dimerforge/aztec.hpp"
#include "dimerforge/banded.hpp"
#include "dimerforge/bijections.hpp"
#include "dimerforge/checks.hpp"
#include "dimerforge/generators.hpp"
#include "dimerforge/parity.hpp"
#include "dimerforge/suite.hpp"
#include "dimerforge/symmetric.hpp"
#include "dimerforge/tea.hpp"
#include "dimerforge/trees.hpp"

using namespace dimerforge;

namespace {

// Exit status 2: the command line itself is wrong.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

std::vector<std::string> data_lines(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

std::size_t vertex_of(const PlanarGraph& g, Id id) {
    auto v = g.vertex_index(id);
    if (!v) throw UsageError("unknown vertex " + std::to_string(id));
    return *v;
}

Section2Instance section2(const InstanceFile& f, const std::string& path_flag) {
    std::vector<Id> path = path_flag.empty() ? f.path : parse_ids(path_flag);
    if (path.empty()) throw UsageError("a boundary path is needed: --path v1,v2,...");
    return make_section2(f.graph, path);
}

TeaInstance tea_instance(const InstanceFile& f) {
    if (f.marks.empty() || f.primed.empty()) throw UsageError("instance needs marks and primed directives");
    return make_tea_instance(f.graph, f.marks, f.primed, f.kind != "tec");
}

std::vector<ConstraintPath> constraints(const TeaInstance& inst, const InstanceFile& f) {
    std::vector<ConstraintPath> P;
    for (const auto& [i, ids] : f.constraints) {
        if (i != static_cast<int>(P.size()) + 1) throw UsageError("constraints must be numbered 1, 2, ...");
        ConstraintPath p;
        for (Id id : ids) p.push_back(vertex_of(inst.ref.graph, id));
        P.push_back(std::move(p));
    }
    return P;
}

std::string matching_lines(const std::vector<Matching>& ms) {
    std::string out;
    for (const Matching& m : ms) out += format_matching(m) + "\n";
    return out;
}

int report(const CheckOutcome& o) {
    for (const auto& l : o.lines) std::cout << l << "\n";
    if (!o.witness.empty()) std::cout << "witness\n" << o.witness;
    std::cout << (o.pass ? "PASS" : "FAIL") << "\n";
    return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimer and spanning tree bijections on plane graphs"};
    app.require_subcommand(1);
    int status = 0;
    std::string out;

    // planar_core
    std::string file, path_flag, axis_flag;
    auto* validate = app.add_subcommand("validate", "Check a graph file and optional boundary path or symmetry axis");
    validate->add_option("file", file)->required();
    validate->add_option("--path", path_flag, "boundary path v1,v2,...");
    validate->add_option("--axis", axis_flag, "horizontal symmetry axis y");
    validate->callback([&] {
        InstanceFile f = load_instance_file(file);
        const PlanarGraph& g = f.graph;
        if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
        FaceDecomposition faces = trace_faces(g);
        std::cout << "vertices " << g.vertex_count() << " edges " << g.edge_count() << " faces " << faces.face_count() << "\n";
        if (!path_flag.empty() || !f.path.empty()) {
            BoundaryPath bp = validate_boundary_path(g, path_flag.empty() ? f.path : parse_ids(path_flag));
            std::cout << "boundary path n " << bp.n << (bp.along_ccw ? " counterclockwise" : " clockwise") << "\n";
        }
        if (!axis_flag.empty() || f.axis) {
            SymmetryCertificate c = check_reflection_symmetry(g, axis_flag.empty() ? *f.axis : parse_rational(axis_flag));
            std::cout << "symmetric about y = " << format_rational(c.axis) << ", " << c.on_axis.size() << " vertices on the axis\n";
        }
        std::cout << "valid\n";
    });

    auto* faces_cmd = app.add_subcommand("faces", "List the faces as vertex id cycles");
    faces_cmd->add_option("file", file)->required();
    faces_cmd->callback([&] {
        PlanarGraph g = load_instance_file(file).graph;
        FaceDecomposition f = trace_faces(g);
        for (std::size_t i = 0; i < f.face_count(); ++i) {
            std::cout << "face " << i << (i == f.infinite ? " infinite" : "") << ":";
            for (std::size_t d : f.faces[i]) std::cout << " " << g.vertex(g.dart_tail(d)).id;
            std::cout << "\n";
        }
    });

    // refinement
    std::string build_kind, removals, targets;
    int trimmed_n = 1;
    bool trimmed_count = false;
    auto* build = app.add_subcommand("build", "Derived graphs: hg, plus, minus, bar, smash, trimmed");
    build->add_option("kind", build_kind)->required()->check(CLI::IsMember({"hg", "plus", "minus", "bar", "smash", "trimmed"}));
    build->add_option("file", file, "input graph (not used by trimmed)");
    build->add_option("--path", path_flag, "boundary path v1,v2,...");
    build->add_option("--targets", targets, "vertices to smash in");
    build->add_option("--n", trimmed_n, "half side of the square for trimmed")->check(CLI::PositiveNumber);
    build->add_option("--removals", removals, "peaks i,j;i,j;... for trimmed");
    build->add_flag("--count", trimmed_count, "print the matching count of the trimmed square instead");
    build->add_option("-o,--output", out);
    build->callback([&] {
        if (build_kind == "trimmed") {
            std::vector<Peak> peaks;
            std::stringstream in(removals);
            for (std::string tok; std::getline(in, tok, ';');) {
                auto ids = parse_ids(tok);
                if (ids.size() != 2) throw UsageError("peak '" + tok + "' is not i,j");
                peaks.push_back({static_cast<int>(ids[0]), static_cast<int>(ids[1])});
            }
            PlanarGraph g = trimmed_square(trimmed_n, peaks);
            // Removals may split the square, which the graph file loader refuses, so the count is offered here.
            if (trimmed_count) {
                Rational c = count_matchings(g);
                std::cout << format_rational(c) << " " << describe(squarish(c.get_num())) << "\n";
            } else {
                emit(save_graph(g), out);
            }
            return;
        }
        if (file.empty()) throw UsageError("an input graph is needed");
        InstanceFile f = load_instance_file(file);
        if (build_kind == "hg") {
            emit(save_graph(dual_refinement(f.graph)), out);
        } else if (build_kind == "smash") {
            Refinement ref = refine(f.graph);
            emit(save_graph(smash_in(ref, parse_id_list(f.graph, parse_ids(targets))).graph), out);
        } else {
            Section2Instance inst = section2(f, path_flag);
            const PlanarGraph g = build_kind == "plus" ? inst.plus : build_kind == "minus" ? inst.minus : symmetrize(inst);
            emit(save_graph(g), out);
        }
    });

    // matchings
    std::size_t limit = 0;
    auto* count = app.add_subcommand("count", "Weighted number of perfect matchings");
    count->add_option("file", file)->required();
    count->callback([&] { std::cout << format_rational(count_matchings(load_instance_file(file).graph)) << "\n"; });

    auto* enumerate = app.add_subcommand("enumerate", "Perfect matchings as sorted edge id lists");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--limit", limit);
    enumerate->callback([&] {
        PlanarGraph g = load_instance_file(file).graph;
        std::cout << matching_lines(enumerate_matchings(g, limit ? std::optional<std::size_t>(limit) : std::nullopt));
    });

    int gm = 0, gn = 0;
    auto* grid_count = app.add_subcommand("grid-count", "Matchings of the 2m x 2n grid by the product formula");
    grid_count->add_option("m", gm)->required()->check(CLI::PositiveNumber);
    grid_count->add_option("n", gn)->required()->check(CLI::PositiveNumber);
    grid_count->callback([&] { std::cout << kasteleyn_grid_count(gm, gn).get_str() << "\n"; });

    std::string number;
    auto* sq = app.add_subcommand("squarish", "Is N a square or twice a square");
    sq->add_option("N", number)->required();
    sq->callback([&] {
        BigInt n;
        if (number.empty() || number.find_first_not_of("0123456789") != std::string::npos || n.set_str(number, 10) != 0)
            throw UsageError("N must be a nonnegative integer");
        SquarishVerdict v = squarish(n);
        std::cout << describe(v) << "\n";
        status = v.kind == SquarishVerdict::Kind::No ? 1 : 0;
    });

    // bijections
    std::string matching_file;
    bool inverse = false;
    auto* phi_cmd = app.add_subcommand("phi", "Map matchings of G+ to G- (psi with --inverse)");
    phi_cmd->add_option("instance", file)->required();
    phi_cmd->add_option("matchings", matching_file)->required();
    phi_cmd->add_option("--path", path_flag);
    phi_cmd->add_flag("--inverse", inverse);
    phi_cmd->callback([&] {
        Section2Instance inst = section2(load_instance_file(file), path_flag);
        std::vector<Matching> res;
        for (const auto& line : data_lines(matching_file))
            res.push_back(inverse ? psi(inst, parse_matching(inst.minus, line)) : phi(inst, parse_matching(inst.plus, line)));
        std::cout << matching_lines(res);
    });

    std::string direction, input;
    Id root = -1;
    auto* temperley = app.add_subcommand("temperley", "Trees of G rooted at v and matchings of H_G minus v");
    temperley->add_option("direction", direction)->required()->check(CLI::IsMember({"t2m", "m2t"}));
    temperley->add_option("file", file)->required();
    temperley->add_option("input", input, "tree file (t2m) or matching file (m2t)")->required();
    temperley->add_option("--root", root)->required();
    temperley->callback([&] {
        PlanarGraph g = load_instance_file(file).graph;
        Refinement ref = refine(g);
        TemperleyHost host = temperley_host(ref, vertex_of(g, root));
        if (direction == "t2m") {
            std::cout << format_matching(temperley_tree_to_matching(host, parse_forest(g, read_text_file(input)))) << "\n";
        } else {
            for (const auto& line : data_lines(input))
                std::cout << format_forest(g, temperley_matching_to_tree(host, parse_matching(host.graph, line)));
        }
    });

    std::string index_set;
    int side = 2;
    auto* tea_cmd = app.add_subcommand("tea-transport", "Move constrained matchings between the two smashed hosts");
    tea_cmd->add_option("instance", file)->required();
    tea_cmd->add_option("matchings", matching_file)->required();
    tea_cmd->add_option("--I", index_set, "subset of 1..2n+1, e.g. 1,3");
    tea_cmd->add_option("--side", side, "host the matchings live on")->check(CLI::IsMember({1, 2}));
    tea_cmd->callback([&] {
        InstanceFile f = load_instance_file(file);
        TeaInstance inst = tea_instance(f);
        std::vector<int> I = parse_index_set(index_set);
        auto P = constraints(inst, f);
        const PlanarGraph& host = side == 2 ? inst.host2 : inst.host1;
        for (const auto& line : data_lines(matching_file))
            std::cout << format_matching(tea_transport(inst, parse_matching(host, line), I, P, side)) << "\n";
    });

    std::string which;
    std::size_t verify_limit = 10000;
    auto* verify = app.add_subcommand("verify-bijection", "Exhaustive round trip check on one instance");
    verify->add_option("which", which)->required()->check(CLI::IsMember({"phi", "temperley", "tea", "tec"}));
    verify->add_option("instance", file)->required();
    verify->add_option("--limit", verify_limit, "skip phi above this many matchings");
    verify->callback([&] {
        InstanceFile f = load_instance_file(file);
        if (which == "phi") status = report(check_phi_psi(f, verify_limit));
        else if (which == "temperley") status = report(check_temperley(f.graph));
        else if (which == "tea") status = report(check_tea(f));
        else status = report(check_tec(f));
    });

    // trees
    std::string trees_mode;
    auto* trees = app.add_subcommand("trees", "Count or enumerate spanning trees");
    trees->add_option("mode", trees_mode)->required()->check(CLI::IsMember({"count", "enumerate"}));
    trees->add_option("file", file)->required();
    trees->add_option("--root", root);
    trees->add_option("--limit", limit);
    trees->callback([&] {
        PlanarGraph g = load_instance_file(file).graph;
        std::size_t r = root < 0 ? 0 : vertex_of(g, root);
        if (trees_mode == "count") {
            std::cout << format_rational(count_spanning_trees(g)) << "\n";
            return;
        }
        std::size_t k = 0;
        for_each_rooted_forest(g, {r}, [&](const RootedForest& t) {
            std::cout << format_forest(g, t) << "\n";
            return !limit || ++k < limit;
        });
    });

    auto* tec = app.add_subcommand("tec", "Banded forests and matchings of the smashed host");
    tec->add_option("direction", direction)->required()->check(CLI::IsMember({"f2m", "m2f"}));
    tec->add_option("instance", file)->required();
    tec->add_option("input", input, "forest file (f2m) or matching file (m2f)")->required();
    tec->callback([&] {
        InstanceFile f = load_instance_file(file);
        f.kind = "tec";
        TeaInstance inst = tea_instance(f);
        if (direction == "f2m") {
            std::cout << format_matching(tec_forest_to_matching(inst, parse_forest(inst.ref.base, read_text_file(input)))) << "\n";
        } else {
            for (const auto& line : data_lines(input))
                std::cout << format_forest(inst.ref.base, tec_matching_to_forest(inst, parse_matching(inst.host2, line)));
        }
    });

    std::string kind = "exit";
    std::uint64_t samples = 0, seed = 1;
    auto* indep = app.add_subcommand("independence", "Joint law of the exit variables of a uniform spanning tree");
    indep->add_option("file", file)->required();
    indep->add_option("--root", root);
    indep->add_option("--kind", kind)->check(CLI::IsMember({"exit", "hv"}));
    indep->add_option("--axis", axis_flag);
    indep->add_option("--samples", samples);
    indep->add_option("--seed", seed);
    indep->callback([&] {
        InstanceFile f = load_instance_file(file);
        if (!axis_flag.empty()) f.axis = parse_rational(axis_flag);
        if (!f.axis) f.axis = Rational(0);
        if (root >= 0) f.root = root;
        if (!f.root) throw UsageError("--root is required");
        SymmetryCertificate cert = check_reflection_symmetry(f.graph, *f.axis);
        IndependenceReport r = independence_report(f.graph, cert, vertex_of(f.graph, *f.root),
                                                   parse_independence_kind(kind), samples, seed);
        std::cout << r.text();
        status = r.pass() ? 0 : 1;
    });

    // aztec
    std::string az_mode, variant = "T", svg;
    int az_n = 1;
    auto* aztec = app.add_subcommand("aztec", "Aztec triangles: graph, count, formula, biject");
    aztec->add_option("mode", az_mode)->required()->check(CLI::IsMember({"graph", "count", "formula", "biject"}));
    aztec->add_option("n", az_n)->required()->check(CLI::PositiveNumber);
    aztec->add_option("arg", input, "variant T|Tp for graph and count, matching file for biject");
    aztec->add_flag("--inverse", inverse, "biject from T' back to T");
    aztec->add_option("--svg", svg);
    aztec->add_option("-o,--output", out);
    aztec->callback([&] {
        if (az_mode == "formula") {
            std::cout << aztec_formula(az_n).get_str() << "\n";
        } else if (az_mode == "graph") {
            AztecInstance inst = aztec_graph(az_n, parse_aztec_variant(input.empty() ? "T" : input));
            emit(save_graph(inst.dual), out);
            if (!svg.empty()) emit(tiling_svg(inst, Matching{}), svg);
        } else if (az_mode == "count") {
            for (AztecVariant v : {AztecVariant::T, AztecVariant::Tprime}) {
                if (!input.empty() && parse_aztec_variant(input) != v) continue;
                std::cout << to_string(v) << " " << format_rational(count_matchings(aztec_graph(az_n, v).dual)) << "\n";
            }
        } else {
            if (input.empty()) throw UsageError("biject needs a matching file");
            AztecBijection b = make_aztec_bijection(az_n);
            const AztecInstance& from = inverse ? b.tp : b.t;
            const AztecInstance& to = inverse ? b.t : b.tp;
            std::string text;
            Matching last;
            for (const auto& line : data_lines(input)) {
                Matching mu = parse_matching(from.dual, line);
                last = inverse ? aztec_biject_inverse(b, mu) : aztec_biject(b, mu);
                text += format_matching(last) + "\n";
            }
            emit(text, out);
            if (!svg.empty()) emit(tiling_svg(to, last), svg);
        }
    });

    // parity
    std::string cycle;
    auto* parity = app.add_subcommand("parity", "H_G vertices strictly inside a cycle of G");
    parity->add_option("file", file)->required();
    parity->add_option("--cycle", cycle)->required();
    parity->callback([&] {
        PlanarGraph g = load_instance_file(file).graph;
        InteriorCount c = interior_vertex_count(g, parse_id_list(g, parse_ids(cycle)));
        std::cout << "vertices " << c.vertices << " edge-vertices " << c.edges << " face-vertices " << c.faces << " total "
                  << c.total() << " " << (c.odd() ? "odd" : "even") << "\n";
    });

    // cli
    unsigned jobs = 1;
    std::optional<std::uint64_t> suite_seed;
    bool timing = false;
    auto* suite = app.add_subcommand("suite", "Run a verification config");
    suite->add_option("config", file)->required();
    suite->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_seed);
    suite->add_flag("--timing", timing, "add wall times (the report is then no longer reproducible)");
    suite->add_option("-o,--output", out);
    suite->callback([&] {
        SuiteOptions opt;
        opt.jobs = jobs;
        opt.seed = suite_seed;
        opt.timing = timing;
        VerificationReport r = run_suite(load_suite(file), opt);
        emit(r.text(), out);
        status = r.pass() ? 0 : 1;
    });

    std::string inst_kind;
    auto* random = app.add_subcommand("random-instance", "Seeded instance satisfying a theorem's hypotheses");
    random->add_option("kind", inst_kind)->required();
    random->add_option("--seed", seed);
    random->add_option("-o,--output", out);
    random->callback([&] { emit(format_instance(random_instance(inst_kind, seed)), out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::InvalidArgument ? 2 : 1;
    }
    return status;
}
