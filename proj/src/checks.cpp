#include "dimerforge/checks.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "dimerforge/aztec.hpp"
#include "dimerforge/banded.hpp"
#include "dimerforge/bijections.hpp"
#include "dimerforge/generators.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/parity.hpp"
#include "dimerforge/symmetric.hpp"
#include "dimerforge/tea.hpp"
#include "dimerforge/trees.hpp"

namespace dimerforge {

void CheckOutcome::fail(const std::string& why, const std::string& witness_text) {
    if (!pass) return;
    pass = false;
    lines.push_back("mismatch: " + why);
    witness = witness_text;
}

std::string CheckSpec::get(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::int64_t CheckSpec::get_int(const std::string& key, std::int64_t fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(it->second, &used);
        if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::ConfigError, "bad value for " + key + ": '" + it->second + "'");
}

std::uint64_t CheckSpec::seed(std::uint64_t fallback) const {
    return static_cast<std::uint64_t>(get_int("seed", static_cast<std::int64_t>(fallback)));
}

namespace {

std::string str(const Rational& r) { return format_rational(r); }

Rational sum_weights(const PlanarGraph& g, const std::vector<Matching>& ms) {
    Rational s = 0;
    for (const Matching& m : ms) s += matching_weight(g, m);
    return s;
}

std::string matching_witness(const std::string& label, const Matching& m) {
    return label + "\n" + format_matching(m) + "\n";
}

std::vector<std::size_t> outer_vertices(const PlanarGraph& g, const FaceDecomposition& f) {
    std::set<std::size_t> s;
    for (std::size_t d : f.faces[f.infinite]) s.insert(g.dart_tail(d));
    if (g.edge_count() == 0)
        for (std::size_t v = 0; v < g.vertex_count(); ++v) s.insert(v);
    return {s.begin(), s.end()};
}

std::vector<ConstraintPath> constraint_paths(const TeaInstance& inst, const InstanceFile& f) {
    std::vector<ConstraintPath> P;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        auto it = f.constraints.find(static_cast<int>(i));
        if (it == f.constraints.end()) return {};
        ConstraintPath p;
        for (Id id : it->second) {
            auto x = inst.ref.graph.vertex_index(id);
            if (!x) throw Error(ErrorKind::ParseError, "constraint vertex " + std::to_string(id) + " is not in H_G");
            p.push_back(*x);
        }
        P.push_back(std::move(p));
    }
    return P;
}

std::vector<int> subset(unsigned mask, std::size_t k) {
    std::vector<int> I;
    for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) I.push_back(static_cast<int>(i + 1));
    return I;
}

std::string set_text(const std::vector<int>& I) {
    std::string s = "{";
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    return s + "}";
}

}  // namespace

CheckOutcome check_kasteleyn(int max_mn, bool include_eight) {
    CheckOutcome out;
    auto one = [&](int m, int n) {
        BigInt k = kasteleyn_grid_count(m, n);
        Rational c = count_matchings(grid_graph(2 * m, 2 * n));
        std::string line = std::to_string(2 * m) + "x" + std::to_string(2 * n) + " product " + k.get_str() + " count " + str(c);
        if (2 * m * 2 * n <= 36) {
            std::size_t e = enumerate_matchings(grid_graph(2 * m, 2 * n)).size();
            line += " enumerated " + std::to_string(e);
            if (Rational(static_cast<long>(e)) != c) out.fail(line);
        }
        out.note(line);
        if (Rational(k) != c) out.fail(line);
    };
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n) one(m, n);
    if (include_eight) one(4, 4);
    return out;
}

CheckOutcome check_theorem21(const InstanceFile& f) {
    CheckOutcome out;
    Section2Instance inst = make_section2(f.graph, f.path);
    auto plus = enumerate_matchings(inst.plus);
    auto minus = enumerate_matchings(inst.minus);
    Rational wp = sum_weights(inst.plus, plus), wm = sum_weights(inst.minus, minus);
    out.note("n " + std::to_string(inst.n()) + " H " + std::to_string(inst.ref.graph.vertex_count()) + " M(G+) " +
             str(wp) + " M(G-) " + str(wm));
    if (wp != wm) out.fail("M(G+) != M(G-)");
    if (count_matchings(inst.plus) != wp || count_matchings(inst.minus) != wm)
        out.fail("enumeration and counting disagree");
    return out;
}

CheckOutcome check_phi_psi(const InstanceFile& f, std::size_t limit) {
    CheckOutcome out;
    Section2Instance inst = make_section2(f.graph, f.path);
    Rational total = count_matchings(inst.plus);
    if (total > Rational(static_cast<long>(limit))) {
        out.note("skipped, " + str(total) + " matchings");
        return out;
    }
    auto plus = enumerate_matchings(inst.plus);
    auto minus = enumerate_matchings(inst.minus);
    std::set<Matching> images;
    for (const Matching& mu : plus) {
        Matching nu = phi(inst, mu);
        if (!is_perfect(inst.minus, nu)) return out.fail("phi(mu) is not a matching of G-", matching_witness("mu", mu)), out;
        if (psi(inst, nu) != mu) return out.fail("psi(phi(mu)) != mu", matching_witness("mu", mu)), out;
        if (!images.insert(nu).second) return out.fail("phi is not injective", matching_witness("mu", mu)), out;
    }
    for (const Matching& nu : minus)
        if (phi(inst, psi(inst, nu)) != nu) return out.fail("phi(psi(nu)) != nu", matching_witness("nu", nu)), out;
    if (images.size() != minus.size()) out.fail("phi is not onto M(G-)");
    out.note("matchings " + std::to_string(plus.size()) + " round trips ok");
    return out;
}

CheckOutcome check_symmetrize(const InstanceFile& f) {
    CheckOutcome out;
    Section2Instance inst = make_section2(f.graph, f.path);
    Rational bar = count_matchings(symmetrize(inst));
    Rational mp = count_matchings(inst.plus), mm = count_matchings(inst.minus);
    Rational expect = mp * mm;
    for (int i = 0; i < inst.n(); ++i) expect *= 2;
    std::string line = "M(bar) " + str(bar) + " 2^" + std::to_string(inst.n()) + "*" + str(mp) + "*" + str(mm);
    if (bar != expect) out.fail(line);
    if (bar.get_den() != 1) out.fail("fractional count " + str(bar));
    SquarishVerdict v = squarish(bar.get_num());
    line += " " + describe(v);
    out.note(line);
    if (v.kind == SquarishVerdict::Kind::No) out.fail("not squarish: " + str(bar));
    return out;
}

CheckOutcome check_trimmed(int n, const std::vector<Peak>& peaks) {
    CheckOutcome out;
    PlanarGraph g = trimmed_square(n, peaks);
    Rational c = count_matchings(g);
    std::string removals;
    for (const Peak& p : peaks) removals += (removals.empty() ? "" : ";") + std::to_string(p.i) + "," + std::to_string(p.j);
    SquarishVerdict v = squarish(c.get_num());
    out.note("n " + std::to_string(n) + " removals [" + removals + "] count " + str(c) + " " + describe(v));
    if (c.get_den() != 1 || v.kind == SquarishVerdict::Kind::No) out.fail("count " + str(c) + " is not squarish", save_graph(g));
    return out;
}

CheckOutcome check_temperley(const PlanarGraph& g) {
    CheckOutcome out;
    Rational trees = count_spanning_trees(g);
    Refinement ref = refine(g);
    auto all = enumerate_spanning_trees(g, 0);
    Rational enumerated = 0;
    for (const RootedForest& t : all) enumerated += forest_weight(g, t);
    if (enumerated != trees) out.fail("Matrix-Tree " + str(trees) + " vs enumeration " + str(enumerated));
    std::size_t roots = 0;
    for (std::size_t v : outer_vertices(g, ref.faces)) {
        TemperleyHost host = temperley_host(ref, v);
        Rational m = count_matchings(host.graph);
        if (m != trees) {
            out.fail("count_matchings(H_G minus " + std::to_string(g.vertex(v).id) + ") = " + str(m) + " vs trees " + str(trees));
            return out;
        }
        ++roots;
        auto tv = enumerate_spanning_trees(g, v);
        std::set<Matching> seen;
        for (const RootedForest& t : tv) {
            Matching mu = temperley_tree_to_matching(host, t);
            if (!is_perfect(host.graph, mu)) return out.fail("tree maps to a non-matching", format_forest(g, t)), out;
            if (matching_weight(host.graph, mu) != forest_weight(g, t))
                return out.fail("weight changed", format_forest(g, t)), out;
            if (temperley_matching_to_tree(host, mu) != t) return out.fail("tree round trip", format_forest(g, t)), out;
            seen.insert(mu);
        }
        for (const Matching& mu : enumerate_matchings(host.graph)) {
            if (!seen.count(mu)) return out.fail("matching not hit by any tree", matching_witness("mu", mu)), out;
            if (temperley_tree_to_matching(host, temperley_matching_to_tree(host, mu)) != mu)
                return out.fail("matching round trip", matching_witness("mu", mu)), out;
        }
    }
    out.note("vertices " + std::to_string(g.vertex_count()) + " trees " + str(trees) + " roots " + std::to_string(roots));
    return out;
}

CheckOutcome check_theorem23(const InstanceFile& f) {
    CheckOutcome out;
    const PlanarGraph& g = f.graph;
    std::vector<std::size_t> path = parse_id_list(g, f.path);
    validate_boundary_path(g, f.path);
    const std::size_t len = path.size();
    auto weigh = [&](std::size_t root, int dir) {
        Rational total = 0;
        std::vector<std::vector<std::size_t>> allowed(g.vertex_count());
        for (std::size_t i = 1; i + 1 < len; i += 2) {
            std::size_t to = dir > 0 ? path[i + 1] : path[i - 1];
            allowed[path[i]] = {*g.edge_between(path[i], to)};
        }
        for_each_rooted_forest(g, {root}, [&](const RootedForest& t) {
            for (std::size_t i = 1; i + 1 < len; i += 2)
                if (t.parent_edge[path[i]] != allowed[path[i]][0]) return true;
            total += forest_weight(g, t);
            return true;
        });
        Rational direct = count_rooted_trees(g, root, allowed);
        if (direct != total) out.fail("enumeration " + str(total) + " vs Matrix-Tree " + str(direct));
        return total;
    };
    Rational right = weigh(path.back(), +1);
    Rational left = weigh(path.front(), -1);
    out.note("n " + std::to_string((len + 1) / 2) + " rooted at v_2n-1 " + str(right) + " rooted at v_1 " + str(left));
    if (right != left) out.fail("constrained tree counts differ");
    return out;
}

CheckOutcome check_tea(const InstanceFile& f) {
    CheckOutcome out;
    TeaInstance inst = make_tea_instance(f.graph, f.marks, f.primed, true);
    std::vector<ConstraintPath> P = constraint_paths(inst, f);
    const std::size_t k = inst.size();
    auto m1 = enumerate_matchings(inst.host1);
    auto m2 = enumerate_matchings(inst.host2);
    std::string counts;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (mask && P.empty()) break;
        std::vector<int> I = subset(mask, k);
        Rational w1 = 0, w2 = 0;
        std::size_t c1 = 0;
        std::set<Matching> images;
        for (const Matching& mu : m1)
            if (satisfies_constraints(inst, mu, 1, I, P)) w1 += matching_weight(inst.host1, mu), ++c1;
        for (const Matching& mu : m2) {
            if (!satisfies_constraints(inst, mu, 2, I, P)) continue;
            w2 += matching_weight(inst.host2, mu);
            Matching nu;
            try {
                nu = tea_transport(inst, mu, I, P, 2);
            } catch (const Error& e) {
                return out.fail(std::string("transport failed for I = ") + set_text(I) + ": " + e.what(),
                                matching_witness("mu", mu)), out;
            }
            if (!is_perfect(inst.host1, nu) || !satisfies_constraints(inst, nu, 1, I, P))
                return out.fail("image outside set (1) for I = " + set_text(I), matching_witness("mu", mu)), out;
            if (matching_weight(inst.host1, nu) != matching_weight(inst.host2, mu))
                return out.fail("weight changed for I = " + set_text(I), matching_witness("mu", mu)), out;
            if (tea_transport(inst, nu, I, P, 1) != mu)
                return out.fail("round trip for I = " + set_text(I), matching_witness("mu", mu)), out;
            if (!images.insert(nu).second) return out.fail("transport not injective", matching_witness("mu", mu)), out;
        }
        if (w1 != w2) return out.fail("weights differ for I = " + set_text(I) + ": " + str(w1) + " vs " + str(w2)), out;
        if (images.size() != c1) return out.fail("transport not onto set (1) for I = " + set_text(I)), out;
        counts += (counts.empty() ? "" : " ") + set_text(I) + ":" + str(w2);
    }
    out.note("n " + std::to_string(inst.n) + " " + counts);
    return out;
}

CheckOutcome check_aztec(int max_formula, int max_enumerate) {
    CheckOutcome out;
    static const long known[] = {1, 4, 60, 3328, 678912};
    std::string values;
    for (int n = 1; n <= max_formula; ++n) {
        BigInt v = aztec_formula(n);
        values += (n > 1 ? " " : "") + v.get_str();
        if (n <= 5 && v != known[n - 1]) out.fail("formula(" + std::to_string(n) + ") = " + v.get_str());
    }
    out.note("formula " + values);
    for (int n = 1; n <= max_enumerate; ++n) {
        BigInt expect = aztec_formula(n);
        AztecBijection b = make_aztec_bijection(n);
        auto mt = enumerate_matchings(b.t.dual);
        auto mtp = enumerate_matchings(b.tp.dual);
        out.note("n " + std::to_string(n) + " T " + std::to_string(mt.size()) + " Tp " + std::to_string(mtp.size()));
        if (BigInt(static_cast<unsigned long>(mt.size())) != expect || BigInt(static_cast<unsigned long>(mtp.size())) != expect)
            out.fail("enumeration disagrees with the formula at n = " + std::to_string(n));
        std::set<Matching> images;
        for (const Matching& mu : mt) {
            Matching nu;
            try {
                nu = aztec_biject(b, mu);
            } catch (const Error& e) {
                return out.fail(std::string("bijection failed: ") + e.what(), matching_witness("tiling of T", mu)), out;
            }
            if (!is_perfect(b.tp.dual, nu)) return out.fail("image is not a tiling", matching_witness("tiling of T", mu)), out;
            if (aztec_biject_inverse(b, nu) != mu) return out.fail("round trip", matching_witness("tiling of T", mu)), out;
            images.insert(nu);
        }
        if (images.size() != mtp.size()) out.fail("bijection not onto at n = " + std::to_string(n));
        for (const Matching& nu : mtp)
            if (aztec_biject(b, aztec_biject_inverse(b, nu)) != nu)
                return out.fail("inverse round trip", matching_witness("tiling of T'", nu)), out;
    }
    return out;
}

CheckOutcome check_tec(const InstanceFile& f) {
    CheckOutcome out;
    TeaInstance inst = make_tea_instance(f.graph, f.marks, f.primed, false);
    const PlanarGraph& g = inst.ref.base;
    auto forests = enumerate_tec_forests(inst);
    auto matchings = enumerate_matchings(inst.host2);
    std::size_t channels = 0, bays = 0;
    std::set<Matching> images;
    for (const RootedForest& F : forests) {
        BandedForestCertificate cert = certify_tec_forest(inst, F);
        for (const auto& c : cert.components) {
            (c.kind == BandedForestCertificate::Kind::Channel ? channels : bays)++;
            if (c.z_faces.empty() || c.arcs.size() != c.z_faces.size())
                return out.fail("component without arc witness", format_forest(g, F)), out;
        }
        Matching mu = tec_forest_to_matching(inst, F);
        if (!is_perfect(inst.host2, mu)) return out.fail("forest maps to a non-matching", format_forest(g, F)), out;
        if (matching_weight(inst.host2, mu) != tec_forest_weight(inst, F))
            return out.fail("weight changed", format_forest(g, F)), out;
        if (tec_matching_to_forest(inst, mu) != F) return out.fail("forest round trip", format_forest(g, F)), out;
        images.insert(mu);
    }
    for (const Matching& mu : matchings) {
        RootedForest F;
        try {
            F = tec_matching_to_forest(inst, mu);
        } catch (const Error& e) {
            return out.fail(std::string("matching has no forest: ") + e.what(), matching_witness("mu", mu)), out;
        }
        if (tec_forest_to_matching(inst, F) != mu) return out.fail("matching round trip", matching_witness("mu", mu)), out;
        if (!images.count(mu)) return out.fail("matching not hit by any forest", matching_witness("mu", mu)), out;
    }
    if (images.size() != matchings.size()) out.fail("forest and matching counts differ");
    std::vector<ConstraintPath> P = constraint_paths(inst, f);
    std::string counts;
    for (unsigned mask = 1; !P.empty() && mask < (1u << inst.size()); ++mask) {
        std::vector<int> I = subset(mask, inst.size());
        Rational wf = 0, wm = 0;
        for (const RootedForest& F : forests)
            if (forest_satisfies(inst, F, I, P)) wf += tec_forest_weight(inst, F);
        for (const Matching& mu : matchings)
            if (satisfies_constraints(inst, mu, 2, I, P)) wm += matching_weight(inst.host2, mu);
        if (wf != wm) return out.fail("constrained weights differ for I = " + set_text(I) + ": " + str(wf) + " vs " + str(wm)), out;
        counts += " " + set_text(I) + ":" + str(wm);
    }
    out.note("n " + std::to_string(inst.n) + " forests " + std::to_string(forests.size()) + " matchings " +
             std::to_string(matchings.size()) + " channels " + std::to_string(channels) + " bays " + std::to_string(bays) +
             counts);
    return out;
}

CheckOutcome check_parity(const PlanarGraph& g) {
    CheckOutcome out;
    auto cycles = enumerate_simple_cycles(g);
    for (const auto& c : cycles) {
        InteriorCount ic = interior_vertex_count(g, c);
        if (!ic.odd() || !ic.euler_holds()) {
            std::string w;
            for (std::size_t v : c) w += (w.empty() ? "" : ",") + std::to_string(g.vertex(v).id);
            return out.fail("cycle with " + std::to_string(ic.total()) + " interior vertices", w), out;
        }
    }
    out.note("vertices " + std::to_string(g.vertex_count()) + " cycles " + std::to_string(cycles.size()));
    return out;
}

CheckOutcome check_symmetric(const InstanceFile& f) {
    CheckOutcome out;
    const PlanarGraph& g = f.graph;
    if (!f.axis || !f.root) throw Error(ErrorKind::HypothesisViolated, "symmetric instance needs axis and root");
    SymmetryCertificate cert = check_reflection_symmetry(g, *f.axis);
    std::size_t v = parse_id_list(g, {*f.root})[0];
    std::vector<std::size_t> E;
    for (Id id : f.marked) {
        auto e = g.edge_index(id);
        if (!e) throw Error(ErrorKind::ParseError, "unknown edge " + std::to_string(id));
        E.push_back(*e);
    }
    auto all_equal = [](const std::vector<WeightSum>& w) {
        return std::all_of(w.begin(), w.end(), [&](const WeightSum& x) { return x == w[0]; });
    };
    auto text = [](const std::vector<WeightSum>& w) {
        std::string s;
        for (const auto& x : w) s += (s.empty() ? "" : ",") + format_rational(x);
        return s;
    };
    std::string line = "s " + std::to_string(E.size());
    // Marked edges at b's only qualify for the tree level; such instances skip the matching level
    // unless they were declared as matching instances.
    bool matching_level = cert.on_axis.size() % 2 == 0;
    if (matching_level && f.kind != "symmetric-matching") {
        try {
            check_matching_hypotheses(g, cert, E);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::HypothesisViolated) throw;
            matching_level = false;
            line += " matching level not applicable";
        }
    }
    if (matching_level) {
        auto mw = matching_class_weights(g, cert, E);
        line += " matching classes " + text(mw);
        if (!all_equal(mw)) out.fail("matching class weights differ");
        AxisLabels lab = label_axis(g, cert);
        std::size_t swaps = 0;
        for (const Matching& mu : enumerate_matchings(g))
            for (std::size_t a : lab.a) {
                Matching nu = reflect_swap(g, cert, mu, a);
                if (!is_perfect(g, nu) || matching_weight(g, nu) != matching_weight(g, mu) ||
                    reflect_swap(g, cert, nu, a) != mu)
                    return out.fail("reflect_swap at " + std::to_string(g.vertex(a).id), matching_witness("mu", mu)), out;
                ++swaps;
            }
        line += " swaps " + std::to_string(swaps);
    }
    auto tw = tree_class_weights(g, cert, v, E);
    auto te = tree_class_weights_enumerated(g, cert, v, E);
    line += " tree classes " + text(tw);
    if (tw != te) out.fail("Matrix-Tree and enumeration disagree");
    if (!all_equal(tw)) out.fail("tree class weights differ");
    out.note(line);
    return out;
}

CheckOutcome check_independence(const InstanceFile& f, const std::string& kind, std::uint64_t samples,
                                 std::uint64_t seed) {
    CheckOutcome out;
    const PlanarGraph& g = f.graph;
    if (!f.axis || !f.root) throw Error(ErrorKind::HypothesisViolated, "independence needs axis and root");
    SymmetryCertificate cert = check_reflection_symmetry(g, *f.axis);
    std::size_t v = parse_id_list(g, {*f.root})[0];
    IndependenceReport r = independence_report(g, cert, v, parse_independence_kind(kind), samples, seed);
    std::istringstream in(r.text());
    for (std::string line; std::getline(in, line);) out.note(line);
    if (!r.uniform) out.fail("cells are not all equal");
    if (!r.sample_pass) out.fail("chi-square test rejected uniformity");
    return out;
}

namespace {

using Generator = std::function<InstanceFile(Rng&)>;
using PerInstance = std::function<CheckOutcome(const InstanceFile&, std::size_t index)>;

std::string resolve(const CheckSpec& spec, const std::string& file) {
    std::filesystem::path p(file);
    if (p.is_relative() && !spec.base_dir.empty()) p = std::filesystem::path(spec.base_dir) / p;
    if (!std::filesystem::exists(p)) throw Error(ErrorKind::ConfigError, "missing file " + p.string());
    return p.string();
}

CheckOutcome over_family(const CheckSpec& spec, std::int64_t default_count, const Generator& gen, const PerInstance& run) {
    CheckOutcome out;
    std::vector<InstanceFile> family;
    std::string file = spec.get("file", "");
    if (!file.empty()) {
        family.push_back(load_instance_file(resolve(spec, file)));
    } else {
        Rng base(spec.seed(1));
        std::int64_t count = spec.get_int("count", default_count);
        for (std::int64_t i = 0; i < count; ++i) {
            Rng r = base.split();
            family.push_back(gen(r));
        }
    }
    std::size_t passed = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        CheckOutcome one;
        try {
            one = run(family[i], i);
        } catch (const Error& e) {
            one.fail(e.what());
        }
        for (const std::string& l : one.lines) out.note("instance " + std::to_string(i) + ": " + l);
        if (one.pass) {
            ++passed;
        } else if (out.pass) {
            out.pass = false;
            out.witness = format_instance(family[i]) + (one.witness.empty() ? "" : "# witness\n" + one.witness);
        }
    }
    out.lines.insert(out.lines.begin(), "instances " + std::to_string(family.size()) + " passed " + std::to_string(passed));
    return out;
}

PlaneGraphOptions small_plane(Rng& rng) {
    PlaneGraphOptions opt;
    opt.max_vertices = 12;
    opt.max_cells = 4;
    opt.weighted = rng.uniform() < 0.5;
    return opt;
}

InstanceFile plane_instance(Rng& rng) {
    InstanceFile f;
    f.kind = "plane";
    PlaneGraphOptions opt = small_plane(rng);
    f.graph = random_plane_graph(rng, opt);
    return f;
}

// A symmetric instance with between one and max_vars variables of the given kind.
InstanceFile independence_instance(Rng& rng, bool grid, int max_vars) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        InstanceFile f = grid ? random_diagonal_grid(rng, 3 + static_cast<int>(rng.below(2))) : random_symmetric(rng, false);
        SymmetryCertificate cert = check_reflection_symmetry(f.graph, *f.axis);
        std::size_t v = parse_id_list(f.graph, {*f.root})[0];
        auto vars = independence_variables(f.graph, cert, v, grid ? IndependenceKind::HorizontalVertical : IndependenceKind::Exit);
        if (!vars.empty() && static_cast<int>(vars.size()) <= max_vars) {
            f.kind = grid ? "independence-hv" : "independence-exit";
            return f;
        }
    }
    throw Error(ErrorKind::GenerationExhausted, "no independence instance found");
}

}  // namespace

std::vector<std::string> check_names() {
    return {"kasteleyn", "theorem21", "phi-psi", "symmetrize", "trimmed", "temperley", "theorem23", "tea",
            "aztec",     "tec",       "parity",  "symmetric",  "independence", "wilson"};
}

CheckOutcome run_check(const CheckSpec& spec) {
    const std::string& n = spec.name;
    auto section2 = [](Rng& r) { return random_section2(r); };
    if (n == "kasteleyn") return check_kasteleyn(static_cast<int>(spec.get_int("max", 3)), spec.get_int("eight", 1) != 0);
    if (n == "theorem21")
        return over_family(spec, 200, section2, [](const InstanceFile& f, std::size_t) { return check_theorem21(f); });
    if (n == "phi-psi") {
        std::size_t limit = static_cast<std::size_t>(spec.get_int("limit", 10000));
        return over_family(spec, 200, section2, [limit](const InstanceFile& f, std::size_t) { return check_phi_psi(f, limit); });
    }
    if (n == "symmetrize")
        return over_family(spec, 200, section2, [](const InstanceFile& f, std::size_t) { return check_symmetrize(f); });
    if (n == "theorem23")
        return over_family(spec, 30, section2, [](const InstanceFile& f, std::size_t) { return check_theorem23(f); });
    if (n == "trimmed") {
        CheckOutcome out;
        Rng base(spec.seed(1));
        int max_n = static_cast<int>(spec.get_int("max_n", 3));
        std::int64_t count = spec.get_int("count", 50);
        std::size_t passed = 0;
        for (std::int64_t i = 0; i < count; ++i) {
            Rng r = base.split();
            int size = 1 + static_cast<int>(r.below(static_cast<std::uint64_t>(max_n)));
            auto peaks = random_peaks(r, size, static_cast<int>(r.below(2 * size * size)));
            CheckOutcome one = check_trimmed(size, peaks);
            for (const auto& l : one.lines) out.note("instance " + std::to_string(i) + ": " + l);
            if (one.pass) ++passed;
            else if (out.pass) out.pass = false, out.witness = one.witness;
        }
        out.lines.insert(out.lines.begin(), "instances " + std::to_string(count) + " passed " + std::to_string(passed) +
                                                " (empirical evidence, not a theorem)");
        return out;
    }
    if (n == "temperley") {
        CheckOutcome out = over_family(spec, 30, plane_instance,
                                       [](const InstanceFile& f, std::size_t) { return check_temperley(f.graph); });
        if (spec.get("file", "").empty()) {
            PlanarGraph grid = grid_graph(3, 3);
            Rational t = count_spanning_trees(grid);
            Refinement ref = refine(grid);
            Rational m = count_matchings(temperley_host(ref, 0).graph);
            out.note("grid 3x3 trees " + str(t) + " matchings of H_G minus a corner " + str(m));
            if (t != 192 || m != 192) out.fail("3x3 grid value is not 192");
        }
        return out;
    }
    if (n == "tea") {
        int max_n = static_cast<int>(spec.get_int("max_n", 1));
        return over_family(spec, 10, [max_n](Rng& r) { return random_tea(r, false, max_n); },
                           [](const InstanceFile& f, std::size_t) { return check_tea(f); });
    }
    if (n == "tec") {
        int max_n = static_cast<int>(spec.get_int("max_n", 1));
        return over_family(spec, 10, [max_n](Rng& r) { return random_tea(r, true, max_n); },
                           [](const InstanceFile& f, std::size_t) { return check_tec(f); });
    }
    if (n == "aztec")
        return check_aztec(static_cast<int>(spec.get_int("formula", 5)), static_cast<int>(spec.get_int("enumerate", 3)));
    if (n == "parity") {
        CheckOutcome out = over_family(spec, 30, plane_instance,
                                       [](const InstanceFile& f, std::size_t) { return check_parity(f.graph); });
        if (spec.get("file", "").empty())
            for (auto [r, c] : {std::pair{3, 3}, std::pair{3, 4}}) {
                CheckOutcome one = check_parity(grid_graph(r, c));
                out.note("grid " + std::to_string(r) + "x" + std::to_string(c) + ": " + one.lines.back());
                if (!one.pass) out.fail("grid cycle", one.witness);
            }
        return out;
    }
    if (n == "symmetric")
        return over_family(spec, 30, [](Rng& r) { return random_symmetric(r, true); },
                           [](const InstanceFile& f, std::size_t) { return check_symmetric(f); });
    if (n == "independence") {
        int max_vars = static_cast<int>(spec.get_int("max_vars", 4));
        std::string kind = spec.get("kind", "");
        std::uint64_t samples = static_cast<std::uint64_t>(spec.get_int("samples", 0));
        std::uint64_t seed = spec.seed(1);
        std::size_t index = 0;
        return over_family(
            spec, 20,
            [&](Rng& r) { return independence_instance(r, index++ % 2 == 1, max_vars); },
            [&](const InstanceFile& f, std::size_t i) {
                std::string k = !kind.empty() ? kind : f.kind == "independence-hv" ? "hv" : "exit";
                return check_independence(f, k, samples, seed + i);
            });
    }
    if (n == "wilson") {
        int k = static_cast<int>(spec.get_int("k", 5));
        InstanceFile f;
        f.kind = "symmetric";
        f.graph = diagonal_grid(k);
        f.axis = Rational(0);
        f.root = 0;
        CheckOutcome out = check_independence(f, spec.get("kind", "hv"), static_cast<std::uint64_t>(spec.get_int("samples", 100000)),
                                              spec.seed(1));
        out.lines.insert(out.lines.begin(), "diagonal grid " + std::to_string(k) + "x" + std::to_string(k));
        return out;
    }
    throw Error(ErrorKind::ConfigError, "unknown check '" + n + "'");
}

}  // namespace dimerforge
