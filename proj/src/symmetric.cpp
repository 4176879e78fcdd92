#include "dimerforge/symmetric.hpp"

#include <algorithm>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "dimerforge/trees.hpp"

namespace dimerforge {

namespace {

[[noreturn]] void hypothesis(const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); }

bool on_axis(const SymmetryCertificate& cert, std::size_t v) { return cert.vertex_image[v] == v; }

std::string vname(const PlanarGraph& g, std::size_t v) { return std::to_string(g.vertex(v).id); }

void check_disjoint(const PlanarGraph& g, const std::vector<std::size_t>& E) {
    std::vector<std::size_t> ends;
    for (std::size_t e : E) {
        if (e >= g.edge_count()) throw Error(ErrorKind::InvalidArgument, "edge index out of range");
        ends.push_back(g.edge(e).u);
        ends.push_back(g.edge(e).v);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) hypothesis("the marked edges are not pairwise disjoint");
}

std::size_t axis_end(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t e) {
    return on_axis(cert, g.edge(e).u) ? g.edge(e).u : g.edge(e).v;
}

bool on_infinite_face(const PlanarGraph& g, std::size_t v) {
    if (g.edge_count() == 0) return true;
    FaceDecomposition faces = trace_faces(g);
    for (std::size_t d : faces.faces[faces.infinite])
        if (g.dart_tail(d) == v) return true;
    return false;
}

}  // namespace

AxisLabels label_axis(const PlanarGraph& g, const SymmetryCertificate& cert) {
    (void)g;
    if (cert.on_axis.size() % 2 != 0) hypothesis("odd number of vertices on the axis");
    AxisLabels out;
    for (std::size_t i = 0; i < cert.on_axis.size(); ++i) (i % 2 == 0 ? out.a : out.b).push_back(cert.on_axis[i]);
    return out;
}

void check_matching_hypotheses(const PlanarGraph& g, const SymmetryCertificate& cert, const std::vector<std::size_t>& E) {
    AxisLabels lab = label_axis(g, cert);
    check_disjoint(g, E);
    for (std::size_t e : E) {
        int hits = 0;
        for (std::size_t x : {g.edge(e).u, g.edge(e).v})
            if (std::find(lab.a.begin(), lab.a.end(), x) != lab.a.end()) ++hits;
        if (hits != 1) hypothesis("edge " + std::to_string(g.edge(e).id) + " does not meet exactly one a_j");
    }
}

WeightSum matching_class_weight(const PlanarGraph& g, const SymmetryCertificate& cert, const std::vector<std::size_t>& E,
                                IndexMask I) {
    std::vector<char> keep(g.vertex_count(), 1);
    Rational w = 1;
    for (std::size_t i = 0; i < E.size(); ++i) {
        std::size_t e = (I >> i) & 1u ? E[i] : cert.edge_image[E[i]];
        for (std::size_t x : {g.edge(e).u, g.edge(e).v}) {
            if (!keep[x]) return 0;
            keep[x] = 0;
        }
        w *= g.edge(e).weight;
    }
    return w * count_matchings(g.induced(keep));
}

std::vector<WeightSum> matching_class_weights(const PlanarGraph& g, const SymmetryCertificate& cert,
                                              const std::vector<std::size_t>& E) {
    check_matching_hypotheses(g, cert, E);
    std::vector<WeightSum> out;
    for (IndexMask I = 0; I < (IndexMask{1} << E.size()); ++I) out.push_back(matching_class_weight(g, cert, E, I));
    return out;
}

void check_tree_hypotheses(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                           const std::vector<std::size_t>& E) {
    if (!on_axis(cert, v)) hypothesis("root " + vname(g, v) + " is off the axis");
    if (!on_infinite_face(g, v)) hypothesis("root " + vname(g, v) + " is not on the infinite face");
    check_disjoint(g, E);
    for (std::size_t e : E) {
        int hits = on_axis(cert, g.edge(e).u) + on_axis(cert, g.edge(e).v);
        if (hits != 1) hypothesis("edge " + std::to_string(g.edge(e).id) + " does not have exactly one end on the axis");
        if (g.edge(e).u == v || g.edge(e).v == v) hypothesis("edge " + std::to_string(g.edge(e).id) + " meets the root");
    }
}

WeightSum class_weight(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                       const std::vector<std::size_t>& E, IndexMask I) {
    check_tree_hypotheses(g, cert, v, E);
    std::vector<std::vector<std::size_t>> allowed(g.vertex_count());
    for (std::size_t i = 0; i < E.size(); ++i)
        allowed[axis_end(g, cert, E[i])] = {(I >> i) & 1u ? E[i] : cert.edge_image[E[i]]};
    return count_rooted_trees(g, v, allowed);
}

std::vector<WeightSum> tree_class_weights(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                          const std::vector<std::size_t>& E) {
    std::vector<WeightSum> out;
    for (IndexMask I = 0; I < (IndexMask{1} << E.size()); ++I) out.push_back(class_weight(g, cert, v, E, I));
    return out;
}

std::vector<WeightSum> tree_class_weights_enumerated(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                                     const std::vector<std::size_t>& E) {
    check_tree_hypotheses(g, cert, v, E);
    std::vector<WeightSum> out(std::size_t{1} << E.size(), 0);
    for_each_rooted_forest(g, {v}, [&](const RootedForest& t) {
        IndexMask I = 0;
        for (std::size_t i = 0; i < E.size(); ++i) {
            std::size_t exit = t.parent_edge[axis_end(g, cert, E[i])];
            if (exit == E[i])
                I |= IndexMask{1} << i;
            else if (exit != cert.edge_image[E[i]])
                return true;
        }
        out[I] += forest_weight(g, t);
        return true;
    });
    return out;
}

IndependenceKind parse_independence_kind(const std::string& s) {
    if (s == "exit") return IndependenceKind::Exit;
    if (s == "hv") return IndependenceKind::HorizontalVertical;
    throw Error(ErrorKind::InvalidArgument, "unknown kind '" + s + "', expected exit or hv");
}

std::string to_string(IndependenceKind k) { return k == IndependenceKind::Exit ? "exit" : "hv"; }

std::vector<std::size_t> independence_variables(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                                IndependenceKind kind) {
    if (!on_axis(cert, v)) hypothesis("root " + vname(g, v) + " is off the axis");
    if (!on_infinite_face(g, v)) hypothesis("root " + vname(g, v) + " is not on the infinite face");
    if (kind == IndependenceKind::HorizontalVertical) {
        for (const Edge& e : g.edges()) {
            Rational dx = g.vertex(e.v).pos.x - g.vertex(e.u).pos.x;
            Rational dy = g.vertex(e.v).pos.y - g.vertex(e.u).pos.y;
            if (abs(dx) != 1 || abs(dy) != 1) hypothesis("edge " + std::to_string(e.id) + " is not a diagonal grid step");
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t x : cert.on_axis) {
        if (x == v) continue;
        if (kind == IndependenceKind::Exit) {
            bool along = false;
            for (std::size_t e : g.rotation(x)) along = along || on_axis(cert, g.other(e, x));
            if (along) continue;
        }
        out.push_back(x);
    }
    if (out.size() > 20) hypothesis("too many variables");
    return out;
}

namespace {

bool value_of(const PlanarGraph& g, const SymmetryCertificate& cert, IndependenceKind kind, std::size_t x, std::size_t e) {
    std::size_t y = g.other(e, x);
    if (kind == IndependenceKind::Exit) return g.vertex(y).pos.y > cert.axis;
    Rational dx = g.vertex(y).pos.x - g.vertex(x).pos.x;
    Rational dy = g.vertex(y).pos.y - g.vertex(x).pos.y;
    return sgn(dx) * sgn(dy) < 0;
}

}  // namespace

double uniform_chi_square(const std::vector<std::uint64_t>& counts, double* statistic) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    const double expect = total / static_cast<double>(counts.size());
    double stat = 0;
    for (auto c : counts) {
        double d = static_cast<double>(c) - expect;
        stat += d * d / expect;
    }
    if (statistic) *statistic = stat;
    if (counts.size() < 2 || total == 0) return 1.0;
    boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

IndependenceReport independence_report(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                       IndependenceKind kind, std::uint64_t samples, std::uint64_t seed,
                                       std::uint64_t enumeration_limit) {
    std::vector<std::size_t> vars = independence_variables(g, cert, v, kind);
    IndependenceReport r;
    r.kind = kind;
    r.root = g.vertex(v).id;
    for (std::size_t x : vars) r.variables.push_back(g.vertex(x).id);
    const std::size_t cells = std::size_t{1} << vars.size();
    r.cells.assign(cells, 0);
    auto classify = [&](const RootedForest& t) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (value_of(g, cert, kind, vars[i], t.parent_edge[vars[i]])) mask |= std::size_t{1} << i;
        return mask;
    };

    WeightSum plain_count = count_spanning_trees(g.with_weights(std::vector<Rational>(g.edge_count(), 1)));
    if (plain_count <= Rational(static_cast<unsigned long>(enumeration_limit))) {
        r.method = "enumeration";
        for_each_rooted_forest(g, {v}, [&](const RootedForest& t) {
            r.cells[classify(t)] += forest_weight(g, t);
            return true;
        });
    } else {
        r.method = "matrix-tree";
        for (std::size_t mask = 0; mask < cells; ++mask) {
            std::vector<std::vector<std::size_t>> allowed(g.vertex_count());
            bool empty = false;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                bool want = (mask >> i) & 1u;
                for (std::size_t e : g.rotation(vars[i]))
                    if (value_of(g, cert, kind, vars[i], e) == want) allowed[vars[i]].push_back(e);
                empty = empty || allowed[vars[i]].empty();
            }
            r.cells[mask] = empty ? Rational(0) : count_rooted_trees(g, v, allowed);
        }
    }
    for (const auto& c : r.cells) r.total += c;
    r.uniform = std::all_of(r.cells.begin(), r.cells.end(), [&](const WeightSum& c) { return c == r.cells[0]; });

    if (samples > 0) {
        r.samples = samples;
        r.seed = seed;
        r.sample_counts.assign(cells, 0);
        Rng rng(seed);
        for (std::uint64_t s = 0; s < samples; ++s) ++r.sample_counts[classify(ust_sample(g, v, rng))];
        r.p_value = uniform_chi_square(r.sample_counts, &r.chi_square);
        r.sample_pass = r.p_value >= 1e-6;
    }
    return r;
}

std::string IndependenceReport::text() const {
    std::ostringstream out;
    out << "kind " << to_string(kind) << "\nroot " << root << "\nvariables";
    for (Id x : variables) out << ' ' << x;
    out << "\nmethod " << method << "\n";
    for (std::size_t mask = 0; mask < cells.size(); ++mask) {
        std::string bits;
        for (std::size_t i = 0; i < variables.size(); ++i) bits += ((mask >> i) & 1u) ? '1' : '0';
        if (bits.empty()) bits = "-";
        Rational p = sgn(total) == 0 ? Rational(0) : Rational(cells[mask] / total);
        out << "cell " << bits << " weight " << format_rational(cells[mask]) << " probability " << format_rational(p);
        if (samples > 0) out << " sampled " << sample_counts[mask];
        out << "\n";
    }
    out << "exact " << (uniform ? "PASS" : "FAIL") << "\n";
    if (samples > 0) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "chi2 %.6f p %.6g", chi_square, p_value);
        out << "samples " << samples << " seed " << seed << ' ' << buf << ' ' << (sample_pass ? "PASS" : "FAIL") << "\n";
    }
    out << "result " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace dimerforge
