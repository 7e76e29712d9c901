#include "mplang/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "mplang/errors.hpp"
#include "mplang/random.hpp"

namespace mplang {

std::string WalkObservable::str() const {
    std::string base = feature == 0 ? "1" : "P" + std::to_string(feature);
    return "D^" + std::to_string(level) + " " + base;
}

WalkSignature walk_signature(const EmbeddedGraph& g, int v, int depth) {
    if (depth < 0) throw EvalError("walk signature depth must be >= 0");
    if (v < 0 || v >= g.node_count()) throw EvalError("node id out of range");
    int n = g.node_count();
    int d = g.dim();

    std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    std::vector<std::vector<Rational>> cols(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        cols[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)] =
                g.row(u)[static_cast<std::size_t>(j)];
    }

    auto neighbour_sum = [&g, n](const std::vector<Rational>& x) {
        std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
        for (int u = 0; u < n; ++u)
            for (int w : g.neighbours(u)) out[static_cast<std::size_t>(u)] += x[static_cast<std::size_t>(w)];
        return out;
    };

    WalkSignature sig;
    sig.depth = depth;
    for (int i = 0; i <= depth; ++i) {
        sig.walk_counts.push_back(ones[static_cast<std::size_t>(v)]);
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) row.push_back(cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]);
        sig.feature_sums.push_back(std::move(row));
        if (i < depth) {
            ones = neighbour_sum(ones);
            for (int j = 0; j < d; ++j)
                cols[static_cast<std::size_t>(j)] = neighbour_sum(cols[static_cast<std::size_t>(j)]);
        }
    }
    return sig;
}

WalkEquivalence walk_equivalent(const EmbeddedGraph& g1, int v1, const EmbeddedGraph& g2, int v2,
                                int depth) {
    if (g1.dim() != g2.dim())
        throw EvalError("walk equivalence requires equal embedding dimensions");
    WalkSignature s1 = walk_signature(g1, v1, depth);
    WalkSignature s2 = walk_signature(g2, v2, depth);
    for (int i = 0; i <= depth; ++i) {
        if (s1.walk_counts[static_cast<std::size_t>(i)] != s2.walk_counts[static_cast<std::size_t>(i)])
            return {false, WalkObservable{i, 0}};
        for (int j = 1; j <= g1.dim(); ++j)
            if (s1.feature_sums[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] !=
                s2.feature_sums[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)])
                return {false, WalkObservable{i, j}};
    }
    return {true, std::nullopt};
}

namespace {

// Nodes whose census the expression is allowed to trust: deep enough
// that the radius the expression sees is complete, and with no quota
// violation within the inspected ball (radius expr_depth - 1). One
// multi-source BFS from the violating nodes gives the distance of every
// node to its nearest violation.
std::vector<bool> admissible_nodes(const RbTree& t, int expr_depth) {
    int n = t.graph.node_count();
    std::vector<int> violation_dist(static_cast<std::size_t>(n), -1);  // -1 = no violation in reach
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        // Depth-k leaves never meet their quotas and are never inspected;
        // only interior violations matter.
        if (t.depth[static_cast<std::size_t>(v)] < t.k && !t.quota_ok(v)) {
            violation_dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : t.graph.graph().neighbours(u))
            if (violation_dist[static_cast<std::size_t>(w)] < 0) {
                violation_dist[static_cast<std::size_t>(w)] = violation_dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
    }

    std::vector<bool> out(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (t.depth[static_cast<std::size_t>(v)] + expr_depth > t.k) continue;
        int vd = violation_dist[static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(v)] = vd < 0 || vd >= expr_depth;
    }
    return out;
}

std::vector<Rational> distinct_values(const NodeVector& values, const RbTree& t, NodeType type,
                                      const std::vector<bool>& admissible) {
    std::vector<Rational> out;
    for (int v = 0; v < t.graph.node_count(); ++v) {
        if (t.type[static_cast<std::size_t>(v)] != type || !admissible[static_cast<std::size_t>(v)])
            continue;
        const Rational& x = values[static_cast<std::size_t>(v)];
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ShapeReport shape_report_on(const ExprPtr& e, const RbTree& t, const RbTree& mirror,
                            const Catalogue& cat) {
    Classification cls = classify(e);
    for (const ActivationId& id : cls.activations)
        if (id != "step") throw EvalError("shape report requires a step-only expression, found '" + id + "'");
    int m = diamond_depth(e);
    if (m > t.k) throw EvalError("tree height " + std::to_string(t.k) +
                                 " too small for diamond-depth " + std::to_string(m));

    NodeVector vals = eval(e, t.graph.graph(), cat);
    NodeVector mirror_vals = eval(e, mirror.graph.graph(), cat);
    std::vector<bool> adm = admissible_nodes(t, m);
    std::vector<bool> mirror_adm = admissible_nodes(mirror, m);

    ShapeReport report;
    report.r = t.r;
    report.b = t.b;
    report.k = t.k;
    report.expr_depth = m;
    report.admissible_depth = t.k - m;

    const NodeType types[4] = {NodeType::W, NodeType::WPrime, NodeType::Red, NodeType::Blue};
    // In the mirror tree the roles swap: w pairs with w', red with red,
    // blue with blue (the red set of the (b, r) tree plays the red role
    // seen from swapped parameters).
    const NodeType mirror_types[4] = {NodeType::WPrime, NodeType::W, NodeType::Red, NodeType::Blue};

    for (int i = 0; i < 4; ++i) {
        ShapeReport::TypeCensus census;
        census.type = types[i];
        census.values = distinct_values(vals, t, types[i], adm);
        census.mirror_values = distinct_values(mirror_vals, mirror, mirror_types[i], mirror_adm);
        if (!census.singleton()) report.per_type_singletons = false;
        if (census.values.size() == 1 && census.mirror_values.size() == 1 &&
            census.values != census.mirror_values)
            report.mirror_ok = false;
        report.census[static_cast<std::size_t>(i)] = std::move(census);
    }
    return report;
}

ShapeReport shape_report(const ExprPtr& e, int r, int b, int margin_k, const Catalogue& cat) {
    if (margin_k < diamond_depth(e))
        throw EvalError("margin " + std::to_string(margin_k) + " below the expression's diamond-depth");
    RbTree t = make_rb_tree(r, b, margin_k);
    RbTree mirror = make_rb_tree(b, r, margin_k);
    return shape_report_on(e, t, mirror, cat);
}

std::vector<SeparationRow> separation_demo(int rmax, int bmax, int k) {
    if (k < 1) throw EvalError("separation demo needs k >= 1");
    // Features over {red, blue, white}: red = P1, blue = P2.
    ExprPtr q = apply_act("relu", sub(diamond(feature(1)), diamond(feature(2))));
    ExprPtr q_swapped = apply_act("relu", sub(diamond(feature(2)), diamond(feature(1))));

    std::vector<SeparationRow> rows;
    for (int r = 0; r <= rmax; ++r) {
        for (int b = 0; b <= bmax; ++b) {
            RbTree t = make_rb_tree(r, b, k);
            NodeVector qs = eval(q, t.graph.graph());
            NodeVector qss = eval(q_swapped, t.graph.graph());
            SeparationRow row;
            row.r = r;
            row.b = b;
            row.q = qs[static_cast<std::size_t>(t.root)];
            row.q_swapped = qss[static_cast<std::size_t>(t.root)];
            Rational expected(std::max(0, r - b));
            Rational abs_diff(std::abs(r - b));
            row.ok = row.q == expected && row.q + row.q_swapped == abs_diff;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

NonclosureReport nonclosure_demo(int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw EvalError("sample count must be >= 1");
    NonclosureTrees trees = make_nonclosure_trees();
    RandomGen gen(seed);

    NonclosureReport report;
    report.samples = sample_count;
    for (int s = 0; s < sample_count; ++s) {
        ExprPtr e = gen.affine_expr(3, 3);
        Rational r1 = eval_at(e, trees.c1.graph(), trees.root);
        Rational r2 = eval_at(e, trees.c2.graph(), trees.root);
        Rational r3 = eval_at(e, trees.c3.graph(), trees.root);
        bool roots_ok = r1 - r2 == r2 - r3;

        auto leaf_sum = [&](const ColouredGraph& g) {
            return eval_at(e, g.graph(), trees.leaf_a) + eval_at(e, g.graph(), trees.leaf_b);
        };
        Rational u = leaf_sum(trees.c1), v = leaf_sum(trees.c2), w = leaf_sum(trees.c3);
        bool leaves_ok = u - v == v - w;

        if (!roots_ok || !leaves_ok) {
            ++report.violations;
            report.failures.push_back(print(e, &trees.c1.colour_names()));
        }
    }
    return report;
}

}  // namespace mplang
