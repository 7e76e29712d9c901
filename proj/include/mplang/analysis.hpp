#ifndef MPLANG_ANALYSIS_HPP
#define MPLANG_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mplang/eval.hpp"
#include "mplang/expr.hpp"
#include "mplang/generators.hpp"
#include "mplang/graph.hpp"

namespace mplang {

// Values of D^i 1 and D^i P_j at a pointed graph for i in [0, depth]:
// walk counts and walk-summed features.
struct WalkSignature {
    int depth = 0;
    std::vector<Rational> walk_counts;               // [i]
    std::vector<std::vector<Rational>> feature_sums;  // [i][j-1]
};

WalkSignature walk_signature(const EmbeddedGraph& g, int v, int depth);
inline WalkSignature walk_signature(const ColouredGraph& g, int v, int depth) {
    return walk_signature(g.graph(), v, depth);
}

struct WalkObservable {
    int level = 0;
    int feature = 0;  // 0 = the walk count D^i 1, otherwise P_feature
    std::string str() const;
};

struct WalkEquivalence {
    bool equivalent = true;
    std::optional<WalkObservable> first_difference;
};

// Exact comparison of the two signatures up to `depth`; requires equal
// embedding dimensions.
WalkEquivalence walk_equivalent(const EmbeddedGraph& g1, int v1, const EmbeddedGraph& g2, int v2,
                                int depth);
inline WalkEquivalence walk_equivalent(const ColouredGraph& g1, int v1, const ColouredGraph& g2,
                                       int v2, int depth) {
    return walk_equivalent(g1.graph(), v1, g2.graph(), v2, depth);
}

// Per-node-type value census of a step-only expression on the red--blue
// symmetric trees. A node is admissible when depth(v) + diamond-depth(e)
// stays within k and nothing the expression inspects (the radius
// diamond-depth-1 ball) violates its type quota; that keeps boundary
// truncation artifacts out of the census.
struct ShapeReport {
    int r = 0;
    int b = 0;
    int k = 0;
    int expr_depth = 0;
    int admissible_depth = 0;

    struct TypeCensus {
        NodeType type;
        std::vector<Rational> values;         // distinct values, sorted
        std::vector<Rational> mirror_values;  // same census on the (b, r) tree
        bool singleton() const { return values.size() <= 1; }
    };
    std::array<TypeCensus, 4> census;  // w, w', red, blue

    bool per_type_singletons = true;
    bool mirror_ok = true;  // compared where both sides are nonempty
    bool pass() const { return per_type_singletons && mirror_ok; }
};

// Evaluates `e` on t and its mirror; `e` must be step-only with
// diamond-depth at most t.k.
ShapeReport shape_report_on(const ExprPtr& e, const RbTree& t, const RbTree& mirror,
                            const Catalogue& cat = Catalogue::standard());
ShapeReport shape_report(const ExprPtr& e, int r, int b, int margin_k,
                         const Catalogue& cat = Catalogue::standard());

// One row of the relu witness table: Q = relu(D red - D blue) and its
// colour-swapped partner evaluated at the root of the (r, b) tree.
struct SeparationRow {
    int r = 0;
    int b = 0;
    Rational q;
    Rational q_swapped;
    bool ok = false;  // q == max(0, r-b) and q + q_swapped == |r-b|
};

std::vector<SeparationRow> separation_demo(int rmax, int bmax, int k);

// Checks the two affine-difference identities on the three-colouring
// tree family for randomly sampled affine expressions.
struct NonclosureReport {
    int samples = 0;
    int violations = 0;
    std::vector<std::string> failures;  // printed forms of violating expressions
};

NonclosureReport nonclosure_demo(int sample_count, std::uint64_t seed = 0);

}  // namespace mplang

#endif
