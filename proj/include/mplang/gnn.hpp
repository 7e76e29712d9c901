#ifndef MPLANG_GNN_HPP
#define MPLANG_GNN_HPP

#include <string>
#include <vector>

#include "mplang/activation.hpp"
#include "mplang/eval.hpp"
#include "mplang/expr.hpp"
#include "mplang/graph.hpp"

namespace mplang {

using Matrix = std::vector<std::vector<Rational>>;

// One message-passing layer: v maps to
//   act( W1 gamma(v) + W2 sum_{u ~ v} gamma(u) + bias ),
// with a per-output-channel activation tag from the catalogue.
struct GnnLayer {
    Matrix w1;
    Matrix w2;
    std::vector<Rational> bias;
    std::vector<ActivationId> act;

    int out_dim() const { return static_cast<int>(w1.size()); }
    int in_dim() const { return w1.empty() ? 0 : static_cast<int>(w1.front().size()); }
};

struct GnnModel {
    std::vector<GnnLayer> layers;

    int input_dim() const { return layers.empty() ? 0 : layers.front().in_dim(); }
    // Throws GraphError on ragged matrices, mismatched chain dimensions
    // or an output dimension other than 1.
    void validate() const;
};

NodeVector eval_gnn(const GnnModel& m, const EmbeddedGraph& g,
                    const Catalogue& cat = Catalogue::standard());
inline NodeVector eval_gnn(const GnnModel& m, const ColouredGraph& g,
                           const Catalogue& cat = Catalogue::standard()) {
    return eval_gnn(m, g.graph(), cat);
}

// Compiles an expression over dim-embedded graphs into a model with
// eval_gnn(compile(e, dim), g) = eval(e, g) exactly. One channel per
// distinct subterm that needs materializing (the constant 1, features,
// neighbour sums, activation applications); affine glue is folded into
// W1/W2/bias rows; unused channels are pruned.
GnnModel compile(const ExprPtr& e, int dim, const Catalogue& cat = Catalogue::standard());

// Structural unfolding of a model back into an expression with
// eval(decompile(m), g) = eval_gnn(m, g) exactly. id tags unfold to
// plain affine structure, so id-only models decompile to affine
// expressions.
ExprPtr decompile(const GnnModel& m);

// Canonical JSON serialization (row-major rational matrices).
std::string model_to_json(const GnnModel& m);
GnnModel model_from_json(const std::string& text);
void save_model(const GnnModel& m, const std::string& path);
GnnModel load_model(const std::string& path);

}  // namespace mplang

#endif
