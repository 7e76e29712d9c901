#ifndef MPLANG_TEST_SUPPORT_HPP
#define MPLANG_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "mplang/activation.hpp"
#include "mplang/eval.hpp"
#include "mplang/expr.hpp"
#include "mplang/gnn.hpp"
#include "mplang/graph.hpp"
#include "mplang/logic.hpp"
#include "mplang/random.hpp"

namespace mplang::test {

// Catalogue extended with a 5-piece rational staircase (uneven
// eventually constant, non-unit output denominators).
const Catalogue& staircase_catalogue();
inline const ActivationId kStaircase = "stair5";

// Brute-force oracles, independent of the evaluator implementation.

// Maximum number of Diamond nodes over all root-to-leaf paths, by
// explicit path enumeration.
int diamond_depth_by_paths(const ExprPtr& e);

// Walk enumeration: counts all walks of length `len` from v and sums the
// feature at their endpoints. Exponential; for small graphs only.
Rational count_walks(const EmbeddedGraph& g, int v, int len);
Rational sum_walk_feature(const EmbeddedGraph& g, int v, int len, int feature);

// Reference evaluator: plain per-node structural recursion without
// vectorization or memoization.
Rational eval_reference(const ExprPtr& e, const EmbeddedGraph& g, int v,
                        const Catalogue& cat = Catalogue::standard());

// Random helpers shared by test suites.
GnnModel random_model(RandomGen& gen, int input_dim, int max_layers, int max_width,
                      const std::vector<ActivationId>& acts);
FormulaPtr random_formula(RandomGen& gen, int colour_count, int depth);

}  // namespace mplang::test

#endif
