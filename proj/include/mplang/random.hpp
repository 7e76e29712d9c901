#ifndef MPLANG_RANDOM_HPP
#define MPLANG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mplang/activation.hpp"
#include "mplang/expr.hpp"
#include "mplang/graph.hpp"

namespace mplang {

// Seeded generators for randomized demos and property tests. The same
// seed yields the same sequence of expressions and graphs.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    int uniform(int lo, int hi);  // inclusive
    Rational coefficient();       // small numerator, denominator in {1,2,3,4}

    // Affine expression over `dim` features with diamond-depth at most
    // `max_depth`.
    ExprPtr affine_expr(int dim, int max_depth, int size_budget = 12);

    // Expression that may apply the given activations.
    ExprPtr expr_with_acts(int dim, const std::vector<ActivationId>& acts, int max_depth,
                           int max_act_depth, int size_budget = 12);

    ExprPtr step_expr(int dim, int max_depth, int max_act_depth, int size_budget = 12) {
        return expr_with_acts(dim, {"step"}, max_depth, max_act_depth, size_budget);
    }

    // Random coloured graph: n in [min_nodes, max_nodes], uniform colour
    // choice, independent edges.
    ColouredGraph coloured_graph(int min_nodes, int max_nodes,
                                 const std::vector<std::string>& colours,
                                 double edge_probability = 0.3);

private:
    ExprPtr gen(int dim, const std::vector<ActivationId>& acts, int depth_budget, int act_budget,
                int& size_budget);

    std::mt19937_64 rng_;
};

}  // namespace mplang

#endif
