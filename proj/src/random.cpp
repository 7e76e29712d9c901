#include "mplang/random.hpp"

namespace mplang {

int RandomGen::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational RandomGen::coefficient() {
    int num = uniform(-3, 3);
    if (num == 0) num = uniform(1, 3);
    int den = uniform(1, 4);
    return Rational(num, den);
}

ExprPtr RandomGen::affine_expr(int dim, int max_depth, int size_budget) {
    int budget = size_budget;
    return gen(dim, {}, max_depth, 0, budget);
}

ExprPtr RandomGen::expr_with_acts(int dim, const std::vector<ActivationId>& acts, int max_depth,
                                  int max_act_depth, int size_budget) {
    int budget = size_budget;
    return gen(dim, acts, max_depth, max_act_depth, budget);
}

ExprPtr RandomGen::gen(int dim, const std::vector<ActivationId>& acts, int depth_budget,
                       int act_budget, int& size_budget) {
    --size_budget;
    if (size_budget <= 0) {
        // Leaves only.
        if (dim > 0 && uniform(0, 2) > 0) return feature(uniform(1, dim));
        return one();
    }
    int roll = uniform(0, 99);
    if (roll < 15) return dim > 0 ? feature(uniform(1, dim)) : one();
    if (roll < 25) return one();
    if (roll < 45) return scale(coefficient(), gen(dim, acts, depth_budget, act_budget, size_budget));
    if (roll < 70)
        return add(gen(dim, acts, depth_budget, act_budget, size_budget),
                   gen(dim, acts, depth_budget, act_budget, size_budget));
    if (roll < 88 && depth_budget > 0)
        return diamond(gen(dim, acts, depth_budget - 1, act_budget, size_budget));
    if (!acts.empty() && act_budget > 0) {
        const ActivationId& act = acts[static_cast<std::size_t>(uniform(0, static_cast<int>(acts.size()) - 1))];
        return apply_act(act, gen(dim, acts, depth_budget, act_budget - 1, size_budget));
    }
    if (depth_budget > 0) return diamond(gen(dim, acts, depth_budget - 1, act_budget, size_budget));
    return add(gen(dim, acts, depth_budget, act_budget, size_budget),
               gen(dim, acts, depth_budget, act_budget, size_budget));
}

ColouredGraph RandomGen::coloured_graph(int min_nodes, int max_nodes,
                                        const std::vector<std::string>& colours,
                                        double edge_probability) {
    int n = uniform(min_nodes, max_nodes);
    int k = static_cast<int>(colours.size());
    EmbeddedGraph g(n, k);
    for (int v = 0; v < n; ++v) g.set_row(v, one_hot(k, uniform(1, k)));
    std::bernoulli_distribution edge(edge_probability);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng_)) g.add_edge(u, v);
    return ColouredGraph(std::move(g), colours);
}

}  // namespace mplang
