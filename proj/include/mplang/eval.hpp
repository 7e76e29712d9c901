#ifndef MPLANG_EVAL_HPP
#define MPLANG_EVAL_HPP

#include <vector>

#include "mplang/activation.hpp"
#include "mplang/expr.hpp"
#include "mplang/graph.hpp"

namespace mplang {

using NodeVector = std::vector<Rational>;

// Exact evaluation over all nodes, bottom-up with one node-vector per
// subexpression; shared subtrees are evaluated once.
NodeVector eval(const ExprPtr& e, const EmbeddedGraph& g,
                const Catalogue& cat = Catalogue::standard());
inline NodeVector eval(const ExprPtr& e, const ColouredGraph& g,
                       const Catalogue& cat = Catalogue::standard()) {
    return eval(e, g.graph(), cat);
}

Rational eval_at(const ExprPtr& e, const EmbeddedGraph& g, int v,
                 const Catalogue& cat = Catalogue::standard());
inline Rational eval_at(const ExprPtr& e, const ColouredGraph& g, int v,
                        const Catalogue& cat = Catalogue::standard()) {
    return eval_at(e, g.graph(), v, cat);
}

// 1 where eval > 0, else 0; equals eval(step(e)).
NodeVector booleanize(const ExprPtr& e, const EmbeddedGraph& g,
                      const Catalogue& cat = Catalogue::standard());
inline NodeVector booleanize(const ExprPtr& e, const ColouredGraph& g,
                             const Catalogue& cat = Catalogue::standard()) {
    return booleanize(e, g.graph(), cat);
}

// Demo-only floating evaluation with a fixed reduction order.
std::vector<double> eval_float(const ExprPtr& e, const EmbeddedGraph& g,
                               const Catalogue& cat = Catalogue::standard());

}  // namespace mplang

#endif
