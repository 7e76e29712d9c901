#include "test_support.hpp"

#include <algorithm>

#include "mplang/errors.hpp"

namespace mplang::test {

const Catalogue& staircase_catalogue() {
    static const Catalogue cat = [] {
        // Constant pieces -1, 1/3, 0, 6/5, 2 with jumps at the breakpoints.
        std::vector<Rational> breaks{Rational(-2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)};
        std::vector<Rational> at_breaks{Rational(-1), Rational(1, 3), Rational(0), Rational(2)};
        std::vector<AffinePiece> pieces{
            {Rational(0), Rational(-1)},   {Rational(0), Rational(1, 3)}, {Rational(0), Rational(0)},
            {Rational(0), Rational(6, 5)}, {Rational(0), Rational(2)},
        };
        EventuallyConstant meta{Rational(-2), Rational(3, 2), Rational(-1), Rational(2)};
        return Catalogue::standard().with(
            Activation(kStaircase, std::move(breaks), std::move(at_breaks), std::move(pieces), meta));
    }();
    return cat;
}

int diamond_depth_by_paths(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return 0;
        case Expr::Kind::Scale:
        case Expr::Kind::Apply:
            return diamond_depth_by_paths(e->child());
        case Expr::Kind::Diamond:
            return 1 + diamond_depth_by_paths(e->child());
        case Expr::Kind::Add: {
            int l = diamond_depth_by_paths(e->left());
            int r = diamond_depth_by_paths(e->right());
            return std::max(l, r);
        }
    }
    return 0;
}

namespace {

void enumerate_walks(const EmbeddedGraph& g, int v, int remaining,
                     const std::function<void(int)>& at_endpoint) {
    if (remaining == 0) {
        at_endpoint(v);
        return;
    }
    for (int u : g.neighbours(v)) enumerate_walks(g, u, remaining - 1, at_endpoint);
}

}  // namespace

Rational count_walks(const EmbeddedGraph& g, int v, int len) {
    long count = 0;
    enumerate_walks(g, v, len, [&count](int) { ++count; });
    return Rational(count);
}

Rational sum_walk_feature(const EmbeddedGraph& g, int v, int len, int feature) {
    Rational total(0);
    enumerate_walks(g, v, len, [&](int endpoint) {
        total += g.row(endpoint)[static_cast<std::size_t>(feature - 1)];
    });
    return total;
}

Rational eval_reference(const ExprPtr& e, const EmbeddedGraph& g, int v, const Catalogue& cat) {
    switch (e->kind()) {
        case Expr::Kind::One:
            return Rational(1);
        case Expr::Kind::Feature:
            if (e->feature_index() > g.dim()) throw EvalError("feature out of range");
            return g.row(v)[static_cast<std::size_t>(e->feature_index() - 1)];
        case Expr::Kind::Scale:
            return e->coeff() * eval_reference(e->child(), g, v, cat);
        case Expr::Kind::Add:
            return eval_reference(e->left(), g, v, cat) + eval_reference(e->right(), g, v, cat);
        case Expr::Kind::Diamond: {
            Rational sum(0);
            for (int u : g.neighbours(v)) sum += eval_reference(e->child(), g, u, cat);
            return sum;
        }
        case Expr::Kind::Apply:
            return cat.at(e->act())(eval_reference(e->child(), g, v, cat));
    }
    return Rational(0);
}

GnnModel random_model(RandomGen& gen, int input_dim, int max_layers, int max_width,
                      const std::vector<ActivationId>& acts) {
    int layers = gen.uniform(1, max_layers);
    GnnModel m;
    int in = input_dim;
    for (int t = 0; t < layers; ++t) {
        int out = t == layers - 1 ? 1 : gen.uniform(1, max_width);
        GnnLayer layer;
        for (int r = 0; r < out; ++r) {
            std::vector<Rational> w1, w2;
            for (int j = 0; j < in; ++j) {
                w1.push_back(gen.uniform(0, 2) == 0 ? Rational(0) : gen.coefficient());
                w2.push_back(gen.uniform(0, 2) == 0 ? Rational(0) : gen.coefficient());
            }
            layer.w1.push_back(std::move(w1));
            layer.w2.push_back(std::move(w2));
            layer.bias.push_back(gen.uniform(0, 1) == 0 ? Rational(0) : gen.coefficient());
            layer.act.push_back(acts[static_cast<std::size_t>(
                gen.uniform(0, static_cast<int>(acts.size()) - 1))]);
        }
        m.layers.push_back(std::move(layer));
        in = out;
    }
    return m;
}

FormulaPtr random_formula(RandomGen& gen, int colour_count, int depth) {
    if (depth <= 0 || gen.uniform(0, 9) < 2) {
        if (gen.uniform(0, 3) == 0) return LogicFormula::top();
        return LogicFormula::colour_atom(gen.uniform(1, colour_count));
    }
    switch (gen.uniform(0, 6)) {
        case 0:
            return LogicFormula::negation(random_formula(gen, colour_count, depth - 1));
        case 1:
            return LogicFormula::conjunction(random_formula(gen, colour_count, depth - 1),
                                             random_formula(gen, colour_count, depth - 1));
        case 2:
            return LogicFormula::disjunction(random_formula(gen, colour_count, depth - 1),
                                             random_formula(gen, colour_count, depth - 1));
        case 3:
            return LogicFormula::dia(random_formula(gen, colour_count, depth - 1));
        case 4:
            return LogicFormula::dia_geq(gen.uniform(1, 3), random_formula(gen, colour_count, depth - 1));
        default: {
            int terms = gen.uniform(1, 3);
            std::vector<std::pair<Rational, FormulaPtr>> ts;
            for (int i = 0; i < terms; ++i)
                ts.emplace_back(gen.coefficient(), random_formula(gen, colour_count, depth - 1));
            CmpOp ops[6] = {CmpOp::Gt, CmpOp::Ge, CmpOp::Lt, CmpOp::Le, CmpOp::Eq, CmpOp::Ne};
            return LogicFormula::count_atom(std::move(ts), ops[gen.uniform(0, 5)], gen.coefficient());
        }
    }
}

}  // namespace mplang::test
