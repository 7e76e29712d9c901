#include "mplang/eval.hpp"

#include <unordered_map>

#include "mplang/errors.hpp"

namespace mplang {

namespace {

template <typename Value, typename Ops>
class Evaluator {
public:
    Evaluator(const EmbeddedGraph& g, const Catalogue& cat) : g_(g), cat_(cat) {}

    const std::vector<Value>& run(const ExprPtr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;

        std::vector<Value> out(static_cast<std::size_t>(g_.node_count()));
        int n = g_.node_count();
        switch (e->kind()) {
            case Expr::Kind::One:
                for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = Ops::from_int(1);
                break;
            case Expr::Kind::Feature: {
                int j = e->feature_index();
                if (j < 1 || j > g_.dim())
                    throw EvalError("feature index P" + std::to_string(j) +
                                    " out of range for dimension " + std::to_string(g_.dim()));
                for (int v = 0; v < n; ++v)
                    out[static_cast<std::size_t>(v)] = Ops::from_rational(g_.row(v)[static_cast<std::size_t>(j - 1)]);
                break;
            }
            case Expr::Kind::Scale: {
                const auto& body = run(e->child());
                Value a = Ops::from_rational(e->coeff());
                for (int v = 0; v < n; ++v)
                    out[static_cast<std::size_t>(v)] = Ops::mul(a, body[static_cast<std::size_t>(v)]);
                break;
            }
            case Expr::Kind::Add: {
                const auto& l = run(e->left());
                const auto& r = run(e->right());
                for (int v = 0; v < n; ++v)
                    out[static_cast<std::size_t>(v)] =
                        Ops::add(l[static_cast<std::size_t>(v)], r[static_cast<std::size_t>(v)]);
                break;
            }
            case Expr::Kind::Diamond: {
                const auto& body = run(e->child());
                for (int v = 0; v < n; ++v) {
                    Value sum = Ops::from_int(0);
                    for (int u : g_.neighbours(v)) sum = Ops::add(sum, body[static_cast<std::size_t>(u)]);
                    out[static_cast<std::size_t>(v)] = sum;
                }
                break;
            }
            case Expr::Kind::Apply: {
                const Activation& act = cat_.at(e->act());
                const auto& body = run(e->child());
                for (int v = 0; v < n; ++v)
                    out[static_cast<std::size_t>(v)] = Ops::apply_act(act, body[static_cast<std::size_t>(v)]);
                break;
            }
        }
        return memo_.emplace(e.get(), std::move(out)).first->second;
    }

private:
    const EmbeddedGraph& g_;
    const Catalogue& cat_;
    std::unordered_map<const Expr*, std::vector<Value>> memo_;
};

struct ExactOps {
    static Rational from_int(int x) { return Rational(x); }
    static Rational from_rational(const Rational& x) { return x; }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational apply_act(const Activation& act, const Rational& x) { return act(x); }
};

struct FloatOps {
    static double from_int(int x) { return x; }
    static double from_rational(const Rational& x) { return x.to_double(); }
    static double add(double a, double b) { return a + b; }
    static double mul(double a, double b) { return a * b; }
    static double apply_act(const Activation& act, double x) { return act.eval_double(x); }
};

}  // namespace

NodeVector eval(const ExprPtr& e, const EmbeddedGraph& g, const Catalogue& cat) {
    Evaluator<Rational, ExactOps> ev(g, cat);
    return ev.run(e);
}

Rational eval_at(const ExprPtr& e, const EmbeddedGraph& g, int v, const Catalogue& cat) {
    if (v < 0 || v >= g.node_count()) throw EvalError("node id out of range");
    return eval(e, g, cat)[static_cast<std::size_t>(v)];
}

NodeVector booleanize(const ExprPtr& e, const EmbeddedGraph& g, const Catalogue& cat) {
    NodeVector out = eval(e, g, cat);
    for (Rational& x : out) x = x.sign() > 0 ? Rational(1) : Rational(0);
    return out;
}

std::vector<double> eval_float(const ExprPtr& e, const EmbeddedGraph& g, const Catalogue& cat) {
    Evaluator<double, FloatOps> ev(g, cat);
    return ev.run(e);
}

}  // namespace mplang
