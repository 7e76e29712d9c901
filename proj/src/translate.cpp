#include "mplang/translate.hpp"

#include <unordered_map>

#include "mplang/errors.hpp"

namespace mplang {

namespace {

Rational from_mpz(const mpz_class& z) {
    return Rational(mpq_class(z));
}

Rational grid_point(const mpz_class& num, const mpz_class& den) {
    mpq_class q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return Rational(std::move(q));
}

// x + c 1, dropping a zero shift.
ExprPtr shifted(const ExprPtr& x, const Rational& c) {
    if (c.is_zero()) return x;
    return add(x, constant(c));
}

// c 1 - x.
ExprPtr reverse_shifted(const ExprPtr& x, const Rational& c) {
    if (c.is_zero()) return scale(Rational(-1), x);
    return add(constant(c), scale(Rational(-1), x));
}

ExprPtr scaled(const Rational& a, const ExprPtr& x) {
    if (a == Rational(1)) return x;
    return scale(a, x);
}

const EventuallyConstant& require_uneven(const Activation& act) {
    const auto& meta = act.eventually_constant();
    if (!meta)
        throw TranslateError("activation '" + act.id() + "' is not eventually constant");
    if (!meta->uneven())
        throw TranslateError("activation '" + act.id() + "' is even (equal tail values)");
    return *meta;
}

}  // namespace

namespace {

mpz_class value_denominator_memo(const ExprPtr& e, const Catalogue& cat,
                                 std::unordered_map<const Expr*, mpz_class>& memo) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    mpz_class out = 1;
    switch (e->kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            break;
        case Expr::Kind::Scale:
            out = e->coeff().den() * value_denominator_memo(e->child(), cat, memo);
            break;
        case Expr::Kind::Add:
            out = lcm(value_denominator_memo(e->left(), cat, memo),
                      value_denominator_memo(e->right(), cat, memo));
            break;
        case Expr::Kind::Diamond:
            out = value_denominator_memo(e->child(), cat, memo);
            break;
        case Expr::Kind::Apply: {
            const Activation& act = cat.at(e->act());
            const auto& meta = act.eventually_constant();
            if (!meta)
                throw TranslateError("activation '" + e->act() +
                                     "' is not eventually constant; value denominator is unbounded");
            mpz_class inner = value_denominator_memo(e->child(), cat, memo);
            mpz_class d = lcm(meta->f_minus.den(), meta->f_plus.den());
            // Outputs on grid points between the tails.
            mpz_class lo = (meta->t_minus * from_mpz(inner)).ceil();
            mpz_class hi = (meta->t_plus * from_mpz(inner)).floor();
            for (mpz_class l = lo; l <= hi; ++l)
                d = lcm(d, act(grid_point(l, inner)).den());
            out = d;
            break;
        }
    }
    memo.emplace(e.get(), out);
    return out;
}

}  // namespace

mpz_class value_denominator(const ExprPtr& e, const Catalogue& cat) {
    std::unordered_map<const Expr*, mpz_class> memo;
    return value_denominator_memo(e, cat, memo);
}

ExprPtr StepGadget::expand(const ExprPtr& x) const {
    switch (kind) {
        case Kind::Transformed:
            // p2 step'(x - p1) = p2 (1 - step(p1 - x))
            return scaled(p2, sub(one(), step_of(reverse_shifted(x, p1))));
        case Kind::Reversed:
            // p2 (1 - step(x - p1))
            return scaled(p2, sub(one(), step_of(shifted(x, -p1))));
        case Kind::Blip: {
            StepGadget lower{Kind::Transformed, p1, p2, grid_step};
            StepGadget upper{Kind::Transformed, p1 + grid_step, p2, grid_step};
            return add(lower.expand(x), scale(Rational(-1), upper.expand(x)));
        }
    }
    return {};
}

namespace {

class ToStep {
public:
    ToStep(const Catalogue& cat) : cat_(cat) {}

    ExprPtr run(const ExprPtr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        ExprPtr out = rewrite(e);
        memo_.emplace(e.get(), out);
        return out;
    }

private:
    ExprPtr rewrite(const ExprPtr& e) {
        switch (e->kind()) {
            case Expr::Kind::One:
            case Expr::Kind::Feature:
                return e;
            case Expr::Kind::Scale:
                return scale(e->coeff(), run(e->child()));
            case Expr::Kind::Add:
                return add(run(e->left()), run(e->right()));
            case Expr::Kind::Diamond:
                return diamond(run(e->child()));
            case Expr::Kind::Apply: {
                ExprPtr body = run(e->child());
                if (e->act() == "step") return step_of(std::move(body));
                const Activation& act = cat_.at(e->act());
                const EventuallyConstant& meta = require_uneven(act);
                return simulate(act, meta, body);
            }
        }
        return e;
    }

    // t'_{l-/d, f-}(x) + sum of blips at interior grid points + t_{l+/d, f+}(x)
    ExprPtr simulate(const Activation& act, const EventuallyConstant& meta, const ExprPtr& x) {
        mpz_class d = value_denominator(x, cat_);
        mpz_class l_minus = (meta.t_minus * from_mpz(d)).floor();
        mpz_class l_plus = (meta.t_plus * from_mpz(d)).ceil();
        Rational grid = grid_point(1, d);

        ExprPtr sum;
        auto append = [&sum](ExprPtr term) {
            sum = sum ? add(std::move(sum), std::move(term)) : std::move(term);
        };

        if (!meta.f_minus.is_zero()) {
            StepGadget left{StepGadget::Kind::Reversed, grid_point(l_minus, d), meta.f_minus, grid};
            append(left.expand(x));
        }
        for (mpz_class l = l_minus + 1; l < l_plus; ++l) {
            Rational point = grid_point(l, d);
            Rational height = act(point);
            if (height.is_zero()) continue;
            StepGadget blip{StepGadget::Kind::Blip, point, height, grid};
            append(blip.expand(x));
        }
        if (!meta.f_plus.is_zero()) {
            StepGadget right{StepGadget::Kind::Transformed, grid_point(l_plus, d), meta.f_plus, grid};
            append(right.expand(x));
        }
        if (!sum) return constant(Rational(0));
        return sum;
    }

    const Catalogue& cat_;
    std::unordered_map<const Expr*, ExprPtr> memo_;
};

class FromStep {
public:
    FromStep(const Activation& sigma, const EventuallyConstant& meta, const Catalogue& cat)
        : sigma_(sigma), meta_(meta), cat_(cat) {}

    ExprPtr run(const ExprPtr& e) {
        auto it = memo_.find(e.get());
        if (it != memo_.end()) return it->second;
        ExprPtr out = rewrite(e);
        memo_.emplace(e.get(), out);
        return out;
    }

private:
    ExprPtr rewrite(const ExprPtr& e) {
        switch (e->kind()) {
            case Expr::Kind::One:
            case Expr::Kind::Feature:
                return e;
            case Expr::Kind::Scale:
                return scale(e->coeff(), run(e->child()));
            case Expr::Kind::Add:
                return add(run(e->left()), run(e->right()));
            case Expr::Kind::Diamond:
                return diamond(run(e->child()));
            case Expr::Kind::Apply: {
                if (e->act() != "step")
                    throw TranslateError("from_step input must use only step, found '" + e->act() + "'");
                ExprPtr body = run(e->child());
                return simulate(body);
            }
        }
        return e;
    }

    // (sigma(A e1 + B) - f-) / (f+ - f-): grid value 0 lands on t-, grid
    // value 1/d lands on t+, so nonpositive inputs hit the left tail and
    // positive ones the right tail.
    ExprPtr simulate(const ExprPtr& x) {
        mpz_class d = value_denominator(x, cat_);
        Rational a = from_mpz(d) * (meta_.t_plus - meta_.t_minus);
        ExprPtr inner = apply_act(sigma_.id(), shifted(scaled(a, x), meta_.t_minus));
        ExprPtr num = shifted(std::move(inner), -meta_.f_minus);
        return scaled(Rational(1) / (meta_.f_plus - meta_.f_minus), std::move(num));
    }

    const Activation& sigma_;
    const EventuallyConstant& meta_;
    const Catalogue& cat_;
    std::unordered_map<const Expr*, ExprPtr> memo_;
};

}  // namespace

ExprPtr to_step(const ExprPtr& e, const Catalogue& cat) {
    return ToStep(cat).run(e);
}

ExprPtr from_step(const ExprPtr& e, const ActivationId& sigma, const Catalogue& cat) {
    const Activation& act = cat.at(sigma);
    const EventuallyConstant& meta = require_uneven(act);
    return FromStep(act, meta, cat).run(e);
}

}  // namespace mplang
