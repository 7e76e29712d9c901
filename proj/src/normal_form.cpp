#include "mplang/normal_form.hpp"

#include "mplang/errors.hpp"

namespace mplang {

NormalForm NormalForm::zeros(int depth, int dim) {
    NormalForm nf;
    nf.depth = depth;
    nf.dim = dim;
    nf.walk.assign(static_cast<std::size_t>(depth) + 1, Rational(0));
    nf.feat.assign(static_cast<std::size_t>(depth) + 1,
                   std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
    return nf;
}

NormalForm to_normal_form(const ExprPtr& e, int dim) {
    switch (e->kind()) {
        case Expr::Kind::One: {
            NormalForm nf = NormalForm::zeros(0, dim);
            nf.walk[0] = Rational(1);
            return nf;
        }
        case Expr::Kind::Feature: {
            int j = e->feature_index();
            if (j > dim)
                throw EvalError("feature index P" + std::to_string(j) +
                                " exceeds dimension " + std::to_string(dim));
            NormalForm nf = NormalForm::zeros(0, dim);
            nf.feat[0][static_cast<std::size_t>(j - 1)] = Rational(1);
            return nf;
        }
        case Expr::Kind::Scale: {
            NormalForm nf = to_normal_form(e->child(), dim);
            for (auto& c : nf.walk) c = e->coeff() * c;
            for (auto& row : nf.feat)
                for (auto& c : row) c = e->coeff() * c;
            return nf;
        }
        case Expr::Kind::Add: {
            NormalForm l = to_normal_form(e->left(), dim);
            NormalForm r = to_normal_form(e->right(), dim);
            if (l.depth < r.depth) std::swap(l, r);
            for (int i = 0; i <= r.depth; ++i) {
                l.walk[static_cast<std::size_t>(i)] += r.walk[static_cast<std::size_t>(i)];
                for (int j = 0; j < dim; ++j)
                    l.feat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        r.feat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            return l;
        }
        case Expr::Kind::Diamond: {
            NormalForm inner = to_normal_form(e->child(), dim);
            NormalForm nf = NormalForm::zeros(inner.depth + 1, dim);
            for (int i = 0; i <= inner.depth; ++i) {
                nf.walk[static_cast<std::size_t>(i + 1)] = inner.walk[static_cast<std::size_t>(i)];
                nf.feat[static_cast<std::size_t>(i + 1)] = inner.feat[static_cast<std::size_t>(i)];
            }
            return nf;
        }
        case Expr::Kind::Apply:
            throw NotAffineError("expression contains activation '" + e->act() + "'");
    }
    throw NotAffineError("unreachable");
}

namespace {

ExprPtr diamond_power(int i, ExprPtr base) {
    for (int t = 0; t < i; ++t) base = diamond(std::move(base));
    return base;
}

ExprPtr coeff_term(const Rational& c, ExprPtr base) {
    if (c == Rational(1)) return base;
    return scale(c, std::move(base));
}

}  // namespace

ExprPtr from_normal_form(const NormalForm& nf) {
    ExprPtr sum;
    auto append = [&sum](ExprPtr term) {
        sum = sum ? add(std::move(sum), std::move(term)) : std::move(term);
    };
    for (int i = 0; i <= nf.depth; ++i) {
        const Rational& c = nf.walk[static_cast<std::size_t>(i)];
        if (!c.is_zero()) append(coeff_term(c, diamond_power(i, one())));
        for (int j = 1; j <= nf.dim; ++j) {
            const Rational& cf = nf.feat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            if (!cf.is_zero()) append(coeff_term(cf, diamond_power(i, feature(j))));
        }
    }
    if (!sum) return scale(Rational(0), one());
    return sum;
}

mpz_class lcd(const NormalForm& nf) {
    mpz_class d = 1;
    for (const Rational& c : nf.walk) d = lcm(d, c.den());
    for (const auto& row : nf.feat)
        for (const Rational& c : row) d = lcm(d, c.den());
    return d;
}

ExprPtr negate_boolean(const ExprPtr& e) {
    int dim = max_feature_index(e);
    NormalForm nf = to_normal_form(e, dim);  // throws NotAffineError when needed
    mpz_class d = lcd(nf);
    mpq_class k;
    k.get_num() = 1;
    k.get_den() = 2 * d;
    k.canonicalize();
    return add(constant(Rational(std::move(k))), scale(Rational(-1), e));
}

}  // namespace mplang
