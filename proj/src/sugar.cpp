#include "mplang/sugar.hpp"

namespace mplang {

const char* cmp_op_name(CmpOp op) {
    switch (op) {
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
    }
    return "?";
}

ExprPtr b_or(ExprPtr l, ExprPtr r) { return add(step_of(std::move(l)), step_of(std::move(r))); }

ExprPtr b_and(ExprPtr l, ExprPtr r) {
    return add(add(step_of(std::move(l)), step_of(std::move(r))), constant(Rational(-1)));
}

ExprPtr b_not(ExprPtr e) { return sub(one(), step_of(std::move(e))); }

ExprPtr compare(CmpOp op, ExprPtr l, ExprPtr r) {
    switch (op) {
        case CmpOp::Gt: return step_of(sub(std::move(l), std::move(r)));
        case CmpOp::Lt: return step_of(sub(std::move(r), std::move(l)));
        case CmpOp::Le: return b_not(compare(CmpOp::Gt, std::move(l), std::move(r)));
        case CmpOp::Ge: return b_not(compare(CmpOp::Lt, std::move(l), std::move(r)));
        case CmpOp::Ne: return b_or(sub(l, r), sub(r, l));
        case CmpOp::Eq: return b_not(b_or(sub(l, r), sub(r, l)));
    }
    return {};
}

BoolExprPtr BoolExpr::make_atom(ExprPtr e) {
    auto b = new BoolExpr();
    b->kind_ = Kind::Atom;
    b->num_left_ = std::move(e);
    return BoolExprPtr(b);
}

BoolExprPtr BoolExpr::make_not(BoolExprPtr e) {
    auto b = new BoolExpr();
    b->kind_ = Kind::Not;
    b->left_ = std::move(e);
    return BoolExprPtr(b);
}

BoolExprPtr BoolExpr::make_and(BoolExprPtr l, BoolExprPtr r) {
    auto b = new BoolExpr();
    b->kind_ = Kind::And;
    b->left_ = std::move(l);
    b->right_ = std::move(r);
    return BoolExprPtr(b);
}

BoolExprPtr BoolExpr::make_or(BoolExprPtr l, BoolExprPtr r) {
    auto b = new BoolExpr();
    b->kind_ = Kind::Or;
    b->left_ = std::move(l);
    b->right_ = std::move(r);
    return BoolExprPtr(b);
}

BoolExprPtr BoolExpr::make_cmp(CmpOp op, ExprPtr l, ExprPtr r) {
    auto b = new BoolExpr();
    b->kind_ = Kind::Cmp;
    b->op_ = op;
    b->num_left_ = std::move(l);
    b->num_right_ = std::move(r);
    return BoolExprPtr(b);
}

ExprPtr expand_sugar(const BoolExprPtr& b) {
    switch (b->kind()) {
        case BoolExpr::Kind::Atom:
            return b->atom();
        case BoolExpr::Kind::Not:
            return b_not(expand_sugar(b->child()));
        case BoolExpr::Kind::And:
            return b_and(expand_sugar(b->left()), expand_sugar(b->right()));
        case BoolExpr::Kind::Or:
            return b_or(expand_sugar(b->left()), expand_sugar(b->right()));
        case BoolExpr::Kind::Cmp:
            return compare(b->op(), b->cmp_left(), b->cmp_right());
    }
    return {};
}

}  // namespace mplang
