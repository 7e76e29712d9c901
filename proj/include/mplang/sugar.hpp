#ifndef MPLANG_SUGAR_HPP
#define MPLANG_SUGAR_HPP

#include <memory>

#include "mplang/expr.hpp"

namespace mplang {

enum class CmpOp { Gt, Ge, Lt, Le, Eq, Ne };

const char* cmp_op_name(CmpOp op);

// Boolean shorthand over step-MPLang:
//   e1 | e2 := step(e1) + step(e2)        e1 > e2  := step(e1 - e2)
//   e1 & e2 := step(e1) + step(e2) - 1    e1 <= e2 := !(e1 > e2)
//   !e      := 1 - step(e)                e1 = e2  := !(e1 > e2 | e2 > e1)
// and mirrored forms for >=, <, !=.
ExprPtr b_or(ExprPtr l, ExprPtr r);
ExprPtr b_and(ExprPtr l, ExprPtr r);
ExprPtr b_not(ExprPtr e);
ExprPtr compare(CmpOp op, ExprPtr l, ExprPtr r);

// Sugared Boolean expression tree, as produced by the sugared parser.
class BoolExpr;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

class BoolExpr {
public:
    enum class Kind { Atom, Not, And, Or, Cmp };

    Kind kind() const { return kind_; }
    const ExprPtr& atom() const { return num_left_; }
    const BoolExprPtr& child() const { return left_; }
    const BoolExprPtr& left() const { return left_; }
    const BoolExprPtr& right() const { return right_; }
    CmpOp op() const { return op_; }
    const ExprPtr& cmp_left() const { return num_left_; }
    const ExprPtr& cmp_right() const { return num_right_; }

    static BoolExprPtr make_atom(ExprPtr e);
    static BoolExprPtr make_not(BoolExprPtr e);
    static BoolExprPtr make_and(BoolExprPtr l, BoolExprPtr r);
    static BoolExprPtr make_or(BoolExprPtr l, BoolExprPtr r);
    static BoolExprPtr make_cmp(CmpOp op, ExprPtr l, ExprPtr r);

private:
    BoolExpr() = default;
    Kind kind_ = Kind::Atom;
    CmpOp op_ = CmpOp::Gt;
    ExprPtr num_left_;
    ExprPtr num_right_;
    BoolExprPtr left_;
    BoolExprPtr right_;
};

// Rewrites the sugared tree into a plain step-MPLang expression.
ExprPtr expand_sugar(const BoolExprPtr& b);

}  // namespace mplang

#endif
