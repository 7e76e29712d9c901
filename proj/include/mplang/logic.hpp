#ifndef MPLANG_LOGIC_HPP
#define MPLANG_LOGIC_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mplang/eval.hpp"
#include "mplang/expr.hpp"
#include "mplang/graph.hpp"
#include "mplang/sugar.hpp"

namespace mplang {

class LogicFormula;
using FormulaPtr = std::shared_ptr<const LogicFormula>;

// Modal / graded-modal formulas with linear counting atoms over
// neighbour counts: sum_i lambda_i #(neighbours satisfying phi_i) op delta.
class LogicFormula {
public:
    enum class Kind { Top, Colour, Not, And, Or, Dia, DiaGeq, CountAtom };

    Kind kind() const { return kind_; }
    int colour() const { return n_; }  // 1-based colour index
    int count() const { return n_; }   // DiaGeq threshold, >= 1
    const FormulaPtr& child() const { return left_; }
    const FormulaPtr& left() const { return left_; }
    const FormulaPtr& right() const { return right_; }
    const std::vector<std::pair<Rational, FormulaPtr>>& terms() const { return terms_; }
    CmpOp op() const { return op_; }
    const Rational& delta() const { return delta_; }

    static FormulaPtr top();
    static FormulaPtr colour_atom(int index);
    static FormulaPtr negation(FormulaPtr f);
    static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
    static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
    static FormulaPtr dia(FormulaPtr f);
    static FormulaPtr dia_geq(int n, FormulaPtr f);
    static FormulaPtr count_atom(std::vector<std::pair<Rational, FormulaPtr>> terms, CmpOp op,
                                 Rational delta);

private:
    LogicFormula() = default;
    Kind kind_ = Kind::Top;
    int n_ = 0;
    FormulaPtr left_;
    FormulaPtr right_;
    std::vector<std::pair<Rational, FormulaPtr>> terms_;
    CmpOp op_ = CmpOp::Gt;
    Rational delta_;
};

// Kripke semantics over a coloured graph; counting atoms compare the
// exact rational combination of distinct-neighbour counts.
NodeVector eval_logic(const FormulaPtr& f, const ColouredGraph& g);

// Step-MPLang translation with booleanize(logic_to_mplang(f)) equal to
// eval_logic(f) pointwise on every coloured graph.
ExprPtr logic_to_mplang(const FormulaPtr& f);

// Surface syntax: top | ident | !f | f & f | f | f | dia(f) |
// dia>=n(f) | sum(l1*f1, ...) op d | (f).
FormulaPtr parse_formula(const std::string& text, const std::vector<std::string>& colours);

std::string print_formula(const FormulaPtr& f, const std::vector<std::string>* colour_names = nullptr);

}  // namespace mplang

#endif
