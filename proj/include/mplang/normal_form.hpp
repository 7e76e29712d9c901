#ifndef MPLANG_NORMAL_FORM_HPP
#define MPLANG_NORMAL_FORM_HPP

#include <vector>

#include <gmpxx.h>

#include "mplang/expr.hpp"

namespace mplang {

// Coefficients of the affine walk normal form
//   sum_{i=0}^{depth} ( walk[i] D^i 1 + sum_{j=1}^{dim} feat[i][j-1] D^i P_j ).
struct NormalForm {
    int depth = 0;
    int dim = 0;
    std::vector<Rational> walk;               // indexed by i in [0, depth]
    std::vector<std::vector<Rational>> feat;  // [i][j-1]

    static NormalForm zeros(int depth, int dim);
};

// Structural recursion over an affine expression; the result is
// numerically equivalent to `e` on every dim-embedded graph. Throws
// NotAffineError when `e` contains an activation application and
// EvalError when a feature index exceeds `dim`.
NormalForm to_normal_form(const ExprPtr& e, int dim);

// The displayed sum with zero-coefficient terms omitted; the all-zero
// form becomes 0 1.
ExprPtr from_normal_form(const NormalForm& nf);

// Least common multiple of the denominators of all coefficients.
mpz_class lcd(const NormalForm& nf);

// Boolean negation k 1 - e with k = 1/(2 d), where d is the lcd of e's
// normal-form coefficients. On coloured graphs every value of e is a
// multiple of 1/d, so the result booleanizes to the pointwise
// complement of e.
ExprPtr negate_boolean(const ExprPtr& e);

}  // namespace mplang

#endif
