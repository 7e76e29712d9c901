#ifndef MPLANG_TRANSLATE_HPP
#define MPLANG_TRANSLATE_HPP

#include <gmpxx.h>

#include "mplang/activation.hpp"
#include "mplang/expr.hpp"

namespace mplang {

// A positive integer D such that every value of `e` on a coloured graph
// is an integer multiple of 1/D. Computed structurally:
//   1, P_i            -> 1
//   (p/q) e           -> q * D(e)
//   e + f             -> lcm(D(e), D(f))
//   diamond e         -> D(e)
//   sigma(e)          -> lcm of the denominators of sigma's possible
//                        outputs on the grid (1/D(e)) Z; requires sigma
//                        to be eventually constant so that output set is
//                        finite.
// Note the plain lcm of coefficient denominators is not sound here:
// (1/2)((1/2)P1) takes value 1/4 while its denominators only give 2.
mpz_class value_denominator(const ExprPtr& e, const Catalogue& cat = Catalogue::standard());

// Building blocks for simulating an eventually constant activation with
// step. With step'(x) := 1 - step(-x):
//   transformed  t_{p1,p2}(x)  = p2 step'(x - p1)        : p2 for x >= p1
//   blip         s_{p1,p2}(x)  = t_{p1,p2} - t_{p1+g,p2} : p2 on [p1, p1+g)
//   reversed     t'_{p1,p2}(x) = p2 (1 - step(x - p1))   : p2 for x <= p1
struct StepGadget {
    enum class Kind { Transformed, Blip, Reversed };
    Kind kind;
    Rational p1;         // threshold
    Rational p2;         // height
    Rational grid_step;  // 1/d; used by blips

    ExprPtr expand(const ExprPtr& x) const;
};

// Rewrites every activation application into its step simulation. The
// result is numerically equivalent to `e` on every coloured graph and
// uses only the step activation. Requires every activation in `e` to be
// uneven eventually constant; throws TranslateError otherwise.
ExprPtr to_step(const ExprPtr& e, const Catalogue& cat = Catalogue::standard());

// Rewrites every step application into an application of `sigma`
// (uneven eventually constant): step(e1) becomes
//   (sigma(A e1 + B) - f-) / (f+ - f-),  A = d (t+ - t-), B = t-,
// with d the value denominator of the rewritten e1. Numerically
// equivalent on every coloured graph. Throws TranslateError when `e`
// uses an activation other than step or `sigma` is unsuitable.
ExprPtr from_step(const ExprPtr& e, const ActivationId& sigma,
                  const Catalogue& cat = Catalogue::standard());

}  // namespace mplang

#endif
