#ifndef MPLANG_ACTIVATION_HPP
#define MPLANG_ACTIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mplang/rational.hpp"

namespace mplang {

using ActivationId = std::string;

struct AffinePiece {
    Rational slope;
    Rational intercept;
    Rational operator()(const Rational& x) const { return slope * x + intercept; }
};

// Tail metadata: sigma(t) = f_minus for all t <= t_minus and
// sigma(t) = f_plus for all t >= t_plus.
struct EventuallyConstant {
    Rational t_minus;
    Rational t_plus;
    Rational f_minus;
    Rational f_plus;
    bool uneven() const { return f_minus != f_plus; }
};

// A piecewise-affine scalar function with rational data. `pieces[i]`
// applies on the open interval (breakpoints[i-1], breakpoints[i]); the
// value at breakpoints[i] is `at_breakpoints[i]` (explicit, so jump
// discontinuities like step and sign are representable exactly).
class Activation {
public:
    Activation(ActivationId id,
               std::vector<Rational> breakpoints,
               std::vector<Rational> at_breakpoints,
               std::vector<AffinePiece> pieces,
               std::optional<EventuallyConstant> meta = std::nullopt);

    const ActivationId& id() const { return id_; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::optional<EventuallyConstant>& eventually_constant() const { return meta_; }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

private:
    ActivationId id_;
    std::vector<Rational> breakpoints_;
    std::vector<Rational> at_breakpoints_;
    std::vector<AffinePiece> pieces_;
    std::optional<EventuallyConstant> meta_;
};

// Immutable name -> activation registry. The standard catalogue holds
// relu, trrelu, sign, step and id; extended catalogues add user-defined
// piecewise entries on top.
class Catalogue {
public:
    static const Catalogue& standard();

    const Activation* find(const ActivationId& id) const;
    // Throws EvalError when the id is unknown.
    const Activation& at(const ActivationId& id) const;
    bool contains(const ActivationId& id) const { return find(id) != nullptr; }

    // Returns a copy with `a` added (or replaced).
    Catalogue with(Activation a) const;

private:
    std::map<ActivationId, Activation> entries_;
};

}  // namespace mplang

#endif
