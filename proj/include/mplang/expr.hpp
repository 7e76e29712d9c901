#ifndef MPLANG_EXPR_HPP
#define MPLANG_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mplang/activation.hpp"
#include "mplang/rational.hpp"

namespace mplang {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. Trees may share subterms (shared_ptr
// structural sharing); the semantics are tree semantics regardless.
class Expr {
public:
    enum class Kind { One, Feature, Scale, Add, Diamond, Apply };

    Kind kind() const { return kind_; }

    // Feature: 1-based channel index.
    int feature_index() const { return index_; }
    // Scale only.
    const Rational& coeff() const { return coeff_; }
    // Scale / Diamond / Apply body.
    const ExprPtr& child() const { return left_; }
    // Add.
    const ExprPtr& left() const { return left_; }
    const ExprPtr& right() const { return right_; }
    // Apply.
    const ActivationId& act() const { return act_; }

    static ExprPtr make_one();
    static ExprPtr make_feature(int index);
    static ExprPtr make_scale(Rational coeff, ExprPtr body);
    static ExprPtr make_add(ExprPtr left, ExprPtr right);
    static ExprPtr make_diamond(ExprPtr body);
    static ExprPtr make_apply(ActivationId act, ExprPtr body);

private:
    Expr() = default;

    Kind kind_ = Kind::One;
    int index_ = 0;
    Rational coeff_;
    ExprPtr left_;
    ExprPtr right_;
    ActivationId act_;
};

// Terse builder aliases.
ExprPtr one();
ExprPtr feature(int index);
ExprPtr scale(Rational coeff, ExprPtr body);
ExprPtr add(ExprPtr left, ExprPtr right);
ExprPtr diamond(ExprPtr body);
ExprPtr apply_act(ActivationId act, ExprPtr body);

// a * 1 (plain One when a == 1).
ExprPtr constant(Rational a);
// l + (-1) r.
ExprPtr sub(ExprPtr l, ExprPtr r);
// step(e).
ExprPtr step_of(ExprPtr e);
// Derived sugar step'(e) := 1 - step(-e), which is 1 exactly when e >= 0.
ExprPtr step_prime(ExprPtr e);

int diamond_depth(const Expr& e);
inline int diamond_depth(const ExprPtr& e) { return diamond_depth(*e); }

// Maximum number of Apply nodes on a root-to-leaf path.
int activation_depth(const Expr& e);
inline int activation_depth(const ExprPtr& e) { return activation_depth(*e); }

// Least common multiple of all Scale-coefficient denominators (1 when
// there are none).
mpz_class lcd(const Expr& e);
inline mpz_class lcd(const ExprPtr& e) { return lcd(*e); }

// Largest Feature index used (0 when none).
int max_feature_index(const Expr& e);
inline int max_feature_index(const ExprPtr& e) { return max_feature_index(*e); }

struct Classification {
    bool affine = true;
    std::vector<ActivationId> activations;  // distinct, in first-use order
};
Classification classify(const Expr& e);
inline Classification classify(const ExprPtr& e) { return classify(*e); }

bool structural_equal(const Expr& a, const Expr& b);
inline bool structural_equal(const ExprPtr& a, const ExprPtr& b) { return structural_equal(*a, *b); }
std::size_t structural_hash(const Expr& e);

// Canonical surface form; parse(print(e)) is structurally e. When
// `colour_names` is given (1-based feature -> name), features print as
// colour atoms.
std::string print(const Expr& e, const std::vector<std::string>* colour_names = nullptr);
inline std::string print(const ExprPtr& e, const std::vector<std::string>* colour_names = nullptr) {
    return print(*e, colour_names);
}

}  // namespace mplang

#endif
