#include "mplang/expr.hpp"

#include <stdexcept>
#include <unordered_map>

namespace mplang {

ExprPtr Expr::make_one() {
    static const ExprPtr instance = std::shared_ptr<const Expr>(new Expr());
    return instance;
}

ExprPtr Expr::make_feature(int index) {
    if (index < 1) throw std::invalid_argument("feature index must be >= 1");
    auto e = new Expr();
    e->kind_ = Kind::Feature;
    e->index_ = index;
    return ExprPtr(e);
}

ExprPtr Expr::make_scale(Rational coeff, ExprPtr body) {
    auto e = new Expr();
    e->kind_ = Kind::Scale;
    e->coeff_ = std::move(coeff);
    e->left_ = std::move(body);
    return ExprPtr(e);
}

ExprPtr Expr::make_add(ExprPtr left, ExprPtr right) {
    auto e = new Expr();
    e->kind_ = Kind::Add;
    e->left_ = std::move(left);
    e->right_ = std::move(right);
    return ExprPtr(e);
}

ExprPtr Expr::make_diamond(ExprPtr body) {
    auto e = new Expr();
    e->kind_ = Kind::Diamond;
    e->left_ = std::move(body);
    return ExprPtr(e);
}

ExprPtr Expr::make_apply(ActivationId act, ExprPtr body) {
    auto e = new Expr();
    e->kind_ = Kind::Apply;
    e->act_ = std::move(act);
    e->left_ = std::move(body);
    return ExprPtr(e);
}

ExprPtr one() { return Expr::make_one(); }
ExprPtr feature(int index) { return Expr::make_feature(index); }
ExprPtr scale(Rational coeff, ExprPtr body) { return Expr::make_scale(std::move(coeff), std::move(body)); }
ExprPtr add(ExprPtr left, ExprPtr right) { return Expr::make_add(std::move(left), std::move(right)); }
ExprPtr diamond(ExprPtr body) { return Expr::make_diamond(std::move(body)); }
ExprPtr apply_act(ActivationId act, ExprPtr body) { return Expr::make_apply(std::move(act), std::move(body)); }

ExprPtr constant(Rational a) {
    if (a == Rational(1)) return one();
    return scale(std::move(a), one());
}

ExprPtr sub(ExprPtr l, ExprPtr r) { return add(std::move(l), scale(Rational(-1), std::move(r))); }

ExprPtr step_of(ExprPtr e) { return apply_act("step", std::move(e)); }

ExprPtr step_prime(ExprPtr e) {
    return sub(one(), step_of(scale(Rational(-1), std::move(e))));
}

int diamond_depth(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return 0;
        case Expr::Kind::Scale:
        case Expr::Kind::Apply:
            return diamond_depth(*e.child());
        case Expr::Kind::Add:
            return std::max(diamond_depth(*e.left()), diamond_depth(*e.right()));
        case Expr::Kind::Diamond:
            return diamond_depth(*e.child()) + 1;
    }
    return 0;
}

int activation_depth(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return 0;
        case Expr::Kind::Scale:
        case Expr::Kind::Diamond:
            return activation_depth(*e.child());
        case Expr::Kind::Add:
            return std::max(activation_depth(*e.left()), activation_depth(*e.right()));
        case Expr::Kind::Apply:
            return activation_depth(*e.child()) + 1;
    }
    return 0;
}

mpz_class lcd(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return 1;
        case Expr::Kind::Scale:
            return lcm(e.coeff().den(), lcd(*e.child()));
        case Expr::Kind::Add:
            return lcm(lcd(*e.left()), lcd(*e.right()));
        case Expr::Kind::Diamond:
        case Expr::Kind::Apply:
            return lcd(*e.child());
    }
    return 1;
}

int max_feature_index(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::One:
            return 0;
        case Expr::Kind::Feature:
            return e.feature_index();
        case Expr::Kind::Scale:
        case Expr::Kind::Diamond:
        case Expr::Kind::Apply:
            return max_feature_index(*e.child());
        case Expr::Kind::Add:
            return std::max(max_feature_index(*e.left()), max_feature_index(*e.right()));
    }
    return 0;
}

namespace {

void classify_walk(const Expr& e, Classification& out) {
    switch (e.kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return;
        case Expr::Kind::Scale:
        case Expr::Kind::Diamond:
            classify_walk(*e.child(), out);
            return;
        case Expr::Kind::Add:
            classify_walk(*e.left(), out);
            classify_walk(*e.right(), out);
            return;
        case Expr::Kind::Apply: {
            out.affine = false;
            bool seen = false;
            for (const auto& id : out.activations)
                if (id == e.act()) seen = true;
            if (!seen) out.activations.push_back(e.act());
            classify_walk(*e.child(), out);
            return;
        }
    }
}

}  // namespace

Classification classify(const Expr& e) {
    Classification out;
    classify_walk(e, out);
    return out;
}

bool structural_equal(const Expr& a, const Expr& b) {
    if (&a == &b) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::One:
            return true;
        case Expr::Kind::Feature:
            return a.feature_index() == b.feature_index();
        case Expr::Kind::Scale:
            return a.coeff() == b.coeff() && structural_equal(*a.child(), *b.child());
        case Expr::Kind::Add:
            return structural_equal(*a.left(), *b.left()) && structural_equal(*a.right(), *b.right());
        case Expr::Kind::Diamond:
            return structural_equal(*a.child(), *b.child());
        case Expr::Kind::Apply:
            return a.act() == b.act() && structural_equal(*a.child(), *b.child());
    }
    return false;
}

std::size_t structural_hash(const Expr& e) {
    auto mix = [](std::size_t h, std::size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = static_cast<std::size_t>(e.kind()) * 1000003u;
    switch (e.kind()) {
        case Expr::Kind::One:
            break;
        case Expr::Kind::Feature:
            h = mix(h, static_cast<std::size_t>(e.feature_index()));
            break;
        case Expr::Kind::Scale:
            h = mix(h, e.coeff().hash());
            h = mix(h, structural_hash(*e.child()));
            break;
        case Expr::Kind::Add:
            h = mix(h, structural_hash(*e.left()));
            h = mix(h, structural_hash(*e.right()));
            break;
        case Expr::Kind::Diamond:
            h = mix(h, structural_hash(*e.child()));
            break;
        case Expr::Kind::Apply:
            h = mix(h, std::hash<std::string>{}(e.act()));
            h = mix(h, structural_hash(*e.child()));
            break;
    }
    return h;
}

namespace {

std::string feature_name(int index, const std::vector<std::string>* names) {
    if (names && index >= 1 && index <= static_cast<int>(names->size()))
        return (*names)[static_cast<std::size_t>(index - 1)];
    return "P" + std::to_string(index);
}

void print_expr(const Expr& e, const std::vector<std::string>* names, std::string& out);

// factor := '1' | P int | ident | D factor | ident '(' expr ')' | '(' expr ')'
void print_factor(const Expr& e, const std::vector<std::string>* names, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::One:
            out += "1";
            return;
        case Expr::Kind::Feature:
            out += feature_name(e.feature_index(), names);
            return;
        case Expr::Kind::Diamond:
            out += "D ";
            print_factor(*e.child(), names, out);
            return;
        case Expr::Kind::Apply:
            out += e.act();
            out += "(";
            print_expr(*e.child(), names, out);
            out += ")";
            return;
        case Expr::Kind::Scale:
        case Expr::Kind::Add:
            out += "(";
            print_expr(e, names, out);
            out += ")";
            return;
    }
}

void print_term(const Expr& e, const std::vector<std::string>* names, std::string& out) {
    if (e.kind() == Expr::Kind::Scale) {
        out += e.coeff().str();
        out += " ";
        print_factor(*e.child(), names, out);
    } else {
        print_factor(e, names, out);
    }
}

void print_expr(const Expr& e, const std::vector<std::string>* names, std::string& out) {
    if (e.kind() == Expr::Kind::Add) {
        print_expr(*e.left(), names, out);
        const Expr& r = *e.right();
        // a + (-1) b prints as "a - b".
        if (r.kind() == Expr::Kind::Scale && r.coeff() == Rational(-1)) {
            out += " - ";
            print_factor(*r.child(), names, out);
        } else if (r.kind() == Expr::Kind::Add) {
            out += " + ";
            print_factor(r, names, out);  // parenthesize right-nested sums
        } else {
            out += " + ";
            print_term(r, names, out);
        }
        return;
    }
    print_term(e, names, out);
}

}  // namespace

std::string print(const Expr& e, const std::vector<std::string>* colour_names) {
    std::string out;
    print_expr(e, colour_names, out);
    return out;
}

}  // namespace mplang
