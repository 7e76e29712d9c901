#include "mplang/logic.hpp"

#include <cctype>

#include "mplang/errors.hpp"
#include "mplang/parse.hpp"

namespace mplang {

FormulaPtr LogicFormula::top() {
    static const FormulaPtr instance = FormulaPtr(new LogicFormula());
    return instance;
}

FormulaPtr LogicFormula::colour_atom(int index) {
    if (index < 1) throw LogicError("colour index must be >= 1");
    auto f = new LogicFormula();
    f->kind_ = Kind::Colour;
    f->n_ = index;
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::negation(FormulaPtr x) {
    auto f = new LogicFormula();
    f->kind_ = Kind::Not;
    f->left_ = std::move(x);
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::conjunction(FormulaPtr l, FormulaPtr r) {
    auto f = new LogicFormula();
    f->kind_ = Kind::And;
    f->left_ = std::move(l);
    f->right_ = std::move(r);
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::disjunction(FormulaPtr l, FormulaPtr r) {
    auto f = new LogicFormula();
    f->kind_ = Kind::Or;
    f->left_ = std::move(l);
    f->right_ = std::move(r);
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::dia(FormulaPtr x) {
    auto f = new LogicFormula();
    f->kind_ = Kind::Dia;
    f->left_ = std::move(x);
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::dia_geq(int n, FormulaPtr x) {
    if (n < 1) throw LogicError("counting modality needs n >= 1");
    auto f = new LogicFormula();
    f->kind_ = Kind::DiaGeq;
    f->n_ = n;
    f->left_ = std::move(x);
    return FormulaPtr(f);
}

FormulaPtr LogicFormula::count_atom(std::vector<std::pair<Rational, FormulaPtr>> terms, CmpOp op,
                                    Rational delta) {
    auto f = new LogicFormula();
    f->kind_ = Kind::CountAtom;
    f->terms_ = std::move(terms);
    f->op_ = op;
    f->delta_ = std::move(delta);
    return FormulaPtr(f);
}

namespace {

bool cmp_holds(const Rational& l, CmpOp op, const Rational& r) {
    switch (op) {
        case CmpOp::Gt: return l > r;
        case CmpOp::Ge: return l >= r;
        case CmpOp::Lt: return l < r;
        case CmpOp::Le: return l <= r;
        case CmpOp::Eq: return l == r;
        case CmpOp::Ne: return l != r;
    }
    return false;
}

std::vector<bool> sat(const FormulaPtr& f, const ColouredGraph& g) {
    int n = g.node_count();
    std::vector<bool> out(static_cast<std::size_t>(n));
    switch (f->kind()) {
        case LogicFormula::Kind::Top:
            out.assign(static_cast<std::size_t>(n), true);
            break;
        case LogicFormula::Kind::Colour: {
            if (f->colour() > g.colour_count())
                throw LogicError("colour index " + std::to_string(f->colour()) + " out of range");
            for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = g.colour_of(v) == f->colour();
            break;
        }
        case LogicFormula::Kind::Not: {
            auto x = sat(f->child(), g);
            for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = !x[static_cast<std::size_t>(v)];
            break;
        }
        case LogicFormula::Kind::And: {
            auto l = sat(f->left(), g);
            auto r = sat(f->right(), g);
            for (int v = 0; v < n; ++v)
                out[static_cast<std::size_t>(v)] = l[static_cast<std::size_t>(v)] && r[static_cast<std::size_t>(v)];
            break;
        }
        case LogicFormula::Kind::Or: {
            auto l = sat(f->left(), g);
            auto r = sat(f->right(), g);
            for (int v = 0; v < n; ++v)
                out[static_cast<std::size_t>(v)] = l[static_cast<std::size_t>(v)] || r[static_cast<std::size_t>(v)];
            break;
        }
        case LogicFormula::Kind::Dia:
        case LogicFormula::Kind::DiaGeq: {
            auto x = sat(f->child(), g);
            int need = f->kind() == LogicFormula::Kind::Dia ? 1 : f->count();
            for (int v = 0; v < n; ++v) {
                int count = 0;
                for (int u : g.graph().neighbours(v))
                    if (x[static_cast<std::size_t>(u)]) ++count;
                out[static_cast<std::size_t>(v)] = count >= need;
            }
            break;
        }
        case LogicFormula::Kind::CountAtom: {
            std::vector<std::vector<bool>> subs;
            subs.reserve(f->terms().size());
            for (const auto& [lambda, phi] : f->terms()) subs.push_back(sat(phi, g));
            for (int v = 0; v < n; ++v) {
                Rational total(0);
                for (std::size_t i = 0; i < subs.size(); ++i) {
                    int count = 0;
                    for (int u : g.graph().neighbours(v))
                        if (subs[i][static_cast<std::size_t>(u)]) ++count;
                    total += f->terms()[i].first * Rational(count);
                }
                out[static_cast<std::size_t>(v)] = cmp_holds(total, f->op(), f->delta());
            }
            break;
        }
    }
    return out;
}

}  // namespace

NodeVector eval_logic(const FormulaPtr& f, const ColouredGraph& g) {
    auto s = sat(f, g);
    NodeVector out(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) out[v] = s[v] ? Rational(1) : Rational(0);
    return out;
}

namespace {

// Expressions that take values in {0,1} on every coloured graph by
// their very shape: 1, P_i, step(...), and 1 - (such).
bool manifestly_boolean(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::One:
        case Expr::Kind::Feature:
            return true;
        case Expr::Kind::Apply:
            return e->act() == "step";
        case Expr::Kind::Add:
            return e->left()->kind() == Expr::Kind::One &&
                   e->right()->kind() == Expr::Kind::Scale &&
                   e->right()->coeff() == Rational(-1) && manifestly_boolean(e->right()->child());
        default:
            return false;
    }
}

// 0/1-valued form of a translated subformula.
ExprPtr as_indicator(const ExprPtr& e) {
    return manifestly_boolean(e) ? e : step_of(e);
}

}  // namespace

ExprPtr logic_to_mplang(const FormulaPtr& f) {
    switch (f->kind()) {
        case LogicFormula::Kind::Top:
            return one();
        case LogicFormula::Kind::Colour:
            return feature(f->colour());
        case LogicFormula::Kind::Not:
            return sub(one(), as_indicator(logic_to_mplang(f->child())));
        case LogicFormula::Kind::And:
            return add(add(as_indicator(logic_to_mplang(f->left())),
                           as_indicator(logic_to_mplang(f->right()))),
                       constant(Rational(-1)));
        case LogicFormula::Kind::Or:
            return add(as_indicator(logic_to_mplang(f->left())),
                       as_indicator(logic_to_mplang(f->right())));
        case LogicFormula::Kind::Dia:
            return diamond(as_indicator(logic_to_mplang(f->child())));
        case LogicFormula::Kind::DiaGeq: {
            ExprPtr count = diamond(as_indicator(logic_to_mplang(f->child())));
            if (f->count() == 1) return step_of(std::move(count));
            return step_of(add(std::move(count), constant(Rational(-(f->count() - 1)))));
        }
        case LogicFormula::Kind::CountAtom: {
            ExprPtr sum;
            auto append = [&sum](ExprPtr term) {
                sum = sum ? add(std::move(sum), std::move(term)) : std::move(term);
            };
            for (const auto& [lambda, phi] : f->terms()) {
                ExprPtr count = diamond(as_indicator(logic_to_mplang(phi)));
                append(lambda == Rational(1) ? std::move(count) : scale(lambda, std::move(count)));
            }
            if (!sum) sum = constant(Rational(0));
            return compare(f->op(), std::move(sum), constant(f->delta()));
        }
    }
    throw LogicError("unreachable");
}

namespace {

// Formula surface parser. Shares the expression tokenizer conventions;
// kept separate because the grammars barely overlap.
class FormulaParser {
public:
    FormulaParser(const std::string& text, const std::vector<std::string>& colours)
        : text_(text), colours_(colours) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError("formula: " + msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (start == pos_) fail("expected rational");
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    int integer() {
        Rational r = rational();
        if (!r.is_integer()) fail("expected integer");
        return static_cast<int>(r.num().get_si());
    }

    CmpOp cmp_op() {
        skip_ws();
        auto two = [&](const char* s) {
            if (pos_ + 1 < text_.size() && text_[pos_] == s[0] && text_[pos_ + 1] == s[1]) {
                pos_ += 2;
                return true;
            }
            return false;
        };
        if (two(">=")) return CmpOp::Ge;
        if (two("<=")) return CmpOp::Le;
        if (two("!=")) return CmpOp::Ne;
        if (eat('>')) return CmpOp::Gt;
        if (eat('<')) return CmpOp::Lt;
        if (eat('=')) return CmpOp::Eq;
        fail("expected comparison operator");
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (eat('|')) f = LogicFormula::disjunction(std::move(f), parse_and());
        return f;
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_not();
        while (eat('&')) f = LogicFormula::conjunction(std::move(f), parse_not());
        return f;
    }

    FormulaPtr parse_not() {
        if (eat('!')) return LogicFormula::negation(parse_not());
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        skip_ws();
        if (eat('(')) {
            FormulaPtr f = parse_or();
            expect(')');
            return f;
        }
        std::string name = ident();
        if (name == "top") return LogicFormula::top();
        if (name == "dia") {
            skip_ws();
            if (pos_ + 1 < text_.size() && text_[pos_] == '>' && text_[pos_ + 1] == '=') {
                pos_ += 2;
                int n = integer();
                if (n < 1) fail("counting modality needs n >= 1");
                expect('(');
                FormulaPtr f = parse_or();
                expect(')');
                return LogicFormula::dia_geq(n, std::move(f));
            }
            expect('(');
            FormulaPtr f = parse_or();
            expect(')');
            return LogicFormula::dia(std::move(f));
        }
        if (name == "sum") {
            expect('(');
            std::vector<std::pair<Rational, FormulaPtr>> terms;
            do {
                Rational lambda = rational();
                expect('*');
                terms.emplace_back(std::move(lambda), parse_or());
            } while (eat(','));
            expect(')');
            CmpOp op = cmp_op();
            Rational delta = rational();
            return LogicFormula::count_atom(std::move(terms), op, std::move(delta));
        }
        for (std::size_t i = 0; i < colours_.size(); ++i)
            if (colours_[i] == name) return LogicFormula::colour_atom(static_cast<int>(i) + 1);
        fail("unknown colour '" + name + "'");
    }

    const std::string& text_;
    const std::vector<std::string>& colours_;
    std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const std::vector<std::string>& colours) {
    return FormulaParser(text, colours).parse();
}

std::string print_formula(const FormulaPtr& f, const std::vector<std::string>* colour_names) {
    auto name_of = [&](int i) {
        if (colour_names && i >= 1 && i <= static_cast<int>(colour_names->size()))
            return (*colour_names)[static_cast<std::size_t>(i - 1)];
        return "c" + std::to_string(i);
    };
    switch (f->kind()) {
        case LogicFormula::Kind::Top:
            return "top";
        case LogicFormula::Kind::Colour:
            return name_of(f->colour());
        case LogicFormula::Kind::Not:
            return "!(" + print_formula(f->child(), colour_names) + ")";
        case LogicFormula::Kind::And:
            return "(" + print_formula(f->left(), colour_names) + " & " +
                   print_formula(f->right(), colour_names) + ")";
        case LogicFormula::Kind::Or:
            return "(" + print_formula(f->left(), colour_names) + " | " +
                   print_formula(f->right(), colour_names) + ")";
        case LogicFormula::Kind::Dia:
            return "dia(" + print_formula(f->child(), colour_names) + ")";
        case LogicFormula::Kind::DiaGeq:
            return "dia>=" + std::to_string(f->count()) + "(" +
                   print_formula(f->child(), colour_names) + ")";
        case LogicFormula::Kind::CountAtom: {
            std::string out = "sum(";
            bool first = true;
            for (const auto& [lambda, phi] : f->terms()) {
                if (!first) out += ", ";
                first = false;
                out += lambda.str() + "*" + print_formula(phi, colour_names);
            }
            out += ") ";
            out += cmp_op_name(f->op());
            out += " " + f->delta().str();
            return out;
        }
    }
    return "?";
}

}  // namespace mplang
