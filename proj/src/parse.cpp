#include "mplang/parse.hpp"

#include <cctype>
#include <utility>

#include "mplang/errors.hpp"

namespace mplang {

SymbolTable SymbolTable::plain(const Catalogue& cat) {
    SymbolTable s;
    s.catalogue = &cat;
    return s;
}

SymbolTable SymbolTable::with_colours(const std::vector<std::string>& names, const Catalogue& cat) {
    SymbolTable s;
    s.catalogue = &cat;
    for (std::size_t i = 0; i < names.size(); ++i)
        s.colours[names[i]] = static_cast<int>(i) + 1;
    return s;
}

namespace {

enum class Tok {
    Number, Ident, Plus, Minus, Slash, Star, LParen, RParen, Comma,
    Amp, Pipe, Bang, Gt, Ge, Lt, Le, Eq, Ne, End
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') { ++i; ++line; col = 1; continue; }
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; ++col; continue; }
        int l = line, c = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Tok::Number, text.substr(i, j - i), l, c);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::Ident, text.substr(i, j - i), l, c);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = [&](char second) { return i + 1 < text.size() && text[i + 1] == second; };
        switch (ch) {
            case '+': push(Tok::Plus, "+", l, c); break;
            case '-': push(Tok::Minus, "-", l, c); break;
            case '/': push(Tok::Slash, "/", l, c); break;
            case '*': push(Tok::Star, "*", l, c); break;
            case '(': push(Tok::LParen, "(", l, c); break;
            case ')': push(Tok::RParen, ")", l, c); break;
            case ',': push(Tok::Comma, ",", l, c); break;
            case '&': push(Tok::Amp, "&", l, c); break;
            case '|': push(Tok::Pipe, "|", l, c); break;
            case '!':
                if (two('=')) { push(Tok::Ne, "!=", l, c); ++i; ++col; }
                else push(Tok::Bang, "!", l, c);
                break;
            case '>':
                if (two('=')) { push(Tok::Ge, ">=", l, c); ++i; ++col; }
                else push(Tok::Gt, ">", l, c);
                break;
            case '<':
                if (two('=')) { push(Tok::Le, "<=", l, c); ++i; ++col; }
                else push(Tok::Lt, "<", l, c);
                break;
            case '=': push(Tok::Eq, "=", l, c); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_feature_ident(const std::string& s, int& index) {
    if (s.size() < 2 || s[0] != 'P') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    index = std::stoi(s.substr(1));
    return true;
}

class Parser {
public:
    Parser(const std::string& text, const SymbolTable& syms, bool sugar)
        : toks_(lex(text)), syms_(syms), sugar_(sugar) {}

    ExprPtr expression() {
        ExprPtr e = parse_sum();
        expect(Tok::End, "end of input");
        return e;
    }

    BoolExprPtr boolean() {
        BoolExprPtr b = parse_bor();
        expect(Tok::End, "end of input");
        return b;
    }

private:
    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"),
                         t.line, t.col);
    }
    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail("expected " + what);
        next();
    }

    static bool starts_factor(Tok k) {
        return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
    }

    Rational parse_rational() {
        if (peek().kind != Tok::Number) fail("expected number");
        std::string num = next().text;
        if (peek().kind == Tok::Slash) {
            next();
            if (peek().kind != Tok::Number) fail("expected denominator");
            std::string den = next().text;
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    // term := '-'? rational? factor. A bare rational is accepted as an
    // implicit scaling of 1.
    ExprPtr parse_term() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        if (peek().kind == Tok::Number) {
            const bool bare_one = peek().text == "1" && peek(1).kind != Tok::Slash &&
                                  !starts_factor(peek(1).kind) && peek(1).kind != Tok::Star;
            if (bare_one) {
                next();
                return neg ? scale(Rational(-1), one()) : one();
            }
            Rational r = parse_rational();
            if (neg) r = -r;
            if (peek().kind == Tok::Star) next();
            if (starts_factor(peek().kind)) return scale(r, parse_factor());
            return scale(r, one());
        }
        ExprPtr f = parse_factor();
        return neg ? scale(Rational(-1), std::move(f)) : f;
    }

    ExprPtr parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number:
                if (t.text == "1" && peek(1).kind != Tok::Slash) {
                    next();
                    return one();
                }
                fail("expected factor");
            case Tok::LParen: {
                next();
                ExprPtr e;
                if (sugar_) {
                    BoolExprPtr b = parse_bor();
                    e = b->kind() == BoolExpr::Kind::Atom ? b->atom() : expand_sugar(b);
                } else {
                    e = parse_sum();
                }
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                std::string name = next().text;
                if (name == "D") return diamond(parse_factor());
                int index = 0;
                if (is_feature_ident(name, index)) {
                    if (index < 1) fail("feature index must be >= 1");
                    return feature(index);
                }
                if (peek().kind == Tok::LParen) {
                    if (!syms_.catalogue->contains(name))
                        throw ParseError("unknown activation name '" + name + "'", t.line, t.col);
                    next();
                    ExprPtr body = parse_sum();
                    expect(Tok::RParen, "')'");
                    return apply_act(name, std::move(body));
                }
                auto it = syms_.colours.find(name);
                if (it == syms_.colours.end())
                    throw ParseError("unknown identifier '" + name + "'", t.line, t.col);
                return feature(it->second);
            }
            default:
                fail("expected factor");
        }
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            ExprPtr t = parse_term();
            e = add(std::move(e), minus ? scale(Rational(-1), std::move(t)) : std::move(t));
        }
        return e;
    }

    BoolExprPtr parse_cmp() {
        ExprPtr l = parse_sum();
        CmpOp op;
        switch (peek().kind) {
            case Tok::Gt: op = CmpOp::Gt; break;
            case Tok::Ge: op = CmpOp::Ge; break;
            case Tok::Lt: op = CmpOp::Lt; break;
            case Tok::Le: op = CmpOp::Le; break;
            case Tok::Eq: op = CmpOp::Eq; break;
            case Tok::Ne: op = CmpOp::Ne; break;
            default:
                return BoolExpr::make_atom(std::move(l));
        }
        next();
        return BoolExpr::make_cmp(op, std::move(l), parse_sum());
    }

    BoolExprPtr parse_bnot() {
        if (peek().kind == Tok::Bang) {
            next();
            return BoolExpr::make_not(parse_bnot());
        }
        return parse_cmp();
    }

    BoolExprPtr parse_band() {
        BoolExprPtr b = parse_bnot();
        while (peek().kind == Tok::Amp) {
            next();
            b = BoolExpr::make_and(std::move(b), parse_bnot());
        }
        return b;
    }

    BoolExprPtr parse_bor() {
        BoolExprPtr b = parse_band();
        while (peek().kind == Tok::Pipe) {
            next();
            b = BoolExpr::make_or(std::move(b), parse_band());
        }
        return b;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const SymbolTable& syms_;
    bool sugar_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, const SymbolTable& syms) {
    return Parser(text, syms, false).expression();
}

BoolExprPtr parse_sugared(const std::string& text, const SymbolTable& syms) {
    return Parser(text, syms, true).boolean();
}

ExprPtr parse_expr_sugared(const std::string& text, const SymbolTable& syms) {
    BoolExprPtr b = parse_sugared(text, syms);
    return b->kind() == BoolExpr::Kind::Atom ? b->atom() : expand_sugar(b);
}

}  // namespace mplang
