#ifndef MPLANG_PARSE_HPP
#define MPLANG_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "mplang/activation.hpp"
#include "mplang/expr.hpp"
#include "mplang/sugar.hpp"

namespace mplang {

// Name resolution for the surface syntax: colour atoms and activation
// names. Feature indices P1, P2, ... always resolve.
struct SymbolTable {
    std::map<std::string, int> colours;  // name -> 1-based feature index
    const Catalogue* catalogue = &Catalogue::standard();

    static SymbolTable plain(const Catalogue& cat = Catalogue::standard());
    static SymbolTable with_colours(const std::vector<std::string>& names,
                                    const Catalogue& cat = Catalogue::standard());
};

// Core grammar:
//   expr     := term (('+'|'-') term)*
//   term     := '-'? rational? factor
//   factor   := '1' | 'P' int | ident | 'D' factor | ident '(' expr ')' | '(' expr ')'
//   rational := int ('/' posint)?
// '- t' desugars to '+ (-1) t'. Throws ParseError with position info.
ExprPtr parse_expr(const std::string& text, const SymbolTable& syms = SymbolTable::plain());

// Superset of the core grammar with the Boolean shorthand operators
// ( '|' '&' '!' '>' '>=' '<' '<=' '=' '!=' ); parenthesised groups may
// contain sugared subexpressions.
BoolExprPtr parse_sugared(const std::string& text, const SymbolTable& syms = SymbolTable::plain());

// parse_sugared followed by expand_sugar.
ExprPtr parse_expr_sugared(const std::string& text, const SymbolTable& syms = SymbolTable::plain());

}  // namespace mplang

#endif
