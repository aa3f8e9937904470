#ifndef HGMONO_WORDLANG_HPP
#define HGMONO_WORDLANG_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hgmono/mat.hpp"

namespace hgmono {

// grammar: expr := factor+ (product, separators whitespace or '*')
//          factor := atom ('^' signed-integer)?
//          atom := identifier | '(' expr ')' | '[' expr ',' expr ']'
//          identifier := [a-z][a-z0-9]*
struct WordExpr;
using WordPtr = std::shared_ptr<const WordExpr>;

struct WordExpr {
    enum class Kind { Name, Product, Power, Commutator };
    Kind kind;
    std::string name;             // Name
    std::vector<WordPtr> parts;   // Product (nonempty); Commutator has 2
    WordPtr base;                 // Power
    long long exponent = 0;       // Power, any integer
};

using Env = std::map<std::string, Mat>;

struct WordProgram {
    std::vector<std::pair<std::string, WordPtr>> bindings;  // definition order
};

WordPtr parse_word(const std::string& text);  // throws WordSyntaxError with position
std::string print_word(const WordExpr& expr);

// [s,t] evaluates as s t s^-1 t^-1; Power(w,-k) = inverse(w)^k
Mat eval_word(const WordExpr& expr, const Env& env);

// env seeded with 'a', 'b'; bindings evaluated in order
Env run_program(const WordProgram& prog, const Mat& a, const Mat& b);

}  // namespace hgmono

#endif
