#include "hgmono/wordlang.hpp"

#include <cctype>
#include <sstream>

namespace hgmono {

namespace {

struct Token {
    enum class Kind { Ident, Power, LParen, RParen, LBracket, RBracket, Comma, Star, End };
    Kind kind = Kind::End;
    std::string text;      // Ident
    long long value = 0;   // Power exponent
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   ((s_[j] >= 'a' && s_[j] <= 'z') || (s_[j] >= '0' && s_[j] <= '9')))
                ++j;
            tok_.kind = Token::Kind::Ident;
            tok_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (c == '^') {
            std::size_t j = i_ + 1;
            if (j < s_.size() && s_[j] == '-') ++j;
            std::size_t d = j;
            while (d < s_.size() && std::isdigit(static_cast<unsigned char>(s_[d]))) ++d;
            if (d == j) throw WordSyntaxError("expected integer after '^' at position " +
                                              std::to_string(i_));
            tok_.kind = Token::Kind::Power;
            tok_.value = std::stoll(s_.substr(i_ + 1, d - i_ - 1));
            i_ = d;
            return;
        }
        ++i_;
        switch (c) {
            case '(': tok_.kind = Token::Kind::LParen; return;
            case ')': tok_.kind = Token::Kind::RParen; return;
            case '[': tok_.kind = Token::Kind::LBracket; return;
            case ']': tok_.kind = Token::Kind::RBracket; return;
            case ',': tok_.kind = Token::Kind::Comma; return;
            case '*': tok_.kind = Token::Kind::Star; return;
        }
        throw WordSyntaxError(std::string("unexpected character '") + c +
                              "' at position " + std::to_string(i_ - 1));
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    WordPtr parse() {
        WordPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw WordSyntaxError("trailing input at position " +
                                  std::to_string(lex_.peek().pos));
        return e;
    }

  private:
    bool at_factor_start() const {
        auto k = lex_.peek().kind;
        return k == Token::Kind::Ident || k == Token::Kind::LParen ||
               k == Token::Kind::LBracket || k == Token::Kind::Star;
    }

    WordPtr expr() {
        auto node = std::make_shared<WordExpr>();
        node->kind = WordExpr::Kind::Product;
        node->parts.push_back(factor());
        while (at_factor_start()) {
            if (lex_.peek().kind == Token::Kind::Star) lex_.take();
            node->parts.push_back(factor());
        }
        if (node->parts.size() == 1) return node->parts[0];
        return node;
    }

    WordPtr factor() {
        WordPtr a = atom();
        if (lex_.peek().kind == Token::Kind::Power) {
            Token t = lex_.take();
            auto node = std::make_shared<WordExpr>();
            node->kind = WordExpr::Kind::Power;
            node->base = a;
            node->exponent = t.value;
            return node;
        }
        return a;
    }

    void expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k)
            throw WordSyntaxError(std::string("expected ") + what + " at position " +
                                  std::to_string(lex_.peek().pos));
        lex_.take();
    }

    WordPtr atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Ident) {
            lex_.take();
            auto node = std::make_shared<WordExpr>();
            node->kind = WordExpr::Kind::Name;
            node->name = t.text;
            return node;
        }
        if (t.kind == Token::Kind::LParen) {
            lex_.take();
            WordPtr e = expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        if (t.kind == Token::Kind::LBracket) {
            lex_.take();
            auto node = std::make_shared<WordExpr>();
            node->kind = WordExpr::Kind::Commutator;
            node->parts.push_back(expr());
            expect(Token::Kind::Comma, "','");
            node->parts.push_back(expr());
            expect(Token::Kind::RBracket, "']'");
            return node;
        }
        throw WordSyntaxError("expected a word atom at position " + std::to_string(t.pos));
    }

    Lexer lex_;
};

void print_node(const WordExpr& e, std::ostream& os, bool atom_context) {
    switch (e.kind) {
        case WordExpr::Kind::Name:
            os << e.name;
            return;
        case WordExpr::Kind::Product: {
            if (atom_context) os << '(';
            for (std::size_t i = 0; i < e.parts.size(); ++i) {
                if (i) os << ' ';
                print_node(*e.parts[i], os, true);
            }
            if (atom_context) os << ')';
            return;
        }
        case WordExpr::Kind::Power: {
            bool wrap = e.base->kind == WordExpr::Kind::Product ||
                        e.base->kind == WordExpr::Kind::Power;
            if (wrap) os << '(';
            print_node(*e.base, os, !wrap);
            if (wrap) os << ')';
            os << '^' << e.exponent;
            return;
        }
        case WordExpr::Kind::Commutator:
            os << '[';
            print_node(*e.parts[0], os, false);
            os << ", ";
            print_node(*e.parts[1], os, false);
            os << ']';
            return;
    }
}

}  // namespace

WordPtr parse_word(const std::string& text) { return Parser(text).parse(); }

std::string print_word(const WordExpr& expr) {
    std::ostringstream os;
    print_node(expr, os, false);
    return os.str();
}

Mat eval_word(const WordExpr& expr, const Env& env) {
    switch (expr.kind) {
        case WordExpr::Kind::Name: {
            auto it = env.find(expr.name);
            if (it == env.end()) throw UnknownName("unknown name: " + expr.name);
            return it->second;
        }
        case WordExpr::Kind::Product: {
            Mat out = Mat::identity();
            for (const WordPtr& p : expr.parts) out = out * eval_word(*p, env);
            return out;
        }
        case WordExpr::Kind::Power:
            return eval_word(*expr.base, env).pow(expr.exponent);
        case WordExpr::Kind::Commutator: {
            Mat s = eval_word(*expr.parts[0], env);
            Mat t = eval_word(*expr.parts[1], env);
            return s * t * s.inverse() * t.inverse();
        }
    }
    throw WordSyntaxError("corrupt AST");
}

Env run_program(const WordProgram& prog, const Mat& a, const Mat& b) {
    Env env{{"a", a}, {"b", b}};
    for (const auto& [name, expr] : prog.bindings) {
        if (env.count(name)) throw WordSyntaxError("rebinding of name: " + name);
        env.emplace(name, eval_word(*expr, env));
    }
    return env;
}

}  // namespace hgmono
