#include "qsusp/parser.hpp"

#include <cctype>
#include <vector>

namespace qsusp {

namespace {

struct Ast {
    enum class Kind { Sum, Prod, Pow, Gen, Rational, QPower, Commutator, Bracket };
    Kind kind;
    std::size_t pos = 0;
    std::vector<Ast> children;

    // Gen payload
    std::string base;
    int index = 0;
    bool star = false;
    // Rational / QPower / Pow payload
    Rational value;
    int qexp = 1;
    unsigned power = 1;
    std::vector<int> signs;  // Sum: +1 / -1 per child
};

struct Token {
    enum class Kind {
        Gen, Number, Q, Star, Plus, Minus, Caret, Slash,
        LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, End
    };
    Kind kind = Kind::End;
    std::size_t pos = 0;
    unsigned long number = 0;
    std::string base;  // Gen
    int index = 0;
    bool star = false;
};

Token make_token(Token::Kind kind, std::size_t pos) {
    Token t;
    t.kind = kind;
    t.pos = pos;
    return t;
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = make_token(Token::Kind::End, pos_);
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                ++pos_;
            }
            current_ = make_token(Token::Kind::Number, start);
            current_.number = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                name += text_[pos_++];
            if (name == "q") {
                current_ = make_token(Token::Kind::Q, start);
                return;
            }
            Token t = make_token(Token::Kind::Gen, start);
            t.base = name;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                int idx = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    idx = idx * 10 + (text_[pos_++] - '0');
                t.index = idx;
                // a star glued to an indexed generator is the involution
                if (pos_ < text_.size() && text_[pos_] == '*') {
                    t.star = true;
                    ++pos_;
                }
            }
            current_ = t;
            return;
        }
        ++pos_;
        switch (c) {
            case '*': current_ = make_token(Token::Kind::Star, start); return;
            case '+': current_ = make_token(Token::Kind::Plus, start); return;
            case '-': current_ = make_token(Token::Kind::Minus, start); return;
            case '^': current_ = make_token(Token::Kind::Caret, start); return;
            case '/': current_ = make_token(Token::Kind::Slash, start); return;
            case '(': current_ = make_token(Token::Kind::LParen, start); return;
            case ')': current_ = make_token(Token::Kind::RParen, start); return;
            case '[': current_ = make_token(Token::Kind::LBracket, start); return;
            case ']': current_ = make_token(Token::Kind::RBracket, start); return;
            case '{': current_ = make_token(Token::Kind::LBrace, start); return;
            case '}': current_ = make_token(Token::Kind::RBrace, start); return;
            case ',': current_ = make_token(Token::Kind::Comma, start); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Ast parse() {
        Ast e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    static bool starts_factor(const Token& t) {
        switch (t.kind) {
            case Token::Kind::Gen:
            case Token::Kind::Number:
            case Token::Kind::Q:
            case Token::Kind::LParen:
            case Token::Kind::LBracket:
            case Token::Kind::LBrace: return true;
            default: return false;
        }
    }

    Ast expr() {
        Ast sum;
        sum.kind = Ast::Kind::Sum;
        sum.pos = lex_.peek().pos;
        int sign = 1;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            sign = -1;
        }
        sum.children.push_back(term());
        sum.signs.push_back(sign);
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            sign = lex_.take().kind == Token::Kind::Plus ? 1 : -1;
            sum.children.push_back(term());
            sum.signs.push_back(sign);
        }
        return sum;
    }

    Ast term() {
        Ast prod;
        prod.kind = Ast::Kind::Prod;
        prod.pos = lex_.peek().pos;
        prod.children.push_back(factor());
        while (true) {
            if (lex_.peek().kind == Token::Kind::Star) {
                lex_.take();
                prod.children.push_back(factor());
            } else if (starts_factor(lex_.peek())) {
                prod.children.push_back(factor());
            } else {
                break;
            }
        }
        return prod;
    }

    Ast factor() {
        Ast a = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            const std::size_t pos = lex_.take().pos;
            if (lex_.peek().kind != Token::Kind::Number)
                throw ParseError("expected a nonnegative integer exponent", pos);
            Ast p;
            p.kind = Ast::Kind::Pow;
            p.pos = pos;
            p.power = static_cast<unsigned>(lex_.take().number);
            p.children.push_back(std::move(a));
            return p;
        }
        return a;
    }

    Ast atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Gen: {
                Ast g;
                g.kind = Ast::Kind::Gen;
                g.pos = t.pos;
                g.base = t.base;
                g.index = t.index;
                g.star = t.star;
                return g;
            }
            case Token::Kind::Number: {
                Ast r;
                r.kind = Ast::Kind::Rational;
                r.pos = t.pos;
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Token::Kind::Number)
                        throw ParseError("expected a denominator", lex_.peek().pos);
                    const unsigned long den = lex_.take().number;
                    if (den == 0) throw ParseError("zero denominator", t.pos);
                    r.value = Rational(static_cast<long>(t.number), static_cast<long>(den));
                } else {
                    r.value = Rational(static_cast<long>(t.number));
                }
                return r;
            }
            case Token::Kind::Q: {
                Ast p;
                p.kind = Ast::Kind::QPower;
                p.pos = t.pos;
                p.qexp = 1;
                if (lex_.peek().kind == Token::Kind::Caret) {
                    lex_.take();
                    int sign = 1;
                    if (lex_.peek().kind == Token::Kind::Minus) {
                        lex_.take();
                        sign = -1;
                    }
                    if (lex_.peek().kind != Token::Kind::Number)
                        throw ParseError("expected an integer exponent of q", lex_.peek().pos);
                    p.qexp = sign * static_cast<int>(lex_.take().number);
                }
                return p;
            }
            case Token::Kind::LParen: {
                Ast inner = expr();
                if (lex_.peek().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return inner;
            }
            case Token::Kind::LBracket:
            case Token::Kind::LBrace: {
                const bool is_commutator = t.kind == Token::Kind::LBracket;
                Ast node;
                node.kind = is_commutator ? Ast::Kind::Commutator : Ast::Kind::Bracket;
                node.pos = t.pos;
                node.children.push_back(expr());
                if (lex_.peek().kind != Token::Kind::Comma)
                    throw ParseError("expected ','", lex_.peek().pos);
                lex_.take();
                node.children.push_back(expr());
                const auto closing = is_commutator ? Token::Kind::RBracket : Token::Kind::RBrace;
                if (lex_.peek().kind != closing)
                    throw ParseError(is_commutator ? "expected ']'" : "expected '}'", lex_.peek().pos);
                lex_.take();
                return node;
            }
            default: throw ParseError("expected an expression", t.pos);
        }
    }

    Lexer lex_;
};

std::string gen_text(const Ast& g) {
    std::string name = g.base;
    if (g.index > 0) name += std::to_string(g.index);
    if (g.star) name += "*";
    return name;
}

NCPoly eval_quantum(const Ast& a, const AlgebraPreset& A) {
    switch (a.kind) {
        case Ast::Kind::Sum: {
            NCPoly r;
            for (std::size_t i = 0; i < a.children.size(); ++i) {
                const NCPoly c = eval_quantum(a.children[i], A);
                if (a.signs[i] > 0)
                    r += c;
                else
                    r -= c;
            }
            return r;
        }
        case Ast::Kind::Prod: {
            NCPoly r = NCPoly::scalar(LaurentQ(1));
            for (const Ast& c : a.children) r = mul(r, eval_quantum(c, A), A);
            return r;
        }
        case Ast::Kind::Pow: {
            const NCPoly base = eval_quantum(a.children[0], A);
            NCPoly r = NCPoly::scalar(LaurentQ(1));
            for (unsigned i = 0; i < a.power; ++i) r = mul(r, base, A);
            return r;
        }
        case Ast::Kind::Gen: {
            auto code = A.code_by_name(gen_text(a));
            if (!code) throw ParseError("unknown generator '" + gen_text(a) + "' for preset", a.pos);
            return NCPoly::generator(*code);
        }
        case Ast::Kind::Rational: return NCPoly::scalar(LaurentQ(a.value));
        case Ast::Kind::QPower: return NCPoly::scalar(LaurentQ::q_power(a.qexp));
        case Ast::Kind::Commutator:
            return commutator(eval_quantum(a.children[0], A), eval_quantum(a.children[1], A), A);
        case Ast::Kind::Bracket:
            throw ParseError("'{,}' is a Poisson bracket; not defined on a quantum preset", a.pos);
    }
    throw ParseError("malformed expression", a.pos);
}

ClassicalPoly eval_classical(const Ast& a, const PoissonStructure& P) {
    const ClassicalVars& vars = P.vars();
    switch (a.kind) {
        case Ast::Kind::Sum: {
            ClassicalPoly r;
            for (std::size_t i = 0; i < a.children.size(); ++i) {
                const ClassicalPoly c = eval_classical(a.children[i], P);
                if (a.signs[i] > 0)
                    r += c;
                else
                    r -= c;
            }
            return P.reduce(r);
        }
        case Ast::Kind::Prod: {
            ClassicalPoly r = ClassicalPoly::scalar(vars.num_vars(), Rational(1));
            for (const Ast& c : a.children) r = r * eval_classical(c, P);
            return P.reduce(r);
        }
        case Ast::Kind::Pow: {
            const ClassicalPoly base = eval_classical(a.children[0], P);
            ClassicalPoly r = ClassicalPoly::scalar(vars.num_vars(), Rational(1));
            for (unsigned i = 0; i < a.power; ++i) r = r * base;
            return P.reduce(r);
        }
        case Ast::Kind::Gen: {
            // tau1* parses and folds to tau1 (self-conjugate).
            const std::string nm = gen_text(a);
            auto v = vars.by_name(nm);
            if (!v && a.star) {
                Ast plain = a;
                plain.star = false;
                auto u = vars.by_name(gen_text(plain));
                if (u && vars.is_tau_type(*u)) v = u;
            }
            if (!v) throw ParseError("unknown variable '" + nm + "' for structure", a.pos);
            return ClassicalPoly::variable(vars, *v);
        }
        case Ast::Kind::Rational:
            return ClassicalPoly::scalar(vars.num_vars(), a.value);
        case Ast::Kind::QPower:
            throw ParseError("q is a quantum scalar; not defined on a classical structure", a.pos);
        case Ast::Kind::Commutator:
            throw ParseError("'[,]' is a commutator; not defined on a classical structure", a.pos);
        case Ast::Kind::Bracket:
            return P.bracket(eval_classical(a.children[0], P), eval_classical(a.children[1], P));
    }
    throw ParseError("malformed expression", a.pos);
}

}  // namespace

NCPoly parse_quantum(const std::string& text, const AlgebraPreset& A) {
    Parser p(text);
    return eval_quantum(p.parse(), A);
}

ClassicalPoly parse_classical(const std::string& text, const PoissonStructure& P) {
    Parser p(text);
    return eval_classical(p.parse(), P);
}

}  // namespace qsusp
