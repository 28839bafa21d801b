#include "adictop/parser.hpp"

#include <cctype>

#include "adictop/errors.hpp"

namespace adictop {

namespace {

constexpr long kMaxExponent = 512;

struct Lexer {
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    bool peek_number() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool peek_ident() { return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'; }

    Int read_number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a number", pos_);
        return Int(text_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected an identifier", pos_);
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

ExprPtr make(ExprNode::Kind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos());
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr left;
        if (lex_.peek() == '-') {
            lex_.advance();
            left = make(ExprNode::Kind::Neg);
            left->children.push_back(term());
        } else {
            if (lex_.peek() == '+') lex_.advance();
            left = term();
        }
        for (;;) {
            char c = lex_.peek();
            if (c == '+' || c == '-') {
                lex_.advance();
                ExprPtr node = make(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub);
                node->children.push_back(left);
                node->children.push_back(term());
                left = node;
            } else {
                return left;
            }
        }
    }

    ExprPtr term() {
        ExprPtr left = factor();
        for (;;) {
            char c = lex_.peek();
            if (c == '*' || c == '/') {
                lex_.advance();
                ExprPtr node = make(c == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div);
                node->children.push_back(left);
                node->children.push_back(factor());
                left = node;
            } else if (c == '(' || lex_.peek_ident() || lex_.peek_number()) {
                // juxtaposition: "x(x-1)", "2t"
                ExprPtr node = make(ExprNode::Kind::Mul);
                node->children.push_back(left);
                node->children.push_back(factor());
                left = node;
            } else {
                return left;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (lex_.peek() == '^') {
            lex_.advance();
            bool neg = false;
            if (lex_.peek() == '-') {
                neg = true;
                lex_.advance();
            }
            Int e = lex_.read_number();
            if (e > kMaxExponent) throw ParseError("exponent too large", lex_.pos());
            ExprPtr node = make(ExprNode::Kind::Pow);
            node->exponent = static_cast<long>(e) * (neg ? -1 : 1);
            node->children.push_back(b);
            return node;
        }
        return b;
    }

    ExprPtr base() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.advance();
            ExprPtr e = expr();
            if (lex_.peek() != ')') throw ParseError("expected ')'", lex_.pos());
            lex_.advance();
            return e;
        }
        if (c == '-') {
            lex_.advance();
            ExprPtr node = make(ExprNode::Kind::Neg);
            node->children.push_back(factor());
            return node;
        }
        if (lex_.peek_number()) {
            ExprPtr node = make(ExprNode::Kind::Number);
            node->number = lex_.read_number();
            return node;
        }
        if (lex_.peek_ident()) {
            ExprPtr node = make(ExprNode::Kind::Var);
            node->var = lex_.read_ident();
            return node;
        }
        throw ParseError("expected a value", lex_.pos());
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

Ground eval_ground(const ExprPtr& e, const std::map<std::string, Ground>& env) {
    switch (e->kind) {
        case ExprNode::Kind::Number:
            return Ground(Rat(e->number));
        case ExprNode::Kind::Var: {
            auto it = env.find(e->var);
            if (it == env.end()) throw ParseError("unknown symbol '" + e->var + "'", 0);
            return it->second;
        }
        case ExprNode::Kind::Neg:
            return -eval_ground(e->children[0], env);
        case ExprNode::Kind::Add:
            return eval_ground(e->children[0], env) + eval_ground(e->children[1], env);
        case ExprNode::Kind::Sub:
            return eval_ground(e->children[0], env) - eval_ground(e->children[1], env);
        case ExprNode::Kind::Mul:
            return eval_ground(e->children[0], env) * eval_ground(e->children[1], env);
        case ExprNode::Kind::Div:
            return eval_ground(e->children[0], env) / eval_ground(e->children[1], env);
        case ExprNode::Kind::Pow:
            return eval_ground(e->children[0], env).pow(e->exponent);
    }
    throw Error("eval_ground: unreachable");
}

Rat parse_rational(const std::string& text) {
    return eval_ground(parse_expression(text), {}).as_rational();
}

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    std::map<std::string, Ground> env{{var, Ground(RatFunc::variable())}};
    return eval_ground(parse_expression(text), env).as_function();
}

Ground parse_ground(const std::string& text, Field field) {
    if (field == Field::Q) return Ground(parse_rational(text));
    return Ground(parse_ratfunc(text));
}

Poly parse_poly(const std::string& text, const std::string& var) {
    RatFunc f = parse_ratfunc(text, var);
    if (f.den() != Poly(Rat(1)))
        throw ParseError("expected a polynomial, found a denominator", 0);
    return f.num();
}

namespace {

// Evaluation into MultiPoly; division is only defined by nonzero constants.
MultiPoly eval_multipoly(const ExprPtr& e, const std::map<std::string, size_t>& vars,
                         size_t nvars, Field field) {
    auto constant = [&](const Ground& g) { return MultiPoly::constant(nvars, g); };
    switch (e->kind) {
        case ExprNode::Kind::Number:
            return constant(Ground(Rat(e->number)));
        case ExprNode::Kind::Var: {
            auto it = vars.find(e->var);
            if (it != vars.end()) return MultiPoly::variable(nvars, it->second);
            if (field == Field::Qt && e->var == "t")
                return constant(Ground(RatFunc::variable()));
            throw ParseError("unknown variable '" + e->var + "'", 0);
        }
        case ExprNode::Kind::Neg:
            return -eval_multipoly(e->children[0], vars, nvars, field);
        case ExprNode::Kind::Add:
            return eval_multipoly(e->children[0], vars, nvars, field) +
                   eval_multipoly(e->children[1], vars, nvars, field);
        case ExprNode::Kind::Sub:
            return eval_multipoly(e->children[0], vars, nvars, field) -
                   eval_multipoly(e->children[1], vars, nvars, field);
        case ExprNode::Kind::Mul:
            return eval_multipoly(e->children[0], vars, nvars, field) *
                   eval_multipoly(e->children[1], vars, nvars, field);
        case ExprNode::Kind::Div: {
            MultiPoly lhs = eval_multipoly(e->children[0], vars, nvars, field);
            MultiPoly rhs = eval_multipoly(e->children[1], vars, nvars, field);
            if (rhs.total_degree() > 0)
                throw ParseError("division by a variable in a polynomial context", 0);
            if (rhs.is_zero()) throw DomainError("division by zero");
            Ground c = rhs.terms()[0].coeff;
            return lhs.scale(Ground(1L) / c);
        }
        case ExprNode::Kind::Pow: {
            if (e->exponent < 0)
                throw ParseError("negative exponent in a polynomial context", 0);
            return eval_multipoly(e->children[0], vars, nvars, field).pow(e->exponent);
        }
    }
    throw Error("eval_multipoly: unreachable");
}

}  // namespace

std::vector<Ground> parse_poly_over_ground(const std::string& text,
                                           const std::string& main_var, Field field) {
    std::map<std::string, size_t> vars{{main_var, 0}};
    MultiPoly p = eval_multipoly(parse_expression(text), vars, 1, field);
    long deg = p.total_degree();
    std::vector<Ground> coeffs(static_cast<size_t>(std::max(deg + 1, 1L)), Ground(0L));
    for (const MultiPoly::Term& t : p.terms()) coeffs[static_cast<size_t>(t.exps[0])] = t.coeff;
    return coeffs;
}

MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& names,
                          Field field) {
    std::map<std::string, size_t> vars;
    for (size_t i = 0; i < names.size(); ++i) vars[names[i]] = i;
    return eval_multipoly(parse_expression(text), vars, names.size(), field);
}

}  // namespace adictop
