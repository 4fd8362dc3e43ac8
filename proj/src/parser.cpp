#include "ore/parser.hpp"

#include <cctype>

namespace ore {

namespace {

struct Token {
    enum class Kind { Number, Name, Op, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Op, std::string(1, c), i});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    std::unique_ptr<ExprNode> parse() {
        auto e = expr();
        if (cur().kind != Token::Kind::End)
            throw parse_error("unexpected trailing input '" + cur().text + "'", cur().pos);
        return e;
    }

  private:
    const Token& cur() const { return toks_[ix_]; }
    void advance() { ++ix_; }
    bool eat_op(const std::string& t) {
        if (cur().kind == Token::Kind::Op && cur().text == t) {
            advance();
            return true;
        }
        return false;
    }

    std::unique_ptr<ExprNode> make(ExprNode::Kind k, size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    std::unique_ptr<ExprNode> expr() {
        auto lhs = term();
        while (cur().kind == Token::Kind::Op && (cur().text == "+" || cur().text == "-")) {
            bool add = cur().text == "+";
            size_t p = cur().pos;
            advance();
            auto n = make(add ? ExprNode::Kind::Add : ExprNode::Kind::Sub, p);
            n->a = std::move(lhs);
            n->b = term();
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<ExprNode> term() {
        auto lhs = unary();
        while (cur().kind == Token::Kind::Op && (cur().text == "*" || cur().text == "/")) {
            bool mul = cur().text == "*";
            size_t p = cur().pos;
            advance();
            auto n = make(mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div, p);
            n->a = std::move(lhs);
            n->b = unary();
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<ExprNode> unary() {
        if (cur().kind == Token::Kind::Op && cur().text == "-") {
            size_t p = cur().pos;
            advance();
            auto n = make(ExprNode::Kind::Neg, p);
            n->a = unary();
            return n;
        }
        if (cur().kind == Token::Kind::Op && cur().text == "+") {
            advance();
            return unary();
        }
        return power();
    }

    std::unique_ptr<ExprNode> power() {
        auto base = atom();
        if (cur().kind == Token::Kind::Op && cur().text == "^") {
            size_t p = cur().pos;
            advance();
            long sign = 1;
            bool parens = eat_op("(");
            if (eat_op("-")) sign = -1;
            if (cur().kind != Token::Kind::Number)
                throw parse_error("integer exponent expected", cur().pos);
            long e = std::stol(cur().text);
            advance();
            if (parens && !eat_op(")")) throw parse_error("')' expected in exponent", cur().pos);
            auto n = make(ExprNode::Kind::Pow, p);
            n->a = std::move(base);
            n->exponent = sign * e;
            return n;
        }
        return base;
    }

    std::unique_ptr<ExprNode> atom() {
        const Token& t = cur();
        if (t.kind == Token::Kind::Number) {
            auto n = make(ExprNode::Kind::Number, t.pos);
            n->number = rat_from_string(t.text);
            advance();
            return n;
        }
        if (t.kind == Token::Kind::Name) {
            std::string name = t.text;
            size_t p = t.pos;
            advance();
            if (cur().kind == Token::Kind::Op && cur().text == "(") {
                advance();
                auto n = make(ExprNode::Kind::Call, p);
                n->name = name;
                n->a = expr();
                if (!eat_op(")")) throw parse_error("')' expected", cur().pos);
                return n;
            }
            auto n = make(ExprNode::Kind::Variable, p);
            n->name = name;
            return n;
        }
        if (t.kind == Token::Kind::Op && t.text == "(") {
            advance();
            auto n = expr();
            if (!eat_op(")")) throw parse_error("')' expected", cur().pos);
            return n;
        }
        throw parse_error("operand expected", t.pos);
    }

    std::vector<Token> toks_;
    size_t ix_ = 0;
};

OreOperator eval_operator(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Number:
            return OreOperator(RationalFunction(n.number));
        case ExprNode::Kind::Variable:
            if (n.name == "x") return OreOperator(RationalFunction::x());
            if (n.name == "t" || n.name == "tau") return OreOperator::tau();
            throw parse_error("unknown symbol '" + n.name + "'", n.pos);
        case ExprNode::Kind::Call:
            throw parse_error("function calls are not part of the operator grammar", n.pos);
        case ExprNode::Kind::Add:
            return eval_operator(*n.a) + eval_operator(*n.b);
        case ExprNode::Kind::Sub:
            return eval_operator(*n.a) - eval_operator(*n.b);
        case ExprNode::Kind::Mul:
            return eval_operator(*n.a) * eval_operator(*n.b);
        case ExprNode::Kind::Div: {
            OreOperator a = eval_operator(*n.a);
            OreOperator b = eval_operator(*n.b);
            if (b.order() > 0) throw parse_error("division by an expression containing t", n.pos);
            if (b.is_zero()) throw parse_error("division by zero", n.pos);
            return OreOperator(RationalFunction(1) / b.coeff(0)) * a;
        }
        case ExprNode::Kind::Neg:
            return -eval_operator(*n.a);
        case ExprNode::Kind::Pow: {
            OreOperator base = eval_operator(*n.a);
            long e = n.exponent;
            if (e < 0) {
                if (base.order() > 0) throw parse_error("negative power of t", n.pos);
                if (base.is_zero()) throw parse_error("zero to negative power", n.pos);
                return OreOperator(base.coeff(0).pow(e));
            }
            OreOperator r = OreOperator::one();
            for (long i = 0; i < e; ++i) r *= base;
            return r;
        }
    }
    throw parse_error("malformed expression", n.pos);
}

}  // namespace

std::unique_ptr<ExprNode> parse_expression(const std::string& text) {
    return Parser(text).parse();
}

OreOperator parse_operator(const std::string& text) {
    return eval_operator(*parse_expression(text));
}

std::string print_operator(const OreOperator& l) { return l.to_string("x", "t"); }

}  // namespace ore
