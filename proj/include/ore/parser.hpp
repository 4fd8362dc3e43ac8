#ifndef ORE_PARSER_HPP
#define ORE_PARSER_HPP

#include <memory>
#include <string>
#include <vector>

#include "ore/ore_operator.hpp"

namespace ore {

class parse_error : public error {
  public:
    parse_error(const std::string& what, size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

// Small arithmetic AST shared by the operator grammar and the sequence
// identity grammar.
struct ExprNode {
    enum class Kind { Number, Variable, Call, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rational number;                  // Number
    std::string name;                 // Variable, Call
    std::unique_ptr<ExprNode> a, b;   // operands; Pow keeps exponent in b
    long exponent = 0;                // Pow
    size_t pos = 0;
};

std::unique_ptr<ExprNode> parse_expression(const std::string& text);

// Operator grammar: rational coefficient expressions in x, with t (alias tau)
// the shift. Division by any expression containing t and negative powers of t
// are rejected.
OreOperator parse_operator(const std::string& text);

// Canonical text form; parse_operator(print_operator(L)) == L.
std::string print_operator(const OreOperator& l);

}  // namespace ore

#endif
