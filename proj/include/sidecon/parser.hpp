#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidecon/lie.hpp"
#include "sidecon/polynomial.hpp"

namespace sidecon {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col);
    int line;
    int col;
};

// Grammar: integers and rationals, identifiers, + - * ^ ( ), unary minus,
// '*' required between factors, '^' right-associative with nonnegative
// integer exponents, division only by nonzero rational literals.
Polynomial parse_expression(const std::string& src, const ContextPtr& ctx);

struct SystemFile {
    ContextPtr context;
    VectorField field;
    std::vector<std::string> def_order;  // declaration order
    std::map<std::string, Polynomial> defs;
    std::map<std::string, VectorField> vecs;
    std::vector<std::string> vec_order;
};

// Line-oriented format: system/params/states headers, one "eq x' = expr"
// per state, optional "def name = expr" and "vec name = (expr, ...)",
// '#' comments. Diagnostics carry line numbers.
SystemFile parse_system(const std::string& path);
SystemFile parse_system_text(const std::string& text, const std::string& origin = "<input>");

}  // namespace sidecon
