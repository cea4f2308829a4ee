#pragma once

// Expression parser, deterministic printer and the seed file format.

#include <stdexcept>
#include <string>

#include "lpa/laurent.hpp"
#include "lpa/seed.hpp"

namespace lpa {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

// Grammar: integer literals; variables x[n], x[n,m], x[n,m,l] with signed
// indices; + - * ^ and parentheses; ^ takes a signed integer exponent;
// juxtaposition is not multiplication. Whitespace-insensitive.
LaurentPoly parse_expr(const std::string& text);

// Canonical form under the graded-lex term order, highest term first.
// parse_expr(print_expr(p)) == p.
std::string print_expr(const LaurentPoly& p);

std::string print_var(const VarKey& v);

// Subscript/superscript layout (x_n^{m,l}); documentation aid, not parsed back.
std::string pretty_expr(const LaurentPoly& p);

// Seed files: '#' comments, "name <word>", "arity <1|2|3>", then either
// "template <name>" [+ "radius <r>"] or one "entry <var> = <expr> [frozen]"
// line per entry.
Seed load_seed_file(const std::string& path);
Seed parse_seed_text(const std::string& text);
std::string seed_to_text(const Seed& s, const std::string& name);

}  // namespace lpa
