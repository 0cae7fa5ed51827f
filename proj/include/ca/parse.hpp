#ifndef CA_PARSE_HPP
#define CA_PARSE_HPP

#include <string>
#include <vector>

#include "ca/groebner.hpp"

namespace ca {

struct ParseError : Error {
    int line, col;
    ParseError(int line, int col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
};

// Polynomial expression: sums of products of integers, rationals (a/b),
// named variables with ^ powers, and parenthesized subexpressions.
Polynomial parse_polynomial(const std::string& src, const std::vector<std::string>& names,
                            const Field& field, const TermOrder& order, int line_offset = 1);

// Field spec "q" or "fp:P"; order spec "revlex", "lex", "elim:K",
// "weighted:w1,w2,...". Used by file headers and command-line flags alike.
Field parse_field_spec(const std::string& s);
TermOrder parse_order_spec(const std::string& s);
std::string field_spec(const Field& f);
std::string order_spec(const TermOrder& o);

// Ideal text format:
//   field q
//   order revlex
//   vars x1 x2 x3
//   x1*x2 - x3^2
//   ...
// One generator per line, '#' comments, blank lines ignored. A line "---"
// ends the block (used by two-ideal inputs); parsing starts at `line`
// which advances past everything consumed.
IdealPresentation parse_ideal(const std::string& text);
std::vector<IdealPresentation> parse_ideal_blocks(const std::string& text);
std::string print_ideal(const IdealPresentation& I);

// Facet list text format:
//   vertices 7
//   1 2 3
//   4 5 6
// Facets must form an antichain and stay within 1..vertices.
struct ComplexFileData {
    int vertices = 0;
    std::vector<std::vector<int>> facets;  // sorted ascending, 1-based
};
ComplexFileData parse_complex(const std::string& text);
std::string print_complex(const ComplexFileData& c);

}  // namespace ca

#endif
