#ifndef SKA_PARSER_HPP
#define SKA_PARSER_HPP

#include <string>
#include <vector>

#include "ska/ideal.hpp"
#include "ska/polynomial.hpp"

namespace ska {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

// Expression syntax: integers/fractions, + - * ^, parentheses; no juxtaposition.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line_no = 0);

// Ideal file: `vars: x1, x2, ...`, `field: QQ` or `field: GF(p)`, then one
// generator per nonempty line; `#` starts a comment.
IdealPresentation parse_ideal_text(const std::string& text);

// Same layout with a `dualvars:` header; returns forms over the dual ring.
struct DualModuleText {
    RingPtr dual_ring;
    std::vector<Polynomial> forms;
};
DualModuleText parse_dual_text(const std::string& text);

Field parse_field_tag(const std::string& tag);

std::string read_file(const std::string& path);

}  // namespace ska

#endif
