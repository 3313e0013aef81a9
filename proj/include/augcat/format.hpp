/* Text formats. DGA files carry one directive per line, `#` starts a
 * comment:
 *
 *   field <p>
 *   gen <name> <integer-grading>
 *   diff <name> = <term> + <term> + ...
 *
 * A term is an optional integer coefficient followed by generator names;
 * the bare token `1` is the unit word and `0` the zero polynomial.
 * Generators without a diff line have d = 0.
 *
 * Morphism files list one `img <gen> = <poly>` line per source generator.
 */

#pragma once

#include <iosfwd>
#include <string>

#include "augcat/dga.hpp"
#include "augcat/morphism.hpp"

namespace augcat {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Dga parse_dga(const std::string& text);
Dga parse_dga_file(const std::string& path);

std::string print_dga(const Dga& dga);

/* Polynomial in the generators of dga, e.g. "1 + b1 + 2 b1 b2". */
std::string print_poly(const Dga& dga, const Poly& x);
Poly parse_poly(const Dga& dga, const std::string& text); // throws AlgebraError

DgaMorphism parse_morphism(const std::string& text, DgaPtr source, DgaPtr target);
DgaMorphism parse_morphism_file(const std::string& path, DgaPtr source, DgaPtr target);

} // namespace augcat
