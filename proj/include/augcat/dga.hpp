/* Semi-free differential graded algebras over F_p: a finite list of graded
 * generators together with the differential on each generator, extended to
 * the whole tensor algebra by linearity and the signed Leibniz rule. */

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "augcat/poly.hpp"

namespace augcat {

struct Generator {
    std::string name;
    int grading; // reduced grading gr(a); the absolute grading is gr(a)+1

    bool operator==(const Generator& other) const
    {
        return name == other.name && grading == other.grading;
    }
};

struct DgaViolation {
    enum class Kind { NonHomogeneousTerm, DifferentialSquare };

    Kind kind;
    std::string generator;
    Word word;           // offending word (homogeneity violations)
    int expected_grading = 0;
    int actual_grading = 0;
    std::string message; // human-readable summary, includes the d^2 residual
};

class Dga {
public:
    /* diffs is indexed like gens; a missing differential is the zero
     * polynomial. Structural problems (duplicate names, letters out of
     * range, non-prime p) throw; mathematical defects are reported by
     * validate(). */
    Dga(std::uint32_t p, std::vector<Generator> gens, std::vector<Poly> diffs);

    std::uint32_t characteristic() const { return p_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(GenIndex g) const { return gens_.at(g); }
    std::optional<GenIndex> find(std::string_view name) const;

    const Poly& differential(GenIndex g) const { return diffs_.at(g); }
    int grading(GenIndex g) const { return gens_.at(g).grading; }
    int word_grading(const Word& w) const;

    /* Extends the generator table by linearity and the Leibniz rule
     * d(ab) = d(a) b + (-1)^{gr(a)} a d(b). */
    Poly apply_differential(const Poly& x) const;

    /* Checks degree -1 homogeneity of every differential term and
     * d(d(a)) = 0 for every generator. Empty result iff valid. */
    std::vector<DgaViolation> validate() const;

    /* New DGA with two extra generators b (gr = degree), c (gr = degree-1)
     * and db = c. Throws on a name collision. */
    Dga stabilized(int degree, const std::string& name_b, const std::string& name_c) const;

    bool operator==(const Dga& other) const;

    /* Indices of generators in the given reduced degree, in declaration
     * order. */
    std::vector<GenIndex> generators_of_grading(int k) const;

    void require_element(const Poly& x) const; // letters in range, same p

private:
    std::uint32_t p_;
    std::vector<Generator> gens_;
    std::vector<Poly> diffs_;
    std::unordered_map<std::string, GenIndex> index_;
};

using DgaPtr = std::shared_ptr<const Dga>;

inline bool same_algebra(const Dga& a, const Dga& b)
{
    return &a == &b || a == b;
}

} // namespace augcat
