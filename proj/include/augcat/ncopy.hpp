/* The n-copy algebra: generators a_{i,j} indexed by rows and columns in
 * [1, n], words constrained by composability (adjacent column = row), and
 * the differential expanding every word of d(a) over all composable index
 * paths. Conjugating by a combined augmentation and erasing indices gives
 * a second, structurally independent route to the multilinearised
 * operations; disagreement with the direct formulas is a bug detector. */

#pragma once

#include "augcat/augmentation.hpp"
#include "augcat/poly.hpp"

namespace augcat {

struct IndexedGen {
    GenIndex gen;
    std::uint32_t row; // in [1, n]
    std::uint32_t col;

    auto operator<=>(const IndexedGen&) const = default;
};

using IndexedWord = std::vector<IndexedGen>;

bool composable(const IndexedWord& w);

struct IndexedWordLess {
    bool operator()(const IndexedWord& a, const IndexedWord& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

class NcopyPoly {
public:
    using TermMap = std::map<IndexedWord, std::uint32_t, IndexedWordLess>;

    explicit NcopyPoly(std::uint32_t p) : p_(p) {}

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coefficient(const IndexedWord& w) const;

    void add_term(const IndexedWord& w, Scalar c);
    NcopyPoly& operator+=(const NcopyPoly& other);

    bool operator==(const NcopyPoly& other) const
    {
        return p_ == other.p_ && terms_ == other.terms_;
    }

private:
    std::uint32_t p_;
    TermMap terms_;
};

/* d_n(a_{i,j}): every length-k word of d(a) summed over index paths
 * i = i_0 -> i_1 -> ... -> i_k = j; the unit word contributes delta_{ij}
 * times the unit. Every output word is composable. */
NcopyPoly n_copy_differential(const Dga& dga, std::uint32_t n, IndexedGen a);

/* Extension of d_n by linearity and the Leibniz rule. */
NcopyPoly apply_n_copy_differential(const Dga& dga, std::uint32_t n, const NcopyPoly& x);

/* eps_E: the diagonal assembly of an n-tuple of augmentations. */
class CombinedAugmentation {
public:
    explicit CombinedAugmentation(std::vector<Augmentation> parts);

    std::uint32_t copies() const { return static_cast<std::uint32_t>(parts_.size()); }
    const DgaPtr& dga() const { return parts_.front().dga(); }

    /* eps_i(a) on a_{i,i}; 0 off the diagonal. */
    Scalar value(IndexedGen a) const;

private:
    std::vector<Augmentation> parts_;
};

/* Length-d part of the conjugated differential phi o d_n o phi^{-1} on
 * a_{i,j}, computed by substituting x -> x + eps_E(x) letterwise. The
 * constant term must cancel; this is asserted, never dropped silently. */
NcopyPoly conjugated_component(const Dga& dga, const CombinedAugmentation& E,
                               std::size_t d, IndexedGen a);

/* Words whose index path matches the given sequence (path[m] is the row of
 * letter m, path[m+1] its column), with the indices forgotten. A length-k
 * word needs a path of length k+1; the empty word always matches. */
Poly erase_indices(const Dga& dga, const NcopyPoly& x,
                   std::span<const std::uint32_t> path);

/* Increasing-path convenience: first -> first+1 -> ... */
Poly erase_indices_along_path(const Dga& dga, const NcopyPoly& x, std::uint32_t first);

struct OracleMismatch {
    std::size_t arity;
    std::uint32_t copies;
    std::vector<std::size_t> context; // augmentation indices, left to right
    GenIndex generator;
    Poly via_conjugation;
    Poly via_formula;

    OracleMismatch() : via_conjugation(2), via_formula(2) {}
};

/* Compares the conjugation route against the direct formula for every
 * context of arity d <= max_d and every copy count n in [d+1, max_n]. */
std::vector<OracleMismatch> oracle_check(const DgaPtr& dga, std::uint32_t max_n,
                                         std::size_t max_d, unsigned jobs = 1);

} // namespace augcat
