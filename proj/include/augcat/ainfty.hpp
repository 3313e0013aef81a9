/* Multilinearised differential components and the dual composition maps of
 * the augmentation category.
 *
 * Conventions. A "segment context" is a sequence (t_0, ..., t_d) of
 * augmentations read left to right across a word: t_0 weights the letters
 * before the first surviving position, t_1 the letters between the first
 * and second, and so on. The public entry points translate the written
 * conventions onto contexts:
 *   - multilinear_component takes (eps_0, ..., eps_d) with eps_0 acting on
 *     the leftmost segment;
 *   - mu takes (eps_0, ..., eps_d) together with chords (b_d, ..., b_1)
 *     where b_d is the leftmost surviving letter and eps_d acts on the
 *     segment to its left, so the context is the reversed tuple.
 * Gradings inside signs are absolute (|a| = gr(a)+1); the sign exponents
 * reduce to sums of reduced gradings. */

#pragma once

#include <optional>

#include "augcat/bilinear.hpp"

namespace augcat {

/* Formal F_p-combination of generators; dual generators are identified
 * with generators. */
class CochainVec {
public:
    explicit CochainVec(std::uint32_t p) : p_(p) {}

    static CochainVec generator(std::uint32_t p, GenIndex g);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<GenIndex, std::uint32_t>& coeffs() const { return coeffs_; }
    Scalar coefficient(GenIndex g) const;

    void add(GenIndex g, Scalar c);
    CochainVec& operator+=(const CochainVec& other);
    CochainVec scaled(Scalar c) const;

    bool operator==(const CochainVec& other) const
    {
        return p_ == other.p_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const CochainVec& other) const { return !(*this == other); }

private:
    std::uint32_t p_;
    std::map<GenIndex, std::uint32_t> coeffs_;
};

/* Reduced grading of a homogeneous combination; nullopt for 0 or mixed. */
std::optional<int> homogeneous_grading(const Dga& dga, const CochainVec& v);

namespace detail {

/* Raw-valued engines: rows are full value vectors per generator, one row
 * per context slot. They do not require the rows to be augmentations. */

/* Sum over the words of source and the size-d subsets of kept positions;
 * dropped letters are evaluated segmentwise against the context rows. */
Poly subset_expansion(const Dga& dga, const Poly& source,
                      const std::vector<std::vector<std::uint32_t>>& ctx, std::size_t d);

Poly multilinear_component_values(const Dga& dga,
                                  const std::vector<std::vector<std::uint32_t>>& ctx,
                                  GenIndex a);
CochainVec mu_values(const Dga& dga, const std::vector<std::vector<std::uint32_t>>& ctx,
                     const std::vector<GenIndex>& chords_left_to_right);

} // namespace detail

/* Length-d part of the conjugated differential on a (Leibniz-free subset
 * expansion): returns a sum of d-letter words, d = tuple.size()-1 >= 1. */
Poly multilinear_component(std::span<const Augmentation> tuple, GenIndex a);

/* Dual composition map evaluated by explicit subword matching. The tuple
 * is (eps_0, ..., eps_d); chords are (b_d, ..., b_1), leftmost first. */
CochainVec mu(std::span<const Augmentation> tuple, std::span<const GenIndex> chords);
CochainVec mu(std::span<const Augmentation> tuple, std::span<const CochainVec> args);

/* Sparse tensor of one arity for a fixed segment context: arg words
 * (leftmost letter first) -> output vector. Verifies the 2-d absolute
 * grading shift of every produced entry. */
class MuTable {
public:
    MuTable(const Dga& dga, std::span<const Augmentation> ctx);

    std::size_t arity() const { return arity_; }
    const std::map<Word, CochainVec>& entries() const { return entries_; }
    const CochainVec* find(const Word& args) const;

private:
    std::size_t arity_;
    std::map<Word, CochainVec> entries_;
};

struct AinftyViolation {
    std::size_t arity = 0;                 // d of the failing relation
    std::vector<std::size_t> context;      // augmentation indices, left to right
    Word args;                             // generator arguments, leftmost first
    CochainVec residual;

    AinftyViolation() : residual(2) {}
};

/* Left side of the A-infinity relation with the printed sign convention
 * (exponent summed over the arguments right of the inner block), for every
 * context of length <= max_d+1 over the enumerated augmentations. */
std::vector<AinftyViolation> check_a_infinity(const DgaPtr& dga, std::size_t max_d,
                                              unsigned jobs = 1);

/* Same sweep with the sign the square-zero differential forces on the
 * dualised operations (exponent summed over the arguments left of the
 * inner block). Coincides with the printed convention when p = 2. */
std::vector<AinftyViolation> check_dual_leibniz(const DgaPtr& dga, std::size_t max_d,
                                                unsigned jobs = 1);

class NonCycleError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/* Cochain complex of one written pair together with canonical
 * representatives modulo coboundaries. */
class PairHomology {
public:
    PairHomology(const Augmentation& left, const Augmentation& right);

    const BilinearComplex& complex() const { return complex_; }
    bool is_cocycle(const CochainVec& v) const;
    CochainVec differential(const CochainVec& v) const;
    CochainVec reduce(const CochainVec& v) const;
    GradedDims dims() const { return complex_.homology(); }

private:
    DgaPtr dga_;
    BilinearComplex complex_;
    std::map<int, RowEchelon> coboundaries_; // per reduced degree
};

/* [x] o [y] at representative level: (-1)^{|x|} mu^2 over the context
 * (eps2, eps1, eps0), projected to the canonical representative in the
 * pair (eps2, eps0). x must be a homogeneous cocycle of (eps2, eps1) and
 * y a cocycle of (eps1, eps0). */
CochainVec homological_composition(const Augmentation& eps0, const Augmentation& eps1,
                                   const Augmentation& eps2, const CochainVec& x,
                                   const CochainVec& y);

} // namespace augcat
