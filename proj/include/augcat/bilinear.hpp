/* Bilinearised complexes for a pair of augmentations: every word of d(a)
 * contributes its single surviving letter, weighted by the left
 * augmentation on the prefix and the right augmentation on the suffix.
 * Homology is reported as reduced-degree -> dimension. */

#pragma once

#include <map>

#include "augcat/augmentation.hpp"
#include "augcat/linalg.hpp"

namespace augcat {

/* Finitely supported degree -> dimension map; zero entries are omitted. */
using GradedDims = std::map<int, int>;

class BilinearComplex {
public:
    /* Chain-level differential d^{left,right}; lowers reduced degree by 1. */
    static BilinearComplex differential(const Augmentation& left, const Augmentation& right);

    /* Cochain differential: the transpose, raising reduced degree by 1. */
    static BilinearComplex codifferential(const Augmentation& left, const Augmentation& right);

    const DgaPtr& dga() const { return dga_; }
    bool cohomological() const { return cohomological_; }
    int degree_shift() const { return cohomological_ ? 1 : -1; }

    /* Full matrix over all generators: entry (target, source). */
    const FpMatrix& matrix() const { return matrix_; }

    /* Block of the differential leaving reduced degree k. */
    FpMatrix block_from_degree(int k) const;

    BilinearComplex transposed() const;

    /* d = 0 on degree grounds plus d o d = 0; violations as messages. */
    std::vector<std::string> check() const;

    GradedDims homology() const;

private:
    BilinearComplex(DgaPtr dga, FpMatrix matrix, bool cohomological);

    DgaPtr dga_;
    FpMatrix matrix_;
    bool cohomological_;
};

inline GradedDims homology(const BilinearComplex& cx)
{
    return cx.homology();
}

/* Entry (i,j) is the homology of d^{eps_i, eps_j}; indices follow the
 * canonical enumeration order. */
std::vector<std::vector<GradedDims>> lch_table(const DgaPtr& dga, unsigned jobs = 1);
std::vector<std::vector<GradedDims>> lch_table(const std::vector<Augmentation>& augs,
                                               unsigned jobs = 1);

/* Augmentations sharing a cell have identical homology rows and columns;
 * distinct cells are provably non-equivalent. Cells are ordered by their
 * smallest member. */
std::vector<std::vector<std::size_t>> classify_augmentations(
    const std::vector<std::vector<GradedDims>>& table);

} // namespace augcat
