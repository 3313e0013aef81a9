/* Augmentations of a semi-free DGA: grading-respecting algebra maps to F_p
 * vanishing on the image of the differential. */

#pragma once

#include "augcat/dga.hpp"
#include "augcat/morphism.hpp"

#include <span>

namespace augcat {

struct AugmentationCheck {
    bool ok = true;
    std::string first_violation; // empty when ok
};

/* Both defining conditions: values vanish off degree 0, and the
 * multiplicative extension kills every d(a). */
AugmentationCheck is_augmentation(const Dga& dga, std::span<const std::uint32_t> values);

class Augmentation {
public:
    /* values indexed like dga generators; throws if not an augmentation. */
    Augmentation(DgaPtr dga, std::vector<std::uint32_t> values);

    /* Zero off degree 0; tuple lists the degree-0 values in declaration
     * order. */
    static Augmentation from_degree_zero_tuple(DgaPtr dga,
                                               std::span<const std::uint32_t> tuple);

    const DgaPtr& dga() const { return dga_; }
    Scalar value(GenIndex g) const { return Scalar(values_.at(g), dga_->characteristic()); }
    const std::vector<std::uint32_t>& values() const { return values_; }
    std::vector<std::uint32_t> degree_zero_tuple() const;

    /* Multiplicative-linear extension; the unit word maps to 1. */
    Scalar evaluate(const Poly& x) const;

    /* Compared by value tuple on the same algebra, not by provenance. */
    bool operator==(const Augmentation& other) const;
    bool operator!=(const Augmentation& other) const { return !(*this == other); }

private:
    DgaPtr dga_;
    std::vector<std::uint32_t> values_;
};

class EnumerationGuardError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/* True when p^(#degree-0 generators) stays within the 2^24 search budget. */
bool enumeration_feasible(std::uint32_t p, std::size_t degree_zero_count);

/* Exhaustive search over all assignments to the degree-0 generators,
 * ordered lexicographically by value tuple in declaration order. This
 * ordering defines the augmentation indices used everywhere else. */
std::vector<Augmentation> enumerate_augmentations(const DgaPtr& dga);

/* eps o f for eps on the target of f. */
Augmentation pull_back(const Augmentation& eps, const DgaMorphism& f);

} // namespace augcat
