#include "augcat/augmentation.hpp"

#include <cmath>
#include <sstream>

namespace augcat {

namespace {

Scalar evaluate_values(const Dga& dga, std::span<const std::uint32_t> values, const Poly& x)
{
    std::uint32_t p = dga.characteristic();
    Scalar total = Scalar::zero(p);
    for (const auto& [w, c] : x.terms()) {
        Scalar prod(c, p);
        for (GenIndex g : w)
            prod = prod * Scalar(values[g], p);
        total = total + prod;
    }
    return total;
}

} // namespace

AugmentationCheck is_augmentation(const Dga& dga, std::span<const std::uint32_t> values)
{
    if (values.size() != dga.size())
        throw AlgebraError("augmentation needs one value per generator");
    std::uint32_t p = dga.characteristic();
    for (GenIndex g = 0; g < dga.size(); ++g) {
        if (values[g] >= p)
            throw AlgebraError("augmentation value out of range for F_" + std::to_string(p));
        if (dga.grading(g) != 0 && values[g] != 0) {
            std::ostringstream msg;
            msg << "value of " << dga.generator(g).name << " must be 0 (grading "
                << dga.grading(g) << " != 0)";
            return {false, msg.str()};
        }
    }
    for (GenIndex g = 0; g < dga.size(); ++g) {
        Scalar v = evaluate_values(dga, values, dga.differential(g));
        if (!v.is_zero()) {
            std::ostringstream msg;
            msg << "eps(d(" << dga.generator(g).name << ")) = " << v.value() << ", expected 0";
            return {false, msg.str()};
        }
    }
    return {};
}

Augmentation::Augmentation(DgaPtr dga, std::vector<std::uint32_t> values)
    : dga_(std::move(dga)), values_(std::move(values))
{
    AugmentationCheck check = is_augmentation(*dga_, values_);
    if (!check.ok)
        throw AlgebraError("not an augmentation: " + check.first_violation);
}

Augmentation Augmentation::from_degree_zero_tuple(DgaPtr dga,
                                                  std::span<const std::uint32_t> tuple)
{
    std::vector<std::uint32_t> values(dga->size(), 0);
    std::size_t next = 0;
    for (GenIndex g = 0; g < dga->size(); ++g) {
        if (dga->grading(g) != 0)
            continue;
        if (next >= tuple.size())
            throw AlgebraError("tuple shorter than the number of degree-0 generators");
        values[g] = tuple[next++];
    }
    if (next != tuple.size())
        throw AlgebraError("tuple longer than the number of degree-0 generators");
    return Augmentation(std::move(dga), std::move(values));
}

std::vector<std::uint32_t> Augmentation::degree_zero_tuple() const
{
    std::vector<std::uint32_t> tuple;
    for (GenIndex g = 0; g < dga_->size(); ++g)
        if (dga_->grading(g) == 0)
            tuple.push_back(values_[g]);
    return tuple;
}

Scalar Augmentation::evaluate(const Poly& x) const
{
    dga_->require_element(x);
    return evaluate_values(*dga_, values_, x);
}

bool Augmentation::operator==(const Augmentation& other) const
{
    return same_algebra(*dga_, *other.dga_) && values_ == other.values_;
}

bool enumeration_feasible(std::uint32_t p, std::size_t degree_zero_count)
{
    // p^k <= 2^24
    double bits = degree_zero_count * std::log2(double(p));
    return bits <= 24.0;
}

std::vector<Augmentation> enumerate_augmentations(const DgaPtr& dga)
{
    std::uint32_t p = dga->characteristic();
    std::vector<GenIndex> slots = dga->generators_of_grading(0);
    if (!enumeration_feasible(p, slots.size()))
        throw EnumerationGuardError(
            "augmentation search space " + std::to_string(p) + "^" +
            std::to_string(slots.size()) + " exceeds the 2^24 enumeration budget");

    std::vector<Augmentation> out;
    std::vector<std::uint32_t> values(dga->size(), 0);
    std::vector<std::uint32_t> odometer(slots.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < slots.size(); ++i)
            values[slots[i]] = odometer[i];
        if (is_augmentation(*dga, values).ok)
            out.emplace_back(dga, values);
        // lexicographic successor: last slot moves fastest
        std::size_t i = slots.size();
        while (i > 0 && ++odometer[i - 1] == p)
            odometer[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

Augmentation pull_back(const Augmentation& eps, const DgaMorphism& f)
{
    if (!same_algebra(*eps.dga(), *f.target()))
        throw AlgebraError("pull_back: augmentation lives on a different algebra than target(f)");
    std::vector<std::uint32_t> values(f.source()->size(), 0);
    for (GenIndex g = 0; g < f.source()->size(); ++g)
        values[g] = eps.evaluate(f.image(g)).value();
    return Augmentation(f.source(), std::move(values));
}

} // namespace augcat
