/* DGA morphisms: grading-preserving algebra maps commuting with the
 * differentials, given by their values on source generators. */

#pragma once

#include "augcat/dga.hpp"

namespace augcat {

struct MorphismViolation {
    enum class Kind { GradingMismatch, NotChainMap };

    Kind kind;
    std::string generator;
    std::string message;
};

class DgaMorphism {
public:
    DgaMorphism(DgaPtr source, DgaPtr target, std::vector<Poly> images);

    static DgaMorphism identity(DgaPtr dga);

    /* Maps each source generator to the target generator of the same name.
     * Throws if a name is missing. Models the inclusion into a
     * stabilization. */
    static DgaMorphism inclusion_by_name(DgaPtr source, DgaPtr target);

    /* Maps name-matched generators to themselves and everything else to 0.
     * Models the projection that kills the stabilizing pair. */
    static DgaMorphism projection_by_name(DgaPtr source, DgaPtr target);

    const DgaPtr& source() const { return source_; }
    const DgaPtr& target() const { return target_; }
    const Poly& image(GenIndex g) const { return images_.at(g); }

    /* Substitutes images letterwise and multiplies. */
    Poly apply(const Poly& x) const;

    /* Grading preservation and f(d(a)) = d(f(a)) per generator. */
    std::vector<MorphismViolation> validate() const;

private:
    DgaPtr source_;
    DgaPtr target_;
    std::vector<Poly> images_;
};

/* (f o g)(a) = f(g(a)); requires target(g) == source(f). */
DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g);

} // namespace augcat
