#include "augcat/morphism.hpp"

#include <sstream>

namespace augcat {

DgaMorphism::DgaMorphism(DgaPtr source, DgaPtr target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (!source_ || !target_)
        throw AlgebraError("morphism endpoints must be non-null");
    if (source_->characteristic() != target_->characteristic())
        throw AlgebraError("morphism endpoints have different characteristics");
    if (images_.size() != source_->size())
        throw AlgebraError("morphism needs one image per source generator");
    for (const Poly& img : images_)
        target_->require_element(img);
}

DgaMorphism DgaMorphism::identity(DgaPtr dga)
{
    std::vector<Poly> images;
    images.reserve(dga->size());
    for (GenIndex g = 0; g < dga->size(); ++g)
        images.push_back(Poly::generator(dga->characteristic(), g));
    DgaPtr copy = dga;
    return DgaMorphism(std::move(copy), std::move(dga), std::move(images));
}

DgaMorphism DgaMorphism::inclusion_by_name(DgaPtr source, DgaPtr target)
{
    std::vector<Poly> images;
    images.reserve(source->size());
    for (GenIndex g = 0; g < source->size(); ++g) {
        auto t = target->find(source->generator(g).name);
        if (!t)
            throw AlgebraError("inclusion: target lacks generator " + source->generator(g).name);
        images.push_back(Poly::generator(target->characteristic(), *t));
    }
    return DgaMorphism(std::move(source), std::move(target), std::move(images));
}

DgaMorphism DgaMorphism::projection_by_name(DgaPtr source, DgaPtr target)
{
    std::vector<Poly> images;
    images.reserve(source->size());
    for (GenIndex g = 0; g < source->size(); ++g) {
        auto t = target->find(source->generator(g).name);
        if (t)
            images.push_back(Poly::generator(target->characteristic(), *t));
        else
            images.emplace_back(target->characteristic());
    }
    return DgaMorphism(std::move(source), std::move(target), std::move(images));
}

Poly DgaMorphism::apply(const Poly& x) const
{
    source_->require_element(x);
    std::uint32_t p = target_->characteristic();
    Poly result(p);
    for (const auto& [w, c] : x.terms()) {
        Poly product = Poly::unit(p).scaled(Scalar(c, p));
        for (GenIndex g : w)
            product = product * images_[g];
        result += product;
    }
    return result;
}

std::vector<MorphismViolation> DgaMorphism::validate() const
{
    std::vector<MorphismViolation> out;
    for (GenIndex g = 0; g < source_->size(); ++g) {
        int expected = source_->grading(g);
        for (const auto& [w, c] : images_[g].terms()) {
            int actual = target_->word_grading(w);
            if (actual != expected) {
                std::ostringstream msg;
                msg << "image of " << source_->generator(g).name << " contains a word of grading "
                    << actual << ", expected " << expected;
                out.push_back({MorphismViolation::Kind::GradingMismatch,
                               source_->generator(g).name, msg.str()});
                break;
            }
        }
    }
    for (GenIndex g = 0; g < source_->size(); ++g) {
        Poly lhs = apply(source_->differential(g));
        Poly rhs = target_->apply_differential(images_[g]);
        if (lhs != rhs) {
            std::ostringstream msg;
            msg << "f(d(" << source_->generator(g).name << ")) != d(f("
                << source_->generator(g).name << "))";
            out.push_back({MorphismViolation::Kind::NotChainMap,
                           source_->generator(g).name, msg.str()});
        }
    }
    return out;
}

DgaMorphism compose(const DgaMorphism& f, const DgaMorphism& g)
{
    if (!same_algebra(*g.target(), *f.source()))
        throw AlgebraError("compose: target of inner map differs from source of outer map");
    std::vector<Poly> images;
    images.reserve(g.source()->size());
    for (GenIndex a = 0; a < g.source()->size(); ++a)
        images.push_back(f.apply(g.image(a)));
    return DgaMorphism(g.source(), f.target(), std::move(images));
}

} // namespace augcat
