/* A-infinity functors between augmentation categories induced by DGA
 * morphisms, the functor equation, functor composition, and the
 * differential of pre-natural transformations.
 *
 * For a DGA morphism f : A -> B the induced functor acts from Aug(B) to
 * Aug(A): objects pull back along f, and the component of arity d is the
 * dual of the length-d subset expansion of the images. Everything is
 * evaluated extensionally on the finite generator basis. */

#pragma once

#include <functional>

#include "augcat/ainfty.hpp"
#include "augcat/morphism.hpp"

namespace augcat {

class AinftyFunctor {
public:
    /* Sparse component tensor for one segment context: argument words of
     * dom generators (leftmost first) -> output vectors of cod
     * generators. */
    using TableFactory =
        std::function<std::map<Word, CochainVec>(std::span<const Augmentation> ctx)>;

    static AinftyFunctor induced(const DgaMorphism& f);
    static AinftyFunctor identity(DgaPtr dga);

    AinftyFunctor(DgaPtr dom, DgaPtr cod, std::vector<Augmentation> dom_augs,
                  std::vector<Augmentation> cod_augs, std::vector<std::size_t> object_map,
                  TableFactory factory);

    const DgaPtr& dom() const { return dom_; }
    const DgaPtr& cod() const { return cod_; }
    const std::vector<Augmentation>& dom_augs() const { return dom_augs_; }
    const std::vector<Augmentation>& cod_augs() const { return cod_augs_; }
    std::size_t map_object(std::size_t dom_index) const { return object_map_.at(dom_index); }

    /* ctx lists dom augmentation indices left to right (d+1 of them).
     * Checks the 1-d absolute grading shift of the result. */
    CochainVec component(std::span<const std::size_t> ctx, std::span<const GenIndex> args) const;

    std::map<Word, CochainVec> table(std::span<const Augmentation> ctx) const
    {
        return factory_(ctx);
    }

    /* Replaces the component tensors; used to probe the checkers with
     * corrupted data. */
    AinftyFunctor with_factory(TableFactory factory) const;

private:
    DgaPtr dom_;
    DgaPtr cod_;
    std::vector<Augmentation> dom_augs_;
    std::vector<Augmentation> cod_augs_;
    std::vector<std::size_t> object_map_;
    TableFactory factory_;
};

struct FunctorViolation {
    std::size_t arity = 0;
    std::vector<std::size_t> context; // dom augmentation indices, left to right
    Word args;
    CochainVec residual;

    FunctorViolation() : residual(2) {}
};

/* Both sides of the functor equation on every context of arity <= max_d. */
std::vector<FunctorViolation> check_functor_equation(const AinftyFunctor& F,
                                                     std::size_t max_d, unsigned jobs = 1);

/* Compares the functor induced by f o g with the composite of the induced
 * functors, component by component up to max_d. */
std::vector<FunctorViolation> check_functor_composition(const DgaMorphism& f,
                                                        const DgaMorphism& g,
                                                        std::size_t max_d,
                                                        unsigned jobs = 1);

class PreNatural {
public:
    using Kernel = std::function<CochainVec(
        std::size_t d, std::span<const std::size_t> ctx, std::span<const GenIndex> args)>;

    PreNatural(AinftyFunctor from, AinftyFunctor to, int degree, Kernel kernel);

    /* T^1 = id, every other component zero; degree 1. */
    static PreNatural identity_on(const AinftyFunctor& identity_functor);
    static PreNatural zero(AinftyFunctor from, AinftyFunctor to, int degree);
    /* T^0 only: one vector per object of the dom category. */
    static PreNatural degree_zero_only(AinftyFunctor from, AinftyFunctor to, int degree,
                                       std::vector<CochainVec> per_object);

    const AinftyFunctor& from() const { return from_; }
    const AinftyFunctor& to() const { return to_; }
    int degree() const { return degree_; }
    CochainVec component(std::size_t d, std::span<const std::size_t> ctx,
                         std::span<const GenIndex> args) const;

private:
    AinftyFunctor from_;
    AinftyFunctor to_;
    int degree_;
    Kernel kernel_;
};

struct PrenatEntry {
    std::size_t arity = 0;
    std::vector<std::size_t> context;
    Word args;
    CochainVec value;

    PrenatEntry() : value(2) {}
};

/* All nonzero components of mu^1(T) up to arity max_d, ordered by
 * (arity, context, arguments). T is natural up to max_d iff the result is
 * empty. */
std::vector<PrenatEntry> prenatural_differential(const PreNatural& T, std::size_t max_d,
                                                 unsigned jobs = 1);

} // namespace augcat
