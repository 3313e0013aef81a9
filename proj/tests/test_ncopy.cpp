#include <doctest.h>

#include "augcat/ainfty.hpp"
#include "augcat/ncopy.hpp"
#include "helpers.hpp"

using namespace augcat;
using namespace augcat::testing;

TEST_SUITE("ncopy") {

TEST_CASE("composability predicate")
{
    IndexedWord good{{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    CHECK(composable(good));
    IndexedWord bad{{0, 1, 2}, {1, 1, 2}};
    CHECK_FALSE(composable(bad));
    CHECK(composable(IndexedWord{}));
}

TEST_CASE("two-copy differential of a product word")
{
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 0\ngen c 0\ndiff a = b c\n");
    GenIndex a = *dga->find("a"), b = *dga->find("b"), c = *dga->find("c");
    NcopyPoly d12 = n_copy_differential(*dga, 2, {a, 1, 2});
    NcopyPoly expected(2);
    expected.add_term({{b, 1, 1}, {c, 1, 2}}, Scalar::one(2));
    expected.add_term({{b, 1, 2}, {c, 2, 2}}, Scalar::one(2));
    CHECK(d12 == expected);
    for (const auto& [w, coeff] : d12.terms())
        CHECK(composable(w));
}

TEST_CASE("unit terms survive only on the diagonal")
{
    DgaPtr u = unknot();
    GenIndex a = *u->find("a");
    CHECK(n_copy_differential(*u, 2, {a, 1, 2}).is_zero());
    NcopyPoly diag = n_copy_differential(*u, 2, {a, 1, 1});
    CHECK(diag.coefficient(IndexedWord{}) == Scalar::one(2));
    CHECK_THROWS_AS(n_copy_differential(*u, 2, {a, 0, 1}), AlgebraError);
    CHECK_THROWS_AS(n_copy_differential(*u, 2, {a, 1, 3}), AlgebraError);
}

TEST_CASE("the two-copy differential squares to zero on the trefoil")
{
    DgaPtr k = trefoil();
    for (GenIndex g = 0; g < k->size(); ++g)
        for (std::uint32_t i = 1; i <= 2; ++i)
            for (std::uint32_t j = 1; j <= 2; ++j) {
                NcopyPoly d = n_copy_differential(*k, 2, {g, i, j});
                CHECK(apply_n_copy_differential(*k, 2, d).is_zero());
                for (const auto& [w, coeff] : d.terms())
                    CHECK(composable(w));
            }
}

TEST_CASE("conjugation cancels constants and keeps the linear part")
{
    // da = 1 + b with eps(b) = 1: the conjugated differential is b alone
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 0\ndiff a = 1 + b\n");
    auto augs = enumerate_augmentations(dga);
    REQUIRE(augs.size() == 1);
    CHECK(augs[0].degree_zero_tuple() == std::vector<std::uint32_t>{1});
    CombinedAugmentation E({augs[0]});
    GenIndex a = *dga->find("a"), b = *dga->find("b");
    NcopyPoly part = conjugated_component(*dga, E, 1, {a, 1, 1});
    NcopyPoly expected(2);
    expected.add_term({{b, 1, 1}}, Scalar::one(2));
    CHECK(part == expected);
    CHECK(conjugated_component(*dga, E, 5, {a, 1, 1}).is_zero());
}

TEST_CASE("two-copy linear component matches the bilinearised differential")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    const Augmentation& e1 = augs[4]; // (1,1,1)
    const Augmentation& e2 = augs[2]; // (1,0,0)
    CombinedAugmentation E({e1, e2});
    GenIndex a1 = *k->find("a1"), b1 = *k->find("b1");
    NcopyPoly part = conjugated_component(*k, E, 1, {a1, 1, 2});
    NcopyPoly expected(2);
    expected.add_term({{b1, 1, 2}}, Scalar::one(2));
    CHECK(part == expected);

    // erased along the path this is the bilinearised column of a1
    Poly erased = erase_indices_along_path(*k, part, 1);
    CHECK(erased == Poly::generator(2, b1));
}

TEST_CASE("the off-diagonal block maps to itself at arity one")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    CombinedAugmentation E({augs[4], augs[2]});
    for (GenIndex g = 0; g < k->size(); ++g) {
        NcopyPoly part = conjugated_component(*k, E, 1, {g, 2, 1});
        for (const auto& [w, c] : part.terms()) {
            REQUIRE(w.size() == 1);
            CHECK(w[0].row == 2);
            CHECK(w[0].col == 1);
        }
    }
}

TEST_CASE("independence of the copy count and the padding")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    for (std::size_t i : {0u, 2u, 4u})
        for (std::size_t j : {1u, 4u}) {
            std::vector<Augmentation> two{augs[i], augs[j]};
            std::vector<Augmentation> three{augs[i], augs[j], augs[(i + 1) % 5]};
            std::vector<Augmentation> three_alt{augs[i], augs[j], augs[(j + 2) % 5]};
            for (GenIndex g = 0; g < k->size(); ++g) {
                Poly from_two = erase_indices_along_path(
                    *k, conjugated_component(*k, CombinedAugmentation(two), 1, {g, 1, 2}), 1);
                Poly from_three = erase_indices_along_path(
                    *k, conjugated_component(*k, CombinedAugmentation(three), 1, {g, 1, 2}),
                    1);
                Poly from_three_alt = erase_indices_along_path(
                    *k,
                    conjugated_component(*k, CombinedAugmentation(three_alt), 1, {g, 1, 2}),
                    1);
                CHECK(from_two == from_three);
                CHECK(from_two == from_three_alt);
            }
        }
}

TEST_CASE("constant terms cancel for every indexed generator")
{
    for (const char* file : {"trefoil.dga", "signed_p3_b.dga"}) {
        DgaPtr dga = load_corpus(file);
        auto augs = enumerate_augmentations(dga);
        CombinedAugmentation E({augs[0], augs.back()});
        for (GenIndex g = 0; g < dga->size(); ++g)
            for (std::uint32_t i = 1; i <= 2; ++i)
                for (std::uint32_t j = 1; j <= 2; ++j)
                    // conjugated_component throws if a constant survives
                    CHECK_NOTHROW(conjugated_component(*dga, E, 1, {g, i, j}));
    }
}

TEST_CASE("the diagonal block recovers the single-augmentation differential")
{
    for (const char* file : {"trefoil.dga", "signed_p3_b.dga"}) {
        DgaPtr dga = load_corpus(file);
        const std::uint32_t diagonal_path[] = {1, 1};
        for (const Augmentation& eps : enumerate_augmentations(dga)) {
            BilinearComplex direct = BilinearComplex::differential(eps, eps);
            CombinedAugmentation E({eps});
            for (GenIndex a = 0; a < dga->size(); ++a) {
                Poly via_conj = erase_indices(
                    *dga, conjugated_component(*dga, E, 1, {a, 1, 1}), diagonal_path);
                for (GenIndex b = 0; b < dga->size(); ++b)
                    CHECK(via_conj.coefficient({b}).value() == direct.matrix().at(b, a));
            }
        }
    }
}

TEST_CASE("oracle passes on both knots")
{
    CHECK(oracle_check(trefoil(), 3, 2).empty());
    CHECK(oracle_check(chekanov_eliashberg(), 2, 1).empty());
    CHECK(oracle_check(load_corpus("signed_p3_b.dga"), 3, 2).empty());
}

TEST_CASE("oracle is order-sensitive")
{
    // comparing the conjugation for (e1, e2) against the formula for
    // (e2, e1) must fail somewhere
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    std::vector<Augmentation> swapped{augs[2], augs[4]};
    CombinedAugmentation E({augs[4], augs[2]});
    bool differs = false;
    for (GenIndex g = 0; g < k->size(); ++g) {
        Poly via_conj = erase_indices_along_path(
            *k, conjugated_component(*k, E, 1, {g, 1, 2}), 1);
        if (via_conj != multilinear_component(swapped, g))
            differs = true;
    }
    CHECK(differs);
}

TEST_CASE("oracle respects the jobs flag")
{
    CHECK(oracle_check(trefoil(), 3, 2, 4).empty());
}

} // TEST_SUITE
