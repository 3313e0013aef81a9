#include <doctest.h>

#include "augcat/bilinear.hpp"
#include "helpers.hpp"

using namespace augcat;
using namespace augcat::testing;

TEST_SUITE("bilinear") {

TEST_CASE("trefoil bilinearised differentials match hand expansion")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    // canonical order: (0,0,1) (0,1,1) (1,0,0) (1,1,0) (1,1,1)
    const Augmentation& all_ones = augs[4];
    const Augmentation& e100 = augs[2];

    GenIndex a1 = *k->find("a1"), a2 = *k->find("a2");
    GenIndex b1 = *k->find("b1"), b2 = *k->find("b2"), b3 = *k->find("b3");

    BilinearComplex mixed = BilinearComplex::differential(all_ones, e100);
    // d(a1) = b1
    CHECK(mixed.matrix().at(b1, a1) == 1);
    CHECK(mixed.matrix().at(b2, a1) == 0);
    CHECK(mixed.matrix().at(b3, a1) == 0);
    // d(a2) = b2 + b3
    CHECK(mixed.matrix().at(b1, a2) == 0);
    CHECK(mixed.matrix().at(b2, a2) == 1);
    CHECK(mixed.matrix().at(b3, a2) == 1);

    BilinearComplex diag = BilinearComplex::differential(e100, e100);
    // the standard linearised differential: d(a1) = b1 + b3
    CHECK(diag.matrix().at(b1, a1) == 1);
    CHECK(diag.matrix().at(b2, a1) == 0);
    CHECK(diag.matrix().at(b3, a1) == 1);
}

TEST_CASE("words of length two or more die under zero augmentations")
{
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 0\ngen c 0\ndiff a = b c\n");
    auto augs = enumerate_augmentations(dga);
    // the zero assignment is an augmentation here
    const Augmentation* zero = nullptr;
    for (const auto& eps : augs)
        if (eps.degree_zero_tuple() == std::vector<std::uint32_t>{0, 0})
            zero = &eps;
    REQUIRE(zero != nullptr);
    BilinearComplex cx = BilinearComplex::differential(*zero, *zero);
    CHECK(cx.matrix().is_zero());
}

TEST_CASE("codifferential is the transpose with the raising convention")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    for (std::size_t i = 0; i < augs.size(); ++i)
        for (std::size_t j = 0; j < augs.size(); ++j) {
            BilinearComplex d = BilinearComplex::differential(augs[i], augs[j]);
            BilinearComplex mu1 = BilinearComplex::codifferential(augs[i], augs[j]);
            CHECK(mu1.matrix() == d.matrix().transposed());
            CHECK(mu1.degree_shift() == 1);
            CHECK(d.degree_shift() == -1);
            CHECK(mu1.transposed().matrix() == d.matrix());
        }

    // mu^1(b1) = a1 for the pair whose differential sends a1 to b1
    BilinearComplex mu1 = BilinearComplex::codifferential(augs[4], augs[2]);
    GenIndex a1 = *k->find("a1"), b1 = *k->find("b1");
    CHECK(mu1.matrix().at(a1, b1) == 1);

    DgaPtr flat = from_text("field 2\ngen b 0\n");
    auto flat_augs = enumerate_augmentations(flat);
    CHECK(BilinearComplex::codifferential(flat_augs[0], flat_augs[0]).matrix().is_zero());
}

TEST_CASE("complexes square to zero and respect the grading")
{
    for (const char* file : {"trefoil.dga", "chekanov_eliashberg.dga", "signed_p3_b.dga"}) {
        DgaPtr dga = load_corpus(file);
        auto augs = enumerate_augmentations(dga);
        for (const auto& left : augs)
            for (const auto& right : augs) {
                BilinearComplex d = BilinearComplex::differential(left, right);
                CHECK(d.check().empty());
                CHECK(BilinearComplex::codifferential(left, right).check().empty());
            }
    }
}

TEST_CASE("homology of the trefoil pairs")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    GradedDims diagonal{{0, 2}, {1, 1}};
    GradedDims off{{0, 1}};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            GradedDims dims = BilinearComplex::differential(augs[i], augs[j]).homology();
            CHECK(dims == (i == j ? diagonal : off));
        }
}

TEST_CASE("zero differential has homology equal to the generator counts")
{
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 0\ngen c 0\ngen d -2\n");
    auto augs = enumerate_augmentations(dga);
    GradedDims dims = BilinearComplex::differential(augs[0], augs[0]).homology();
    CHECK(dims == GradedDims{{-2, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("field duality: homology and cohomology dimensions agree")
{
    for (const char* file : {"trefoil.dga", "signed_p3_b.dga"}) {
        DgaPtr dga = load_corpus(file);
        auto augs = enumerate_augmentations(dga);
        for (const auto& left : augs)
            for (const auto& right : augs) {
                GradedDims hom = BilinearComplex::differential(left, right).homology();
                GradedDims cohom =
                    BilinearComplex::codifferential(left, right).homology();
                CHECK(hom == cohom);
            }
    }
}

TEST_CASE("lch tables for both knots")
{
    auto table = lch_table(trefoil());
    REQUIRE(table.size() == 5);
    GradedDims diagonal{{0, 2}, {1, 1}};
    GradedDims off{{0, 1}};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(table[i][j] == (i == j ? diagonal : off));

    auto ce = lch_table(chekanov_eliashberg());
    REQUIRE(ce.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(ce[i][j] == (i == j ? diagonal : off));

    CHECK(lch_table(unknot()).empty());
}

TEST_CASE("table cells are independent of the jobs count")
{
    auto serial = lch_table(trefoil(), 1);
    auto parallel = lch_table(trefoil(), 4);
    CHECK(serial == parallel);
}

TEST_CASE("classification separates the knot augmentations")
{
    auto cells = classify_augmentations(lch_table(trefoil()));
    REQUIRE(cells.size() == 5);
    for (const auto& cell : cells)
        CHECK(cell.size() == 1);

    cells = classify_augmentations(lch_table(chekanov_eliashberg()));
    REQUIRE(cells.size() == 3);
    for (const auto& cell : cells)
        CHECK(cell.size() == 1);
}

TEST_CASE("zero differential puts all augmentations in one class")
{
    DgaPtr dga = from_text("field 2\ngen b1 0\ngen b2 0\n");
    auto cells = classify_augmentations(lch_table(dga));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].size() == 4);
}

TEST_CASE("stabilization leaves the table of extended pairs unchanged")
{
    DgaPtr k = trefoil();
    auto augs = enumerate_augmentations(k);
    auto table = lch_table(k);

    for (int degree : {0, 2}) {
        DgaPtr stab = std::make_shared<Dga>(k->stabilized(degree, "u", "v"));
        auto stab_augs = enumerate_augmentations(stab);
        DgaMorphism i = DgaMorphism::inclusion_by_name(k, stab);
        // extended pairs agreeing with (eps_i, eps_j) on the old generators
        for (std::size_t si = 0; si < stab_augs.size(); ++si)
            for (std::size_t sj = 0; sj < stab_augs.size(); ++sj) {
                GradedDims dims =
                    BilinearComplex::differential(stab_augs[si], stab_augs[sj]).homology();
                // locate the restricted originals
                Augmentation ri = pull_back(stab_augs[si], i);
                Augmentation rj = pull_back(stab_augs[sj], i);
                std::size_t oi = 0, oj = 0;
                for (std::size_t t = 0; t < augs.size(); ++t) {
                    if (augs[t] == ri)
                        oi = t;
                    if (augs[t] == rj)
                        oj = t;
                }
                CHECK(dims == table[oi][oj]);
            }
    }
}

} // TEST_SUITE
