#include <doctest.h>

#include "augcat/morphism.hpp"
#include "helpers.hpp"

using namespace augcat;
using namespace augcat::testing;

namespace {

/* Independent Leibniz oracle: splits a word as first letter times the
 * rest and recurses, instead of the production single-pass loop. */
Poly leibniz_recursive(const Dga& dga, const Poly& x)
{
    const std::uint32_t p = dga.characteristic();
    Poly out(p);
    for (const auto& [w, c] : x.terms()) {
        if (w.empty())
            continue;
        Scalar coeff(c, p);
        if (w.size() == 1) {
            out += dga.differential(w[0]).scaled(coeff);
            continue;
        }
        Poly head = Poly::generator(p, w[0]);
        Poly tail = Poly::single(p, Word(w.begin() + 1, w.end()));
        Poly d_head_tail = dga.differential(w[0]) * tail;
        Poly head_d_tail = head * leibniz_recursive(dga, tail);
        if (dga.grading(w[0]) % 2 != 0)
            head_d_tail = head_d_tail.scaled(-Scalar::one(p));
        out += (d_head_tail + head_d_tail).scaled(coeff);
    }
    return out;
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime field arithmetic")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CHECK(Scalar::zero(p) + Scalar::one(p) == Scalar::one(p));
        CHECK(Scalar::one(p) * Scalar::zero(p) == Scalar::zero(p));
        for (std::uint32_t v = 1; v < p; ++v) {
            Scalar s(v, p);
            CHECK(s * s.inverse() == Scalar::one(p));
            CHECK(s + (-s) == Scalar::zero(p));
        }
    }
    CHECK(Scalar(-1, 3) == Scalar(2, 3));
    CHECK(Scalar(7, 5) == Scalar(2, 5));
    CHECK_THROWS_AS(Scalar(1, 2) + Scalar(1, 3), AlgebraError);
    CHECK_THROWS_AS(Scalar::zero(5).inverse(), AlgebraError);
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
}

TEST_CASE("polynomial canonical form")
{
    Poly a = Poly::generator(2, 0);
    Poly sum = a + a;
    CHECK(sum.is_zero());

    Poly x = Poly::single(3, {0, 1}, 2);
    x.add_term({0, 1}, Scalar(1, 3));
    CHECK(x.is_zero());

    Poly u = Poly::unit(5);
    Poly prod = u * Poly::generator(5, 2);
    CHECK(prod == Poly::generator(5, 2));

    // word concatenation is not commutative
    Poly ab = Poly::generator(3, 0) * Poly::generator(3, 1);
    Poly ba = Poly::generator(3, 1) * Poly::generator(3, 0);
    CHECK(ab != ba);
    CHECK(ab.coefficient({0, 1}) == Scalar::one(3));
}

TEST_CASE("word grading sums letter gradings")
{
    DgaPtr k = trefoil();
    CHECK(k->word_grading({}) == 0);
    CHECK(k->word_grading({0}) == 1);       // a1
    CHECK(k->word_grading({2, 3, 4}) == 0); // b1 b2 b3
    CHECK(k->word_grading({0, 1}) == 2);    // a1 a2
}

TEST_CASE("differential of a1 matches the trefoil table")
{
    DgaPtr k = trefoil();
    Poly x = Poly::generator(2, *k->find("a1"));
    Poly dx = k->apply_differential(x);
    Poly expected(2);
    expected.add_term({}, Scalar::one(2));
    expected.add_term({*k->find("b1")}, Scalar::one(2));
    expected.add_term({*k->find("b3")}, Scalar::one(2));
    expected.add_term({*k->find("b1"), *k->find("b2"), *k->find("b3")}, Scalar::one(2));
    CHECK(dx == expected);
}

TEST_CASE("differential of the unit and of unknown letters")
{
    DgaPtr k = trefoil();
    CHECK(k->apply_differential(Poly::unit(2)).is_zero());
    Poly bad(2);
    bad.add_term({99}, Scalar::one(2));
    CHECK_THROWS_AS(k->apply_differential(bad), AlgebraError);
    CHECK_THROWS_AS(k->apply_differential(Poly::unit(3)), AlgebraError);
}

TEST_CASE("Leibniz expansion of a square at p = 2")
{
    // da = 1 + b, db = 0: d(a a) = (1+b) a + a (1+b) = a b + b a over F_2
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 0\ndiff a = 1 + b\n");
    GenIndex a = *dga->find("a"), b = *dga->find("b");
    Poly x = Poly::single(2, {a, a});
    Poly dx = dga->apply_differential(x);
    Poly expected(2);
    expected.add_term({a, b}, Scalar::one(2));
    expected.add_term({b, a}, Scalar::one(2));
    CHECK(dx == expected);
    CHECK(dx == leibniz_recursive(*dga, x));
}

TEST_CASE("Leibniz sign at p = 3")
{
    // gr(y) = 1, dy = z z: d(y y) = z z y + 2 y z z
    DgaPtr dga = load_corpus("signed_p3_a.dga");
    GenIndex y = *dga->find("y"), z = *dga->find("z");
    Poly x = Poly::single(3, {y, y});
    Poly dx = dga->apply_differential(x);
    Poly expected(3);
    expected.add_term({z, z, y}, Scalar::one(3));
    expected.add_term({y, z, z}, Scalar(2, 3));
    CHECK(dx == expected);
    CHECK(dx == leibniz_recursive(*dga, x));
}

TEST_CASE("differential is linear and matches the recursive oracle")
{
    std::mt19937 rng(7);
    // a valid signed example over F_5 alongside the bundled corpus
    DgaPtr five = from_text("field 5\ngen x 2\ngen y 1\ngen z 0\n"
                            "diff x = y z + 4 z y\ndiff y = 3 z z\n");
    REQUIRE(five->validate().empty());
    std::vector<DgaPtr> cases{trefoil(), chekanov_eliashberg(),
                              load_corpus("signed_p3_a.dga"),
                              load_corpus("signed_p3_b.dga"), five};
    for (const DgaPtr& dga : cases) {
        for (int trial = 0; trial < 50; ++trial) {
            Poly x = random_poly(*dga, rng);
            Poly y = random_poly(*dga, rng);
            CHECK(dga->apply_differential(x) == leibniz_recursive(*dga, x));
            CHECK(dga->apply_differential(x + y) ==
                  dga->apply_differential(x) + dga->apply_differential(y));
            CHECK(dga->apply_differential(dga->apply_differential(x)).is_zero());
        }
    }
}

TEST_CASE("validator accepts the knot corpus")
{
    CHECK(trefoil()->validate().empty());
    CHECK(chekanov_eliashberg()->validate().empty());
    CHECK(unknot()->validate().empty());
}

TEST_CASE("validator reports non-homogeneous terms")
{
    DgaPtr dga = from_text("field 2\ngen a 1\ngen b 1\ndiff a = b\n");
    auto report = dga->validate();
    REQUIRE(report.size() == 1);
    CHECK(report[0].kind == DgaViolation::Kind::NonHomogeneousTerm);
    CHECK(report[0].generator == "a");
    CHECK(report[0].expected_grading == 0);
    CHECK(report[0].actual_grading == 1);
}

TEST_CASE("validator reports d squared failures with the residual")
{
    DgaPtr dga = load_corpus("broken.dga");
    auto report = dga->validate();
    REQUIRE(report.size() == 1);
    CHECK(report[0].kind == DgaViolation::Kind::DifferentialSquare);
    CHECK(report[0].generator == "a");
    CHECK(report[0].message.find('c') != std::string::npos);
}

TEST_CASE("unit terms are legal exactly in grading one")
{
    DgaPtr bad = from_text("field 2\ngen u 2\ndiff u = 1\n");
    auto report = bad->validate();
    REQUIRE(report.size() == 1);
    CHECK(report[0].kind == DgaViolation::Kind::NonHomogeneousTerm);
    CHECK(unknot()->validate().empty()); // gr(a) = 1, da = 1 is fine
}

TEST_CASE("stabilization")
{
    DgaPtr u = unknot();
    Dga stab = u->stabilized(0, "b", "c");
    CHECK(stab.size() == 3);
    CHECK(stab.grading(*stab.find("b")) == 0);
    CHECK(stab.grading(*stab.find("c")) == -1);
    CHECK(stab.differential(*stab.find("b")) == Poly::generator(2, *stab.find("c")));
    CHECK(stab.validate().empty());

    DgaPtr k = trefoil();
    Dga kstab = k->stabilized(0, "u", "v");
    CHECK(kstab.size() == 7);
    CHECK(kstab.validate().empty());

    Dga twice = kstab.stabilized(2, "w", "x");
    CHECK(twice.size() == 9);
    CHECK(twice.validate().empty());

    CHECK_THROWS_AS(k->stabilized(0, "a1", "zz"), AlgebraError);
    CHECK_THROWS_AS(k->stabilized(0, "zz", "zz"), AlgebraError);
}

TEST_CASE("morphism validation")
{
    DgaPtr k = trefoil();
    DgaMorphism id = DgaMorphism::identity(k);
    CHECK(id.validate().empty());

    DgaPtr stab = std::make_shared<Dga>(k->stabilized(0, "u", "v"));
    DgaMorphism i = DgaMorphism::inclusion_by_name(k, stab);
    CHECK(i.validate().empty());
    DgaMorphism j = DgaMorphism::projection_by_name(stab, k);
    CHECK(j.validate().empty());

    // sending a degree-1 generator to a degree-0 one breaks the grading
    std::vector<Poly> images;
    for (GenIndex g = 0; g < k->size(); ++g)
        images.push_back(Poly::generator(2, g));
    images[*k->find("a1")] = Poly::generator(2, *k->find("b1"));
    DgaMorphism bad_grading(k, k, images);
    bool saw_grading = false;
    for (const auto& v : bad_grading.validate())
        if (v.kind == MorphismViolation::Kind::GradingMismatch)
            saw_grading = true;
    CHECK(saw_grading);

    // swapping b1 and b2 is grading-preserving but not a chain map
    images[*k->find("a1")] = Poly::generator(2, *k->find("a1"));
    images[*k->find("b1")] = Poly::generator(2, *k->find("b2"));
    images[*k->find("b2")] = Poly::generator(2, *k->find("b1"));
    DgaMorphism not_chain(k, k, images);
    bool saw_chain = false;
    for (const auto& v : not_chain.validate())
        if (v.kind == MorphismViolation::Kind::NotChainMap)
            saw_chain = true;
    CHECK(saw_chain);
}

TEST_CASE("morphism composition")
{
    DgaPtr k = trefoil();
    DgaPtr stab = std::make_shared<Dga>(k->stabilized(0, "u", "v"));
    DgaMorphism i = DgaMorphism::inclusion_by_name(k, stab);
    DgaMorphism j = DgaMorphism::projection_by_name(stab, k);

    DgaMorphism ji = compose(j, i);
    DgaMorphism id = DgaMorphism::identity(k);
    for (GenIndex g = 0; g < k->size(); ++g)
        CHECK(ji.image(g) == id.image(g));

    DgaMorphism j_id = compose(j, DgaMorphism::identity(stab));
    for (GenIndex g = 0; g < stab->size(); ++g)
        CHECK(j_id.image(g) == j.image(g));
    DgaMorphism id_j = compose(DgaMorphism::identity(k), j);
    for (GenIndex g = 0; g < stab->size(); ++g)
        CHECK(id_j.image(g) == j.image(g));

    // two inclusions compose to the inclusion into the double stabilization
    DgaPtr stab2 = std::make_shared<Dga>(stab->stabilized(1, "w", "x"));
    DgaMorphism i2 = DgaMorphism::inclusion_by_name(stab, stab2);
    DgaMorphism direct = DgaMorphism::inclusion_by_name(k, stab2);
    DgaMorphism composed = compose(i2, i);
    for (GenIndex g = 0; g < k->size(); ++g)
        CHECK(composed.image(g) == direct.image(g));

    CHECK_THROWS_AS(compose(i, i), AlgebraError); // middle algebras differ
}

} // TEST_SUITE
