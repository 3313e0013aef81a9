#include <doctest.h>

#include "augcat/duality.hpp"
#include "helpers.hpp"

using namespace augcat;
using namespace augcat::testing;

namespace {

/* Closed-form oracle: exactness forces every connecting rank to be the
 * signed partial sum of the dimensions to its left, so feasibility means
 * all partial alternating sums are nonnegative and the total vanishes. */
bool feasible_closed_form(const std::vector<int>& dims)
{
    for (std::size_t m = 0; m < dims.size(); ++m) {
        int partial = 0;
        for (std::size_t i = 0; i <= m; ++i)
            partial += ((m - i) % 2 == 0 ? 1 : -1) * dims[i];
        if (partial < 0)
            return false;
        if (m + 1 == dims.size() && partial != 0)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("duality") {

TEST_CASE("layout of the trefoil mixed pair")
{
    ExactSequenceData data;
    data.manifold_dim = 1;
    data.betti = {{0, 1}, {1, 1}};
    data.hom_dims = {{0, 1}};
    data.cohom_dims = {{0, 1}};
    CHECK(assemble_sequence(data) == std::vector<int>{0, 1, 1, 1, 1, 0});
}

TEST_CASE("layout of an empty input")
{
    ExactSequenceData data;
    CHECK(assemble_sequence(data) == std::vector<int>{0, 0});
    CHECK(exact_sequence_feasible({0, 0}).feasible);
}

TEST_CASE("layout of the diagonal pair contains the classical pattern")
{
    ExactSequenceData data;
    data.manifold_dim = 1;
    data.betti = {{0, 1}, {1, 1}};
    data.hom_dims = {{0, 2}, {1, 1}};
    data.cohom_dims = {{0, 2}, {1, 1}};
    std::vector<int> dims = assemble_sequence(data);
    CHECK(dims == std::vector<int>{0, 1, 1, 2, 2, 1, 1, 0});
    Feasibility f = exact_sequence_feasible(dims);
    CHECK(f.feasible);
}

TEST_CASE("greedy feasibility examples")
{
    Feasibility f = exact_sequence_feasible({0, 1, 1, 1, 1, 0});
    CHECK(f.feasible);
    CHECK(f.ranks == std::vector<int>{0, 1, 0, 1, 0});

    CHECK_FALSE(exact_sequence_feasible({0, 1, 0}).feasible);
    CHECK(exact_sequence_feasible({0, 0, 0}).feasible);
    CHECK(exact_sequence_feasible({}).feasible);
}

TEST_CASE("feasibility matches the alternating-sum obstruction")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len_dist(2, 8);
    std::uniform_int_distribution<int> dim_dist(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> dims(static_cast<std::size_t>(len_dist(rng)), 0);
        for (auto& d : dims)
            d = dim_dist(rng);
        dims.front() = 0;
        dims.back() = 0;
        Feasibility f = exact_sequence_feasible(dims);
        CHECK(f.feasible == feasible_closed_form(dims));
        if (f.feasible) {
            // ranks reconstruct the dimensions: dims_i = r_{i-1} + r_i
            int prev = 0;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                int out = i < f.ranks.size() ? f.ranks[i] : 0;
                CHECK(dims[i] == prev + out);
                prev = out;
            }
            int alternating = 0, sign = 1;
            for (int d : dims) {
                alternating += sign * d;
                sign = -sign;
            }
            CHECK(alternating == 0);
        }
    }
}

TEST_CASE("both knots pass with circle betti numbers")
{
    GradedDims circle{{0, 1}, {1, 1}};
    auto rows = duality_check(trefoil(), circle, 1);
    CHECK(rows.size() == 25);
    for (const auto& row : rows)
        CHECK(row.pass);

    rows = duality_check(chekanov_eliashberg(), circle, 1);
    CHECK(rows.size() == 9);
    for (const auto& row : rows)
        CHECK(row.pass);
}

TEST_CASE("the mixed trefoil pair pins the connecting ranks")
{
    GradedDims circle{{0, 1}, {1, 1}};
    auto rows = duality_check(trefoil(), circle, 1);
    // (1,1,1) has index 4 and (1,0,0) index 2 in the canonical enumeration
    for (const auto& row : rows)
        if (row.from == 4 && row.to == 2) {
            CHECK(row.sequence == std::vector<int>{0, 1, 1, 1, 1, 0});
            CHECK(row.ranks == std::vector<int>{0, 1, 0, 1, 0});
        }
}

TEST_CASE("the symmetric pair runs independently")
{
    GradedDims circle{{0, 1}, {1, 1}};
    auto rows = duality_check(trefoil(), circle, 1);
    for (const auto& row : rows) {
        bool found = false;
        for (const auto& other : rows)
            if (other.from == row.to && other.to == row.from) {
                found = true;
                CHECK(other.pass);
            }
        CHECK(found);
    }
}

TEST_CASE("wrong betti numbers fail")
{
    GradedDims wrong{{0, 2}};
    auto rows = duality_check(trefoil(), wrong, 1);
    bool any_fail = false;
    for (const auto& row : rows)
        any_fail = any_fail || !row.pass;
    CHECK(any_fail);
}

} // TEST_SUITE
