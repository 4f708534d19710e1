#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rrbtk/errors.hpp"
#include "rrbtk/finite_group.hpp"

using namespace rrbtk;

TEST_CASE("standard constructions have the right shape") {
    CHECK(FiniteGroup::trivial().order() == 1);
    CHECK(FiniteGroup::cyclic(6).order() == 6);
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::cyclic(6).is_abelian());
    CHECK(!FiniteGroup::symmetric(3).is_abelian());
    FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    for (int x = 0; x < 4; ++x) CHECK(v4.element_order(x) == (x == v4.identity() ? 1 : 2));
}

TEST_CASE("group law is verified on construction") {
    // Not a Latin square.
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 1}}), NotAGroup);
    // Latin square without associativity (order-5 quasigroup).
    std::vector<std::vector<int>> q = {{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(q), NotAGroup);
}

TEST_CASE("inverses and identity") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (int x = 0; x < 6; ++x) {
        CHECK(s3.mul(x, s3.inv(x)) == s3.identity());
        CHECK(s3.mul(s3.identity(), x) == x);
    }
}

TEST_CASE("subgroups and cosets") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    int three = -1, two = -1;
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 3) three = x;
        if (s3.element_order(x) == 2) two = x;
    }
    auto a3 = s3.generated_subgroup({three});
    CHECK(a3.size() == 3);
    CHECK(s3.is_subgroup(a3));
    CHECK(s3.is_normal(a3));
    auto c2 = s3.generated_subgroup({two});
    CHECK(c2.size() == 2);
    CHECK(!s3.is_normal(c2));
    CHECK(s3.cosets(a3).size() == 2);
    CHECK(s3.cosets(c2).size() == 3);
}

TEST_CASE("homomorphisms") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    GroupHom proj = GroupHom::make(z4, z2, {0, 1, 0, 1});
    CHECK(proj.is_surjective());
    CHECK(!proj.is_injective());
    CHECK(proj.kernel_elements() == std::vector<int>{0, 2});
    CHECK_THROWS_AS(GroupHom::make(z4, z2, {0, 1, 1, 0}), NotAHomomorphism);
}

TEST_CASE("automorphism and homomorphism counts") {
    CHECK(automorphism_group(FiniteGroup::cyclic(6)).size() == 2);
    CHECK(automorphism_group(FiniteGroup::symmetric(3)).size() == 6);
    FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(automorphism_group(v4).size() == 6);
    CHECK(all_homomorphisms(FiniteGroup::cyclic(6), FiniteGroup::cyclic(6)).size() == 6);
    CHECK(all_homomorphisms(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2)).size() == 2);
    // Z4 and V4 are not isomorphic.
    CHECK(all_isomorphisms(FiniteGroup::cyclic(4), v4).empty());
    CHECK(!all_isomorphisms(FiniteGroup::symmetric(3), FiniteGroup::dihedral(3)).empty());
}

TEST_CASE("actions") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GroupAction ad = GroupAction::adjoint(s3);
    for (int g = 0; g < 6; ++g)
        for (int x = 0; x < 6; ++x) {
            CHECK(ad.apply(g, x) == s3.conj(g, x));
            CHECK(ad.apply_inverse(g, ad.apply(g, x)) == x);
        }
    CHECK(!ad.is_trivial());
    CHECK(GroupAction::trivial(s3, s3).is_trivial());
    // A non-automorphism permutation is rejected.
    std::vector<std::vector<int>> bad(6);
    for (int g = 0; g < 6; ++g) {
        bad[g].resize(6);
        for (int x = 0; x < 6; ++x) bad[g][x] = x;
    }
    std::swap(bad[0][s3.identity()], bad[0][(s3.identity() + 1) % 6]);
    CHECK_THROWS_AS(GroupAction::make(s3, s3, bad, Variance::Hom), NotAnAction);
}
