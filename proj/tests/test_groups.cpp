#include "iyb/groups.hpp"

#include "doctest.h"

using namespace iyb;

TEST_CASE("standard groups are valid") {
    for (int n : {1, 2, 3, 4, 6, 8, 12}) {
        GroupPtr g = cyclic_group(n);
        CHECK(g->order() == n);
        CHECK(g->is_abelian());
    }
    CHECK(dihedral_group(4)->order() == 8);
    CHECK(!dihedral_group(4)->is_abelian());
    CHECK(quaternion_group()->order() == 8);
    CHECK(!quaternion_group()->is_abelian());
    CHECK(direct_product(*cyclic_group(2), *cyclic_group(2))->order() == 4);

    // quaternion group: unique involution, six elements of order 4
    GroupPtr q8 = quaternion_group();
    int involutions = 0, order4 = 0;
    for (int a = 1; a < 8; ++a) {
        if (q8->element_order(a) == 2) ++involutions;
        if (q8->element_order(a) == 4) ++order4;
    }
    CHECK(involutions == 1);
    CHECK(order4 == 6);
}

TEST_CASE("check_table reports the violating triple") {
    // a loop of order 5: latin square with identity and two-sided
    // inverses, but no group of order 5 looks like this
    std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    auto diag = FiniteGroup::check_table(5, loop);
    REQUIRE(diag.has_value());
    CHECK(diag->find("triple") != std::string::npos);

    CHECK(FiniteGroup::check_table(2, {0, 1, 1, 1}).has_value());
    CHECK(!FiniteGroup::check_table(2, {0, 1, 1, 0}).has_value());
}

TEST_CASE("subgroups, normality, center") {
    GroupPtr d4 = dihedral_group(4);
    std::vector<int> z = center(*d4);
    CHECK(z == std::vector<int>{0, 2});
    CHECK(is_normal(*d4, z));
    std::vector<int> refl = subgroup_closure(*d4, {4});
    CHECK(refl.size() == 2);
    CHECK(!is_normal(*d4, refl));
    CHECK(center(*quaternion_group()) == std::vector<int>{0, 1});
}

TEST_CASE("quotient uses minimal-id transversal and identity coset 0") {
    GroupPtr c4 = cyclic_group(4);
    Quotient q = quotient(c4, {0, 2});
    CHECK(q.group->order() == 2);
    CHECK(q.reps == std::vector<int>{0, 1});
    CHECK(q.proj[2] == 0);
    CHECK(q.proj[3] == 1);
    CHECK(is_normalized_transversal(*c4, q, q.reps));
}

TEST_CASE("section factor examples") {
    // trivial kernel: factor vanishes
    GroupPtr c2 = cyclic_group(2);
    Quotient q0 = quotient(c2, {0});
    std::vector<int> b0 = section_factor_raw(*c2, q0, q0.reps);
    for (int v : b0) CHECK(v == 0);

    // C4 over {0,2}: beta(1,1) = 2, normalized elsewhere
    GroupPtr c4 = cyclic_group(4);
    Quotient q = quotient(c4, {0, 2});
    std::vector<int> b = section_factor_raw(*c4, q, q.reps);
    CHECK(b[0] == 0);
    CHECK(b[1] == 0);
    CHECK(b[2] == 0);
    CHECK(b[3] == 2);

    // split C2 x C2 over the first factor: identically trivial
    GroupPtr v4 = direct_product(*cyclic_group(2), *cyclic_group(2));
    Quotient qv = quotient(v4, {0, 2});  // ids (a,b) = a*2+b; first factor = {(0,0),(1,0)} = {0,2}
    std::vector<int> bv = section_factor_raw(*v4, qv, qv.reps);
    for (int v : bv) CHECK(v == 0);

    // rejects a non-normalized transversal
    CHECK_THROWS(section_factor_raw(*c4, q, std::vector<int>{2, 1}));
}

TEST_CASE("recognize_abelian recovers invariant factors and coordinates") {
    GroupPtr c4 = cyclic_group(4);
    AbelianStructure s = recognize_abelian(*c4, {0, 1, 2, 3});
    CHECK(s.structure == AbGroup::cyclic(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            AbElem sum = ab_add(s.structure, s.to_coords[a], s.to_coords[b]);
            CHECK(s.elem_of(sum) == c4->mul(a, b));
        }

    GroupPtr v4 = direct_product(*cyclic_group(2), *cyclic_group(2));
    CHECK(recognize_abelian(*v4, {0, 1, 2, 3}).structure == AbGroup(0, {2, 2}));

    GroupPtr q8 = quaternion_group();
    CHECK(recognize_abelian(*q8, {0, 1}).structure == AbGroup::cyclic(2));
    CHECK_THROWS(recognize_abelian(*q8, {0, 1, 2, 3, 4, 5, 6, 7}));  // not abelian

    // trivial subgroup
    CHECK(recognize_abelian(*q8, {0}).structure.trivial());
}

TEST_CASE("permutations compose and parse") {
    Perm p = *Perm::parse_cycles("(1 2)", 2);
    CHECK(p(0) == 1);
    CHECK((p * p).is_identity());
    CHECK(p.cycle_str() == "(1 2)");
    CHECK(Perm(3).cycle_str() == "()");
    CHECK(*Perm::parse_cycles("()", 3) == Perm(3));
    CHECK(!Perm::parse_cycles("(1 2", 3).has_value());
    CHECK(!Perm::parse_cycles("(1 2)(2 3)", 3).has_value());

    Perm r = *Perm::parse_cycles("(1 2 3)", 3);
    CHECK(Perm::parse_cycles(r.cycle_str(), 3) == r);
}

TEST_CASE("perm group closure yields S3 with identity first") {
    std::vector<Perm> gens = {*Perm::parse_cycles("(1 2)", 3), *Perm::parse_cycles("(1 2 3)", 3)};
    PermGroupClosure s3 = perm_group_closure(3, gens);
    CHECK(s3.group->order() == 6);
    CHECK(s3.elements[0].is_identity());
    CHECK(!s3.group->is_abelian());
}

TEST_CASE("regular embedding is faithful") {
    GroupPtr s3 = perm_group_closure(3, {*Perm::parse_cycles("(1 2)", 3), *Perm::parse_cycles("(1 2 3)", 3)}).group;
    std::vector<Perm> rho = regular_embedding(*s3);
    CHECK(is_faithful_perm_rep(*s3, rho));
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(*cyclic_group(8)) == std::vector<int>{1});
    CHECK(minimal_generators(*direct_product(*cyclic_group(2), *cyclic_group(2))).size() == 2);
    CHECK(minimal_generators(*trivial_group()).empty());
}
