#include "iyb/gmodule.hpp"

#include "doctest.h"

using namespace iyb;

namespace {

GModule swap_lattice_module() {
    GroupPtr c2 = cyclic_group(2);
    GModule m;
    m.group = c2;
    m.base = AbGroup::zn(2);
    m.action = {IntMat::identity(2), IntMat::from_rows({{0, 1}, {1, 0}})};
    return m;
}

GModule negation_module(int d) {
    GroupPtr c2 = cyclic_group(2);
    GModule m;
    m.group = c2;
    m.base = AbGroup::cyclic(d);
    m.action = {IntMat::identity(1), IntMat::from_rows({{-1}})};
    return m;
}

}  // namespace

TEST_CASE("GModule validation") {
    GModule m = swap_lattice_module();
    CHECK(!m.validate().has_value());
    m.action[1] = IntMat::from_rows({{1, 1}, {0, 1}});  // infinite order, not an action of C2
    CHECK(m.validate().has_value());

    GModule t = GModule::trivial(cyclic_group(3), AbGroup(0, {2, 4}));
    CHECK(!t.validate().has_value());
    CHECK(t.trivial_action());
}

TEST_CASE("invariants_submodule examples") {
    // trivial action: everything is fixed
    GModule t = GModule::trivial(cyclic_group(2), AbGroup::cyclic(4));
    AbSubgroup st = invariants_submodule(t);
    CHECK(st.sub == AbGroup::cyclic(4));

    // swap on Z^2: rank-1 sublattice generated by (1,1)
    AbSubgroup sw = invariants_submodule(swap_lattice_module());
    CHECK(sw.sub == AbGroup::zn(1));
    CHECK(sw.incl.apply(ab_basis(sw.sub, 0)).coords == std::vector<Int>{1, 1});

    // swap on Z/2 + Z/2: diagonal subgroup of order 2
    GModule f;
    f.group = cyclic_group(2);
    f.base = AbGroup(0, {2, 2});
    f.action = {IntMat::identity(2), IntMat::from_rows({{0, 1}, {1, 0}})};
    AbSubgroup sd = invariants_submodule(f);
    CHECK(sd.sub == AbGroup::cyclic(2));
    CHECK(sd.incl.apply(ab_basis(sd.sub, 0)).coords == std::vector<Int>{1, 1});

    // fixed points are really fixed
    for (const GModule& m : {swap_lattice_module(), negation_module(4)}) {
        AbSubgroup s = invariants_submodule(m);
        if (s.sub.finite()) {
            for (const AbElem& e : ab_elements(s.sub)) {
                AbElem x = s.incl.apply(e);
                for (int g = 0; g < m.group->order(); ++g) CHECK(m.act(g, x) == x);
            }
        }
    }
    CHECK(invariants_submodule(negation_module(4)).sub == AbGroup::cyclic(2));
}

TEST_CASE("invariant_homs examples") {
    // abelian ambient with trivial target action: all homs are invariant
    GroupPtr c4 = cyclic_group(4);
    GModule z4 = GModule::trivial(c4, AbGroup::cyclic(4));
    auto all = invariant_homs(*c4, {0, 1, 2, 3}, z4, [&](int g) -> const IntMat& { return z4.action[g]; });
    CHECK(all.size() == 4);

    // Z/2 to Z/2: both homs invariant whatever the ambient
    GroupPtr q8 = quaternion_group();
    GModule z2 = GModule::trivial(q8, AbGroup::cyclic(2));
    auto two = invariant_homs(*q8, {0, 1}, z2, [&](int g) -> const IntMat& { return z2.action[g]; });
    CHECK(two.size() == 2);

    // C3 inside S3 with conjugation, trivial Z/3 target: only the zero hom
    PermGroupClosure s3 = perm_group_closure(3, {*Perm::parse_cycles("(1 2)", 3), *Perm::parse_cycles("(1 2 3)", 3)});
    std::vector<int> c3;
    for (int a = 0; a < 6; ++a)
        if (s3.group->element_order(a) != 2) c3.push_back(a);
    REQUIRE(c3.size() == 3);
    GModule z3 = GModule::trivial(s3.group, AbGroup::cyclic(3));
    auto only_zero = invariant_homs(*s3.group, c3, z3, [&](int g) -> const IntMat& { return z3.action[g]; });
    REQUIRE(only_zero.size() == 1);
    for (const AbElem& v : only_zero[0]) CHECK(ab_is_zero(v));
}

TEST_CASE("kernel_of_action") {
    GModule t = GModule::trivial(cyclic_group(4), AbGroup::cyclic(2));
    CHECK(kernel_of_action(t).size() == 4);

    // C4 acting through its quotient C2 by negation on Z/4: kernel {0,2}
    GModule m;
    m.group = cyclic_group(4);
    m.base = AbGroup::cyclic(4);
    m.action = {IntMat::identity(1), IntMat::from_rows({{-1}}), IntMat::identity(1), IntMat::from_rows({{-1}})};
    CHECK(!m.validate().has_value());
    CHECK(kernel_of_action(m) == std::vector<int>{0, 2});

    // faithful swap action of C2 on Z^2
    CHECK(kernel_of_action(swap_lattice_module()) == std::vector<int>{0});
}

TEST_CASE("module_as_group bridges coordinates and ids") {
    GModule m = negation_module(4);
    ModuleAsGroup g = module_as_group(m);
    CHECK(g.g.base->order() == 4);
    CHECK(!g.g.validate().has_value());
    CHECK(g.g.act(1, g.id(ab_reduce(m.base, {Int(1)}))) == g.id(ab_reduce(m.base, {Int(3)})));
}

TEST_CASE("perm lattice as module") {
    GroupPtr c2 = cyclic_group(2);
    PermLattice t;
    t.group = c2;
    t.rank = 2;
    t.perms = {Perm(2), *Perm::parse_cycles("(1 2)", 2)};
    CHECK(!t.validate().has_value());
    GModule m = t.as_module();
    CHECK(!m.validate().has_value());
    CHECK(m.act(1, ab_basis(m.base, 0)) == ab_basis(m.base, 1));
    CHECK(t.act(1, {Int(3), Int(5)}) == std::vector<Int>{5, 3});
}

TEST_CASE("direct sum of modules with embeddings and projections") {
    GModule z3 = negation_module(3);
    GModule z2 = GModule::trivial(cyclic_group(2), AbGroup::cyclic(2));
    GModuleSum s = direct_sum_modules(z3, z2);
    CHECK(s.sum.base == AbGroup::cyclic(6));
    CHECK(!s.sum.validate().has_value());
    CHECK(s.incl_left.valid());
    CHECK(s.incl_right.valid());

    // embeddings are sections of the projections
    for (const AbElem& x : ab_elements(z3.base)) CHECK(s.proj_left.apply(s.incl_left.apply(x)) == x);
    for (const AbElem& y : ab_elements(z2.base)) CHECK(s.proj_right.apply(s.incl_right.apply(y)) == y);
    // cross projections vanish
    for (const AbElem& x : ab_elements(z3.base)) CHECK(ab_is_zero(s.proj_right.apply(s.incl_left.apply(x))));

    // action is diagonal through the embeddings
    for (int g = 0; g < 2; ++g)
        for (const AbElem& x : ab_elements(z3.base))
            CHECK(s.sum.act(g, s.incl_left.apply(x)) == s.incl_left.apply(z3.act(g, x)));

    // sum of embedded parts reconstructs the element
    for (const AbElem& e : ab_elements(s.sum.base)) {
        AbElem back = ab_add(s.sum.base, s.incl_left.apply(s.proj_left.apply(e)), s.incl_right.apply(s.proj_right.apply(e)));
        CHECK(back == e);
    }
}
