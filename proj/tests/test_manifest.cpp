#include "iyb/manifest.hpp"

#include <sstream>

#include "doctest.h"

using namespace iyb;

namespace {

std::optional<Manifest> parse_ok(const std::string& body) {
    std::vector<Diagnostic> diags;
    auto m = parse_manifest("format=1\n" + body, diags);
    if (!m)
        for (const auto& d : diags) MESSAGE("line ", d.line, ": ", d.message);
    return m;
}

}  // namespace

TEST_CASE("parse the documented group block") {
    auto m = parse_ok("[group c2]\norder=2\ntable=0 1/1 0\n");
    REQUIRE(m.has_value());
    REQUIRE(m->groups.count("c2"));
    CHECK(m->groups["c2"]->order() == 2);
}

TEST_CASE("parse a lattice module with a permutation action") {
    auto m = parse_ok(
        "[group c2]\norder=2\ntable=0 1/1 0\n"
        "[module m]\ngroup=c2\nfree_rank=2\ntorsion=\naction 1=(1 2)\n");
    REQUIRE(m.has_value());
    const GModule& mod = m->modules.at("m");
    CHECK(mod.base == AbGroup::zn(2));
    CHECK(mod.action[1] == IntMat::from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("associativity failures name the violating triple") {
    std::vector<Diagnostic> diags;
    auto m = parse_manifest("format=1\n[group g]\norder=5\ntable=0 1 2 3 4/1 0 3 4 2/2 4 0 1 3/3 2 4 0 1/4 3 1 2 0\n",
                            diags);
    CHECK(!m.has_value());
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("triple") != std::string::npos);
    CHECK(diags[0].line == 4);
}

TEST_CASE("unresolved references are reported") {
    std::vector<Diagnostic> diags;
    auto m = parse_manifest("format=1\n[module m]\ngroup=ghost\nfree_rank=1\n", diags);
    CHECK(!m.has_value());
    REQUIRE(!diags.empty());
    CHECK(diags[0].message.find("unresolved") != std::string::npos);
}

TEST_CASE("missing format line is rejected") {
    std::vector<Diagnostic> diags;
    CHECK(!parse_manifest("[group g]\norder=1\ntable=0\n", diags).has_value());
}

TEST_CASE("emitters round-trip through the parser") {
    GroupPtr d4 = dihedral_group(4);
    std::ostringstream body;
    body << emit_group("d4", *d4);
    GModule z2 = GModule::trivial(d4, AbGroup::cyclic(2));
    body << "\n" << emit_module("z2", z2, "d4");
    Cocycle1 c{z2, {}};
    for (int x = 0; x < 8; ++x) c.values.push_back(ab_reduce(z2.base, {Int(x >= 4 ? 1 : 0)}));
    body << "\n" << emit_cocycle1("pc", c, "d4", "z2");
    std::vector<Perm> reg = regular_embedding(*d4);
    body << "\n" << emit_embedding("reg", reg, "d4");
    SolutionMap flip{2, {0, 1, 0, 1}, {0, 0, 1, 1}};
    body << "\n" << emit_solution("flip", flip);

    auto m = parse_ok(body.str());
    REQUIRE(m.has_value());
    CHECK(*m->groups.at("d4") == *d4);
    CHECK(m->modules.at("z2").same_module(z2));
    CHECK(m->cocycles1.at("pc").values == c.values);
    CHECK(m->embeddings.at("reg") == reg);
    CHECK(m->solutions.at("flip").left == flip.left);

    // RESULT lines are ignored so command output re-parses directly
    auto m2 = parse_ok("RESULT count=1\n" + body.str());
    CHECK(m2.has_value());
}

TEST_CASE("extension blocks build with canonical or explicit sections") {
    GroupPtr c2 = cyclic_group(2);
    std::ostringstream body;
    body << emit_group("c2", *c2);
    body << "\n[module k]\ngroup=c2\nfree_rank=0\ntorsion=2\n";
    body << "\n[module mid]\ngroup=c2\nfree_rank=0\ntorsion=4\n";
    body << "\n[module q]\ngroup=c2\nfree_rank=0\ntorsion=2\n";
    body << "\n[extension e]\nkernel=k\nmiddle=mid\nquotient=q\nincl=[[2]]\nproj=[[1]]\n";
    body << "\n[extension e2]\nkernel=k\nmiddle=mid\nquotient=q\nincl=[[2]]\nproj=[[1]]\nsection=0/3\n";
    auto m = parse_ok(body.str());
    REQUIRE(m.has_value());
    CHECK(m->extensions.at("e").section[1] == ab_reduce(AbGroup::cyclic(4), {Int(1)}));
    CHECK(m->extensions.at("e2").section[1] == ab_reduce(AbGroup::cyclic(4), {Int(3)}));
}
