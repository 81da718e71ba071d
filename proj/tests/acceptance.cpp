// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. Oracles are the independent brute-force enumerations
// from oracles.hpp; all thresholds are fixed here.
#include "iyb/manifest.hpp"
#include "iyb/structure.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace iyb;
using iyb_test::brute_force_cocycles;
using iyb_test::oracle_lifts;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, const char* name, bool pass) { std::printf("ACCEPTANCE %d %s: %s\n", n, name, pass ? "PASS" : "FAIL"); }

// ---- the shared lift-problem suite for criteria 1-4 --------------------

struct LiftInstance {
    std::string name;
    LiftProblem problem;
    bool gamma_abelian;
    bool pi1_iso;  // pi1 restricts to an isomorphism G1 -> Gamma1
};

struct GammaShape {
    std::string name;
    GroupPtr base;
    std::vector<int> gamma1;
    bool abelian;
    // action tables per actor element; empty = trivial action
    std::function<std::vector<std::vector<int>>(const GroupPtr&)> action;
};

std::vector<GammaShape> gamma_catalog() {
    std::vector<GammaShape> out;
    out.push_back({"Z4", cyclic_group(4), {0, 2}, true, {}});
    out.push_back({"Z2xZ2", direct_product(*cyclic_group(2), *cyclic_group(2)), {0, 2}, true, {}});
    GroupPtr z2z4 = direct_product(*cyclic_group(2), *cyclic_group(4));
    out.push_back({"Z2xZ4_a", z2z4, {0, 2}, true, {}});       // (0,2) generates {0,2}
    out.push_back({"Z2xZ4_b", z2z4, {0, 4}, true, {}});       // (1,0) generates {0,4}
    out.push_back({"D4", dihedral_group(4), {0, 2}, true, {}});
    out.back().abelian = false;
    out.push_back({"Q8", quaternion_group(), {0, 1}, false, {}});
    // one instance with a genuinely nontrivial action: the swap on
    // Z2 x Z2 with the diagonal as the central subgroup, over C2
    out.push_back({"Z2xZ2_swap", direct_product(*cyclic_group(2), *cyclic_group(2)), {0, 3}, true,
                   [](const GroupPtr& actor) {
                       std::vector<std::vector<int>> tables(actor->order(), {0, 1, 2, 3});
                       std::vector<int> swap{0, 2, 1, 3};
                       for (int g = 1; g < actor->order(); ++g)
                           if (actor->element_order(g) == 2) tables[g] = swap;
                       return tables;
                   }});
    return out;
}

std::vector<LiftInstance>& lift_suite() {
    static std::vector<LiftInstance> suite = [] {
        std::vector<LiftInstance> out;
        struct GSide {
            std::string name;
            GroupPtr g;
            std::vector<int> g1;
        };
        std::vector<GSide> gsides = {
            {"C4/Z2", cyclic_group(4), {0, 2}},
            {"V4/Z2", direct_product(*cyclic_group(2), *cyclic_group(2)), {0, 2}},
            {"C8/Z2", cyclic_group(8), {0, 4}},
            {"Z2xZ4/Z2", direct_product(*cyclic_group(2), *cyclic_group(4)), {0, 2}},
            {"D4/Z", dihedral_group(4), {0, 2}},
            {"Q8/Z", quaternion_group(), {0, 1}},
            {"C2/C2", cyclic_group(2), {0, 1}},
        };
        for (const GSide& gs : gsides) {
            Quotient q = quotient(gs.g, gs.g1);
            for (const GammaShape& sh : gamma_catalog()) {
                GGroup gg;
                gg.actor = q.group;
                gg.base = sh.base;
                if (sh.action) {
                    gg.action = sh.action(q.group);
                    if (gg.validate().has_value()) continue;  // the shape needs an involution in the actor
                } else {
                    gg = GGroup::trivial(q.group, sh.base);
                }
                CentralExtension gamma = CentralExtension::build(std::move(gg), sh.gamma1);

                // pi1 candidates: invariant homs from G1 into Gamma1
                std::vector<std::vector<AbElem>> pi1s =
                    invariant_homs(*gs.g, gs.g1, gamma.gamma1_module,
                                   [&](int x) -> const IntMat& { return gamma.gamma1_module.action[q.proj[x]]; });
                // pi0 candidates: 1-cocycles of the quotient in Gamma0
                std::vector<std::vector<int>> pi0s = enumerate_cocycles_to_group(*q.group, gamma.gamma0);

                // keep the suite exhaustive in spirit but bounded: first and
                // last candidate on each axis
                std::vector<size_t> pick1{0};
                if (pi1s.size() > 1) pick1.push_back(pi1s.size() - 1);
                std::vector<size_t> pick0{0};
                if (pi0s.size() > 1) pick0.push_back(pi0s.size() - 1);
                for (size_t i1 : pick1)
                    for (size_t i0 : pick0) {
                        LiftInstance inst{gs.name + "+" + sh.name + "#" + std::to_string(i1) + std::to_string(i0),
                                          LiftProblem::build(gs.g, gs.g1, gamma, pi1s[i1], pi0s[i0]),
                                          sh.abelian, false};
                        // iso test: pi1 bijective from G1 onto Gamma1
                        std::set<AbElem> img;
                        for (int n : gs.g1) img.insert(pi1s[i1][n]);
                        inst.pi1_iso = img.size() == gamma.gamma1.size() && gs.g1.size() == gamma.gamma1.size();
                        out.push_back(std::move(inst));
                    }
            }
        }
        return out;
    }();
    return suite;
}

// module form of an abelian central extension, for the specialization
ModuleExtension central_to_module_ext(const CentralExtension& ce) {
    const FiniteGroup& gamma = *ce.gamma.base;
    std::vector<int> all(gamma.order());
    std::iota(all.begin(), all.end(), 0);
    AbelianStructure ms = recognize_abelian(gamma, all);
    std::vector<int> allq(ce.quot.group->order());
    std::iota(allq.begin(), allq.end(), 0);
    AbelianStructure qs = recognize_abelian(*ce.quot.group, allq);

    const GroupPtr actor = ce.gamma.actor;
    GModule mid;
    mid.group = actor;
    mid.base = ms.structure;
    for (int g = 0; g < actor->order(); ++g) {
        IntMat m(mid.base.coords(), mid.base.coords());
        for (int j = 0; j < mid.base.coords(); ++j) {
            int gen = ms.from_index[ab_index_of(ms.structure, ab_basis(ms.structure, j))];
            AbElem img = ms.to_coords[ce.gamma.act(g, gen)];
            for (int i = 0; i < mid.base.coords(); ++i) m.at(i, j) = img.coords[i];
        }
        mid.action.push_back(std::move(m));
    }
    GModule quo;
    quo.group = actor;
    quo.base = qs.structure;
    for (int g = 0; g < actor->order(); ++g) {
        IntMat m(quo.base.coords(), quo.base.coords());
        for (int j = 0; j < quo.base.coords(); ++j) {
            int gen = qs.from_index[ab_index_of(qs.structure, ab_basis(qs.structure, j))];
            AbElem img = qs.to_coords[ce.gamma0.act(g, gen)];
            for (int i = 0; i < quo.base.coords(); ++i) m.at(i, j) = img.coords[i];
        }
        quo.action.push_back(std::move(m));
    }
    IntMat incl(mid.base.coords(), ce.gamma1_module.base.coords());
    for (int j = 0; j < ce.gamma1_module.base.coords(); ++j) {
        int gen = ce.g1s.from_index[ab_index_of(ce.g1s.structure, ab_basis(ce.g1s.structure, j))];
        AbElem img = ms.to_coords[gen];
        for (int i = 0; i < mid.base.coords(); ++i) incl.at(i, j) = img.coords[i];
    }
    IntMat proj(quo.base.coords(), mid.base.coords());
    for (int j = 0; j < mid.base.coords(); ++j) {
        int gen = ms.from_index[ab_index_of(ms.structure, ab_basis(ms.structure, j))];
        AbElem img = qs.to_coords[ce.quot.proj[gen]];
        for (int i = 0; i < quo.base.coords(); ++i) proj.at(i, j) = img.coords[i];
    }
    return ModuleExtension::from_maps(ce.gamma1_module, mid, quo, AbHom{ce.gamma1_module.base, mid.base, incl},
                                      AbHom{mid.base, quo.base, proj});
}

}  // namespace

TEST_CASE("criterion 1: lemma-lift biconditional against the oracle") {
    auto t0 = std::chrono::steady_clock::now();
    int disagreements = 0, nonabelian = 0;
    for (const LiftInstance& inst : lift_suite()) {
        if (!inst.gamma_abelian) ++nonabelian;
        auto lambda = can_lift(inst.problem);
        auto oracle = oracle_lifts(inst.problem);
        if (lambda.has_value() != !oracle.empty()) {
            ++disagreements;
            MESSAGE("disagreement at ", inst.name);
            continue;
        }
        if (lambda) {
            GCocycle1 pi = assemble_lift(inst.problem, *lambda);
            if (std::find(oracle.begin(), oracle.end(), pi.values) == oracle.end()) {
                ++disagreements;
                MESSAGE("assembled lift not in the oracle set at ", inst.name);
            }
        }
    }
    double elapsed = seconds_since(t0);
    bool pass = disagreements == 0 && lift_suite().size() >= 20 && nonabelian >= 3 && elapsed < 120.0;
    CHECK(disagreements == 0);
    CHECK(lift_suite().size() >= 20);
    CHECK(nonabelian >= 3);
    CHECK(elapsed < 120.0);
    report(1, "lemma-lift-biconditional", pass);
}

TEST_CASE("criterion 2: lift-set exactness") {
    int violations = 0, solvable = 0;
    for (const LiftInstance& inst : lift_suite()) {
        auto lambda = can_lift(inst.problem);
        if (!lambda) continue;
        ++solvable;
        GCocycle1 pi = assemble_lift(inst.problem, *lambda);
        std::vector<GCocycle1> lifts = all_lifts(inst.problem, pi);
        std::vector<std::vector<int>> got;
        for (const auto& l : lifts) got.push_back(l.values);
        std::vector<std::vector<int>> oracle = oracle_lifts(inst.problem);
        if (got != oracle) ++violations;
        // cardinality: |Z1(G0, Gamma1)| counted independently
        ModuleAsGroup g1t = module_as_group(inst.problem.gamma.gamma1_module);
        size_t z1 = brute_force_cocycles(*inst.problem.quot.group, g1t.g).size();
        if (lifts.size() != z1) ++violations;
    }
    bool pass = violations == 0 && solvable > 0;
    CHECK(violations == 0);
    CHECK(solvable > 0);
    report(2, "lift-set-exactness", pass);
}

TEST_CASE("criterion 3: bijectivity transfer in the abelian specialization") {
    int disagreements = 0, solvable_bij = 0, solvable_nonbij = 0;
    for (const LiftInstance& inst : lift_suite()) {
        if (!inst.gamma_abelian || !inst.pi1_iso) continue;
        const LiftProblem& p = inst.problem;
        ModuleExtension e = central_to_module_ext(p.gamma);
        // transport beta through pi1 so the kernel becomes the coefficient
        // module of the extension
        Cocycle2 beta = p.pi1_beta();
        // pi0 in module coordinates
        std::vector<int> allq(p.quot.group->order());
        std::iota(allq.begin(), allq.end(), 0);
        AbelianStructure qs = recognize_abelian(*p.gamma.quot.group, [&] {
            std::vector<int> a(p.gamma.quot.group->order());
            std::iota(a.begin(), a.end(), 0);
            return a;
        }());
        Cocycle1 pi0{e.quot, {}};
        for (int g = 0; g < p.quot.group->order(); ++g) pi0.values.push_back(qs.to_coords[p.pi0[g]]);

        auto lift = corollary_lift(beta, e, pi0);
        auto lambda = can_lift(p);
        if (lift.has_value() != lambda.has_value()) ++disagreements;
        if (!lift) continue;
        bool lift_bij = is_bijective(lift->pi);
        bool pi0_bij = is_bijective(pi0);
        if (lift_bij != pi0_bij) ++disagreements;
        if (pi0_bij)
            ++solvable_bij;
        else
            ++solvable_nonbij;
    }
    // both directions of the transfer must actually occur in the suite
    bool pass = disagreements == 0 && solvable_bij > 0 && solvable_nonbij > 0;
    CHECK(disagreements == 0);
    CHECK(solvable_bij > 0);
    CHECK(solvable_nonbij > 0);
    report(3, "corollary-bijectivity-transfer", pass);
}

TEST_CASE("criterion 4: bijectivity is a class property, exhaustively") {
    int violations = 0;
    long checked = 0;
    for (const LiftInstance& inst : lift_suite()) {
        const LiftProblem& p = inst.problem;
        // every lift in the oracle set, twisted by every element of Gamma
        GGroup over_g = p.gamma_over_g();
        for (const auto& table : oracle_lifts(p)) {
            GCocycle1 pi{over_g, table};
            bool flag = is_bijective(pi);
            for (int c = 0; c < p.gamma.gamma.base->order(); ++c) {
                GCocycle1 tw = twist_by_coboundary(pi, c);
                if (!is_cocycle1(tw) || is_bijective(tw) != flag) ++violations;
                ++checked;
            }
        }
        // and pi0 itself, twisted by every element of Gamma0
        GCocycle1 pi0{p.gamma.gamma0, p.pi0};
        bool flag0 = is_bijective(pi0);
        for (int c = 0; c < p.gamma.gamma0.base->order(); ++c) {
            GCocycle1 tw = twist_by_coboundary(pi0, c);
            if (!is_cocycle1(tw) || is_bijective(tw) != flag0) ++violations;
            ++checked;
        }
    }
    bool pass = violations == 0 && checked > 0;
    CHECK(violations == 0);
    CHECK(checked > 0);
    report(4, "bijectivity-class-property", pass);
}

TEST_CASE("criterion 5: search counts with the all-functions oracle") {
    auto oracle_data = [](const GroupPtr& g0) {
        // all functions g0 -> A for every module, filtered by the cocycle
        // identity and bijectivity
        long total = 0;
        for (const AbGroup& a : abelian_group_types(g0->order())) {
            AutGroup aut = automorphism_group(a);
            for (const auto& hom : enumerate_cocycles_to_group(*g0, GGroup::trivial(g0, aut.group))) {
                GModule m;
                m.group = g0;
                m.base = a;
                for (int x = 0; x < g0->order(); ++x) m.action.push_back(aut.matrices[hom[x]]);
                long n = g0->order(), na = ab_element_count(a);
                std::vector<long> table(n, 0);
                for (;;) {
                    bool ok = true;
                    for (int x = 0; x < n && ok; ++x)
                        for (int y = 0; y < n; ++y) {
                            AbElem want = ab_add(a, ab_element_at(a, table[x]), m.act(x, ab_element_at(a, table[y])));
                            if (ab_index_of(a, want) != table[m.group->mul(x, y)]) {
                                ok = false;
                                break;
                            }
                        }
                    if (ok) {
                        std::set<long> img(table.begin(), table.end());
                        if ((long)img.size() == n && na == n) ++total;
                    }
                    long i = n - 1;
                    while (i >= 0 && ++table[i] == na) table[i--] = 0;
                    if (i < 0) break;
                }
            }
        }
        return total;
    };

    auto t0 = std::chrono::steady_clock::now();
    size_t c2 = search_iyb(cyclic_group(2)).size();
    double t_c2 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    size_t c3 = search_iyb(cyclic_group(3)).size();
    double t_c3 = seconds_since(t0);

    bool pass = c2 == 1 && c3 == 2 && oracle_data(cyclic_group(2)) == 1 && oracle_data(cyclic_group(3)) == 2 &&
                t_c2 < 5.0 && t_c3 < 5.0;
    CHECK(c2 == 1);
    CHECK(c3 == 2);
    CHECK(oracle_data(cyclic_group(2)) == (long)c2);
    CHECK(oracle_data(cyclic_group(3)) == (long)c3);
    CHECK(t_c2 < 5.0);
    CHECK(t_c3 < 5.0);
    report(5, "iyb-search-counts", pass);
}

TEST_CASE("criterion 6: the construction pipelines certify") {
    int successes = 0;
    bool timing_ok = true;

    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = fn();
        if (seconds_since(t0) >= 60.0) timing_ok = false;
        return ok;
    };

    // sdp: (C2 datum, C3 with inversion) -> S3 datum
    GroupPtr c2 = cyclic_group(2);
    GModule z3;
    z3.group = c2;
    z3.base = AbGroup::cyclic(3);
    z3.action = {IntMat::identity(1), IntMat::from_rows({{-1}})};
    SdpResult s3 = sdp_iyb(search_iyb(c2)[0], z3);
    bool sdp_ok = s3.datum.group->order() == 6 && !s3.datum.group->is_abelian() &&
                  is_iyb_datum(s3.datum.group, s3.datum.module, s3.datum.pi0);
    CHECK(sdp_ok);

    // the tower route reproduces it
    TowerResult tower = a_type_tower({[](const GroupPtr& b) { return GModule::trivial(b, AbGroup::cyclic(2)); },
                                      [](const GroupPtr& b) {
                                          GModule m;
                                          m.group = b;
                                          m.base = AbGroup::cyclic(3);
                                          m.action = {IntMat::identity(1), IntMat::from_rows({{-1}})};
                                          return m;
                                      }});
    bool tower_ok = tower.datum.group->table() == s3.datum.group->table() && tower.datum.pi0.values == s3.datum.pi0.values;
    CHECK(tower_ok);

    // metabelian pipeline: Q8, D4 (central), D5, D6 (abelian-by-cyclic)
    struct Case {
        const char* name;
        GroupPtr g;
        std::vector<int> kernel;
    };
    std::vector<Case> cases = {
        {"Q8", quaternion_group(), center(*quaternion_group())},
        {"D4", dihedral_group(4), center(*dihedral_group(4))},
        {"D5", dihedral_group(5), {0, 1, 2, 3, 4}},
        {"D6", dihedral_group(6), {0, 1, 2, 3, 4, 5}},
    };
    for (const Case& c : cases) {
        bool ok = timed([&] {
            auto d = metabelian_datum(c.g, c.kernel);
            return d.has_value() && is_iyb_datum(d->group, d->module, d->pi0);
        });
        CHECK(ok);
        if (ok) ++successes;
    }
    bool pass = sdp_ok && tower_ok && successes == 4 && timing_ok;
    CHECK(successes == 4);
    CHECK(timing_ok);
    report(6, "constructions-certify", pass);
}

TEST_CASE("criterion 7: theorem B on the swap instance") {
    GroupPtr c2 = cyclic_group(2);
    GModule z2 = GModule::trivial(c2, AbGroup::cyclic(2));
    Cocycle1 pi0{z2, {ab_zero(z2.base), ab_reduce(z2.base, {Int(1)})}};
    IDatum d = IDatum::certify(c2, z2, pi0);
    std::vector<Perm> emb = {Perm(2), *Perm::parse_cycles("(1 2)", 2)};

    std::vector<TheoremBEntry> entries = theorem_b_enumerate(d, emb);
    bool one_surjection = entries.size() == 1;
    CHECK(one_surjection);
    REQUIRE(!entries.empty());
    const TheoremBEntry& e = entries[0];

    bool nontrivial = !cohomologous2(zero_cocycle2(e.spliced.coeffs), e.spliced).has_value();
    CHECK(nontrivial);

    PairElem x1 = e.group.pi_inverse({Int(1), Int(0)});
    PairElem x2 = e.group.pi_inverse({Int(0), Int(1)});
    bool relation = e.group.model->mul(x1, x1) == e.group.model->mul(x2, x2);
    CHECK(relation);

    IDatum back = associated_idatum(e.group);
    bool roundtrip = back.module.base == d.module.base;
    for (int x = 0; x < 2 && roundtrip; ++x)
        for (int y = 0; y < 2; ++y) {
            // identification through the bijections is additive
            AbElem sum = ab_add(d.module.base, d.pi0.values[x], d.pi0.values[y]);
            AbElem bsum = ab_add(back.module.base, back.pi0.values[x], back.pi0.values[y]);
            if (!(back.pi0.values[d.inverse[ab_index_of(d.module.base, sum)]] == bsum)) {
                roundtrip = false;
                break;
            }
        }
    CHECK(roundtrip);

    SolutionMap r = derive_solution(e.group);
    bool formula = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (r.l(i, j) != (j + 1) % 2 || r.r(i, j) != (i + 1) % 2) formula = false;
    CHECK(formula);
    SolutionReport rep = verify_solution(r);
    CHECK(rep.all());

    report(7, "theorem-b-swap-instance", one_surjection && nontrivial && relation && roundtrip && formula && rep.all());
}

TEST_CASE("criterion 8: solution verification sweep over the corpus") {
    int failures = 0;
    long verified = 0;
    // trivial data at ranks 1..4
    for (int n = 1; n <= 4; ++n) {
        GroupPtr t = trivial_group();
        GModule m = GModule::trivial(t, AbGroup());
        IDatum d = IDatum::certify(t, m, Cocycle1{m, {ab_zero(m.base)}});
        for (const TheoremBEntry& e : theorem_b_enumerate(d, {Perm(n)})) {
            if (!verify_solution(derive_solution(e.group)).all()) ++failures;
            ++verified;
        }
    }
    // every datum on the groups of order <= 4 with the regular embedding
    for (GroupPtr g0 : {cyclic_group(2), cyclic_group(3), cyclic_group(4),
                        direct_product(*cyclic_group(2), *cyclic_group(2))}) {
        std::vector<Perm> reg = regular_embedding(*g0);
        for (const IDatum& d : search_iyb(g0))
            for (const TheoremBEntry& e : theorem_b_enumerate(d, reg)) {
                if (!verify_solution(derive_solution(e.group)).all()) ++failures;
                ++verified;
            }
    }
    // the swap instance again, through the non-regular embedding
    {
        GroupPtr c2 = cyclic_group(2);
        GModule z2 = GModule::trivial(c2, AbGroup::cyclic(2));
        IDatum d = IDatum::certify(c2, z2, Cocycle1{z2, {ab_zero(z2.base), ab_reduce(z2.base, {Int(1)})}});
        for (const TheoremBEntry& e : theorem_b_enumerate(d, {Perm(2), *Perm::parse_cycles("(1 2)", 2)})) {
            if (!verify_solution(derive_solution(e.group)).all()) ++failures;
            ++verified;
        }
    }
    bool pass = failures == 0 && verified >= 10;
    CHECK(failures == 0);
    CHECK(verified >= 10);
    report(8, "solution-verification-sweep", pass);
}

TEST_CASE("criterion 9: Smith normal form property suite") {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 6), entry(-10, 10);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        IntMat a(dim(rng), dim(rng));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        SmithForm s = smith_normal_form(a);
        if (!(s.u * a * s.v == s.d)) ++failures;
        if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) ++failures;
        std::vector<Int> diag = s.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i] < 0 || diag[i + 1] < 0) ++failures;
            if (diag[i] == 0 && diag[i + 1] != 0) ++failures;
            if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) ++failures;
        }
        for (int i = 0; i < s.d.rows(); ++i)
            for (int j = 0; j < s.d.cols(); ++j)
                if (i != j && s.d.at(i, j) != 0) ++failures;
    }
    double elapsed = seconds_since(t0);
    bool pass = failures == 0 && elapsed < 30.0;
    CHECK(failures == 0);
    CHECK(elapsed < 30.0);
    report(9, "smith-normal-form-properties", pass);
}

TEST_CASE("criterion 10: class maps are independent of the section") {
    std::mt19937 rng(777777);
    int violations = 0;

    // transgression: recomputed under 20 random normalized transversals of
    // the G side, for central extensions with abelian and non-abelian G
    for (GroupPtr g : {cyclic_group(4), dihedral_group(4), quaternion_group()}) {
        std::vector<int> g1 = center(*g);
        if (g->order() == 4) g1 = {0, 2};
        SectionCocycle base = section_cocycle(g, g1);
        auto pi1 = [&](int n) { return base.kernel.to_coords[n]; };
        Cocycle2 tra0 = transgression_rep(base.kernel_module, base.beta_raw, pi1);
        std::vector<std::vector<int>> cosets(base.quot.group->order());
        for (int x = 0; x < g->order(); ++x) cosets[base.quot.proj[x]].push_back(x);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> reps(base.quot.group->order());
            reps[0] = 0;
            for (size_t c = 1; c < cosets.size(); ++c) {
                std::uniform_int_distribution<size_t> pick(0, cosets[c].size() - 1);
                reps[c] = cosets[c][pick(rng)];
            }
            SectionCocycle other = section_cocycle(g, g1, reps);
            Cocycle2 tra1 = transgression_rep(other.kernel_module, other.beta_raw, pi1);
            if (!cohomologous2(tra0, tra1).has_value()) ++violations;
        }
    }

    // pointed coboundary over finite module extensions
    {
        GroupPtr c2 = cyclic_group(2);
        GModule k = GModule::trivial(c2, AbGroup::cyclic(2));
        GModule mid = GModule::trivial(c2, AbGroup::cyclic(4));
        ModuleExtension e = ModuleExtension::from_maps(k, mid, k, AbHom{k.base, mid.base, IntMat::from_rows({{2}})},
                                                       AbHom{mid.base, k.base, IntMat::from_rows({{1}})});
        for (const auto& t : z1_enumerate(e.quot)) {
            Cocycle1 pi0{e.quot, t};
            Cocycle2 rep0 = pointed_coboundary_rep(pi0, e);
            for (int trial = 0; trial < 20; ++trial) {
                ModuleExtension e2 = e.with_random_section(rng);
                Cocycle2 rep1 = pointed_coboundary_rep(pi0, e2);
                if (!cohomologous2(rep0, rep1).has_value()) ++violations;
                // yoneda agrees with the pointed map under independent sections
                ModuleExtension e3 = e.with_random_section(rng);
                if (!yoneda_splice(pi0, e3).same_class(rep0)) ++violations;
            }
        }
    }

    // yoneda splicing over the lattice extension of the swap instance
    {
        GroupPtr c2 = cyclic_group(2);
        PermLattice sw;
        sw.group = c2;
        sw.rank = 2;
        sw.perms = {Perm(2), *Perm::parse_cycles("(1 2)", 2)};
        GModule z2 = GModule::trivial(c2, AbGroup::cyclic(2));
        LatticeExtension e = LatticeExtension::build(enumerate_surjections(sw, z2)[0]);
        Cocycle1 pi0{z2, {ab_zero(z2.base), ab_reduce(z2.base, {Int(1)})}};
        Cocycle2 rep0 = pointed_coboundary_rep(pi0, e);
        for (int trial = 0; trial < 20; ++trial) {
            LatticeExtension e2 = e.with_random_section(rng);
            if (!cohomologous2(rep0, pointed_coboundary_rep(pi0, e2)).has_value()) ++violations;
        }
    }

    bool pass = violations == 0;
    CHECK(violations == 0);
    report(10, "section-independence", pass);
}
