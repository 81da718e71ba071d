#include "iyb/lifting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iyb {

LiftProblem LiftProblem::build(GroupPtr g, std::vector<int> g1, CentralExtension gamma, std::vector<AbElem> pi1,
                               std::vector<int> pi0, std::vector<int> transversal) {
    LiftProblem p;
    std::sort(g1.begin(), g1.end());
    p.g = std::move(g);
    p.g1 = std::move(g1);
    p.quot = quotient(p.g, p.g1);
    p.transversal = transversal.empty() ? p.quot.reps : std::move(transversal);
    p.beta_raw = section_factor_raw(*p.g, p.quot, p.transversal);
    p.gamma = std::move(gamma);
    p.pi1 = std::move(pi1);
    p.pi0 = std::move(pi0);
    if (auto d = p.validate()) throw std::invalid_argument("LiftProblem: " + *d);
    return p;
}

std::optional<std::string> LiftProblem::validate() const {
    if (!is_normal(*g, g1)) return "kernel subgroup is not normal";
    if (!(*quot.group == *gamma.gamma.actor)) return "target side must be acted on by the quotient group";
    if (auto d = gamma.validate()) return d;
    // pi1 is a homomorphism on G1
    if (pi1.size() != static_cast<size_t>(g->order())) return "pi1 table has wrong size";
    for (int n : g1)
        for (int m : g1) {
            AbElem sum = ab_add(gamma.gamma1_module.base, pi1[n], pi1[m]);
            if (!(pi1[g->mul(n, m)] == sum)) return "pi1 is not a homomorphism";
        }
    // G-invariance of pi1, acting through the quotient
    for (int x = 0; x < g->order(); ++x)
        for (int n : g1) {
            int conj = g->mul(g->mul(g->inv(x), n), x);  // x^-1 n x
            AbElem rhs = gamma.gamma1_module.act(quot.proj[x], pi1[conj]);
            if (!(pi1[n] == rhs)) return "pi1 is not invariant";
        }
    // pi0 is a 1-cocycle into Gamma0
    if (pi0.size() != static_cast<size_t>(quot.group->order())) return "pi0 table has wrong size";
    if (!is_cocycle1(GCocycle1{gamma.gamma0, pi0})) return "pi0 is not a 1-cocycle";
    return std::nullopt;
}

Cocycle2 LiftProblem::pi1_beta() const {
    const int q = quot.group->order();
    Cocycle2 out = zero_cocycle2(gamma.gamma1_module);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) out.value(a, b) = pi1[beta_raw[static_cast<size_t>(a) * q + b]];
    if (!is_cocycle2(out)) throw std::logic_error("pi1_beta: not a cocycle");
    return out;
}

Cocycle2 LiftProblem::omega_pi0() const { return pointed_coboundary_rep(pi0, gamma); }

GGroup LiftProblem::gamma_over_g() const {
    GGroup out;
    out.actor = g;
    out.base = gamma.gamma.base;
    for (int x = 0; x < g->order(); ++x) out.action.push_back(gamma.gamma.action[quot.proj[x]]);
    return out;
}

std::optional<std::vector<AbElem>> can_lift(const LiftProblem& p) {
    // defect equation: d(lambda) = pi1.beta - omega.pi0
    return cohomologous2(p.omega_pi0(), p.pi1_beta());
}

GCocycle1 assemble_lift(const LiftProblem& p, const std::vector<AbElem>& lambda) {
    Cocycle2 defect = cocycle2_sub(p.pi1_beta(), p.omega_pi0());
    Cocycle2 got = coboundary2(p.gamma.gamma1_module, lambda);
    for (size_t i = 0; i < got.values.size(); ++i)
        if (!(got.values[i] == defect.values[i]))
            throw std::invalid_argument("assemble_lift: lambda does not solve the defect equation");

    const FiniteGroup& gg = *p.g;
    const FiniteGroup& gamma = *p.gamma.gamma.base;
    GCocycle1 out{p.gamma_over_g(), std::vector<int>(gg.order(), 0)};
    for (int x = 0; x < gg.order(); ++x) {
        int gq = p.quot.proj[x];
        int n = gg.mul(x, gg.inv(p.transversal[gq]));
        AbElem head = ab_add(p.gamma.gamma1_module.base, p.pi1[n], lambda[gq]);
        out.values[x] = gamma.mul(p.gamma.g1s.elem_of(head), p.gamma.section[p.pi0[gq]]);
    }
    if (!is_cocycle1(out)) throw std::logic_error("assemble_lift: result is not a cocycle");
    if (!lifts_pair(p, out)) throw std::logic_error("assemble_lift: result does not lift the pair");
    return out;
}

bool lifts_pair(const LiftProblem& p, const GCocycle1& pi) {
    // restriction to G1 equals pi1
    for (int n : p.g1)
        if (pi.values[n] != p.gamma.g1s.elem_of(p.pi1[n])) return false;
    // induced map on the quotient equals pi0
    for (int x = 0; x < p.g->order(); ++x)
        if (p.gamma.quot.proj[pi.values[x]] != p.pi0[p.quot.proj[x]]) return false;
    return true;
}

std::vector<GCocycle1> all_lifts(const LiftProblem& p, const GCocycle1& pi) {
    if (!is_cocycle1(pi) || !lifts_pair(p, pi)) throw std::invalid_argument("all_lifts: input does not lift the pair");
    const FiniteGroup& gamma = *p.gamma.gamma.base;
    std::vector<std::vector<AbElem>> z1 = z1_enumerate(p.gamma.gamma1_module);
    std::set<std::vector<int>> seen;
    std::vector<GCocycle1> out;
    for (const auto& shift : z1) {
        GCocycle1 next{pi.target, std::vector<int>(p.g->order(), 0)};
        for (int x = 0; x < p.g->order(); ++x)
            next.values[x] = gamma.mul(pi.values[x], p.gamma.g1s.elem_of(shift[p.quot.proj[x]]));
        if (!is_cocycle1(next) || !lifts_pair(p, next)) throw std::logic_error("all_lifts: shifted map fails to lift");
        if (seen.insert(next.values).second) out.push_back(std::move(next));
    }
    if (out.size() != z1.size()) throw std::logic_error("all_lifts: shifts collided");
    std::sort(out.begin(), out.end(), [](const GCocycle1& a, const GCocycle1& b) { return a.values < b.values; });
    return out;
}

std::optional<CorollaryLift> corollary_lift(const Cocycle2& beta, const ModuleExtension& e, const Cocycle1& pi0) {
    if (!beta.coeffs.same_module(e.kernel))
        throw std::invalid_argument("corollary_lift: beta must take values in the extension kernel");
    if (!pi0.coeffs.same_module(e.quot)) throw std::invalid_argument("corollary_lift: pi0 must land in the quotient");
    if (!is_cocycle1(pi0)) throw std::invalid_argument("corollary_lift: pi0 is not a cocycle");

    Cocycle2 splice = pointed_coboundary_rep(pi0, e);
    auto lambda = cohomologous2(splice, beta);
    if (!lambda) return std::nullopt;

    CorollaryLift out;
    out.group = std::make_shared<ExtensionGroup>(beta.coeffs, beta);
    out.lambda = *lambda;
    GroupPtr pg = out.group->group();

    GModule middle_over_pairs;
    middle_over_pairs.group = pg;
    middle_over_pairs.base = e.middle.base;
    for (int x = 0; x < pg->order(); ++x) middle_over_pairs.action.push_back(e.middle.action[out.group->proj()[x]]);

    Cocycle1 pi{middle_over_pairs, std::vector<AbElem>(pg->order(), ab_zero(e.middle.base))};
    for (int x = 0; x < pg->order(); ++x) {
        PairElem pe = out.group->elem_of(x);
        AbElem head = ab_add(e.kernel.base, pe.c, (*lambda)[pe.g]);
        pi.values[x] = ab_add(e.middle.base, e.incl.apply(head), e.section_of(pi0.value(pe.g)));
    }
    if (!is_cocycle1(pi)) throw std::logic_error("corollary_lift: assembled map is not a cocycle");
    // restriction to the kernel fiber is the inclusion
    for (int x : out.group->kernel_ids()) {
        PairElem pe = out.group->elem_of(x);
        if (!(pi.values[x] == e.incl.apply(pe.c))) throw std::logic_error("corollary_lift: kernel restriction broken");
    }
    // induced map on the quotient is pi0
    for (int x = 0; x < pg->order(); ++x) {
        PairElem pe = out.group->elem_of(x);
        if (!(e.proj.apply(pi.values[x]) == pi0.value(pe.g))) throw std::logic_error("corollary_lift: induced map broken");
    }
    out.pi = std::move(pi);
    return out;
}

std::vector<Cocycle1> corollary_all_lifts(const CorollaryLift& lift, const ModuleExtension& e) {
    const GroupPtr pg = lift.group->group();
    const std::vector<int>& proj = lift.group->proj();
    std::vector<Cocycle1> out;
    for (const auto& shift : z1_enumerate(e.kernel)) {
        Cocycle1 next{lift.pi.coeffs, lift.pi.values};
        for (int x = 0; x < pg->order(); ++x)
            next.values[x] = ab_add(e.middle.base, next.values[x], e.incl.apply(shift[proj[x]]));
        if (!is_cocycle1(next)) throw std::logic_error("corollary_all_lifts: shifted map fails the cocycle identity");
        out.push_back(std::move(next));
    }
    std::sort(out.begin(), out.end(), [](const Cocycle1& a, const Cocycle1& b) { return a.values < b.values; });
    return out;
}

std::optional<std::vector<AbElem>> corollary_lift_lattice(const Cocycle2& beta, const LatticeExtension& e,
                                                          const Cocycle1& pi0) {
    if (!beta.coeffs.same_module(e.kernel_module))
        throw std::invalid_argument("corollary_lift_lattice: beta must take values in the kernel module");
    if (!pi0.coeffs.same_module(e.theta.target))
        throw std::invalid_argument("corollary_lift_lattice: pi0 must land in the quotient module");
    if (!is_cocycle1(pi0)) throw std::invalid_argument("corollary_lift_lattice: pi0 is not a cocycle");
    return cohomologous2(pointed_coboundary_rep(pi0, e), beta);
}

}  // namespace iyb
