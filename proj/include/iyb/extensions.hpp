// Group extensions in several shapes: the pair model built from a
// 2-cocycle, factor sets extracted from a quotient with a transversal,
// finite module extensions with chosen sections, central extensions of
// finite G-groups, and lattice extensions arising from equivariant
// surjections of a permutation lattice onto a finite module.
#pragma once

#include "iyb/cohomology.hpp"

#include <random>

namespace iyb {

// element (c, g) of the pair model
struct PairElem {
    AbElem c;
    int g = 0;
    bool operator==(const PairElem& o) const { return g == o.g && c == o.c; }
    bool operator<(const PairElem& o) const { return g != o.g ? g < o.g : c < o.c; }
};

// Group on pairs (c, g), c in the kernel module, g in the quotient:
// (c1,g1)(c2,g2) = (c1 + g1.c2 + beta(g1,g2), g1g2). Finite kernels are
// materialized as a multiplication table with id = kernel_index * q + g.
class ExtensionGroup {
public:
    ExtensionGroup(GModule kernel, Cocycle2 beta);  // throws on an invalid cocycle

    const GModule& kernel_module() const { return beta_.coeffs; }
    const Cocycle2& beta() const { return beta_; }
    GroupPtr quotient_group() const { return beta_.coeffs.group; }
    bool finite() const { return beta_.coeffs.base.finite(); }

    PairElem identity() const;
    PairElem mul(const PairElem& x, const PairElem& y) const;
    PairElem inv(const PairElem& x) const;

    // finite materialization
    GroupPtr group() const;
    int id_of(const PairElem& x) const;
    PairElem elem_of(int id) const;
    std::vector<int> kernel_ids() const;
    const std::vector<int>& proj() const;                // id -> quotient element
    std::vector<int> canonical_reps() const;             // quotient element -> id of (0, g)

    // lattice kernels: all pairs with sup-norm of the kernel part <= radius
    std::vector<PairElem> ball(long radius) const;

private:
    Cocycle2 beta_;
    GroupPtr table_;
    std::vector<int> proj_;
};

ExtensionGroup build_extension(const GModule& kernel, const Cocycle2& beta);

// Factor set of a finite group over an abelian normal subgroup, with the
// subgroup recognized in canonical coordinates and the conjugation action
// of the quotient on it.
struct SectionCocycle {
    Quotient quot;
    std::vector<int> transversal;
    AbelianStructure kernel;
    GModule kernel_module;  // over quot.group
    std::vector<int> beta_raw;  // q*q table of ambient ids
    Cocycle2 beta;              // same data in kernel coordinates
};
SectionCocycle section_cocycle(const GroupPtr& g, const std::vector<int>& abelian_normal,
                               const std::vector<int>& transversal = {});

// Short exact sequence of finite abelian modules 0 -> kernel -> middle ->
// quot -> 0 over one acting group, with a normalized set-section of the
// projection. The canonical section maps each quotient element to its
// lexicographically minimal preimage.
struct ModuleExtension {
    GModule kernel, middle, quot;
    AbHom incl, proj;
    std::vector<AbElem> section;  // indexed by quotient element index

    static ModuleExtension split(const GModule& kernel, const GModule& quot);
    static ModuleExtension from_maps(GModule kernel, GModule middle, GModule quot, AbHom incl, AbHom proj);

    std::optional<std::string> validate() const;
    AbElem section_of(const AbElem& q) const { return section[ab_index_of(quot.base, q)]; }
    AbElem kernel_coords(const AbElem& middle_elem) const;
    std::vector<AbElem> omega() const;  // additive section defect, |quot|^2 table in kernel coords
    ModuleExtension with_random_section(std::mt19937& rng) const;
};

// representative of the spliced class: (g1,g2) ->
//   s(pi0(g1)) + g1.s(pi0(g2)) - s(pi0(g1 g2)), read in kernel coordinates
Cocycle2 pointed_coboundary_rep(const Cocycle1& pi0, const ModuleExtension& e);
CohClass2 pointed_coboundary(const Cocycle1& pi0, const ModuleExtension& e);
// identical formula on abelian data; named for the Ext composition it computes
CohClass2 yoneda_splice(const Cocycle1& pi0, const ModuleExtension& e);

// Central extension of finite G-groups: Gamma with a central, action-stable
// subgroup Gamma1, quotient Gamma0, and a normalized section.
struct CentralExtension {
    GGroup gamma;
    std::vector<int> gamma1;  // sorted ids
    Quotient quot;            // of the underlying group of gamma
    std::vector<int> section; // Gamma0 id -> Gamma id
    GGroup gamma0;            // induced action on the quotient
    AbelianStructure g1s;
    GModule gamma1_module;    // over gamma.actor

    static CentralExtension build(GGroup gamma, std::vector<int> gamma1);
    CentralExtension with_section(std::vector<int> s) const;
    CentralExtension with_random_section(std::mt19937& rng) const;
    std::optional<std::string> validate() const;
};

// pointed-set coboundary representative for a 1-cocycle pi0 of the actor
// valued in Gamma0 (table of Gamma0 ids)
Cocycle2 pointed_coboundary_rep(const std::vector<int>& pi0, const CentralExtension& e);

// Equivariant surjection from a permutation lattice onto a finite module
// of the same acting group, given by the images of the basis vectors.
struct ModuleSurjection {
    PermLattice source;
    GModule target;
    std::vector<AbElem> images;

    AbElem apply(const std::vector<Int>& v) const;
    std::optional<std::string> validate() const;
};

// every equivariant surjection exactly once, ordered lexicographically by
// the tuple of basis images
std::vector<ModuleSurjection> enumerate_surjections(const PermLattice& m, const GModule& a);

// 0 -> ker theta -> Z^n -> A -> 0 with the kernel in canonical basis form
// and the canonical (lexicographically minimal, fundamental box) section.
struct LatticeExtension {
    ModuleSurjection theta;
    IntMat kernel_basis;   // n x n, canonical column form
    GModule kernel_module; // abstract coordinates Z^n with conjugated action
    std::vector<std::vector<Int>> section;  // target element index -> ambient preimage

    static LatticeExtension build(ModuleSurjection theta);
    AbElem kernel_coords(const std::vector<Int>& ambient) const;
    std::vector<Int> ambient_of(const AbElem& k) const;
    const std::vector<Int>& section_of(const AbElem& q) const { return section[ab_index_of(theta.target.base, q)]; }
    std::vector<AbElem> omega() const;
    LatticeExtension with_random_section(std::mt19937& rng, long radius = 2) const;

private:
    std::shared_ptr<const ExactSolver> solver_;
};

Cocycle2 pointed_coboundary_rep(const Cocycle1& pi0, const LatticeExtension& e);
CohClass2 yoneda_splice(const Cocycle1& pi0, const LatticeExtension& e);

inline LatticeExtension extension_from_surjection(ModuleSurjection theta) {
    return LatticeExtension::build(std::move(theta));
}

// the class of the transgressed cocycle of an invariant homomorphism
inline CohClass2 transgression(const GModule& coeffs, const std::vector<int>& beta_raw,
                               const std::function<AbElem(int)>& pi1) {
    return CohClass2{transgression_rep(coeffs, beta_raw, pi1)};
}

}  // namespace iyb
