// Modules and groups with an action of a finite group: abelian G-modules
// given by integer action matrices, (possibly non-abelian) G-groups given
// by automorphism tables, and permutation lattices. Fixed-point
// submodules and invariant homomorphisms live here too.
#pragma once

#include "iyb/groups.hpp"

namespace iyb {

// Abelian group with an action of `group` by automorphisms, one integer
// matrix per group element acting on canonical coordinates.
struct GModule {
    GroupPtr group;
    AbGroup base;
    std::vector<IntMat> action;  // indexed by group element id

    static GModule trivial(GroupPtr g, AbGroup base);

    const IntMat& mat(int g) const { return action[g]; }
    AbElem act(int g, const AbElem& x) const { return ab_reduce(base, action[g].mul_vec(x.coords)); }
    bool trivial_action() const;
    // identity acts as identity, every matrix is a hom, action respects the table
    std::optional<std::string> validate() const;
    bool same_module(const GModule& o) const;
};

// Direct sum with the diagonal action, in canonical invariant-factor
// coordinates, with the factor embeddings and the splitting projections.
struct GModuleSum {
    GModule sum;
    AbHom incl_left, incl_right;
    AbHom proj_left, proj_right;
};
GModuleSum direct_sum_modules(const GModule& a, const GModule& b);

// Finite (possibly non-abelian) group with an action of `actor` by
// automorphisms given as permutation tables of element ids.
struct GGroup {
    GroupPtr actor;
    GroupPtr base;
    std::vector<std::vector<int>> action;  // action[g][x]

    static GGroup trivial(GroupPtr actor, GroupPtr base);

    int act(int g, int x) const { return action[g][x]; }
    std::optional<std::string> validate() const;
};

// materialize a finite module as a GGroup together with the id <-> element
// correspondence (ids are the lexicographic element indices of the base)
struct ModuleAsGroup {
    GGroup g;
    const GModule* module;
    AbElem elem(int id) const { return ab_element_at(module->base, id); }
    int id(const AbElem& e) const { return static_cast<int>(ab_index_of(module->base, e)); }
};
ModuleAsGroup module_as_group(const GModule& m);

// Z^rank with `group` acting through a faithful permutation representation.
struct PermLattice {
    GroupPtr group;
    int rank = 0;
    std::vector<Perm> perms;  // indexed by group element id

    GModule as_module() const;  // permutation matrices
    std::vector<Int> act(int g, const std::vector<Int>& v) const;
    std::optional<std::string> validate() const;
};

// M^G as a canonical subgroup with its inclusion (the restricted action is
// trivial by construction).
AbSubgroup invariants_submodule(const GModule& m);

// All f in Hom(H, target) with f(n) = g . f(g^-1 n g) for every g in the
// ambient group; H must be a subgroup of `ambient`, and `ambient` acts on
// the target through action_of (typically the module action composed with
// a projection).
std::vector<std::vector<AbElem>> invariant_homs(const FiniteGroup& ambient, const std::vector<int>& subgroup_ids,
                                                const GModule& target,
                                                const std::function<const IntMat&(int)>& action_of);

// kernel of the action of the module's group: ids acting as the identity
std::vector<int> kernel_of_action(const GModule& m);

}  // namespace iyb
