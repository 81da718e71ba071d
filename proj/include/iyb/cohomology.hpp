// 1- and 2-cocycles with abelian or non-abelian coefficients, coboundary
// twisting, the cohomologous-class decision procedure, transgression
// representatives, inflation, and exhaustive cocycle enumeration for
// finite coefficients.
#pragma once

#include "iyb/gmodule.hpp"

#include <utility>

namespace iyb {

// 1-cocycle of coeffs.group with values in the module: one value per
// source element, pi(gh) = pi(g) + g.pi(h).
struct Cocycle1 {
    GModule coeffs;
    std::vector<AbElem> values;

    const AbElem& value(int g) const { return values[g]; }
};

bool is_cocycle1(const Cocycle1& c);
bool is_bijective(const Cocycle1& c);  // finite coefficients only
Cocycle1 twist_by_coboundary(const Cocycle1& c, const AbElem& shift);

// 1-cocycle with values in a finite (possibly non-abelian) G-group; the
// actor of the target is the source group.
struct GCocycle1 {
    GGroup target;
    std::vector<int> values;
};

bool is_cocycle1(const GCocycle1& c);
bool is_bijective(const GCocycle1& c);
GCocycle1 twist_by_coboundary(const GCocycle1& c, int shift);

// orbit membership in the pointed set of 1-cocycle classes: some twist of
// a carries it onto b
bool same_pointed_class(const GCocycle1& a, const GCocycle1& b);

// normalized 2-cocycle of coeffs.group, value table indexed g1*q+g2
struct Cocycle2 {
    GModule coeffs;
    std::vector<AbElem> values;

    const AbElem& value(int g1, int g2) const { return values[static_cast<size_t>(g1) * coeffs.group->order() + g2]; }
    AbElem& value(int g1, int g2) { return values[static_cast<size_t>(g1) * coeffs.group->order() + g2]; }
};

Cocycle2 zero_cocycle2(const GModule& m);
bool is_normalized2(const Cocycle2& c);
bool is_cocycle2(const Cocycle2& c);
Cocycle2 cocycle2_sub(const Cocycle2& a, const Cocycle2& b);

// canonical normalization of a 2-cocycle by a constant coboundary shift;
// returns the normalized representative and the recorded shift value
std::pair<Cocycle2, AbElem> normalize2(const Cocycle2& c);

// coboundary of a 1-cochain: (g1,g2) -> f(g1) + g1.f(g2) - f(g1g2)
Cocycle2 coboundary2(const GModule& m, const std::vector<AbElem>& f);

// 1-cochain f with coboundary2(f) = c2 - c1 and f(1) = 0, or nullopt when
// the classes differ. Canonical: the SNF particular solution with free
// parameters zero. Works for infinite (lattice) coefficients as well.
std::optional<std::vector<AbElem>> cohomologous2(const Cocycle2& c1, const Cocycle2& c2);

struct CohClass2 {
    Cocycle2 rep;
    bool is_trivial() const;
    bool same_class(const CohClass2& o) const;
    bool same_class(const Cocycle2& o) const;
};

// representative of the transgression class: (g1,g2) -> -pi1(beta(g1,g2));
// beta_raw is a q*q table of ambient ids lying in the kernel, pi1 maps
// those ids into the coefficient module
Cocycle2 transgression_rep(const GModule& coeffs, const std::vector<int>& beta_raw,
                           const std::function<AbElem(int)>& pi1);

// composite incl . pi2 . proj: inflation of a 1-cocycle on the quotient
// followed by the coefficient embedding
Cocycle1 inflate_cocycle(const GModule& target_over_g, const std::vector<int>& proj, const AbHom& incl,
                         const std::vector<AbElem>& pi2);

// exhaustive enumeration for finite coefficients (oracle machinery):
// deterministic output order (sorted tables)
std::vector<std::vector<AbElem>> z1_enumerate(const GModule& m);
std::vector<std::vector<AbElem>> b1_enumerate(const GModule& m);
std::vector<Cocycle2> z2_enumerate(const GModule& m, size_t cap = 200000);

// all 1-cocycles of src valued in a finite G-group (homomorphisms when the
// action is trivial), by backtracking over generator images; with
// bijective_only the search prunes on value collisions
std::vector<std::vector<int>> enumerate_cocycles_to_group(const FiniteGroup& src, const GGroup& target,
                                                          bool bijective_only = false);

}  // namespace iyb
