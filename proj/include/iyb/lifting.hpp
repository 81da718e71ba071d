// Lifting 1-cocycles from a quotient to the whole group: existence via
// the class comparison, construction of one lift, enumeration of all of
// them, and the abelian specialization with its bijectivity transfer.
#pragma once

#include "iyb/extensions.hpp"

namespace iyb {

// Hypotheses: a group G with normal subgroup G1, a central extension of
// finite G-groups (acting through the quotient G0 = G/G1), an invariant
// homomorphism pi1: G1 -> Gamma1 and a 1-cocycle pi0: G0 -> Gamma0.
struct LiftProblem {
    GroupPtr g;
    std::vector<int> g1;          // sorted
    Quotient quot;
    std::vector<int> transversal;  // normalized; canonical minimal-id reps by default
    std::vector<int> beta_raw;     // section factor set of the G side
    CentralExtension gamma;        // actor must be the quotient group
    std::vector<AbElem> pi1;       // G element id -> Gamma1 coordinates (on members of g1)
    std::vector<int> pi0;          // G0 id -> Gamma0 id

    static LiftProblem build(GroupPtr g, std::vector<int> g1, CentralExtension gamma, std::vector<AbElem> pi1,
                             std::vector<int> pi0, std::vector<int> transversal = {});
    std::optional<std::string> validate() const;

    // pi1 composed with the factor set, and the pointed coboundary of pi0,
    // both as 2-cocycles over Gamma1
    Cocycle2 pi1_beta() const;
    Cocycle2 omega_pi0() const;

    // the target as a G-group (action through the quotient)
    GGroup gamma_over_g() const;
};

// lambda with coboundary pi1_beta - omega_pi0; present exactly when a lift
// of the pair (pi1, pi0) exists
std::optional<std::vector<AbElem>> can_lift(const LiftProblem& p);

// pi(n t(g)) = pi1(n) lambda(g) s(pi0(g)); validates the result and throws
// if lambda does not solve the defect equation
GCocycle1 assemble_lift(const LiftProblem& p, const std::vector<AbElem>& lambda);

bool lifts_pair(const LiftProblem& p, const GCocycle1& pi);

// the full lift set { pi . (inflated pi'') : pi'' in Z1(G0, Gamma1) },
// sorted by value table; its size is |Z1(G0, Gamma1)|
std::vector<GCocycle1> all_lifts(const LiftProblem& p, const GCocycle1& pi);

// Abelian specialization: G is rebuilt from beta as the pair model, the
// kernel of the extension equals the coefficient module of beta, and
// pi1 = id. The returned cocycle is bijective iff pi0 is.
struct CorollaryLift {
    std::shared_ptr<ExtensionGroup> group;  // pair model on beta
    Cocycle1 pi;                            // on group->group(), valued in the middle module
    std::vector<AbElem> lambda;
};
std::optional<CorollaryLift> corollary_lift(const Cocycle2& beta, const ModuleExtension& e, const Cocycle1& pi0);

// every lift of (id, pi0): the base lift shifted by the inflations of
// Z1(G0, kernel); sorted by value table
std::vector<Cocycle1> corollary_all_lifts(const CorollaryLift& lift, const ModuleExtension& e);

// lattice variant: only the defect cochain is produced; the caller
// assembles the infinite group
std::optional<std::vector<AbElem>> corollary_lift_lattice(const Cocycle2& beta, const LatticeExtension& e,
                                                          const Cocycle1& pi0);

}  // namespace iyb
