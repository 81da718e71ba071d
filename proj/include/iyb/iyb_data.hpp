// Bijective 1-cocycle data on finite groups: certification, exhaustive
// search over modules and actions, closure under semidirect products,
// towers of such products, and the metabelian construction through
// module-extension preimages of invariant classes.
#pragma once

#include "iyb/lifting.hpp"

namespace iyb {

// (G0, A, pi0) with pi0 a bijective 1-cocycle and |A| = |G0|
struct IDatum {
    GroupPtr group;
    GModule module;      // over `group`
    Cocycle1 pi0;        // coeffs == module
    std::vector<int> inverse;  // A element index -> group id

    static IDatum certify(GroupPtr group, GModule module, Cocycle1 pi0);  // throws when not a datum
};

bool is_iyb_datum(const GroupPtr& g, const GModule& module, const Cocycle1& pi0);

// abelian group types of a given order, one per isomorphism class, sorted
std::vector<AbGroup> abelian_group_types(const Int& order);

// Aut(A) for a finite abelian group, as a multiplication table plus the
// acting matrices; element 0 is the identity.
struct AutGroup {
    GroupPtr group;
    std::vector<IntMat> matrices;
};
AutGroup automorphism_group(const AbGroup& a);

struct SearchLimits {
    int max_order = 12;
    int threads = 1;  // partitioned by (module type, action); output order is canonical regardless
};

// every I-datum on g0: all module types of matching order, all actions,
// all bijective cocycles; deterministic order, deduplicated
std::vector<IDatum> search_iyb(const GroupPtr& g0, const SearchLimits& limits = {});

// datum on the semidirect product kernel x| G0 from a datum on G0 and an
// abelian module for it; the new module is kernel + A and the new cocycle
// is (n, g) -> (n, pi0(g))
struct SdpResult {
    IDatum datum;
    std::shared_ptr<ExtensionGroup> group_model;  // the split pair model
    ModuleExtension split_ext;
};
SdpResult sdp_iyb(const IDatum& d, const GModule& kernel);

// iterated semidirect products; each stage builds its module over the
// group constructed so far
using StageModule = std::function<GModule(const GroupPtr& built)>;
struct TowerResult {
    IDatum datum;
    bool coprime = true;  // stage orders pairwise coprime (callers' Sylow reading)
};
TowerResult a_type_tower(const std::vector<StageModule>& stages);

// whether [beta] lies in the image of the fixed-coefficient classes
bool is_invariant_class(const Cocycle2& beta);

// module extension 0 -> kernel -> middle -> G0 -> 0 of G0-modules (G0
// abelian, acting trivially on itself) whose splice with the identity
// cocycle is cohomologous to beta; complete search, nullopt when no such
// extension exists
std::optional<ModuleExtension> invariant_preimage(const Cocycle2& beta);

// combined pipeline for a finite group with abelian normal subgroup and
// abelian quotient; returns the certified datum or nullopt
struct MetabelianOptions {
    bool skip_invariance_check = false;
};
std::optional<IDatum> metabelian_datum(const GroupPtr& g, const std::vector<int>& g1,
                                       const MetabelianOptions& opts = {});

}  // namespace iyb
