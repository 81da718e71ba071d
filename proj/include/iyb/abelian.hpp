// Finitely generated abelian groups in invariant-factor normal form,
// their elements and homomorphisms, affine solving with values in such a
// group, and exhaustive homomorphism enumeration into finite targets.
#pragma once

#include "iyb/zmat.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace iyb {

// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each di >= 2.
// Coordinates: free ones first, then the torsion ones.
struct AbGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    AbGroup() = default;
    AbGroup(int free, std::vector<Int> tor);

    static AbGroup zn(int n) { return AbGroup(n, {}); }
    static AbGroup cyclic(const Int& d);
    static AbGroup direct_sum(const AbGroup& a, const AbGroup& b);  // renormalized invariant factors
    static AbGroup from_elementary(const std::vector<Int>& prime_powers);

    int coords() const { return free_rank + static_cast<int>(torsion.size()); }
    bool finite() const { return free_rank == 0; }
    Int order() const;     // finite groups only
    Int exponent() const;  // finite groups only; 1 for the trivial group
    bool trivial() const { return coords() == 0; }

    // modulus per coordinate: 0 for a free coordinate, di for a torsion one
    std::vector<Int> moduli() const;

    bool operator==(const AbGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    bool operator!=(const AbGroup& o) const { return !(*this == o); }
};

// Element of an AbGroup; torsion coordinates are kept reduced into [0, di),
// so equality is plain coordinate comparison.
struct AbElem {
    std::vector<Int> coords;

    bool operator==(const AbElem& o) const { return coords == o.coords; }
    bool operator!=(const AbElem& o) const { return coords != o.coords; }
    bool operator<(const AbElem& o) const { return coords < o.coords; }
};

AbElem ab_reduce(const AbGroup& g, std::vector<Int> raw);
AbElem ab_zero(const AbGroup& g);
AbElem ab_add(const AbGroup& g, const AbElem& a, const AbElem& b);
AbElem ab_neg(const AbGroup& g, const AbElem& a);
AbElem ab_sub(const AbGroup& g, const AbElem& a, const AbElem& b);
AbElem ab_scale(const AbGroup& g, const Int& k, const AbElem& a);
AbElem ab_basis(const AbGroup& g, int i);
bool ab_is_zero(const AbElem& a);

// Index <-> element for finite groups; indexing is lexicographic in the
// coordinate vector, so the zero element always has index 0.
long ab_element_count(const AbGroup& g);
AbElem ab_element_at(const AbGroup& g, long index);
long ab_index_of(const AbGroup& g, const AbElem& e);
std::vector<AbElem> ab_elements(const AbGroup& g);

// Homomorphism between AbGroups given by an integer matrix on canonical
// coordinates (columns = images of the source generators).
struct AbHom {
    AbGroup src, dst;
    IntMat mat;

    AbElem apply(const AbElem& x) const { return ab_reduce(dst, mat.mul_vec(x.coords)); }
    bool valid() const;  // columns satisfy the order constraints
};

bool hom_matrices_equal(const AbGroup& src, const AbGroup& dst, const IntMat& m1, const IntMat& m2);

// System A x = b with integer unknowns; the rows of A come in blocks of
// target.coords() rows, one block per entry of b, each block read in the
// target group. Returns the canonical particular solution (SNF
// back-substitution, free parameters zero) plus generators of the
// homogeneous solution lattice.
std::optional<ModularSolution> solve_affine(const IntMat& a, const std::vector<AbElem>& b, const AbGroup& target);

// All homomorphisms src -> dst (dst finite), emitted exactly once each,
// lexicographically in the tuple of generator-image coordinates.
// Restartable stream.
class HomStream {
public:
    HomStream(AbGroup src, AbGroup dst);
    std::optional<AbHom> next();
    void reset();
    Int count() const;

private:
    AbGroup src_, dst_;
    std::vector<std::vector<AbElem>> candidates_;  // per source generator
    std::vector<size_t> odo_;
    bool done_;
};

std::vector<AbHom> enumerate_homs(const AbGroup& src, const AbGroup& dst);

// Subgroup generated by some elements, in canonical form, together with
// its inclusion. Deterministic: same generated subgroup, same result.
struct AbSubgroup {
    AbGroup sub;
    AbHom incl;  // sub -> ambient
};
AbSubgroup subgroup_from_generators(const AbGroup& ambient, const std::vector<AbElem>& gens);

// Quotient of Z^n by the lattice spanned by the columns of `basis`.
struct LatticeQuotient {
    AbGroup quo;
    IntMat u;                 // SNF row transform of the basis matrix
    std::vector<int> kept;    // positions of the surviving invariant factors / free slots
    std::vector<Int> divisors;  // full diagonal (padded with 0 for free slots)

    AbElem project(const std::vector<Int>& v) const;
    std::vector<Int> lift(const AbElem& q) const;  // one preimage of a quotient element
};
LatticeQuotient quotient_by_lattice(int n, const IntMat& basis);

}  // namespace iyb
