// Groups of I-type over a finite datum: enumeration of the groups lying
// above a datum via equivariant surjections, the infinite pair model
// inside Z^n x| S_n, recovery of the associated finite datum, and the
// derived set-theoretic solution maps with their verification.
#pragma once

#include "iyb/iyb_data.hpp"

namespace iyb {

// infinite group of pairs (v, g), v in abstract kernel coordinates, with
// the bijective projection onto Z^n
struct ITypeGroup {
    IDatum datum;
    std::vector<Perm> embedding;  // faithful, indexed by group id
    LatticeExtension ext;
    Cocycle2 beta;               // spliced representative over ext.kernel_module
    std::vector<AbElem> lambda;  // defect cochain of the lift
    std::shared_ptr<ExtensionGroup> model;

    int rank() const { return ext.theta.source.rank; }
    std::vector<Int> pi(const PairElem& x) const;      // value in Z^n
    PairElem pi_inverse(const std::vector<Int>& m) const;
};

struct TheoremBEntry {
    ModuleSurjection theta;
    LatticeExtension ext;
    Cocycle2 spliced;
    ITypeGroup group;
};

// one entry per equivariant surjection, in surjection order; the lift
// exists by construction because beta is taken to be the splice itself
std::vector<TheoremBEntry> theorem_b_enumerate(const IDatum& d, const std::vector<Perm>& embedding);

// indices of entries grouped by cohomologous spliced classes, first
// occurrence first
std::vector<std::vector<size_t>> collapse_by_class(const std::vector<TheoremBEntry>& entries);

// finite quotient datum of an I-type group: the quotient of Z^n by the
// image of the action kernel, with the induced cocycle
IDatum associated_idatum(const ITypeGroup& g);

// r(x_i, x_j) = (x_left(i,j), x_right(i,j)) on a set of size n
struct SolutionMap {
    int n = 0;
    std::vector<int> left, right;  // n*n tables

    int l(int i, int j) const { return left[static_cast<size_t>(i) * n + j]; }
    int r(int i, int j) const { return right[static_cast<size_t>(i) * n + j]; }
};

struct SolutionReport {
    bool bijective = false;
    bool involutive = false;
    bool nondegenerate = false;
    bool braid = false;
    bool all() const { return bijective && involutive && nondegenerate && braid; }
};

SolutionReport verify_solution(const SolutionMap& r);

// the structure-group recipe; throws when the derived map fails any of
// the solution invariants
SolutionMap derive_solution(const ITypeGroup& g);

}  // namespace iyb
