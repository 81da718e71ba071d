// Finite groups as multiplication tables, permutations and permutation
// groups, subgroups, quotients with canonical transversals, and
// recognition of abelian subgroups in invariant-factor coordinates.
#pragma once

#include "iyb/abelian.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace iyb {

// Multiplication table group; element ids 0..order-1, identity is 0.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(int order, std::vector<int> table);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int power(int a, long k) const;
    long element_order(int a) const;
    bool is_abelian() const;

    const std::vector<int>& table() const { return table_; }
    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

    // nullopt when the table is a group; otherwise a diagnostic naming the
    // violating triple or axiom
    static std::optional<std::string> check_table(int order, const std::vector<int>& table);

private:
    int n_ = 1;
    std::vector<int> table_{0};
    std::vector<int> inv_{0};
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(int order, std::vector<int> table);
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);  // id = a * |B| + b
GroupPtr dihedral_group(int m);                                       // order 2m
GroupPtr quaternion_group();                                          // order 8

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& ids);
bool is_normal(const FiniteGroup& g, const std::vector<int>& ids);
std::vector<int> center(const FiniteGroup& g);
std::vector<int> minimal_generators(const FiniteGroup& g);  // greedy by ascending id

// Quotient of g by a normal subgroup; coset representatives are the
// minimal element ids, cosets numbered by ascending representative (so the
// identity coset is 0 and the transversal is normalized).
struct Quotient {
    GroupPtr group;          // the quotient group
    std::vector<int> proj;   // element id -> coset id
    std::vector<int> reps;   // coset id -> canonical representative
};
Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup);

// Transversal of a quotient: reps[q] with reps[0] = identity.
bool is_normalized_transversal(const FiniteGroup& g, const Quotient& q, const std::vector<int>& reps);

// beta(q1,q2) = t(q1) t(q2) t(q1 q2)^-1, values are ids inside the kernel.
std::vector<int> section_factor_raw(const FiniteGroup& g, const Quotient& q, const std::vector<int>& reps);

// Abelian subgroup in canonical coordinates. to_coords is indexed by
// ambient element id (only meaningful on members), from_coords by the
// lexicographic element index of `structure`.
struct AbelianStructure {
    AbGroup structure;
    std::vector<int> members;    // sorted ids
    std::vector<AbElem> to_coords;  // ambient id -> coords
    std::vector<int> from_index;    // element index in structure -> ambient id
    int elem_of(const AbElem& e) const;
};
AbelianStructure recognize_abelian(const FiniteGroup& g, const std::vector<int>& subgroup_ids);

// Permutations of {0..n-1}; composition (p*q)(i) = p(q(i)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    Perm operator*(const Perm& q) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    bool is_identity() const;

    const std::vector<int>& images() const { return img_; }
    std::string cycle_str() const;                                    // 1-based cycles, "()" for identity
    static std::optional<Perm> parse_cycles(const std::string& s, int n);  // 1-based points

private:
    std::vector<int> img_;
};

// Closure of a generated permutation group as a FiniteGroup; elements
// sorted lexicographically by image vector, which puts the identity first.
struct PermGroupClosure {
    GroupPtr group;
    std::vector<Perm> elements;  // indexed by group id
};
PermGroupClosure perm_group_closure(int degree, const std::vector<Perm>& gens);

// Left regular representation g -> (x -> g x).
std::vector<Perm> regular_embedding(const FiniteGroup& g);

// checks hom property against the table and injectivity
bool is_faithful_perm_rep(const FiniteGroup& g, const std::vector<Perm>& rho);

}  // namespace iyb
