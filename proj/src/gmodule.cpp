#include "iyb/gmodule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace iyb {

GModule GModule::trivial(GroupPtr g, AbGroup base) {
    GModule m;
    m.group = std::move(g);
    int c = base.coords();
    m.base = std::move(base);
    m.action.assign(m.group->order(), IntMat::identity(c));
    return m;
}

bool GModule::trivial_action() const {
    for (const IntMat& a : action)
        if (!hom_matrices_equal(base, base, a, IntMat::identity(base.coords()))) return false;
    return true;
}

std::optional<std::string> GModule::validate() const {
    if (!group) return "module has no acting group";
    if (action.size() != static_cast<size_t>(group->order())) return "one action matrix per group element required";
    int c = base.coords();
    for (const IntMat& a : action)
        if (a.rows() != c || a.cols() != c) return "action matrix has wrong shape";
    for (int g = 0; g < group->order(); ++g)
        if (!AbHom{base, base, action[g]}.valid()) return "action matrix " + std::to_string(g) + " is not a hom";
    if (!hom_matrices_equal(base, base, action[0], IntMat::identity(c))) return "identity must act as identity";
    for (int g = 0; g < group->order(); ++g)
        for (int h = 0; h < group->order(); ++h)
            if (!hom_matrices_equal(base, base, action[g] * action[h], action[group->mul(g, h)]))
                return "action is not a homomorphism at (" + std::to_string(g) + "," + std::to_string(h) + ")";
    return std::nullopt;
}

bool GModule::same_module(const GModule& o) const {
    if (!(base == o.base)) return false;
    if (group->order() != o.group->order() || !(*group == *o.group)) return false;
    for (int g = 0; g < group->order(); ++g)
        if (!hom_matrices_equal(base, base, action[g], o.action[g])) return false;
    return true;
}

GModuleSum direct_sum_modules(const GModule& a, const GModule& b) {
    if (!(*a.group == *b.group)) throw std::invalid_argument("direct_sum_modules: different acting groups");
    const int ca = a.base.coords(), cb = b.base.coords();
    const int n = ca + cb;

    // concatenated presentation Z^n modulo the diagonal relation lattice,
    // then pass to the canonical invariant-factor form of the quotient
    std::vector<std::pair<int, Int>> relations;  // (position, modulus)
    for (size_t i = 0; i < a.base.torsion.size(); ++i) relations.push_back({a.base.free_rank + (int)i, a.base.torsion[i]});
    for (size_t i = 0; i < b.base.torsion.size(); ++i)
        relations.push_back({ca + b.base.free_rank + (int)i, b.base.torsion[i]});
    IntMat rel(n, static_cast<int>(relations.size()));
    for (size_t k = 0; k < relations.size(); ++k) rel.at(relations[k].first, static_cast<int>(k)) = relations[k].second;
    LatticeQuotient q = quotient_by_lattice(n, rel);
    const int cc = q.quo.coords();

    IntMat proj_mat(cc, n);  // canonical coords of a concatenated vector
    for (int r = 0; r < cc; ++r)
        for (int c = 0; c < n; ++c) proj_mat.at(r, c) = q.u.at(q.kept[r], c);
    IntMat lift_mat(n, cc);  // one concatenated preimage per canonical generator
    for (int j = 0; j < cc; ++j) {
        std::vector<Int> l = q.lift(ab_basis(q.quo, j));
        for (int i = 0; i < n; ++i) lift_mat.at(i, j) = l[i];
    }

    GModuleSum out;
    out.sum.group = a.group;
    out.sum.base = q.quo;
    for (int g = 0; g < a.group->order(); ++g) {
        IntMat diag(n, n);
        for (int i = 0; i < ca; ++i)
            for (int j = 0; j < ca; ++j) diag.at(i, j) = a.action[g].at(i, j);
        for (int i = 0; i < cb; ++i)
            for (int j = 0; j < cb; ++j) diag.at(ca + i, ca + j) = b.action[g].at(i, j);
        out.sum.action.push_back(proj_mat * diag * lift_mat);
    }
    IntMat ea(n, ca), eb(n, cb);
    for (int i = 0; i < ca; ++i) ea.at(i, i) = 1;
    for (int i = 0; i < cb; ++i) eb.at(ca + i, i) = 1;
    out.incl_left = AbHom{a.base, q.quo, proj_mat * ea};
    out.incl_right = AbHom{b.base, q.quo, proj_mat * eb};
    IntMat pa(ca, cc), pb(cb, cc);
    for (int i = 0; i < ca; ++i)
        for (int j = 0; j < cc; ++j) pa.at(i, j) = lift_mat.at(i, j);
    for (int i = 0; i < cb; ++i)
        for (int j = 0; j < cc; ++j) pb.at(i, j) = lift_mat.at(ca + i, j);
    out.proj_left = AbHom{q.quo, a.base, std::move(pa)};
    out.proj_right = AbHom{q.quo, b.base, std::move(pb)};
    return out;
}

GGroup GGroup::trivial(GroupPtr actor, GroupPtr base) {
    GGroup g;
    g.actor = std::move(actor);
    std::vector<int> id(base->order());
    for (int i = 0; i < base->order(); ++i) id[i] = i;
    g.action.assign(g.actor->order(), id);
    g.base = std::move(base);
    return g;
}

std::optional<std::string> GGroup::validate() const {
    int n = base->order();
    if (action.size() != static_cast<size_t>(actor->order())) return "one table per actor element required";
    for (const auto& t : action) {
        if (t.size() != static_cast<size_t>(n)) return "action table has wrong size";
        std::vector<bool> seen(n, false);
        for (int v : t) {
            if (v < 0 || v >= n || seen[v]) return "action table is not a bijection";
            seen[v] = true;
        }
        if (t[0] != 0) return "action must fix the identity";
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (t[base->mul(x, y)] != base->mul(t[x], t[y])) return "action table is not an automorphism";
    }
    for (int x = 0; x < n; ++x)
        if (action[0][x] != x) return "identity must act as identity";
    for (int g = 0; g < actor->order(); ++g)
        for (int h = 0; h < actor->order(); ++h)
            for (int x = 0; x < n; ++x)
                if (action[g][action[h][x]] != action[actor->mul(g, h)][x]) return "action is not a homomorphism";
    return std::nullopt;
}

ModuleAsGroup module_as_group(const GModule& m) {
    long n = ab_element_count(m.base);
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            table[static_cast<size_t>(i) * n + j] =
                static_cast<int>(ab_index_of(m.base, ab_add(m.base, ab_element_at(m.base, i), ab_element_at(m.base, j))));
    ModuleAsGroup out;
    out.module = &m;
    GGroup g;
    g.actor = m.group;
    g.base = make_group(static_cast<int>(n), std::move(table));
    for (int a = 0; a < m.group->order(); ++a) {
        std::vector<int> t(n);
        for (long i = 0; i < n; ++i) t[i] = static_cast<int>(ab_index_of(m.base, m.act(a, ab_element_at(m.base, i))));
        g.action.push_back(std::move(t));
    }
    out.g = std::move(g);
    return out;
}

GModule PermLattice::as_module() const {
    GModule m;
    m.group = group;
    m.base = AbGroup::zn(rank);
    for (const Perm& p : perms) {
        IntMat pm(rank, rank);
        for (int j = 0; j < rank; ++j) pm.at(p(j), j) = 1;  // column j = e_{p(j)}
        m.action.push_back(std::move(pm));
    }
    return m;
}

std::vector<Int> PermLattice::act(int g, const std::vector<Int>& v) const {
    std::vector<Int> out(rank);
    const Perm& p = perms[g];
    for (int i = 0; i < rank; ++i) out[p(i)] = v[i];
    return out;
}

std::optional<std::string> PermLattice::validate() const {
    if (!is_faithful_perm_rep(*group, perms)) return "permutation action must be a faithful representation";
    for (const Perm& p : perms)
        if (p.degree() != rank) return "permutation degree mismatch";
    return std::nullopt;
}

AbSubgroup invariants_submodule(const GModule& m) {
    const int c = m.base.coords();
    std::vector<int> gens = minimal_generators(*m.group);
    if (gens.empty()) gens.push_back(0);
    IntMat a(static_cast<int>(gens.size()) * c, c);
    for (size_t k = 0; k < gens.size(); ++k) {
        IntMat diff = m.action[gens[k]] - IntMat::identity(c);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) a.at(static_cast<int>(k) * c + i, j) = diff.at(i, j);
    }
    std::vector<AbElem> zero(gens.size(), ab_zero(m.base));
    auto sol = solve_affine(a, zero, m.base);
    std::vector<AbElem> sub_gens;
    for (const auto& h : sol->homogeneous) sub_gens.push_back(ab_reduce(m.base, h));
    // torsion basis vectors also solve the homogeneous system implicitly;
    // include them so the generated subgroup is the full fixed subgroup
    // (solve_affine already accounts for them through the modulus columns)
    return subgroup_from_generators(m.base, sub_gens);
}

std::vector<std::vector<AbElem>> invariant_homs(const FiniteGroup& ambient, const std::vector<int>& subgroup_ids,
                                                const GModule& target,
                                                const std::function<const IntMat&(int)>& action_of) {
    AbelianStructure h = recognize_abelian(ambient, subgroup_ids);
    std::vector<AbHom> homs = enumerate_homs(h.structure, target.base);
    std::vector<std::vector<AbElem>> out;
    for (const AbHom& f : homs) {
        auto value = [&](int n) { return f.apply(h.to_coords[n]); };
        bool inv = true;
        for (int g = 0; g < ambient.order() && inv; ++g)
            for (int n : h.members) {
                int conj = ambient.mul(ambient.mul(ambient.inv(g), n), g);  // g^-1 n g
                AbElem rhs = ab_reduce(target.base, action_of(g).mul_vec(value(conj).coords));
                if (!(value(n) == rhs)) {
                    inv = false;
                    break;
                }
            }
        if (!inv) continue;
        std::vector<AbElem> table(ambient.order(), ab_zero(target.base));
        for (int n : h.members) table[n] = value(n);
        out.push_back(std::move(table));
    }
    return out;
}

std::vector<int> kernel_of_action(const GModule& m) {
    std::vector<int> out;
    IntMat id = IntMat::identity(m.base.coords());
    for (int g = 0; g < m.group->order(); ++g)
        if (hom_matrices_equal(m.base, m.base, m.action[g], id)) out.push_back(g);
    return out;
}

}  // namespace iyb
