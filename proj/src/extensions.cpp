#include "iyb/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace iyb {

ExtensionGroup::ExtensionGroup(GModule kernel, Cocycle2 beta) : beta_(std::move(beta)) {
    if (!beta_.coeffs.same_module(kernel)) throw std::invalid_argument("ExtensionGroup: kernel/cocycle mismatch");
    if (auto d = beta_.coeffs.validate()) throw std::invalid_argument("ExtensionGroup: " + *d);
    if (!is_normalized2(beta_)) throw std::invalid_argument("ExtensionGroup: cocycle not normalized");
    if (!is_cocycle2(beta_)) throw std::invalid_argument("ExtensionGroup: cocycle identity fails");
    if (finite()) {
        const int q = beta_.coeffs.group->order();
        const long nk = ab_element_count(beta_.coeffs.base);
        const int n = static_cast<int>(nk) * q;
        std::vector<int> table(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                PairElem p = mul(elem_of(i), elem_of(j));
                table[static_cast<size_t>(i) * n + j] = id_of(p);
            }
        table_ = make_group(n, std::move(table));
        proj_.resize(n);
        for (int i = 0; i < n; ++i) proj_[i] = i % q;
    }
}

PairElem ExtensionGroup::identity() const { return PairElem{ab_zero(beta_.coeffs.base), 0}; }

PairElem ExtensionGroup::mul(const PairElem& x, const PairElem& y) const {
    const GModule& k = beta_.coeffs;
    AbElem c = ab_add(k.base, x.c, k.act(x.g, y.c));
    c = ab_add(k.base, c, beta_.value(x.g, y.g));
    return PairElem{std::move(c), k.group->mul(x.g, y.g)};
}

PairElem ExtensionGroup::inv(const PairElem& x) const {
    const GModule& k = beta_.coeffs;
    int gi = k.group->inv(x.g);
    AbElem c = ab_neg(k.base, ab_add(k.base, k.act(gi, x.c), beta_.value(gi, x.g)));
    return PairElem{std::move(c), gi};
}

GroupPtr ExtensionGroup::group() const {
    if (!table_) throw std::logic_error("ExtensionGroup: no table for an infinite kernel");
    return table_;
}

int ExtensionGroup::id_of(const PairElem& x) const {
    return static_cast<int>(ab_index_of(beta_.coeffs.base, x.c)) * beta_.coeffs.group->order() + x.g;
}

PairElem ExtensionGroup::elem_of(int id) const {
    const int q = beta_.coeffs.group->order();
    return PairElem{ab_element_at(beta_.coeffs.base, id / q), id % q};
}

std::vector<int> ExtensionGroup::kernel_ids() const {
    const int q = beta_.coeffs.group->order();
    std::vector<int> out;
    for (long i = 0; i < ab_element_count(beta_.coeffs.base); ++i) out.push_back(static_cast<int>(i) * q);
    return out;
}

const std::vector<int>& ExtensionGroup::proj() const {
    if (!table_) throw std::logic_error("ExtensionGroup: no id projection for an infinite kernel");
    return proj_;
}

std::vector<int> ExtensionGroup::canonical_reps() const {
    const int q = beta_.coeffs.group->order();
    std::vector<int> out(q);
    for (int g = 0; g < q; ++g) out[g] = g;  // (0, g) has kernel index 0
    return out;
}

std::vector<PairElem> ExtensionGroup::ball(long radius) const {
    const GModule& k = beta_.coeffs;
    const int w = k.base.coords();
    std::vector<PairElem> out;
    std::vector<long> v(w, -radius);
    for (;;) {
        std::vector<Int> c(v.begin(), v.end());
        AbElem e = ab_reduce(k.base, std::move(c));
        for (int g = 0; g < k.group->order(); ++g) out.push_back(PairElem{e, g});
        int i = w - 1;
        while (i >= 0 && ++v[i] > radius) v[i--] = -radius;
        if (i < 0) break;
    }
    return out;
}

ExtensionGroup build_extension(const GModule& kernel, const Cocycle2& beta) { return ExtensionGroup(kernel, beta); }

SectionCocycle section_cocycle(const GroupPtr& g, const std::vector<int>& abelian_normal,
                               const std::vector<int>& transversal) {
    if (!is_normal(*g, abelian_normal)) throw std::invalid_argument("section_cocycle: subgroup not normal");
    SectionCocycle out;
    out.quot = quotient(g, abelian_normal);
    out.transversal = transversal.empty() ? out.quot.reps : transversal;
    out.kernel = recognize_abelian(*g, abelian_normal);
    out.beta_raw = section_factor_raw(*g, out.quot, out.transversal);

    const FiniteGroup& q = *out.quot.group;
    GModule km;
    km.group = out.quot.group;
    km.base = out.kernel.structure;
    const int w = km.base.coords();
    for (int a = 0; a < q.order(); ++a) {
        IntMat m(w, w);
        int rep = out.transversal[a];
        for (int j = 0; j < w; ++j) {
            int gen = out.kernel.from_index[ab_index_of(km.base, ab_basis(km.base, j))];
            AbElem img = out.kernel.to_coords[g->conj(rep, gen)];
            for (int i = 0; i < w; ++i) m.at(i, j) = img.coords[i];
        }
        km.action.push_back(std::move(m));
    }
    if (auto d = km.validate()) throw std::logic_error("section_cocycle: bad conjugation module: " + *d);
    out.kernel_module = km;

    Cocycle2 beta = zero_cocycle2(km);
    for (int a = 0; a < q.order(); ++a)
        for (int b = 0; b < q.order(); ++b)
            beta.value(a, b) = out.kernel.to_coords[out.beta_raw[static_cast<size_t>(a) * q.order() + b]];
    if (!is_cocycle2(beta)) throw std::logic_error("section_cocycle: factor set fails the cocycle identity");
    out.beta = std::move(beta);
    return out;
}

ModuleExtension ModuleExtension::split(const GModule& kernel, const GModule& quot) {
    GModuleSum s = direct_sum_modules(kernel, quot);
    ModuleExtension e;
    e.kernel = kernel;
    e.middle = s.sum;
    e.quot = quot;
    e.incl = s.incl_left;
    e.proj = s.proj_right;
    for (const AbElem& a : ab_elements(quot.base)) e.section.push_back(s.incl_right.apply(a));
    if (auto d = e.validate()) throw std::logic_error("ModuleExtension::split: " + *d);
    return e;
}

ModuleExtension ModuleExtension::from_maps(GModule kernel, GModule middle, GModule quot, AbHom incl, AbHom proj) {
    ModuleExtension e;
    e.kernel = std::move(kernel);
    e.middle = std::move(middle);
    e.quot = std::move(quot);
    e.incl = std::move(incl);
    e.proj = std::move(proj);
    // canonical section: lexicographically minimal preimage per quotient element
    e.section.assign(ab_element_count(e.quot.base), AbElem{});
    std::vector<bool> have(e.section.size(), false);
    for (const AbElem& m : ab_elements(e.middle.base)) {
        long idx = ab_index_of(e.quot.base, e.proj.apply(m));
        if (!have[idx]) {
            e.section[idx] = m;
            have[idx] = true;
        }
    }
    for (bool h : have)
        if (!h) throw std::invalid_argument("ModuleExtension: projection not surjective");
    if (auto d = e.validate()) throw std::invalid_argument("ModuleExtension: " + *d);
    return e;
}

std::optional<std::string> ModuleExtension::validate() const {
    for (const GModule* m : {&kernel, &middle, &quot}) {
        if (auto d = m->validate()) return d;
        if (!m->base.finite()) return "modules must be finite";
    }
    if (!(*kernel.group == *middle.group) || !(*middle.group == *quot.group)) return "acting groups differ";
    if (!incl.valid() || !proj.valid()) return "structure maps are not homomorphisms";
    const int q = kernel.group->order();
    for (int g = 0; g < q; ++g) {
        if (!hom_matrices_equal(kernel.base, middle.base, middle.action[g] * incl.mat, incl.mat * kernel.action[g]))
            return "inclusion not equivariant";
        if (!hom_matrices_equal(middle.base, quot.base, quot.action[g] * proj.mat, proj.mat * middle.action[g]))
            return "projection not equivariant";
    }
    if (kernel.base.order() * quot.base.order() != middle.base.order()) return "orders do not multiply up";
    std::set<AbElem> image, kerproj;
    for (const AbElem& x : ab_elements(kernel.base)) {
        AbElem m = incl.apply(x);
        if (!image.insert(m).second) return "inclusion not injective";
    }
    for (const AbElem& m : ab_elements(middle.base))
        if (ab_is_zero(proj.apply(m))) kerproj.insert(m);
    if (image != kerproj) return "sequence not exact at the middle";
    if (section.size() != static_cast<size_t>(ab_element_count(quot.base))) return "section table size";
    if (!ab_is_zero(section[0])) return "section not normalized";
    for (const AbElem& a : ab_elements(quot.base))
        if (!(proj.apply(section_of(a)) == a)) return "section does not split the projection";
    return std::nullopt;
}

AbElem ModuleExtension::kernel_coords(const AbElem& middle_elem) const {
    auto sol = solve_affine(incl.mat, {middle_elem}, middle.base);
    if (!sol) throw std::logic_error("ModuleExtension: value escapes the kernel");
    return ab_reduce(kernel.base, sol->particular);
}

std::vector<AbElem> ModuleExtension::omega() const {
    std::vector<AbElem> out;
    std::vector<AbElem> elems = ab_elements(quot.base);
    for (const AbElem& a : elems)
        for (const AbElem& b : elems) {
            AbElem defect = ab_sub(middle.base, ab_add(middle.base, section_of(a), section_of(b)),
                                   section_of(ab_add(quot.base, a, b)));
            out.push_back(kernel_coords(defect));
        }
    return out;
}

ModuleExtension ModuleExtension::with_random_section(std::mt19937& rng) const {
    ModuleExtension e = *this;
    std::vector<AbElem> kelems = ab_elements(kernel.base);
    std::uniform_int_distribution<size_t> pick(0, kelems.size() - 1);
    for (size_t i = 1; i < e.section.size(); ++i)
        e.section[i] = ab_add(middle.base, e.section[i], incl.apply(kelems[pick(rng)]));
    return e;
}

Cocycle2 pointed_coboundary_rep(const Cocycle1& pi0, const ModuleExtension& e) {
    if (!pi0.coeffs.same_module(e.quot)) throw std::invalid_argument("pointed_coboundary: pi0 not valued in the quotient");
    const FiniteGroup& g = *e.quot.group;
    Cocycle2 out = zero_cocycle2(e.kernel);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            AbElem v = ab_add(e.middle.base, e.section_of(pi0.value(a)), e.middle.act(a, e.section_of(pi0.value(b))));
            v = ab_sub(e.middle.base, v, e.section_of(pi0.value(g.mul(a, b))));
            out.value(a, b) = e.kernel_coords(v);
        }
    if (!is_cocycle2(out)) throw std::logic_error("pointed_coboundary: output fails the cocycle identity");
    return out;
}

CohClass2 pointed_coboundary(const Cocycle1& pi0, const ModuleExtension& e) {
    return CohClass2{pointed_coboundary_rep(pi0, e)};
}

CohClass2 yoneda_splice(const Cocycle1& pi0, const ModuleExtension& e) { return pointed_coboundary(pi0, e); }

CentralExtension CentralExtension::build(GGroup gamma, std::vector<int> gamma1) {
    CentralExtension e;
    std::sort(gamma1.begin(), gamma1.end());
    e.gamma = std::move(gamma);
    e.gamma1 = std::move(gamma1);
    const FiniteGroup& base = *e.gamma.base;
    e.quot = quotient(e.gamma.base, e.gamma1);
    e.section = e.quot.reps;
    e.g1s = recognize_abelian(base, e.gamma1);

    GGroup g0;
    g0.actor = e.gamma.actor;
    g0.base = e.quot.group;
    for (int g = 0; g < e.gamma.actor->order(); ++g) {
        std::vector<int> t(e.quot.group->order());
        for (int a = 0; a < e.quot.group->order(); ++a) t[a] = e.quot.proj[e.gamma.act(g, e.quot.reps[a])];
        g0.action.push_back(std::move(t));
    }
    e.gamma0 = std::move(g0);

    GModule km;
    km.group = e.gamma.actor;
    km.base = e.g1s.structure;
    const int w = km.base.coords();
    for (int g = 0; g < e.gamma.actor->order(); ++g) {
        IntMat m(w, w);
        for (int j = 0; j < w; ++j) {
            int gen = e.g1s.from_index[ab_index_of(km.base, ab_basis(km.base, j))];
            AbElem img = e.g1s.to_coords[e.gamma.act(g, gen)];
            for (int i = 0; i < w; ++i) m.at(i, j) = img.coords[i];
        }
        km.action.push_back(std::move(m));
    }
    e.gamma1_module = std::move(km);
    if (auto d = e.validate()) throw std::invalid_argument("CentralExtension: " + *d);
    return e;
}

CentralExtension CentralExtension::with_section(std::vector<int> s) const {
    CentralExtension e = *this;
    if (!is_normalized_transversal(*gamma.base, quot, s))
        throw std::invalid_argument("CentralExtension: section must be a normalized transversal");
    e.section = std::move(s);
    return e;
}

CentralExtension CentralExtension::with_random_section(std::mt19937& rng) const {
    std::vector<std::vector<int>> cosets(quot.group->order());
    for (int x = 0; x < gamma.base->order(); ++x) cosets[quot.proj[x]].push_back(x);
    std::vector<int> s(quot.group->order());
    s[0] = 0;
    for (int a = 1; a < quot.group->order(); ++a) {
        std::uniform_int_distribution<size_t> pick(0, cosets[a].size() - 1);
        s[a] = cosets[a][pick(rng)];
    }
    return with_section(std::move(s));
}

std::optional<std::string> CentralExtension::validate() const {
    if (auto d = gamma.validate()) return d;
    const FiniteGroup& base = *gamma.base;
    if (!is_subgroup(base, gamma1)) return "gamma1 is not a subgroup";
    std::set<int> g1set(gamma1.begin(), gamma1.end());
    for (int z : gamma1)
        for (int x = 0; x < base.order(); ++x)
            if (base.mul(z, x) != base.mul(x, z)) return "gamma1 is not central";
    for (int g = 0; g < gamma.actor->order(); ++g)
        for (int z : gamma1)
            if (!g1set.count(gamma.act(g, z))) return "gamma1 is not action-stable";
    if (!is_normalized_transversal(base, quot, section)) return "section is not a normalized transversal";
    if (auto d = gamma0.validate()) return "induced quotient action: " + *d;
    if (auto d = gamma1_module.validate()) return "kernel module: " + *d;
    return std::nullopt;
}

Cocycle2 pointed_coboundary_rep(const std::vector<int>& pi0, const CentralExtension& e) {
    const FiniteGroup& g0 = *e.gamma.actor;
    const FiniteGroup& gamma = *e.gamma.base;
    Cocycle2 out = zero_cocycle2(e.gamma1_module);
    std::set<int> g1set(e.gamma1.begin(), e.gamma1.end());
    for (int a = 0; a < g0.order(); ++a)
        for (int b = 0; b < g0.order(); ++b) {
            int v = gamma.mul(e.section[pi0[a]], e.gamma.act(a, e.section[pi0[b]]));
            v = gamma.mul(v, gamma.inv(e.section[pi0[g0.mul(a, b)]]));
            if (!g1set.count(v)) throw std::logic_error("pointed_coboundary: value escapes the central subgroup");
            out.value(a, b) = e.g1s.to_coords[v];
        }
    if (!is_cocycle2(out)) throw std::logic_error("pointed_coboundary: output fails the cocycle identity");
    return out;
}

AbElem ModuleSurjection::apply(const std::vector<Int>& v) const {
    AbElem out = ab_zero(target.base);
    for (int i = 0; i < source.rank; ++i) out = ab_add(target.base, out, ab_scale(target.base, v[i], images[i]));
    return out;
}

std::optional<std::string> ModuleSurjection::validate() const {
    if (auto d = source.validate()) return d;
    if (auto d = target.validate()) return d;
    if (!(*source.group == *target.group)) return "acting groups differ";
    if (!target.base.finite()) return "target must be finite";
    if (images.size() != static_cast<size_t>(source.rank)) return "one image per basis vector required";
    for (int g = 0; g < source.group->order(); ++g)
        for (int i = 0; i < source.rank; ++i)
            if (!(images[source.perms[g](i)] == target.act(g, images[i]))) return "map not equivariant";
    // image subgroup must be everything
    std::set<AbElem> seen{ab_zero(target.base)};
    std::vector<AbElem> frontier(seen.begin(), seen.end());
    for (size_t i = 0; i < frontier.size(); ++i)
        for (const AbElem& a : images) {
            AbElem nxt = ab_add(target.base, frontier[i], a);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    if (seen.size() != static_cast<size_t>(ab_element_count(target.base))) return "map not surjective";
    return std::nullopt;
}

std::vector<ModuleSurjection> enumerate_surjections(const PermLattice& m, const GModule& a) {
    if (!(*m.group == *a.group)) throw std::invalid_argument("enumerate_surjections: acting groups differ");
    const int n = m.rank;
    const int q = m.group->order();
    // orbits of the permutation action on basis positions
    std::vector<int> orbit_of(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        int o = static_cast<int>(reps.size());
        reps.push_back(i);
        std::vector<int> frontier{i};
        orbit_of[i] = o;
        for (size_t f = 0; f < frontier.size(); ++f)
            for (int g = 0; g < q; ++g) {
                int j = m.perms[g](frontier[f]);
                if (orbit_of[j] < 0) {
                    orbit_of[j] = o;
                    frontier.push_back(j);
                }
            }
    }

    std::vector<AbElem> elems = ab_elements(a.base);
    std::vector<ModuleSurjection> found;
    std::vector<AbElem> images(n, ab_zero(a.base));

    std::function<void(size_t)> dfs = [&](size_t r) {
        if (r == reps.size()) {
            ModuleSurjection s{m, a, images};
            if (!s.validate().has_value()) found.push_back(std::move(s));
            return;
        }
        int pos = reps[r];
        for (const AbElem& v : elems) {
            // propagate across the orbit; bail out on conflicts
            bool ok = true;
            std::vector<int> frontier{pos};
            std::map<int, AbElem> local{{pos, v}};
            for (size_t f = 0; f < frontier.size() && ok; ++f) {
                int i = frontier[f];
                for (int g = 0; g < q; ++g) {
                    int j = m.perms[g](i);
                    AbElem w = a.act(g, local[i]);
                    auto it = local.find(j);
                    if (it == local.end()) {
                        local[j] = w;
                        frontier.push_back(j);
                    } else if (!(it->second == w)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            for (auto& [i, w] : local) images[i] = w;
            dfs(r + 1);
        }
    };
    dfs(0);
    std::sort(found.begin(), found.end(),
              [](const ModuleSurjection& x, const ModuleSurjection& y) { return x.images < y.images; });
    return found;
}

LatticeExtension LatticeExtension::build(ModuleSurjection theta) {
    if (auto d = theta.validate()) throw std::invalid_argument("LatticeExtension: " + *d);
    LatticeExtension e;
    const int n = theta.source.rank;
    const GModule& a = theta.target;

    // kernel lattice of the surjection
    IntMat tmat(a.base.coords(), n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < a.base.coords(); ++i) tmat.at(i, j) = theta.images[j].coords[i];
    auto sol = solve_affine(tmat, {ab_zero(a.base)}, a.base);
    IntMat gens(n, static_cast<int>(sol->homogeneous.size()));
    for (size_t j = 0; j < sol->homogeneous.size(); ++j)
        for (int i = 0; i < n; ++i) gens.at(i, static_cast<int>(j)) = sol->homogeneous[j][i];
    e.kernel_basis = lattice_canonical_basis(gens);
    if (e.kernel_basis.cols() != n) throw std::logic_error("LatticeExtension: kernel not of full rank");
    if (abs(determinant(e.kernel_basis)) != a.base.order())
        throw std::logic_error("LatticeExtension: kernel index mismatch");
    e.solver_ = std::make_shared<ExactSolver>(e.kernel_basis);

    // action in kernel coordinates
    GModule km;
    km.group = theta.source.group;
    km.base = AbGroup::zn(n);
    for (int g = 0; g < theta.source.group->order(); ++g) {
        IntMat pb(n, n);
        for (int j = 0; j < n; ++j) {
            std::vector<Int> col = e.kernel_basis.col(j);
            std::vector<Int> img = theta.source.act(g, col);
            auto x = e.solver_->solve(img);
            if (!x) throw std::logic_error("LatticeExtension: kernel not action-stable");
            for (int i = 0; i < n; ++i) pb.at(i, j) = (*x)[i];
        }
        km.action.push_back(std::move(pb));
    }
    if (auto d = km.validate()) throw std::logic_error("LatticeExtension: kernel module: " + *d);
    e.kernel_module = std::move(km);

    // canonical section: lexicographically minimal preimage inside the
    // fundamental box [0, exponent)^n, found with a reachability sweep
    long expn = a.base.exponent().get_si();
    long na = ab_element_count(a.base);
    std::vector<std::set<long>> reach(n + 1);
    reach[n].insert(ab_index_of(a.base, ab_zero(a.base)));
    for (int k = n - 1; k >= 0; --k)
        for (long idx : reach[k + 1])
            for (long v = 0; v < expn; ++v) {
                AbElem sum = ab_add(a.base, ab_element_at(a.base, idx), ab_scale(a.base, v, theta.images[k]));
                reach[k].insert(ab_index_of(a.base, sum));
            }
    e.section.assign(na, std::vector<Int>(n, Int(0)));
    for (long t = 0; t < na; ++t) {
        AbElem rest = ab_element_at(a.base, t);
        std::vector<Int> pre(n, Int(0));
        for (int k = 0; k < n; ++k) {
            bool placed = false;
            for (long v = 0; v < expn && !placed; ++v) {
                AbElem rem = ab_sub(a.base, rest, ab_scale(a.base, v, theta.images[k]));
                if (reach[k + 1].count(ab_index_of(a.base, rem))) {
                    pre[k] = v;
                    rest = rem;
                    placed = true;
                }
            }
            if (!placed) throw std::logic_error("LatticeExtension: no preimage in the fundamental box");
        }
        e.section[t] = std::move(pre);
    }
    e.theta = std::move(theta);
    return e;
}

AbElem LatticeExtension::kernel_coords(const std::vector<Int>& ambient) const {
    auto x = solver_->solve(ambient);
    if (!x) throw std::logic_error("LatticeExtension: vector is not in the kernel");
    return ab_reduce(kernel_module.base, *x);
}

std::vector<Int> LatticeExtension::ambient_of(const AbElem& k) const { return kernel_basis.mul_vec(k.coords); }

std::vector<AbElem> LatticeExtension::omega() const {
    const AbGroup& a = theta.target.base;
    long na = ab_element_count(a);
    std::vector<AbElem> out;
    for (long i = 0; i < na; ++i)
        for (long j = 0; j < na; ++j) {
            AbElem ai = ab_element_at(a, i), aj = ab_element_at(a, j);
            const std::vector<Int>&si = section[i], &sj = section[j];
            const std::vector<Int>& sij = section[ab_index_of(a, ab_add(a, ai, aj))];
            std::vector<Int> d(si.size());
            for (size_t t = 0; t < d.size(); ++t) d[t] = si[t] + sj[t] - sij[t];
            out.push_back(kernel_coords(d));
        }
    return out;
}

LatticeExtension LatticeExtension::with_random_section(std::mt19937& rng, long radius) const {
    LatticeExtension e = *this;
    std::uniform_int_distribution<long> pick(-radius, radius);
    for (size_t i = 1; i < e.section.size(); ++i) {
        std::vector<Int> shift(e.kernel_basis.cols());
        for (auto& s : shift) s = pick(rng);
        std::vector<Int> amb = e.kernel_basis.mul_vec(shift);
        for (size_t t = 0; t < e.section[i].size(); ++t) e.section[i][t] += amb[t];
    }
    return e;
}

Cocycle2 pointed_coboundary_rep(const Cocycle1& pi0, const LatticeExtension& e) {
    if (!pi0.coeffs.same_module(e.theta.target))
        throw std::invalid_argument("pointed_coboundary: pi0 not valued in the quotient module");
    const FiniteGroup& g = *e.theta.source.group;
    const int n = e.theta.source.rank;
    Cocycle2 out = zero_cocycle2(e.kernel_module);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            const std::vector<Int>& sa = e.section_of(pi0.value(a));
            std::vector<Int> sb = e.theta.source.act(a, e.section_of(pi0.value(b)));
            const std::vector<Int>& sab = e.section_of(pi0.value(g.mul(a, b)));
            std::vector<Int> v(n);
            for (int i = 0; i < n; ++i) v[i] = sa[i] + sb[i] - sab[i];
            out.value(a, b) = e.kernel_coords(v);
        }
    if (!is_cocycle2(out)) throw std::logic_error("pointed_coboundary: output fails the cocycle identity");
    return out;
}

CohClass2 yoneda_splice(const Cocycle1& pi0, const LatticeExtension& e) {
    return CohClass2{pointed_coboundary_rep(pi0, e)};
}

}  // namespace iyb
