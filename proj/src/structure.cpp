#include "iyb/structure.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace iyb {

std::vector<Int> ITypeGroup::pi(const PairElem& x) const {
    const int n = rank();
    std::vector<Int> head(x.c.coords);
    for (int i = 0; i < n; ++i) head[i] += lambda[x.g].coords[i];
    std::vector<Int> out = ext.kernel_basis.mul_vec(head);
    const std::vector<Int>& s = ext.section_of(datum.pi0.value(x.g));
    for (int i = 0; i < n; ++i) out[i] += s[i];
    return out;
}

PairElem ITypeGroup::pi_inverse(const std::vector<Int>& m) const {
    const int n = rank();
    AbElem a = ext.theta.apply(m);
    int g = datum.inverse[ab_index_of(datum.module.base, a)];
    std::vector<Int> head = ext.kernel_basis.mul_vec(lambda[g].coords);
    const std::vector<Int>& s = ext.section_of(datum.pi0.value(g));
    std::vector<Int> v(n);
    for (int i = 0; i < n; ++i) v[i] = m[i] - head[i] - s[i];
    PairElem out{ext.kernel_coords(v), g};
    if (!(pi(out) == m)) throw std::logic_error("pi_inverse: projection round trip failed");
    return out;
}

namespace {

// cocycle identity of the lifted projection on a sample of pairs: all
// generator pairs plus a deterministic pseudorandom ball sample
void check_lift_cocycle(const ITypeGroup& g) {
    const FiniteGroup& g0 = *g.datum.group;
    const int n = g.rank();
    std::vector<PairElem> probes;
    for (int q = 0; q < g0.order(); ++q) {
        probes.push_back(PairElem{ab_zero(g.ext.kernel_module.base), q});
        if (n > 0) {
            AbElem e = ab_zero(g.ext.kernel_module.base);
            e.coords[q % n] = 1;
            probes.push_back(PairElem{e, q});
        }
    }
    std::mt19937 rng(20240 + n);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<int> pick(0, g0.order() - 1);
    for (int t = 0; t < 40; ++t) {
        std::vector<Int> c(n);
        for (auto& x : c) x = coord(rng);
        probes.push_back(PairElem{ab_reduce(g.ext.kernel_module.base, std::move(c)), pick(rng)});
    }
    for (const PairElem& x : probes)
        for (const PairElem& y : probes) {
            std::vector<Int> lhs = g.pi(g.model->mul(x, y));
            std::vector<Int> rhs = g.ext.theta.source.act(x.g, g.pi(y));
            std::vector<Int> px = g.pi(x);
            for (int i = 0; i < n; ++i) rhs[i] += px[i];
            if (lhs != rhs) throw std::logic_error("theorem_b: lifted projection is not a cocycle");
        }
}

}  // namespace

std::vector<TheoremBEntry> theorem_b_enumerate(const IDatum& d, const std::vector<Perm>& embedding) {
    if (!is_faithful_perm_rep(*d.group, embedding))
        throw std::invalid_argument("theorem_b_enumerate: embedding must be a faithful permutation representation");
    PermLattice lattice;
    lattice.group = d.group;
    lattice.rank = embedding.empty() ? 0 : embedding[0].degree();
    lattice.perms = embedding;
    if (auto diag = lattice.validate()) throw std::invalid_argument("theorem_b_enumerate: " + *diag);

    std::vector<TheoremBEntry> out;
    for (ModuleSurjection& theta : enumerate_surjections(lattice, d.module)) {
        TheoremBEntry entry;
        entry.theta = theta;
        entry.ext = LatticeExtension::build(std::move(theta));
        entry.spliced = pointed_coboundary_rep(d.pi0, entry.ext);
        auto lambda = corollary_lift_lattice(entry.spliced, entry.ext, d.pi0);
        if (!lambda) throw std::logic_error("theorem_b: the spliced class must lift");

        ITypeGroup g;
        g.datum = d;
        g.embedding = embedding;
        g.ext = entry.ext;
        g.beta = entry.spliced;
        g.lambda = *lambda;
        g.model = std::make_shared<ExtensionGroup>(entry.ext.kernel_module, entry.spliced);
        check_lift_cocycle(g);
        entry.group = std::move(g);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<std::vector<size_t>> collapse_by_class(const std::vector<TheoremBEntry>& entries) {
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < entries.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            const TheoremBEntry& rep = entries[cls[0]];
            if (rep.spliced.coeffs.same_module(entries[i].spliced.coeffs) &&
                cohomologous2(rep.spliced, entries[i].spliced).has_value()) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

IDatum associated_idatum(const ITypeGroup& g) {
    const int n = g.rank();
    const FiniteGroup& g0 = *g.datum.group;
    // the action kernel is the lattice fiber (the embedding is faithful),
    // and pi maps it onto ker theta; the quotient module is Z^n / ker theta
    LatticeQuotient lq = quotient_by_lattice(n, g.ext.kernel_basis);

    GModule amod;
    amod.group = g.datum.group;
    amod.base = lq.quo;
    const int w = lq.quo.coords();
    for (int gg = 0; gg < g0.order(); ++gg) {
        IntMat m(w, w);
        for (int j = 0; j < w; ++j) {
            std::vector<Int> lifted = lq.lift(ab_basis(lq.quo, j));
            AbElem img = lq.project(g.ext.theta.source.act(gg, lifted));
            for (int i = 0; i < w; ++i) m.at(i, j) = img.coords[i];
        }
        amod.action.push_back(std::move(m));
    }
    if (auto d = amod.validate()) throw std::logic_error("associated_idatum: induced module: " + *d);

    Cocycle1 pi0{amod, {}};
    for (int gg = 0; gg < g0.order(); ++gg) {
        PairElem rep{ab_zero(g.ext.kernel_module.base), gg};
        pi0.values.push_back(lq.project(g.pi(rep)));
    }
    if (!is_cocycle1(pi0)) throw std::logic_error("associated_idatum: induced map is not a cocycle");
    return IDatum::certify(g.datum.group, amod, pi0);
}

SolutionReport verify_solution(const SolutionMap& r) {
    SolutionReport rep;
    const int n = r.n;
    if (n == 0) return SolutionReport{true, true, true, true};

    std::set<std::pair<int, int>> image;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) image.insert({r.l(i, j), r.r(i, j)});
    rep.bijective = static_cast<int>(image.size()) == n * n;

    rep.involutive = true;
    for (int i = 0; i < n && rep.involutive; ++i)
        for (int j = 0; j < n; ++j) {
            int a = r.l(i, j), b = r.r(i, j);
            if (r.l(a, b) != i || r.r(a, b) != j) {
                rep.involutive = false;
                break;
            }
        }

    rep.nondegenerate = true;
    for (int i = 0; i < n && rep.nondegenerate; ++i) {
        std::set<int> row, col;
        for (int j = 0; j < n; ++j) {
            row.insert(r.l(i, j));
            col.insert(r.r(j, i));
        }
        if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) rep.nondegenerate = false;
    }

    rep.braid = true;
    auto r12 = [&](std::array<int, 3> t) { return std::array<int, 3>{r.l(t[0], t[1]), r.r(t[0], t[1]), t[2]}; };
    auto r23 = [&](std::array<int, 3> t) { return std::array<int, 3>{t[0], r.l(t[1], t[2]), r.r(t[1], t[2])}; };
    for (int i = 0; i < n && rep.braid; ++i)
        for (int j = 0; j < n && rep.braid; ++j)
            for (int k = 0; k < n; ++k) {
                std::array<int, 3> t{i, j, k};
                if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
                    rep.braid = false;
                    break;
                }
            }
    return rep;
}

SolutionMap derive_solution(const ITypeGroup& g) {
    const int n = g.rank();
    SolutionMap out;
    out.n = n;
    out.left.assign(static_cast<size_t>(n) * n, 0);
    out.right.assign(static_cast<size_t>(n) * n, 0);

    // Phi(e_i): the permutation component of the preimage of e_i
    std::vector<Perm> phi;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> ei(n, Int(0));
        ei[i] = 1;
        phi.push_back(g.embedding[g.pi_inverse(ei).g]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = phi[i](j);
            out.left[static_cast<size_t>(i) * n + j] = k;
            out.right[static_cast<size_t>(i) * n + j] = phi[k].inverse()(i);
        }
    SolutionReport rep = verify_solution(out);
    if (!rep.all()) throw std::logic_error("derive_solution: derived map violates a solution invariant");
    return out;
}

}  // namespace iyb
