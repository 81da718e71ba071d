#include "iyb/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace iyb {

namespace {

// invariant factors (ascending divisibility chain) from a multiset of
// prime powers
std::vector<Int> invariant_factors_from_elementary(const std::vector<Int>& prime_powers) {
    std::map<Int, std::vector<Int>> per_prime;  // prime -> powers, descending
    for (const Int& q : prime_powers) {
        Int p = 2, rest = q;
        while (rest > 1) {
            if (rest % p == 0) break;
            p += 1;
        }
        per_prime[p].push_back(q);
    }
    size_t layers = 0;
    for (auto& [p, v] : per_prime) {
        std::sort(v.begin(), v.end(), std::greater<Int>());
        layers = std::max(layers, v.size());
    }
    std::vector<Int> factors(layers, Int(1));
    for (auto& [p, v] : per_prime)
        for (size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<Int> elementary_divisors(const std::vector<Int>& invariant) {
    std::vector<Int> out;
    for (Int d : invariant) {
        Int p = 2;
        while (d > 1) {
            if (d % p == 0) {
                Int q = 1;
                while (d % p == 0) {
                    q *= p;
                    d /= p;
                }
                out.push_back(q);
            } else {
                p += 1;
            }
        }
    }
    return out;
}

}  // namespace

AbGroup::AbGroup(int free, std::vector<Int> tor) : free_rank(free), torsion(std::move(tor)) {
    if (free < 0) throw std::invalid_argument("AbGroup: negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw std::invalid_argument("AbGroup: invariant factor below 2");
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
            throw std::invalid_argument("AbGroup: divisibility chain violated");
    }
}

AbGroup AbGroup::cyclic(const Int& d) {
    if (d == 1) return AbGroup();
    return AbGroup(0, {d});
}

AbGroup AbGroup::direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<Int> elem = elementary_divisors(a.torsion);
    std::vector<Int> eb = elementary_divisors(b.torsion);
    elem.insert(elem.end(), eb.begin(), eb.end());
    return AbGroup(a.free_rank + b.free_rank, invariant_factors_from_elementary(elem));
}

AbGroup AbGroup::from_elementary(const std::vector<Int>& prime_powers) {
    return AbGroup(0, invariant_factors_from_elementary(prime_powers));
}

Int AbGroup::order() const {
    if (!finite()) throw std::logic_error("AbGroup: order of an infinite group");
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

Int AbGroup::exponent() const {
    if (!finite()) throw std::logic_error("AbGroup: exponent of an infinite group");
    return torsion.empty() ? Int(1) : torsion.back();
}

std::vector<Int> AbGroup::moduli() const {
    std::vector<Int> m(coords(), Int(0));
    for (size_t i = 0; i < torsion.size(); ++i) m[free_rank + i] = torsion[i];
    return m;
}

AbElem ab_reduce(const AbGroup& g, std::vector<Int> raw) {
    if (static_cast<int>(raw.size()) != g.coords()) throw std::invalid_argument("ab_reduce: coordinate count mismatch");
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        Int& c = raw[g.free_rank + i];
        c = mod_reduce(c, g.torsion[i]);
    }
    return AbElem{std::move(raw)};
}

AbElem ab_zero(const AbGroup& g) { return AbElem{std::vector<Int>(g.coords(), Int(0))}; }

AbElem ab_add(const AbGroup& g, const AbElem& a, const AbElem& b) {
    std::vector<Int> c(g.coords());
    for (int i = 0; i < g.coords(); ++i) c[i] = a.coords[i] + b.coords[i];
    return ab_reduce(g, std::move(c));
}

AbElem ab_neg(const AbGroup& g, const AbElem& a) {
    std::vector<Int> c(g.coords());
    for (int i = 0; i < g.coords(); ++i) c[i] = -a.coords[i];
    return ab_reduce(g, std::move(c));
}

AbElem ab_sub(const AbGroup& g, const AbElem& a, const AbElem& b) { return ab_add(g, a, ab_neg(g, b)); }

AbElem ab_scale(const AbGroup& g, const Int& k, const AbElem& a) {
    std::vector<Int> c(g.coords());
    for (int i = 0; i < g.coords(); ++i) c[i] = k * a.coords[i];
    return ab_reduce(g, std::move(c));
}

AbElem ab_basis(const AbGroup& g, int i) {
    AbElem e = ab_zero(g);
    e.coords[i] = 1;
    return e;
}

bool ab_is_zero(const AbElem& a) {
    for (const Int& c : a.coords)
        if (c != 0) return false;
    return true;
}

long ab_element_count(const AbGroup& g) {
    if (!g.finite()) throw std::logic_error("ab_element_count: infinite group");
    Int n = g.order();
    if (!n.fits_slong_p()) throw std::logic_error("ab_element_count: group too large");
    return n.get_si();
}

AbElem ab_element_at(const AbGroup& g, long index) {
    if (!g.finite()) throw std::logic_error("ab_element_at: infinite group");
    std::vector<Int> c(g.coords());
    for (int i = g.coords() - 1; i >= 0; --i) {
        long d = g.torsion[i].get_si();
        c[i] = index % d;
        index /= d;
    }
    return AbElem{std::move(c)};
}

long ab_index_of(const AbGroup& g, const AbElem& e) {
    if (!g.finite()) throw std::logic_error("ab_index_of: infinite group");
    long idx = 0;
    for (int i = 0; i < g.coords(); ++i) idx = idx * g.torsion[i].get_si() + e.coords[i].get_si();
    return idx;
}

std::vector<AbElem> ab_elements(const AbGroup& g) {
    long n = ab_element_count(g);
    std::vector<AbElem> out;
    out.reserve(n);
    for (long i = 0; i < n; ++i) out.push_back(ab_element_at(g, i));
    return out;
}

bool AbHom::valid() const {
    if (mat.rows() != dst.coords() || mat.cols() != src.coords()) return false;
    std::vector<Int> dst_mod = dst.moduli();
    // order of source generator j must annihilate its image
    for (int j = 0; j < src.coords(); ++j) {
        if (j < src.free_rank) continue;
        const Int& dj = src.torsion[j - src.free_rank];
        for (int i = 0; i < dst.coords(); ++i) {
            Int v = dj * mat.at(i, j);
            if (dst_mod[i] == 0 ? v != 0 : v % dst_mod[i] != 0) return false;
        }
    }
    return true;
}

bool hom_matrices_equal(const AbGroup& src, const AbGroup& dst, const IntMat& m1, const IntMat& m2) {
    if (m1.rows() != dst.coords() || m2.rows() != dst.coords()) return false;
    if (m1.cols() != src.coords() || m2.cols() != src.coords()) return false;
    std::vector<Int> dst_mod = dst.moduli();
    for (int i = 0; i < dst.coords(); ++i)
        for (int j = 0; j < src.coords(); ++j) {
            Int diff = m1.at(i, j) - m2.at(i, j);
            if (dst_mod[i] == 0 ? diff != 0 : diff % dst_mod[i] != 0) return false;
        }
    return true;
}

std::optional<ModularSolution> solve_affine(const IntMat& a, const std::vector<AbElem>& b, const AbGroup& target) {
    const int m = target.coords();
    if (a.rows() != static_cast<int>(b.size()) * m)
        throw std::invalid_argument("solve_affine: row count does not match b blocks");
    std::vector<Int> mod = target.moduli();
    std::vector<Int> flat, row_mod;
    flat.reserve(a.rows());
    row_mod.reserve(a.rows());
    for (const AbElem& e : b) {
        if (static_cast<int>(e.coords.size()) != m) throw std::invalid_argument("solve_affine: bad element size");
        for (int i = 0; i < m; ++i) {
            flat.push_back(e.coords[i]);
            row_mod.push_back(mod[i]);
        }
    }
    return solve_modular(a, flat, row_mod);
}

HomStream::HomStream(AbGroup src, AbGroup dst) : src_(std::move(src)), dst_(std::move(dst)), done_(false) {
    if (!dst_.finite()) throw std::invalid_argument("HomStream: target must be finite");
    std::vector<AbElem> all = ab_elements(dst_);
    for (int j = 0; j < src_.coords(); ++j) {
        std::vector<AbElem> cand;
        if (j < src_.free_rank) {
            cand = all;
        } else {
            const Int& dj = src_.torsion[j - src_.free_rank];
            for (const AbElem& y : all)
                if (ab_is_zero(ab_scale(dst_, dj, y))) cand.push_back(y);
        }
        candidates_.push_back(std::move(cand));
    }
    odo_.assign(candidates_.size(), 0);
}

void HomStream::reset() {
    odo_.assign(candidates_.size(), 0);
    done_ = false;
}

Int HomStream::count() const {
    Int n = 1;
    for (const auto& c : candidates_) n *= static_cast<long>(c.size());
    return n;
}

std::optional<AbHom> HomStream::next() {
    if (done_) return std::nullopt;
    IntMat mat(dst_.coords(), src_.coords());
    for (size_t j = 0; j < candidates_.size(); ++j)
        for (int i = 0; i < dst_.coords(); ++i) mat.at(i, static_cast<int>(j)) = candidates_[j][odo_[j]].coords[i];
    AbHom h{src_, dst_, std::move(mat)};
    // advance odometer, least significant = last generator
    int j = static_cast<int>(candidates_.size()) - 1;
    while (j >= 0) {
        if (++odo_[j] < candidates_[j].size()) break;
        odo_[j] = 0;
        --j;
    }
    if (j < 0) done_ = true;
    return h;
}

std::vector<AbHom> enumerate_homs(const AbGroup& src, const AbGroup& dst) {
    HomStream s(src, dst);
    std::vector<AbHom> out;
    while (auto h = s.next()) out.push_back(*h);
    return out;
}

AbSubgroup subgroup_from_generators(const AbGroup& ambient, const std::vector<AbElem>& gens) {
    const int m = ambient.coords();
    const int t = static_cast<int>(gens.size());
    IntMat gmat(m, t);
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < m; ++i) gmat.at(i, j) = gens[j].coords[i];

    // relation lattice { c in Z^t : sum c_i g_i = 0 }
    std::vector<Int> zero(m, Int(0));
    auto rel = solve_modular(gmat, zero, ambient.moduli());
    IntMat k(t, static_cast<int>(rel->homogeneous.size()));
    for (size_t j = 0; j < rel->homogeneous.size(); ++j)
        for (int i = 0; i < t; ++i) k.at(i, static_cast<int>(j)) = rel->homogeneous[j][i];

    SmithForm s = smith_normal_form(k);
    std::vector<Int> diag(t, Int(0));
    int nd = std::min(k.rows(), k.cols());
    for (int i = 0; i < nd; ++i) diag[i] = s.d.at(i, i);

    std::vector<int> free_pos, tor_pos;
    for (int i = 0; i < t; ++i) {
        if (diag[i] == 0)
            free_pos.push_back(i);
        else if (diag[i] >= 2)
            tor_pos.push_back(i);
    }
    std::vector<Int> tor;
    for (int i : tor_pos) tor.push_back(diag[i]);
    AbGroup sub(static_cast<int>(free_pos.size()), tor);

    std::vector<int> kept = free_pos;
    kept.insert(kept.end(), tor_pos.begin(), tor_pos.end());

    ExactSolver uinv(s.u);
    IntMat incl(m, sub.coords());
    for (int j = 0; j < sub.coords(); ++j) {
        std::vector<Int> e(t, Int(0));
        e[kept[j]] = 1;
        auto x = uinv.solve(e);
        if (!x) throw std::logic_error("subgroup_from_generators: U not invertible");
        std::vector<Int> img = gmat.mul_vec(*x);
        AbElem red = ab_reduce(ambient, img);
        for (int i = 0; i < m; ++i) incl.at(i, j) = red.coords[i];
    }
    return AbSubgroup{sub, AbHom{sub, ambient, std::move(incl)}};
}

AbElem LatticeQuotient::project(const std::vector<Int>& v) const {
    std::vector<Int> w = u.mul_vec(v);
    std::vector<Int> c;
    c.reserve(kept.size());
    for (int p : kept) c.push_back(w[p]);
    return ab_reduce(quo, std::move(c));
}

std::vector<Int> LatticeQuotient::lift(const AbElem& q) const {
    std::vector<Int> w(u.rows(), Int(0));
    for (size_t j = 0; j < kept.size(); ++j) w[kept[j]] = q.coords[j];
    ExactSolver solver(u);
    auto x = solver.solve(w);
    if (!x) throw std::logic_error("LatticeQuotient::lift: U not invertible");
    return *x;
}

LatticeQuotient quotient_by_lattice(int n, const IntMat& basis) {
    if (basis.rows() != n) throw std::invalid_argument("quotient_by_lattice: basis row count mismatch");
    SmithForm s = smith_normal_form(basis);
    std::vector<Int> diag(n, Int(0));
    int nd = std::min(basis.rows(), basis.cols());
    for (int i = 0; i < nd; ++i) diag[i] = s.d.at(i, i);

    std::vector<int> free_pos, tor_pos;
    for (int i = 0; i < n; ++i) {
        if (diag[i] == 0)
            free_pos.push_back(i);
        else if (diag[i] >= 2)
            tor_pos.push_back(i);
    }
    std::vector<Int> tor;
    for (int i : tor_pos) tor.push_back(diag[i]);

    LatticeQuotient q;
    q.quo = AbGroup(static_cast<int>(free_pos.size()), tor);
    q.u = s.u;
    q.kept = free_pos;
    q.kept.insert(q.kept.end(), tor_pos.begin(), tor_pos.end());
    q.divisors = diag;
    return q;
}

}  // namespace iyb
