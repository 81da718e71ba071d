#include "iyb/cohomology.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace iyb {

bool is_cocycle1(const Cocycle1& c) {
    const FiniteGroup& g = *c.coeffs.group;
    if (c.values.size() != static_cast<size_t>(g.order())) throw std::invalid_argument("is_cocycle1: incomplete table");
    if (!ab_is_zero(c.values[0])) return false;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            AbElem rhs = ab_add(c.coeffs.base, c.values[a], c.coeffs.act(a, c.values[b]));
            if (!(c.values[g.mul(a, b)] == rhs)) return false;
        }
    return true;
}

bool is_bijective(const Cocycle1& c) {
    if (!c.coeffs.base.finite()) throw std::invalid_argument("is_bijective: infinite coefficients");
    if (Int(c.coeffs.group->order()) != c.coeffs.base.order()) return false;
    std::set<AbElem> seen(c.values.begin(), c.values.end());
    return seen.size() == c.values.size();
}

Cocycle1 twist_by_coboundary(const Cocycle1& c, const AbElem& shift) {
    Cocycle1 out{c.coeffs, {}};
    for (int g = 0; g < c.coeffs.group->order(); ++g)
        out.values.push_back(ab_sub(c.coeffs.base, ab_add(c.coeffs.base, c.values[g], c.coeffs.act(g, shift)), shift));
    return out;
}

bool is_cocycle1(const GCocycle1& c) {
    const FiniteGroup& g = *c.target.actor;
    const FiniteGroup& t = *c.target.base;
    if (c.values.size() != static_cast<size_t>(g.order())) throw std::invalid_argument("is_cocycle1: incomplete table");
    if (c.values[0] != 0) return false;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (c.values[g.mul(a, b)] != t.mul(c.values[a], c.target.act(a, c.values[b]))) return false;
    return true;
}

bool is_bijective(const GCocycle1& c) {
    if (c.target.actor->order() != c.target.base->order()) return false;
    std::set<int> seen(c.values.begin(), c.values.end());
    return seen.size() == c.values.size();
}

GCocycle1 twist_by_coboundary(const GCocycle1& c, int shift) {
    const FiniteGroup& t = *c.target.base;
    GCocycle1 out{c.target, {}};
    for (int g = 0; g < c.target.actor->order(); ++g)
        out.values.push_back(t.mul(t.mul(t.inv(shift), c.values[g]), c.target.act(g, shift)));
    return out;
}

bool same_pointed_class(const GCocycle1& a, const GCocycle1& b) {
    if (!(*a.target.base == *b.target.base) || !(*a.target.actor == *b.target.actor)) return false;
    for (int c = 0; c < a.target.base->order(); ++c)
        if (twist_by_coboundary(a, c).values == b.values) return true;
    return false;
}

Cocycle2 zero_cocycle2(const GModule& m) {
    size_t q = m.group->order();
    return Cocycle2{m, std::vector<AbElem>(q * q, ab_zero(m.base))};
}

bool is_normalized2(const Cocycle2& c) {
    int q = c.coeffs.group->order();
    for (int g = 0; g < q; ++g)
        if (!ab_is_zero(c.value(0, g)) || !ab_is_zero(c.value(g, 0))) return false;
    return true;
}

bool is_cocycle2(const Cocycle2& c) {
    const FiniteGroup& g = *c.coeffs.group;
    if (c.values.size() != static_cast<size_t>(g.order()) * g.order())
        throw std::invalid_argument("is_cocycle2: incomplete table");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int d = 0; d < g.order(); ++d) {
                AbElem lhs = c.coeffs.act(a, c.value(b, d));
                lhs = ab_sub(c.coeffs.base, lhs, c.value(g.mul(a, b), d));
                lhs = ab_add(c.coeffs.base, lhs, c.value(a, g.mul(b, d)));
                lhs = ab_sub(c.coeffs.base, lhs, c.value(a, b));
                if (!ab_is_zero(lhs)) return false;
            }
    return true;
}

Cocycle2 cocycle2_sub(const Cocycle2& a, const Cocycle2& b) {
    if (!a.coeffs.same_module(b.coeffs)) throw std::invalid_argument("cocycle2_sub: coefficient mismatch");
    Cocycle2 out{a.coeffs, {}};
    for (size_t i = 0; i < a.values.size(); ++i) out.values.push_back(ab_sub(a.coeffs.base, a.values[i], b.values[i]));
    return out;
}

std::pair<Cocycle2, AbElem> normalize2(const Cocycle2& c) {
    if (!is_cocycle2(c)) throw std::invalid_argument("normalize2: not a cocycle");
    const GModule& m = c.coeffs;
    AbElem shift = ab_neg(m.base, c.value(0, 0));
    std::vector<AbElem> constant(m.group->order(), shift);
    Cocycle2 d = coboundary2(m, constant);
    Cocycle2 out{m, {}};
    for (size_t i = 0; i < c.values.size(); ++i) out.values.push_back(ab_add(m.base, c.values[i], d.values[i]));
    if (!is_normalized2(out)) throw std::logic_error("normalize2: shift failed to normalize");
    return {std::move(out), std::move(shift)};
}

Cocycle2 coboundary2(const GModule& m, const std::vector<AbElem>& f) {
    const FiniteGroup& g = *m.group;
    Cocycle2 out = zero_cocycle2(m);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            AbElem v = ab_add(m.base, f[a], m.act(a, f[b]));
            out.value(a, b) = ab_sub(m.base, v, f[g.mul(a, b)]);
        }
    return out;
}

std::optional<std::vector<AbElem>> cohomologous2(const Cocycle2& c1, const Cocycle2& c2) {
    if (!c1.coeffs.same_module(c2.coeffs)) throw std::invalid_argument("cohomologous2: coefficient mismatch");
    if (!is_normalized2(c1) || !is_normalized2(c2)) throw std::invalid_argument("cohomologous2: cocycles not normalized");
    const GModule& m = c1.coeffs;
    const FiniteGroup& g = *m.group;
    const int q = g.order();
    const int w = m.base.coords();

    // unknowns: f(g) for g != 1, laid out in blocks of w columns
    const int cols = (q - 1) * w;
    auto col0 = [&](int gg) { return (gg - 1) * w; };

    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) pairs.push_back({a, b});

    IntMat a((int)pairs.size() * w, cols);
    std::vector<AbElem> rhs;
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto [x, y] = pairs[p];
        int row0 = static_cast<int>(p) * w;
        for (int i = 0; i < w; ++i) a.at(row0 + i, col0(x) + i) += 1;
        const IntMat& mx = m.mat(x);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) a.at(row0 + i, col0(y) + j) += mx.at(i, j);
        int xy = g.mul(x, y);
        if (xy != 0)
            for (int i = 0; i < w; ++i) a.at(row0 + i, col0(xy) + i) -= 1;
        rhs.push_back(ab_sub(m.base, c2.value(x, y), c1.value(x, y)));
    }

    auto sol = solve_affine(a, rhs, m.base);
    if (!sol) return std::nullopt;
    std::vector<AbElem> f(q, ab_zero(m.base));
    for (int gg = 1; gg < q; ++gg) {
        std::vector<Int> c(sol->particular.begin() + col0(gg), sol->particular.begin() + col0(gg) + w);
        f[gg] = ab_reduce(m.base, std::move(c));
    }
    // the solver answered the reindexed system; confirm on the original
    Cocycle2 check = coboundary2(m, f);
    Cocycle2 want = cocycle2_sub(c2, c1);
    for (size_t i = 0; i < check.values.size(); ++i)
        if (!(check.values[i] == want.values[i])) throw std::logic_error("cohomologous2: solver postcondition failed");
    return f;
}

bool CohClass2::is_trivial() const {
    return cohomologous2(zero_cocycle2(rep.coeffs), rep).has_value();
}

bool CohClass2::same_class(const CohClass2& o) const { return cohomologous2(rep, o.rep).has_value(); }
bool CohClass2::same_class(const Cocycle2& o) const { return cohomologous2(rep, o).has_value(); }

Cocycle2 transgression_rep(const GModule& coeffs, const std::vector<int>& beta_raw,
                           const std::function<AbElem(int)>& pi1) {
    const int q = coeffs.group->order();
    if (beta_raw.size() != static_cast<size_t>(q) * q) throw std::invalid_argument("transgression_rep: table size");
    Cocycle2 out = zero_cocycle2(coeffs);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) out.value(a, b) = ab_neg(coeffs.base, pi1(beta_raw[static_cast<size_t>(a) * q + b]));
    return out;
}

Cocycle1 inflate_cocycle(const GModule& target_over_g, const std::vector<int>& proj, const AbHom& incl,
                         const std::vector<AbElem>& pi2) {
    Cocycle1 out{target_over_g, {}};
    for (size_t x = 0; x < proj.size(); ++x) out.values.push_back(incl.apply(pi2[proj[x]]));
    return out;
}

namespace {

// homogeneous solution tables of a linear cocycle system, closed under
// addition; used by both z1 and z2 enumeration
std::vector<std::vector<AbElem>> closure_of_tables(const AbGroup& base, int slots,
                                                   const std::vector<std::vector<Int>>& gens, int width, size_t cap) {
    auto to_table = [&](const std::vector<Int>& raw) {
        std::vector<AbElem> t;
        for (int s = 0; s < slots; ++s) {
            std::vector<Int> c(raw.begin() + static_cast<long>(s) * width, raw.begin() + (static_cast<long>(s) + 1) * width);
            t.push_back(ab_reduce(base, std::move(c)));
        }
        return t;
    };
    std::vector<AbElem> zero_table(slots, ab_zero(base));
    std::set<std::vector<AbElem>> seen{zero_table};
    std::vector<std::vector<AbElem>> frontier{zero_table};
    std::vector<std::vector<AbElem>> gen_tables;
    for (const auto& g : gens) gen_tables.push_back(to_table(g));
    for (size_t i = 0; i < frontier.size(); ++i)
        for (const auto& g : gen_tables) {
            std::vector<AbElem> next(slots, ab_zero(base));
            for (int s = 0; s < slots; ++s) next[s] = ab_add(base, frontier[i][s], g[s]);
            if (seen.size() > cap) throw std::logic_error("cocycle enumeration exceeds cap");
            if (seen.insert(next).second) frontier.push_back(next);
        }
    return std::vector<std::vector<AbElem>>(seen.begin(), seen.end());
}

}  // namespace

std::vector<std::vector<AbElem>> z1_enumerate(const GModule& m) {
    if (!m.base.finite()) throw std::invalid_argument("z1_enumerate: infinite coefficients");
    const FiniteGroup& g = *m.group;
    const int q = g.order();
    const int w = m.base.coords();
    if (q == 1) return {{ab_zero(m.base)}};

    const int cols = (q - 1) * w;
    auto col0 = [&](int gg) { return (gg - 1) * w; };
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) pairs.push_back({a, b});
    IntMat a((int)pairs.size() * w, cols);
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto [x, y] = pairs[p];
        int row0 = static_cast<int>(p) * w;
        for (int i = 0; i < w; ++i) a.at(row0 + i, col0(x) + i) += 1;
        const IntMat& mx = m.mat(x);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) a.at(row0 + i, col0(y) + j) += mx.at(i, j);
        int xy = g.mul(x, y);
        if (xy != 0)
            for (int i = 0; i < w; ++i) a.at(row0 + i, col0(xy) + i) -= 1;
    }
    std::vector<AbElem> zero(pairs.size(), ab_zero(m.base));
    auto sol = solve_affine(a, zero, m.base);
    auto tails = closure_of_tables(m.base, q - 1, sol->homogeneous, w, 200000);
    std::vector<std::vector<AbElem>> out;
    for (auto& t : tails) {
        std::vector<AbElem> full(1, ab_zero(m.base));
        full.insert(full.end(), t.begin(), t.end());
        out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<AbElem>> b1_enumerate(const GModule& m) {
    if (!m.base.finite()) throw std::invalid_argument("b1_enumerate: infinite coefficients");
    std::set<std::vector<AbElem>> seen;
    for (const AbElem& c : ab_elements(m.base)) {
        std::vector<AbElem> t;
        for (int g = 0; g < m.group->order(); ++g) t.push_back(ab_sub(m.base, m.act(g, c), c));
        seen.insert(std::move(t));
    }
    return std::vector<std::vector<AbElem>>(seen.begin(), seen.end());
}

std::vector<Cocycle2> z2_enumerate(const GModule& m, size_t cap) {
    if (!m.base.finite()) throw std::invalid_argument("z2_enumerate: infinite coefficients");
    const FiniteGroup& g = *m.group;
    const int q = g.order();
    const int w = m.base.coords();
    if (q == 1) return {zero_cocycle2(m)};

    // unknowns: c(a,b) for a,b != 1 (normalized); equations: cocycle
    // identity over all triples, identity slots substituted by zero
    const int nslots = (q - 1) * (q - 1);
    auto slot = [&](int a, int b) { return (a - 1) * (q - 1) + (b - 1); };
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) triples.push_back({a, b, c});
    IntMat mat((int)triples.size() * w, nslots * w);
    auto add_term = [&](int row0, int a, int b, const IntMat* act, int sgn) {
        if (a == 0 || b == 0) return;  // normalized: value is zero
        int c0 = slot(a, b) * w;
        if (act) {
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < w; ++j) mat.at(row0 + i, c0 + j) += sgn * act->at(i, j);
        } else {
            for (int i = 0; i < w; ++i) mat.at(row0 + i, c0 + i) += sgn;
        }
    };
    for (size_t t = 0; t < triples.size(); ++t) {
        auto [a, b, c] = triples[t];
        int row0 = static_cast<int>(t) * w;
        add_term(row0, b, c, &m.mat(a), +1);
        add_term(row0, g.mul(a, b), c, nullptr, -1);
        add_term(row0, a, g.mul(b, c), nullptr, +1);
        add_term(row0, a, b, nullptr, -1);
    }
    std::vector<AbElem> zero(triples.size(), ab_zero(m.base));
    auto sol = solve_affine(mat, zero, m.base);
    auto tables = closure_of_tables(m.base, nslots, sol->homogeneous, w, cap);
    std::vector<Cocycle2> out;
    for (const auto& t : tables) {
        Cocycle2 c = zero_cocycle2(m);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) c.value(a, b) = t[slot(a, b)];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_cocycles_to_group(const FiniteGroup& src, const GGroup& target,
                                                          bool bijective_only) {
    if (!(*target.actor == src)) throw std::invalid_argument("enumerate_cocycles_to_group: actor mismatch");
    const FiniteGroup& t = *target.base;
    const int q = src.order();
    std::vector<int> gens = minimal_generators(src);
    const int k = static_cast<int>(gens.size());

    std::vector<std::vector<int>> out;
    std::vector<int> assign(k, 0);

    auto try_fill = [&]() -> std::optional<std::vector<int>> {
        std::vector<int> table(q, -1);
        table[0] = 0;
        std::vector<bool> used(t.order(), false);
        used[0] = true;
        for (int i = 0; i < k; ++i) {
            int g = gens[i], v = assign[i];
            if (table[g] != -1) {
                if (table[g] != v) return std::nullopt;
                continue;
            }
            if (bijective_only && used[v]) return std::nullopt;
            table[g] = v;
            if (bijective_only) used[v] = true;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (int a = 0; a < q; ++a) {
                if (table[a] == -1) continue;
                for (int b = 0; b < q; ++b) {
                    if (table[b] == -1) continue;
                    int ab = src.mul(a, b);
                    int v = t.mul(table[a], target.act(a, table[b]));
                    if (table[ab] == -1) {
                        if (bijective_only && used[v]) return std::nullopt;
                        table[ab] = v;
                        if (bijective_only) used[v] = true;
                        progress = true;
                    } else if (table[ab] != v) {
                        return std::nullopt;
                    }
                }
            }
        }
        for (int a = 0; a < q; ++a)
            if (table[a] == -1) throw std::logic_error("enumerate_cocycles_to_group: generators fail to generate");
        return table;
    };

    for (;;) {
        if (auto table = try_fill()) out.push_back(*table);
        int i = k - 1;
        while (i >= 0 && ++assign[i] == t.order()) assign[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace iyb
