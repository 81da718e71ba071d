#include "iyb/iyb_data.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace iyb {

bool is_iyb_datum(const GroupPtr& g, const GModule& module, const Cocycle1& pi0) {
    if (module.validate().has_value()) throw std::invalid_argument("is_iyb_datum: action is not a module");
    if (!(*module.group == *g)) throw std::invalid_argument("is_iyb_datum: module over the wrong group");
    if (!module.base.finite()) return false;
    if (module.base.order() != g->order()) return false;
    if (!pi0.coeffs.same_module(module)) return false;
    return is_cocycle1(pi0) && is_bijective(pi0);
}

IDatum IDatum::certify(GroupPtr group, GModule module, Cocycle1 pi0) {
    if (!is_iyb_datum(group, module, pi0)) throw std::invalid_argument("IDatum: certification failed");
    IDatum d;
    d.inverse.assign(group->order(), -1);
    for (int x = 0; x < group->order(); ++x) d.inverse[ab_index_of(module.base, pi0.values[x])] = x;
    d.group = std::move(group);
    d.module = std::move(module);
    d.pi0 = std::move(pi0);
    return d;
}

namespace {

void partitions_rec(long rest, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<AbGroup> abelian_group_types(const Int& order) {
    if (order <= 0) throw std::invalid_argument("abelian_group_types: order must be positive");
    std::map<Int, long> fact;
    Int rest = order, p = 2;
    while (rest > 1) {
        if (rest % p == 0) {
            while (rest % p == 0) {
                ++fact[p];
                rest /= p;
            }
        }
        p += 1;
    }
    std::vector<AbGroup> types{AbGroup()};
    for (auto& [prime, e] : fact) {
        std::vector<AbGroup> next;
        for (const AbGroup& t : types)
            for (const auto& part : partitions(e)) {
                std::vector<Int> elem;
                for (const Int& d : t.torsion) {
                    // decompose back to elementary divisors of the partial type
                    Int dd = d, q = 2;
                    while (dd > 1) {
                        if (dd % q == 0) {
                            Int pw = 1;
                            while (dd % q == 0) {
                                pw *= q;
                                dd /= q;
                            }
                            elem.push_back(pw);
                        } else {
                            q += 1;
                        }
                    }
                }
                for (long exp : part) {
                    Int pw = 1;
                    for (long i = 0; i < exp; ++i) pw *= prime;
                    elem.push_back(pw);
                }
                next.push_back(AbGroup::from_elementary(elem));
            }
        types = std::move(next);
    }
    std::sort(types.begin(), types.end(), [](const AbGroup& a, const AbGroup& b) { return a.torsion < b.torsion; });
    types.erase(std::unique(types.begin(), types.end()), types.end());
    return types;
}

namespace {

std::vector<Int> canonical_matrix_key(const AbGroup& a, const IntMat& m) {
    std::vector<Int> key;
    std::vector<Int> mod = a.moduli();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) key.push_back(mod[i] == 0 ? m.at(i, j) : mod_reduce(m.at(i, j), mod[i]));
    return key;
}

}  // namespace

AutGroup automorphism_group(const AbGroup& a) {
    if (!a.finite()) throw std::invalid_argument("automorphism_group: group must be finite");
    const int w = a.coords();
    // candidate entries: column j sends a generator of order d_j, so the
    // entry in row i runs over multiples of d_i / gcd(d_i, d_j)
    std::vector<std::vector<std::vector<Int>>> cand(w, std::vector<std::vector<Int>>(w));
    Int total = 1;
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) {
            Int di = a.torsion[i], dj = a.torsion[j];
            Int step = di / gcd(di, dj);
            for (Int v = 0; v < di; v += step) cand[i][j].push_back(v);
            total *= static_cast<long>(cand[i][j].size());
            if (total > 2000000) throw std::invalid_argument("automorphism_group: endomorphism count too large");
        }

    std::vector<AbElem> elems = ab_elements(a);
    std::vector<IntMat> autos;
    std::vector<size_t> odo(static_cast<size_t>(w) * w, 0);
    bool done = w == 0;
    for (;;) {
        IntMat m(w, w);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) m.at(i, j) = cand[i][j][odo[static_cast<size_t>(i) * w + j]];
        std::set<AbElem> image;
        bool bij = true;
        for (const AbElem& e : elems)
            if (!image.insert(ab_reduce(a, m.mul_vec(e.coords))).second) {
                bij = false;
                break;
            }
        if (bij) autos.push_back(m);
        if (done) break;
        size_t k = odo.size();
        while (k > 0 && ++odo[k - 1] == cand[(k - 1) / w][(k - 1) % w].size()) odo[--k] = 0;
        if (k == 0) break;
    }
    if (w == 0) autos = {IntMat(0, 0)};

    // identity first, the rest lexicographically by reduced entries
    IntMat id = IntMat::identity(w);
    std::vector<Int> id_key = canonical_matrix_key(a, id);
    std::sort(autos.begin(), autos.end(), [&](const IntMat& x, const IntMat& y) {
        return canonical_matrix_key(a, x) < canonical_matrix_key(a, y);
    });
    std::vector<IntMat> ordered{id};
    std::map<std::vector<Int>, int> index{{id_key, 0}};
    for (const IntMat& m : autos) {
        std::vector<Int> key = canonical_matrix_key(a, m);
        if (index.count(key)) continue;
        index[key] = static_cast<int>(ordered.size());
        ordered.push_back(m);
    }
    int n = static_cast<int>(ordered.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<Int> key = canonical_matrix_key(a, ordered[x] * ordered[y]);
            auto it = index.find(key);
            if (it == index.end()) throw std::logic_error("automorphism_group: composition escaped the set");
            table[static_cast<size_t>(x) * n + y] = it->second;
        }
    return AutGroup{make_group(n, std::move(table)), std::move(ordered)};
}

std::vector<IDatum> search_iyb(const GroupPtr& g0, const SearchLimits& limits) {
    if (g0->order() > limits.max_order) {
        int k = static_cast<int>(minimal_generators(*g0).size());
        double est = 0;
        for (const AbGroup& t : abelian_group_types(g0->order())) {
            (void)t;
            double c = 1;
            for (int i = 0; i < k; ++i) c *= g0->order();
            est += c;
        }
        std::ostringstream os;
        os << "search_iyb: order " << g0->order() << " exceeds the bound " << limits.max_order
           << " (roughly " << est << " cocycle candidates per action)";
        throw std::invalid_argument(os.str());
    }
    // jobs: one per (module type, action); results merged in job order so
    // the output does not depend on the thread count
    std::vector<GModule> jobs;
    for (const AbGroup& a : abelian_group_types(g0->order())) {
        AutGroup aut = automorphism_group(a);
        GGroup aut_target = GGroup::trivial(g0, aut.group);
        for (const std::vector<int>& hom : enumerate_cocycles_to_group(*g0, aut_target)) {
            GModule m;
            m.group = g0;
            m.base = a;
            for (int x = 0; x < g0->order(); ++x) m.action.push_back(aut.matrices[hom[x]]);
            if (m.validate().has_value()) throw std::logic_error("search_iyb: built action is invalid");
            jobs.push_back(std::move(m));
        }
    }

    std::vector<std::vector<IDatum>> results(jobs.size());
    auto run_job = [&](size_t j) {
        const GModule& m = jobs[j];
        ModuleAsGroup mag = module_as_group(m);
        for (const std::vector<int>& table : enumerate_cocycles_to_group(*g0, mag.g, true)) {
            Cocycle1 pi0{m, {}};
            for (int id : table) pi0.values.push_back(ab_element_at(m.base, id));
            if (!is_bijective(pi0)) continue;
            results[j].push_back(IDatum::certify(g0, m, pi0));
        }
    };
    int nthreads = std::max(1, limits.threads);
    if (nthreads == 1 || jobs.size() <= 1) {
        for (size_t j = 0; j < jobs.size(); ++j) run_job(j);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1)) run_job(j);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<IDatum> out;
    std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;  // (type+action key, value key)
    for (size_t j = 0; j < jobs.size(); ++j)
        for (IDatum& d : results[j]) {
            std::vector<Int> shape_key = d.module.base.torsion;
            for (int x = 0; x < g0->order(); ++x)
                for (const Int& v : canonical_matrix_key(d.module.base, d.module.action[x])) shape_key.push_back(v);
            std::vector<Int> value_key;
            for (const AbElem& v : d.pi0.values)
                for (const Int& c : v.coords) value_key.push_back(c);
            if (!seen.insert({shape_key, value_key}).second) continue;
            out.push_back(std::move(d));
        }
    return out;
}

SdpResult sdp_iyb(const IDatum& d, const GModule& kernel) {
    if (!(*kernel.group == *d.group)) throw std::invalid_argument("sdp_iyb: kernel must be a module for the datum group");
    if (!kernel.base.finite()) throw std::invalid_argument("sdp_iyb: kernel must be finite");
    if (kernel.validate().has_value()) throw std::invalid_argument("sdp_iyb: kernel is not a module");

    SdpResult out;
    out.split_ext = ModuleExtension::split(kernel, d.module);
    auto lift = corollary_lift(zero_cocycle2(kernel), out.split_ext, d.pi0);
    if (!lift) throw std::logic_error("sdp_iyb: the split lift must exist");
    out.group_model = lift->group;
    out.datum = IDatum::certify(lift->group->group(), lift->pi.coeffs, lift->pi);
    return out;
}

TowerResult a_type_tower(const std::vector<StageModule>& stages) {
    TowerResult out;
    GroupPtr triv = trivial_group();
    GModule trivmod = GModule::trivial(triv, AbGroup());
    Cocycle1 trivpi{trivmod, {ab_zero(trivmod.base)}};
    out.datum = IDatum::certify(triv, trivmod, trivpi);

    std::vector<Int> orders;
    for (const StageModule& stage : stages) {
        GModule m = stage(out.datum.group);
        orders.push_back(m.base.order());
        out.datum = sdp_iyb(out.datum, m).datum;
    }
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = i + 1; j < orders.size(); ++j)
            if (gcd(orders[i], orders[j]) != 1) out.coprime = false;
    return out;
}

bool is_invariant_class(const Cocycle2& beta) {
    const GModule& m = beta.coeffs;
    AbSubgroup inv = invariants_submodule(m);
    GModule s = GModule::trivial(m.group, inv.sub);
    for (const Cocycle2& z : z2_enumerate(s)) {
        Cocycle2 mapped = zero_cocycle2(m);
        for (size_t i = 0; i < z.values.size(); ++i) mapped.values[i] = inv.incl.apply(z.values[i]);
        if (!is_cocycle2(mapped)) throw std::logic_error("is_invariant_class: mapped cocycle invalid");
        if (cohomologous2(mapped, beta).has_value()) return true;
    }
    return false;
}

std::optional<ModuleExtension> invariant_preimage(const Cocycle2& beta) {
    const GModule& kernel = beta.coeffs;
    const GroupPtr g0 = kernel.group;
    if (!g0->is_abelian()) throw std::invalid_argument("invariant_preimage: base group must be abelian");
    if (!is_normalized2(beta) || !is_cocycle2(beta)) throw std::invalid_argument("invariant_preimage: bad cocycle");
    const int q = g0->order();
    const int w = kernel.base.coords();

    // unknown layout: f(a,b), then h_g(a), then lambda(g), nontrivial slots only
    const int nf = (q - 1) * (q - 1);
    auto fslot = [&](int a, int b) { return (a - 1) * (q - 1) + (b - 1); };
    auto hslot = [&](int g, int a) { return nf + (g - 1) * (q - 1) + (a - 1); };
    auto lslot = [&](int g) { return 2 * nf + (g - 1); };
    const int nslots = 2 * nf + (q - 1);

    std::vector<std::vector<std::pair<int, IntMat>>> rows;  // per block: (slot, coefficient matrix)
    std::vector<AbElem> rhs;
    IntMat id = IntMat::identity(w);
    IntMat neg = IntMat::zero(w, w) - id;
    auto add_block = [&](std::vector<std::pair<int, IntMat>> terms, AbElem b) {
        rows.push_back(std::move(terms));
        rhs.push_back(std::move(b));
    };
    auto fterm = [&](int a, int b, const IntMat& coeff) -> std::optional<std::pair<int, IntMat>> {
        if (a == 0 || b == 0) return std::nullopt;
        return std::make_pair(fslot(a, b), coeff);
    };
    auto hterm = [&](int g, int a, const IntMat& coeff) -> std::optional<std::pair<int, IntMat>> {
        if (g == 0 || a == 0) return std::nullopt;
        return std::make_pair(hslot(g, a), coeff);
    };

    // factor-set identity and symmetry of f
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::vector<std::pair<int, IntMat>> terms;
                for (auto t : {fterm(a, b, id), fterm(g0->mul(a, b), c, id), fterm(b, c, neg), fterm(a, g0->mul(b, c), neg)})
                    if (t) terms.push_back(*t);
                add_block(std::move(terms), ab_zero(kernel.base));
            }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) {
            std::vector<std::pair<int, IntMat>> terms{*fterm(a, b, id), *fterm(b, a, neg)};
            add_block(std::move(terms), ab_zero(kernel.base));
        }
    // additivity defect of the action twist
    for (int g = 1; g < q; ++g)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                std::vector<std::pair<int, IntMat>> terms;
                for (auto t : {hterm(g, g0->mul(a, b), id), hterm(g, a, neg), hterm(g, b, neg),
                               fterm(a, b, id - kernel.mat(g))})
                    if (t) terms.push_back(*t);
                add_block(std::move(terms), ab_zero(kernel.base));
            }
    // the twists form an action
    for (int g1 = 0; g1 < q; ++g1)
        for (int g2 = 0; g2 < q; ++g2)
            for (int a = 1; a < q; ++a) {
                std::vector<std::pair<int, IntMat>> terms;
                for (auto t : {hterm(g0->mul(g1, g2), a, id), hterm(g2, a, IntMat::zero(w, w) - kernel.mat(g1)),
                               hterm(g1, a, neg)})
                    if (t) terms.push_back(*t);
                add_block(std::move(terms), ab_zero(kernel.base));
            }
    // splice matches beta up to the coboundary of lambda
    for (int g1 = 1; g1 < q; ++g1)
        for (int g2 = 1; g2 < q; ++g2) {
            std::vector<std::pair<int, IntMat>> terms{*hterm(g1, g2, id), *fterm(g1, g2, id),
                                                      {lslot(g1), neg},
                                                      {lslot(g2), IntMat::zero(w, w) - kernel.mat(g1)}};
            int g12 = g0->mul(g1, g2);
            if (g12 != 0) terms.push_back({lslot(g12), id});
            add_block(std::move(terms), beta.value(g1, g2));
        }

    IntMat a(static_cast<int>(rows.size()) * w, nslots * w);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [slot, coeff] : rows[r])
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < w; ++j) a.at(static_cast<int>(r) * w + i, slot * w + j) += coeff.at(i, j);
    auto sol = solve_affine(a, rhs, kernel.base);
    if (!sol) return std::nullopt;

    auto value_at = [&](int slot) {
        std::vector<Int> c(sol->particular.begin() + static_cast<long>(slot) * w,
                           sol->particular.begin() + static_cast<long>(slot + 1) * w);
        return ab_reduce(kernel.base, std::move(c));
    };
    GModule ftriv = GModule::trivial(g0, kernel.base);
    Cocycle2 f = zero_cocycle2(ftriv);
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y) f.value(x, y) = value_at(fslot(x, y));
    std::vector<std::vector<AbElem>> h(q, std::vector<AbElem>(q, ab_zero(kernel.base)));
    for (int g = 1; g < q; ++g)
        for (int x = 1; x < q; ++x) h[g][x] = value_at(hslot(g, x));

    // middle group: pairs (n, a) with addition twisted by f
    ExtensionGroup pairs = build_extension(ftriv, f);
    GroupPtr ptable = pairs.group();
    if (!ptable->is_abelian()) throw std::logic_error("invariant_preimage: middle group not abelian");
    AbelianStructure ms = recognize_abelian(*ptable, [&] {
        std::vector<int> all(ptable->order());
        for (int i = 0; i < ptable->order(); ++i) all[i] = i;
        return all;
    }());

    auto act_pair = [&](int g, int id) {
        PairElem pe = pairs.elem_of(id);
        AbElem c = ab_add(kernel.base, kernel.act(g, pe.c), h[g][pe.g]);
        return pairs.id_of(PairElem{std::move(c), pe.g});
    };
    GModule middle;
    middle.group = g0;
    middle.base = ms.structure;
    const int wm = middle.base.coords();
    for (int g = 0; g < q; ++g) {
        IntMat mact(wm, wm);
        for (int j = 0; j < wm; ++j) {
            int gen = ms.from_index[ab_index_of(ms.structure, ab_basis(ms.structure, j))];
            AbElem img = ms.to_coords[act_pair(g, gen)];
            for (int i = 0; i < wm; ++i) mact.at(i, j) = img.coords[i];
        }
        middle.action.push_back(std::move(mact));
    }
    if (auto d = middle.validate()) throw std::logic_error("invariant_preimage: middle module: " + *d);

    AbelianStructure qs = recognize_abelian(*g0, [&] {
        std::vector<int> all(q);
        for (int i = 0; i < q; ++i) all[i] = i;
        return all;
    }());
    GModule quot = GModule::trivial(g0, qs.structure);

    IntMat incl(wm, w);
    for (int j = 0; j < w; ++j) {
        AbElem img = ms.to_coords[pairs.id_of(PairElem{ab_basis(kernel.base, j), 0})];
        for (int i = 0; i < wm; ++i) incl.at(i, j) = img.coords[i];
    }
    IntMat proj(qs.structure.coords(), wm);
    for (int j = 0; j < wm; ++j) {
        int gen = ms.from_index[ab_index_of(ms.structure, ab_basis(ms.structure, j))];
        AbElem img = qs.to_coords[pairs.elem_of(gen).g];
        for (int i = 0; i < qs.structure.coords(); ++i) proj.at(i, j) = img.coords[i];
    }
    ModuleExtension ext = ModuleExtension::from_maps(kernel, middle, quot, AbHom{kernel.base, middle.base, incl},
                                                     AbHom{middle.base, qs.structure, proj});

    // the splice with the identity cocycle really is [beta]
    Cocycle1 pi0{quot, {}};
    for (int x = 0; x < q; ++x) pi0.values.push_back(qs.to_coords[x]);
    if (!cohomologous2(pointed_coboundary_rep(pi0, ext), beta).has_value())
        throw std::logic_error("invariant_preimage: spliced class mismatch");
    return ext;
}

std::optional<IDatum> metabelian_datum(const GroupPtr& g, const std::vector<int>& g1, const MetabelianOptions& opts) {
    SectionCocycle sc = section_cocycle(g, g1);  // validates normality and abelianness of g1
    if (!sc.quot.group->is_abelian()) throw std::invalid_argument("metabelian_datum: quotient must be abelian");

    if (!opts.skip_invariance_check) {
        std::set<int> zc;
        for (int z : center(*g)) zc.insert(z);
        bool central = true;
        for (int n : g1)
            if (!zc.count(n)) central = false;
        bool cyclic = false;
        for (int x = 0; x < sc.quot.group->order(); ++x)
            if (sc.quot.group->element_order(x) == sc.quot.group->order()) cyclic = true;
        if (!central && !cyclic && !is_invariant_class(sc.beta)) return std::nullopt;
    }

    auto ext = invariant_preimage(sc.beta);
    if (!ext) return std::nullopt;

    AbelianStructure qs = recognize_abelian(*sc.quot.group, [&] {
        std::vector<int> all(sc.quot.group->order());
        for (int i = 0; i < sc.quot.group->order(); ++i) all[i] = i;
        return all;
    }());
    Cocycle1 pi0{ext->quot, {}};
    for (int x = 0; x < sc.quot.group->order(); ++x) pi0.values.push_back(qs.to_coords[x]);

    auto lift = corollary_lift(sc.beta, *ext, pi0);
    if (!lift) throw std::logic_error("metabelian_datum: lift must exist for a matched class");

    // transport from the pair model back to g through the section isomorphism
    auto pair_id = [&](int x) {
        int qq = sc.quot.proj[x];
        int n = g->mul(x, g->inv(sc.transversal[qq]));
        return lift->group->id_of(PairElem{sc.kernel.to_coords[n], qq});
    };
    GModule mod_over_g;
    mod_over_g.group = g;
    mod_over_g.base = ext->middle.base;
    for (int x = 0; x < g->order(); ++x) mod_over_g.action.push_back(ext->middle.action[sc.quot.proj[x]]);
    Cocycle1 pi{mod_over_g, std::vector<AbElem>(g->order(), ab_zero(mod_over_g.base))};
    for (int x = 0; x < g->order(); ++x) pi.values[x] = lift->pi.values[pair_id(x)];
    if (!is_cocycle1(pi)) throw std::logic_error("metabelian_datum: transported map is not a cocycle");
    return IDatum::certify(g, mod_over_g, pi);
}

}  // namespace iyb
