#include "iyb/groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace iyb {

FiniteGroup::FiniteGroup(int order, std::vector<int> table) : n_(order), table_(std::move(table)) {
    auto diag = check_table(order, table_);
    if (diag) throw std::invalid_argument("FiniteGroup: " + *diag);
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) inv_[a] = b;
}

std::optional<std::string> FiniteGroup::check_table(int order, const std::vector<int>& table) {
    if (order <= 0) return "order must be positive";
    if (table.size() != static_cast<size_t>(order) * order) return "table size mismatch";
    for (int v : table)
        if (v < 0 || v >= order) return "table entry out of range";
    auto mul = [&](int a, int b) { return table[static_cast<size_t>(a) * order + b]; };
    for (int a = 0; a < order; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) return "element 0 is not an identity";
    }
    for (int a = 0; a < order; ++a) {
        bool has_inv = false;
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) has_inv = true;
        if (!has_inv) return "element " + std::to_string(a) + " has no inverse";
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    return "associativity fails at triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
    return std::nullopt;
}

int FiniteGroup::power(int a, long k) const {
    long ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

long FiniteGroup::element_order(int a) const {
    int x = a;
    long k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupPtr make_group(int order, std::vector<int> table) {
    return std::make_shared<const FiniteGroup>(order, std::move(table));
}

GroupPtr trivial_group() { return make_group(1, {0}); }

GroupPtr cyclic_group(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return make_group(n, std::move(t));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<int> t(static_cast<size_t>(n) * n);
    auto id = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[static_cast<size_t>(id(x1, y1)) * n + id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
    return make_group(n, std::move(t));
}

GroupPtr dihedral_group(int m) {
    // element (e, k) = s^e r^k with id e*m + k
    int n = 2 * m;
    std::vector<int> t(static_cast<size_t>(n) * n);
    auto id = [&](int e, int k) { return e * m + ((k % m + m) % m); };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < m; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < m; ++k2) {
                    int k = (e2 == 1 ? -k1 : k1) + k2;
                    t[static_cast<size_t>(id(e1, k1)) * n + id(e2, k2)] = id((e1 + e2) % 2, k);
                }
    return make_group(n, std::move(t));
}

GroupPtr quaternion_group() {
    // units 0:1 1:i 2:j 3:k, id = unit*2 + (sign < 0)
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : 1;
            int ub = b / 2, sb = b % 2 ? -1 : 1;
            int uc = unit[ua][ub], sc = sa * sb * sign[ua][ub];
            t[static_cast<size_t>(a) * 8 + b] = uc * 2 + (sc < 0 ? 1 : 0);
        }
    return make_group(8, std::move(t));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> seen{0};
    std::vector<int> frontier{0};
    for (int x : gens)
        if (seen.insert(x).second) frontier.push_back(x);
    for (size_t i = 0; i < frontier.size(); ++i)
        for (int x : gens) {
            int y = g.mul(frontier[i], x);
            if (seen.insert(y).second) frontier.push_back(y);
            y = g.mul(x, frontier[i]);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    return std::vector<int>(seen.begin(), seen.end());
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& ids) {
    std::set<int> s(ids.begin(), ids.end());
    if (!s.count(0)) return false;
    for (int a : ids)
        for (int b : ids)
            if (!s.count(g.mul(a, b))) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& ids) {
    if (!is_subgroup(g, ids)) return false;
    std::set<int> s(ids.begin(), ids.end());
    for (int x = 0; x < g.order(); ++x)
        for (int a : ids)
            if (!s.count(g.conj(x, a))) return false;
    return true;
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> out;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b)
            if (g.mul(a, b) != g.mul(b, a)) central = false;
        if (central) out.push_back(a);
    }
    return out;
}

std::vector<int> minimal_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::set<int> have{0};
    for (int x = 1; x < g.order(); ++x) {
        if (have.count(x)) continue;
        gens.push_back(x);
        std::vector<int> cl = subgroup_closure(g, gens);
        have = std::set<int>(cl.begin(), cl.end());
        if (static_cast<int>(have.size()) == g.order()) break;
    }
    return gens;
}

Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup) {
    if (!is_normal(*g, normal_subgroup)) throw std::invalid_argument("quotient: subgroup is not normal");
    int n = g->order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);  // x is minimal in its coset by scan order
        for (int a : normal_subgroup) coset_of[g->mul(x, a)] = c;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int c1 = 0; c1 < q; ++c1)
        for (int c2 = 0; c2 < q; ++c2) table[static_cast<size_t>(c1) * q + c2] = coset_of[g->mul(reps[c1], reps[c2])];
    Quotient out;
    out.group = make_group(q, std::move(table));
    out.proj = std::move(coset_of);
    out.reps = std::move(reps);
    return out;
}

bool is_normalized_transversal(const FiniteGroup& g, const Quotient& q, const std::vector<int>& reps) {
    if (reps.size() != q.reps.size()) return false;
    if (reps[0] != 0) return false;
    for (size_t c = 0; c < reps.size(); ++c) {
        int r = reps[c];
        if (r < 0 || r >= g.order()) return false;
        if (q.proj[r] != static_cast<int>(c)) return false;
    }
    return true;
}

std::vector<int> section_factor_raw(const FiniteGroup& g, const Quotient& q, const std::vector<int>& reps) {
    if (!is_normalized_transversal(g, q, reps))
        throw std::invalid_argument("section_factor_raw: transversal not normalized");
    int m = static_cast<int>(reps.size());
    std::vector<int> beta(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int ab = q.group->mul(a, b);
            beta[static_cast<size_t>(a) * m + b] = g.mul(g.mul(reps[a], reps[b]), g.inv(reps[ab]));
        }
    return beta;
}

int AbelianStructure::elem_of(const AbElem& e) const { return from_index[ab_index_of(structure, e)]; }

AbelianStructure recognize_abelian(const FiniteGroup& g, const std::vector<int>& subgroup_ids) {
    std::vector<int> ids = subgroup_ids;
    std::sort(ids.begin(), ids.end());
    if (!is_subgroup(g, ids)) throw std::invalid_argument("recognize_abelian: not a subgroup");
    int k = static_cast<int>(ids.size());
    std::map<int, int> local;
    for (int i = 0; i < k; ++i) local[ids[i]] = i;
    for (int a : ids)
        for (int b : ids) {
            if (g.mul(a, b) != g.mul(b, a)) throw std::invalid_argument("recognize_abelian: subgroup not abelian");
            if (!local.count(g.mul(a, b))) throw std::invalid_argument("recognize_abelian: not closed");
        }

    // presentation on all members: one relation e_i + e_j - e_{ij} per pair
    IntMat rel(k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int col = i * k + j;
            rel.at(i, col) += 1;
            rel.at(j, col) += 1;
            rel.at(local[g.mul(ids[i], ids[j])], col) -= 1;
        }
    SmithForm s = smith_normal_form(rel);
    std::vector<Int> diag(k, Int(0));
    for (int i = 0; i < std::min(k, rel.cols()); ++i) diag[i] = s.d.at(i, i);
    std::vector<int> kept;
    std::vector<Int> tor;
    for (int i = 0; i < k; ++i) {
        if (diag[i] == 0) throw std::logic_error("recognize_abelian: unexpected free part");
        if (diag[i] >= 2) {
            kept.push_back(i);
            tor.push_back(diag[i]);
        }
    }
    AbelianStructure out;
    out.structure = AbGroup(0, tor);
    if (out.structure.order() != k) throw std::logic_error("recognize_abelian: order mismatch");
    out.members = ids;
    out.to_coords.assign(g.order(), AbElem{});
    for (int i = 0; i < k; ++i) {
        std::vector<Int> c;
        for (int p : kept) c.push_back(s.u.at(p, i));
        out.to_coords[ids[i]] = ab_reduce(out.structure, std::move(c));
    }
    out.from_index.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        long idx = ab_index_of(out.structure, out.to_coords[ids[i]]);
        if (out.from_index[idx] != -1) throw std::logic_error("recognize_abelian: coordinate map not injective");
        out.from_index[idx] = ids[i];
    }
    return out;
}

Perm::Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) throw std::invalid_argument("Perm: not a bijection");
        seen[v] = true;
    }
}

Perm Perm::operator*(const Perm& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> r(degree());
    for (int i = 0; i < degree(); ++i) r[i] = img_[q(i)];
    return Perm(std::move(r));
}

Perm Perm::inverse() const {
    std::vector<int> r(degree());
    for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
    return Perm(std::move(r));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Perm::cycle_str() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        any = true;
        os << "(";
        int j = i;
        bool first = true;
        do {
            seen[j] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = img_[j];
        } while (j != i);
        os << ")";
    }
    return any ? os.str() : "()";
}

std::optional<Perm> Perm::parse_cycles(const std::string& s, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '(') return std::nullopt;
        ++pos;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) return std::nullopt;
            int v = std::stoi(s.substr(start, pos - start)) - 1;
            if (v < 0 || v >= n) return std::nullopt;
            cyc.push_back(v);
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from && cyc.size() > 1) return std::nullopt;  // point reused across cycles
            if (cyc.size() > 1) img[from] = to;
        }
        skip_ws();
    }
    // validate bijection
    std::vector<bool> seen(n, false);
    for (int v : img) {
        if (seen[v]) return std::nullopt;
        seen[v] = true;
    }
    return Perm(std::move(img));
}

PermGroupClosure perm_group_closure(int degree, const std::vector<Perm>& gens) {
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    Perm id(degree);
    seen.insert(id);
    frontier.push_back(id);
    for (size_t i = 0; i < frontier.size(); ++i)
        for (const Perm& g : gens) {
            Perm p = frontier[i] * g;
            if (seen.insert(p).second) frontier.push_back(p);
            Perm q = g * frontier[i];
            if (seen.insert(q).second) frontier.push_back(q);
        }
    std::vector<Perm> elems(seen.begin(), seen.end());  // lex order, identity first
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = index[elems[a] * elems[b]];
    return PermGroupClosure{make_group(n, std::move(table)), std::move(elems)};
}

std::vector<Perm> regular_embedding(const FiniteGroup& g) {
    std::vector<Perm> out;
    for (int a = 0; a < g.order(); ++a) {
        std::vector<int> img(g.order());
        for (int x = 0; x < g.order(); ++x) img[x] = g.mul(a, x);
        out.emplace_back(std::move(img));
    }
    return out;
}

bool is_faithful_perm_rep(const FiniteGroup& g, const std::vector<Perm>& rho) {
    if (rho.size() != static_cast<size_t>(g.order())) return false;
    if (!rho[0].is_identity()) return false;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (!(rho[a] * rho[b] == rho[g.mul(a, b)])) return false;
    for (int a = 1; a < g.order(); ++a)
        if (rho[a].is_identity()) return false;
    return true;
}

}  // namespace iyb
