#include "iyb/manifest.hpp"

#include <algorithm>
#include <sstream>

namespace iyb {

namespace {

struct RawBlock {
    std::string kind, name;
    int line;
    std::vector<std::tuple<std::string, std::string, int>> entries;  // key, value, line

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v, l] : entries)
            if (k == key) return &v;
        return nullptr;
    }
    int line_of(const std::string& key) const {
        for (const auto& [k, v, l] : entries)
            if (k == key) return l;
        return line;
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& s, Int& out) {
    try {
        out = Int(s);
        return true;
    } catch (...) {
        return false;
    }
}

bool parse_int_list(const std::string& s, std::vector<Int>& out) {
    out.clear();
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        Int v;
        if (!parse_int(tok, v)) return false;
        out.push_back(v);
    }
    return true;
}

bool parse_rows(const std::string& s, std::vector<std::vector<Int>>& out) {
    out.clear();
    std::string seg;
    std::istringstream is(s);
    while (std::getline(is, seg, '/')) {
        std::vector<Int> row;
        if (!parse_int_list(seg, row)) return false;
        out.push_back(std::move(row));
    }
    if (out.empty()) out.push_back({});  // empty text = one empty row
    return true;
}

// [[1,2],[3,4]] with arbitrary spacing; [] is the empty matrix
bool parse_matrix(const std::string& text, IntMat& out) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "[]" || s == "[[]]") {
        out = IntMat(0, 0);
        return true;
    }
    if (s.size() < 4 || s.front() != '[' || s.back() != ']') return false;
    std::vector<std::vector<Int>> rows;
    size_t i = 1;
    while (i < s.size() - 1) {
        if (s[i] != '[') return false;
        size_t j = s.find(']', i);
        if (j == std::string::npos) return false;
        std::vector<Int> row;
        std::string body = s.substr(i + 1, j - i - 1);
        if (!body.empty()) {
            std::istringstream is(body);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                Int v;
                if (!parse_int(tok, v)) return false;
                row.push_back(v);
            }
        }
        rows.push_back(std::move(row));
        i = j + 1;
        if (i < s.size() - 1 && s[i] == ',') ++i;
    }
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) return false;
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    out = std::move(m);
    return true;
}

}  // namespace

std::string Manifest::group_name(const GroupPtr& g) const {
    for (const auto& [name, ptr] : groups)
        if (ptr == g || *ptr == *g) return name;
    return "";
}

std::optional<Manifest> parse_manifest(const std::string& text, std::vector<Diagnostic>& diags) {
    std::vector<RawBlock> blocks;
    {
        std::istringstream is(text);
        std::string raw;
        int lineno = 0;
        bool saw_format = false;
        RawBlock* cur = nullptr;
        while (std::getline(is, raw)) {
            ++lineno;
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#') continue;
            if (line.rfind("RESULT ", 0) == 0) continue;
            if (!saw_format) {
                if (line == "format=1") {
                    saw_format = true;
                    continue;
                }
                diags.push_back({lineno, "expected format=1 before any content"});
                return std::nullopt;
            }
            if (line.front() == '[') {
                if (line.back() != ']') {
                    diags.push_back({lineno, "malformed section header"});
                    continue;
                }
                std::istringstream hs(line.substr(1, line.size() - 2));
                std::string kind, name, extra;
                hs >> kind >> name;
                if (kind.empty() || name.empty() || (hs >> extra)) {
                    diags.push_back({lineno, "section header must be [kind name]"});
                    continue;
                }
                blocks.push_back(RawBlock{kind, name, lineno, {}});
                cur = &blocks.back();
                continue;
            }
            size_t eq = line.find('=');
            if (eq == std::string::npos) {
                diags.push_back({lineno, "expected key=value"});
                continue;
            }
            if (!cur) {
                diags.push_back({lineno, "key outside of any section"});
                continue;
            }
            cur->entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno);
        }
    }
    if (!diags.empty()) return std::nullopt;

    Manifest m;
    auto fail = [&](int line, const std::string& msg) { diags.push_back({line, msg}); };
    auto need = [&](const RawBlock& b, const std::string& key) -> const std::string* {
        const std::string* v = b.find(key);
        if (!v) fail(b.line, "[" + b.kind + " " + b.name + "] is missing " + key);
        return v;
    };

    // groups
    for (const RawBlock& b : blocks) {
        if (b.kind != "group") continue;
        const std::string* os = need(b, "order");
        const std::string* ts = need(b, "table");
        if (!os || !ts) continue;
        Int order;
        if (!parse_int(*os, order) || order <= 0 || !order.fits_sint_p()) {
            fail(b.line_of("order"), "bad order");
            continue;
        }
        std::vector<std::vector<Int>> rows;
        if (!parse_rows(*ts, rows)) {
            fail(b.line_of("table"), "unreadable table");
            continue;
        }
        std::vector<int> flat;
        for (const auto& row : rows)
            for (const Int& v : row) flat.push_back(static_cast<int>(v.get_si()));
        if (auto diag = FiniteGroup::check_table(static_cast<int>(order.get_si()), flat)) {
            fail(b.line_of("table"), *diag);
            continue;
        }
        m.groups[b.name] = make_group(static_cast<int>(order.get_si()), std::move(flat));
    }

    // modules and embeddings
    for (const RawBlock& b : blocks) {
        if (b.kind == "module") {
            const std::string* gs = need(b, "group");
            if (!gs) continue;
            auto git = m.groups.find(*gs);
            if (git == m.groups.end()) {
                fail(b.line_of("group"), "unresolved group " + *gs);
                continue;
            }
            GModule mod;
            mod.group = git->second;
            Int fr = 0;
            if (const std::string* f = b.find("free_rank"))
                if (!parse_int(*f, fr) || fr < 0) {
                    fail(b.line_of("free_rank"), "bad free_rank");
                    continue;
                }
            std::vector<Int> tor;
            if (const std::string* t = b.find("torsion"))
                if (!parse_int_list(*t, tor)) {
                    fail(b.line_of("torsion"), "bad torsion list");
                    continue;
                }
            try {
                mod.base = AbGroup(static_cast<int>(fr.get_si()), tor);
            } catch (const std::exception& e) {
                fail(b.line, e.what());
                continue;
            }
            mod.action.assign(mod.group->order(), IntMat::identity(mod.base.coords()));
            bool ok = true;
            for (const auto& [k, v, l] : b.entries) {
                if (k.rfind("action ", 0) != 0) continue;
                Int id;
                if (!parse_int(trim(k.substr(7)), id) || id < 0 || id >= mod.group->order()) {
                    fail(l, "bad action element id");
                    ok = false;
                    continue;
                }
                IntMat mat;
                if (v.size() && v[0] == '(') {
                    auto p = Perm::parse_cycles(v, mod.base.coords());
                    if (!p) {
                        fail(l, "unreadable permutation");
                        ok = false;
                        continue;
                    }
                    mat = IntMat(mod.base.coords(), mod.base.coords());
                    for (int j = 0; j < mod.base.coords(); ++j) mat.at((*p)(j), j) = 1;
                } else if (!parse_matrix(v, mat) || mat.rows() != mod.base.coords() || mat.cols() != mod.base.coords()) {
                    fail(l, "unreadable action matrix");
                    ok = false;
                    continue;
                }
                mod.action[static_cast<int>(id.get_si())] = std::move(mat);
            }
            if (!ok) continue;
            if (auto diag = mod.validate()) {
                fail(b.line, "invalid module: " + *diag);
                continue;
            }
            m.modules[b.name] = std::move(mod);
        } else if (b.kind == "embedding") {
            const std::string* gs = need(b, "group");
            const std::string* ds = need(b, "degree");
            if (!gs || !ds) continue;
            auto git = m.groups.find(*gs);
            if (git == m.groups.end()) {
                fail(b.line_of("group"), "unresolved group " + *gs);
                continue;
            }
            Int deg;
            if (!parse_int(*ds, deg) || deg < 0) {
                fail(b.line_of("degree"), "bad degree");
                continue;
            }
            int n = static_cast<int>(deg.get_si());
            std::vector<Perm> perms(git->second->order(), Perm(n));
            bool ok = true;
            for (const auto& [k, v, l] : b.entries) {
                if (k.rfind("perm ", 0) != 0) continue;
                Int id;
                if (!parse_int(trim(k.substr(5)), id) || id < 0 || id >= git->second->order()) {
                    fail(l, "bad perm element id");
                    ok = false;
                    continue;
                }
                auto p = Perm::parse_cycles(v, n);
                if (!p) {
                    fail(l, "unreadable permutation");
                    ok = false;
                    continue;
                }
                perms[static_cast<int>(id.get_si())] = *p;
            }
            if (!ok) continue;
            if (!is_faithful_perm_rep(*git->second, perms)) {
                fail(b.line, "embedding is not a faithful representation");
                continue;
            }
            m.embeddings[b.name] = std::move(perms);
            m.embedding_group[b.name] = *gs;
        }
    }

    // cocycles
    for (const RawBlock& b : blocks) {
        if (b.kind != "cocycle") continue;
        const std::string* gs = need(b, "group");
        const std::string* ms = need(b, "module");
        const std::string* vs = need(b, "values");
        if (!gs || !ms || !vs) continue;
        auto git = m.groups.find(*gs);
        auto mit = m.modules.find(*ms);
        if (git == m.groups.end()) {
            fail(b.line_of("group"), "unresolved group " + *gs);
            continue;
        }
        if (mit == m.modules.end()) {
            fail(b.line_of("module"), "unresolved module " + *ms);
            continue;
        }
        Int degree = 1;
        if (const std::string* d = b.find("degree"))
            if (!parse_int(*d, degree) || (degree != 1 && degree != 2)) {
                fail(b.line_of("degree"), "degree must be 1 or 2");
                continue;
            }
        const GModule& mod = mit->second;
        if (!(*mod.group == *git->second)) {
            fail(b.line_of("module"), "module is over a different group");
            continue;
        }
        std::vector<std::vector<Int>> rows;
        if (!parse_rows(*vs, rows)) {
            fail(b.line_of("values"), "unreadable values");
            continue;
        }
        size_t expect = degree == 1 ? git->second->order() : static_cast<size_t>(git->second->order()) * git->second->order();
        if (rows.size() != expect) {
            fail(b.line_of("values"), "expected " + std::to_string(expect) + " value rows");
            continue;
        }
        std::vector<AbElem> values;
        bool ok = true;
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != mod.base.coords()) {
                fail(b.line_of("values"), "value row has wrong coordinate count");
                ok = false;
                break;
            }
            values.push_back(ab_reduce(mod.base, std::move(row)));
        }
        if (!ok) continue;
        // the cocycle identity itself is left to the consumers (and to
        // check-cocycle), so that negative instances are expressible
        if (degree == 1)
            m.cocycles1[b.name] = Cocycle1{mod, std::move(values)};
        else
            m.cocycles2[b.name] = Cocycle2{mod, std::move(values)};
    }

    // extensions
    for (const RawBlock& b : blocks) {
        if (b.kind != "extension") continue;
        const std::string* ks = need(b, "kernel");
        const std::string* mids = need(b, "middle");
        const std::string* qs = need(b, "quotient");
        const std::string* is = need(b, "incl");
        const std::string* ps = need(b, "proj");
        if (!ks || !mids || !qs || !is || !ps) continue;
        auto kit = m.modules.find(*ks), midit = m.modules.find(*mids), qit = m.modules.find(*qs);
        if (kit == m.modules.end() || midit == m.modules.end() || qit == m.modules.end()) {
            fail(b.line, "extension references an unresolved module");
            continue;
        }
        IntMat incl, proj;
        if (!parse_matrix(*is, incl)) {
            fail(b.line_of("incl"), "unreadable incl matrix");
            continue;
        }
        if (!parse_matrix(*ps, proj)) {
            fail(b.line_of("proj"), "unreadable proj matrix");
            continue;
        }
        try {
            ModuleExtension e =
                ModuleExtension::from_maps(kit->second, midit->second, qit->second,
                                           AbHom{kit->second.base, midit->second.base, incl},
                                           AbHom{midit->second.base, qit->second.base, proj});
            if (const std::string* ss = b.find("section")) {
                std::vector<std::vector<Int>> rows;
                if (!parse_rows(*ss, rows) || rows.size() != e.section.size()) {
                    fail(b.line_of("section"), "unreadable section");
                    continue;
                }
                for (size_t i = 0; i < rows.size(); ++i) e.section[i] = ab_reduce(e.middle.base, rows[i]);
                if (auto diag = e.validate()) {
                    fail(b.line_of("section"), "invalid section: " + *diag);
                    continue;
                }
            }
            m.extensions[b.name] = std::move(e);
        } catch (const std::exception& ex) {
            fail(b.line, ex.what());
        }
    }

    // data and solutions
    for (const RawBlock& b : blocks) {
        if (b.kind == "datum") {
            const std::string* gs = need(b, "group");
            const std::string* ms = need(b, "module");
            const std::string* cs = need(b, "cocycle");
            if (!gs || !ms || !cs) continue;
            auto git = m.groups.find(*gs);
            auto mit = m.modules.find(*ms);
            auto cit = m.cocycles1.find(*cs);
            if (git == m.groups.end() || mit == m.modules.end() || cit == m.cocycles1.end()) {
                fail(b.line, "datum references an unresolved name");
                continue;
            }
            try {
                m.data[b.name] = IDatum::certify(git->second, mit->second, cit->second);
            } catch (const std::exception& ex) {
                fail(b.line, ex.what());
            }
        } else if (b.kind == "solution") {
            const std::string* ns = need(b, "size");
            const std::string* ls = need(b, "left");
            const std::string* rs = need(b, "right");
            if (!ns || !ls || !rs) continue;
            Int n;
            if (!parse_int(*ns, n) || n < 0) {
                fail(b.line_of("size"), "bad size");
                continue;
            }
            std::vector<std::vector<Int>> lrows, rrows;
            if (!parse_rows(*ls, lrows) || !parse_rows(*rs, rrows)) {
                fail(b.line, "unreadable solution tables");
                continue;
            }
            SolutionMap r;
            r.n = static_cast<int>(n.get_si());
            bool ok = lrows.size() == static_cast<size_t>(r.n) && rrows.size() == static_cast<size_t>(r.n);
            for (const auto* rows : {&lrows, &rrows})
                for (const auto& row : *rows)
                    if (static_cast<int>(row.size()) != r.n) ok = false;
            if (!ok && r.n > 0) {
                fail(b.line, "solution tables must be size x size");
                continue;
            }
            for (int i = 0; i < r.n; ++i)
                for (int j = 0; j < r.n; ++j) {
                    long lv = lrows[i][j].get_si(), rv = rrows[i][j].get_si();
                    if (lv < 0 || lv >= r.n || rv < 0 || rv >= r.n) ok = false;
                    r.left.push_back(static_cast<int>(lv));
                    r.right.push_back(static_cast<int>(rv));
                }
            if (!ok) {
                fail(b.line, "solution entries out of range");
                continue;
            }
            m.solutions[b.name] = std::move(r);
        } else if (b.kind != "group" && b.kind != "module" && b.kind != "embedding" && b.kind != "cocycle" &&
                   b.kind != "extension") {
            fail(b.line, "unknown section kind " + b.kind);
        }
    }

    if (!diags.empty()) return std::nullopt;
    return m;
}

namespace {

std::string rows_str(const std::vector<std::vector<Int>>& rows) {
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) os << "/";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) os << " ";
            os << rows[r][c];
        }
    }
    return os.str();
}

std::string matrix_str(const IntMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return "[]";
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string emit_group(const std::string& name, const FiniteGroup& g) {
    std::ostringstream os;
    os << "[group " << name << "]\n";
    os << "order=" << g.order() << "\n";
    std::vector<std::vector<Int>> rows;
    for (int a = 0; a < g.order(); ++a) {
        std::vector<Int> row;
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    os << "table=" << rows_str(rows) << "\n";
    return os.str();
}

std::string emit_module(const std::string& name, const GModule& m, const std::string& group_name) {
    std::ostringstream os;
    os << "[module " << name << "]\n";
    os << "group=" << group_name << "\n";
    os << "free_rank=" << m.base.free_rank << "\n";
    os << "torsion=";
    for (size_t i = 0; i < m.base.torsion.size(); ++i) os << (i ? " " : "") << m.base.torsion[i];
    os << "\n";
    IntMat id = IntMat::identity(m.base.coords());
    for (int g = 1; g < m.group->order(); ++g)
        if (!(m.action[g] == id)) os << "action " << g << "=" << matrix_str(m.action[g]) << "\n";
    return os.str();
}

namespace {

std::string emit_cocycle_impl(const std::string& name, const std::vector<AbElem>& values, int degree,
                              const std::string& group_name, const std::string& module_name) {
    std::ostringstream os;
    os << "[cocycle " << name << "]\n";
    os << "degree=" << degree << "\n";
    os << "group=" << group_name << "\n";
    os << "module=" << module_name << "\n";
    std::vector<std::vector<Int>> rows;
    for (const AbElem& v : values) rows.push_back(v.coords);
    os << "values=" << rows_str(rows) << "\n";
    return os.str();
}

}  // namespace

std::string emit_cocycle1(const std::string& name, const Cocycle1& c, const std::string& group_name,
                          const std::string& module_name) {
    return emit_cocycle_impl(name, c.values, 1, group_name, module_name);
}

std::string emit_cocycle2(const std::string& name, const Cocycle2& c, const std::string& group_name,
                          const std::string& module_name) {
    return emit_cocycle_impl(name, c.values, 2, group_name, module_name);
}

std::string emit_datum(const std::string& name, const std::string& group_name, const std::string& module_name,
                       const std::string& cocycle_name) {
    std::ostringstream os;
    os << "[datum " << name << "]\n";
    os << "group=" << group_name << "\n";
    os << "module=" << module_name << "\n";
    os << "cocycle=" << cocycle_name << "\n";
    return os.str();
}

std::string emit_embedding(const std::string& name, const std::vector<Perm>& perms, const std::string& group_name) {
    std::ostringstream os;
    os << "[embedding " << name << "]\n";
    os << "group=" << group_name << "\n";
    os << "degree=" << (perms.empty() ? 0 : perms[0].degree()) << "\n";
    for (size_t g = 1; g < perms.size(); ++g)
        if (!perms[g].is_identity()) os << "perm " << g << "=" << perms[g].cycle_str() << "\n";
    return os.str();
}

std::string emit_solution(const std::string& name, const SolutionMap& r) {
    std::ostringstream os;
    os << "[solution " << name << "]\n";
    os << "size=" << r.n << "\n";
    std::vector<std::vector<Int>> lrows, rrows;
    for (int i = 0; i < r.n; ++i) {
        std::vector<Int> lr, rr;
        for (int j = 0; j < r.n; ++j) {
            lr.push_back(r.l(i, j));
            rr.push_back(r.r(i, j));
        }
        lrows.push_back(std::move(lr));
        rrows.push_back(std::move(rr));
    }
    os << "left=" << rows_str(lrows) << "\n";
    os << "right=" << rows_str(rrows) << "\n";
    return os.str();
}

}  // namespace iyb
