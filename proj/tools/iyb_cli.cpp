// Command-line frontend: parses a manifest, dispatches one computation,
// prints deterministic RESULT lines followed by re-parseable blocks.
// Exit codes: 0 affirmative/constructed, 1 negative/not found, 2 input
// error, 3 internal invariant violation.
#include "CLI11.hpp"
#include "iyb/manifest.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace iyb;

namespace {

struct Output {
    std::vector<std::string> results;
    std::vector<std::string> blocks;

    void result(const std::string& key, const std::string& value) { results.push_back(key + "=" + value); }
    void result(const std::string& key, bool v) { result(key, v ? std::string("true") : std::string("false")); }
    void result(const std::string& key, long v) { result(key, std::to_string(v)); }
    void block(std::string text) { blocks.push_back(std::move(text)); }

    void print() const {
        for (const auto& r : results) std::cout << "RESULT " << r << "\n";
        if (!blocks.empty()) {
            std::cout << "format=1\n";
            for (const auto& b : blocks) std::cout << "\n" << b;
        }
    }
};

struct CommonArgs {
    std::string in_path;
    int threads = 1;
    long ball = 3;
};

Manifest load_manifest(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<Diagnostic> diags;
    auto m = parse_manifest(buf.str(), diags);
    if (!m) {
        for (const auto& d : diags) std::cout << "ERROR line " << d.line << ": " << d.message << "\n";
        std::exit(2);
    }
    return std::move(*m);
}

template <typename Map>
const typename Map::mapped_type& named(const Map& map, const std::string& name, const std::string& what) {
    auto it = map.find(name);
    if (it == map.end()) throw std::invalid_argument("no " + what + " named '" + name + "' in the manifest");
    return it->second;
}

std::string images_str(const std::vector<AbElem>& images) {
    std::ostringstream os;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) os << "/";
        for (size_t c = 0; c < images[i].coords.size(); ++c) os << (c ? " " : "") << images[i].coords[c];
    }
    return os.str();
}

// emit a full datum (group, module, cocycle, datum blocks) under a prefix
void emit_full_datum(Output& out, const std::string& prefix, const IDatum& d) {
    out.block(emit_group(prefix + "_group", *d.group));
    out.block(emit_module(prefix + "_mod", d.module, prefix + "_group"));
    out.block(emit_cocycle1(prefix + "_pi0", d.pi0, prefix + "_group", prefix + "_mod"));
    out.block(emit_datum(prefix, prefix + "_group", prefix + "_mod", prefix + "_pi0"));
}

int cmd_check_cocycle(const CommonArgs& args, const std::string& name) {
    Manifest m = load_manifest(args.in_path);
    Output out;
    bool ok;
    if (m.cocycles1.count(name)) {
        ok = is_cocycle1(m.cocycles1.at(name));
    } else if (m.cocycles2.count(name)) {
        const Cocycle2& c = m.cocycles2.at(name);
        ok = is_normalized2(c) && is_cocycle2(c);
    } else {
        throw std::invalid_argument("no cocycle named '" + name + "' in the manifest");
    }
    out.result("cocycle", ok);
    out.print();
    return ok ? 0 : 1;
}

int cmd_is_iyb(const CommonArgs& args, const std::string& datum, const std::string& group, const std::string& module,
               const std::string& cocycle) {
    Manifest m = load_manifest(args.in_path);
    Output out;
    bool ok;
    if (!datum.empty()) {
        ok = m.data.count(datum) > 0;
        if (!ok) throw std::invalid_argument("no datum named '" + datum + "' in the manifest");
    } else {
        ok = is_iyb_datum(named(m.groups, group, "group"), named(m.modules, module, "module"),
                          named(m.cocycles1, cocycle, "cocycle"));
    }
    out.result("iyb", ok);
    out.print();
    return ok ? 0 : 1;
}

int cmd_search_iyb(const CommonArgs& args, const std::string& group, int max_order) {
    Manifest m = load_manifest(args.in_path);
    SearchLimits limits;
    limits.max_order = max_order;
    limits.threads = args.threads;
    std::vector<IDatum> found = search_iyb(named(m.groups, group, "group"), limits);
    Output out;
    out.result("count", static_cast<long>(found.size()));
    for (size_t i = 0; i < found.size(); ++i) emit_full_datum(out, "found" + std::to_string(i), found[i]);
    out.print();
    return 0;
}

int cmd_lift(const CommonArgs& args, const std::string& beta, const std::string& ext, const std::string& pi0,
             bool enumerate_all) {
    Manifest m = load_manifest(args.in_path);
    const Cocycle2& b = named(m.cocycles2, beta, "2-cocycle");
    if (!is_normalized2(b) || !is_cocycle2(b)) throw std::invalid_argument("beta is not a normalized 2-cocycle");
    const ModuleExtension& e = named(m.extensions, ext, "extension");
    const Cocycle1& p = named(m.cocycles1, pi0, "cocycle");
    auto lift = corollary_lift(b, e, p);
    Output out;
    if (!lift) {
        out.result("lift", std::string("none"));
        out.print();
        return 1;
    }
    out.result("lift", std::string("found"));
    out.result("bijective", is_bijective(lift->pi));
    out.block(emit_group("lifted_group", *lift->group->group()));
    out.block(emit_module("lifted_mod", lift->pi.coeffs, "lifted_group"));
    if (!enumerate_all) {
        out.block(emit_cocycle1("lifted_pi", lift->pi, "lifted_group", "lifted_mod"));
    } else {
        std::vector<Cocycle1> lifts = corollary_all_lifts(*lift, e);
        out.results.insert(out.results.begin() + 1, "count=" + std::to_string(lifts.size()));
        for (size_t i = 0; i < lifts.size(); ++i)
            out.block(emit_cocycle1("lift" + std::to_string(i), lifts[i], "lifted_group", "lifted_mod"));
    }
    out.print();
    return 0;
}

int cmd_splice(const CommonArgs& args, const std::string& pi0, const std::string& ext) {
    Manifest m = load_manifest(args.in_path);
    const ModuleExtension& e = named(m.extensions, ext, "extension");
    const Cocycle1& p = named(m.cocycles1, pi0, "cocycle");
    if (!is_cocycle1(p)) throw std::invalid_argument("pi0 is not a 1-cocycle");
    CohClass2 cls = yoneda_splice(p, e);
    Output out;
    out.result("trivial", cls.is_trivial());
    out.block(emit_group("splice_group", *e.kernel.group));
    out.block(emit_module("splice_mod", e.kernel, "splice_group"));
    out.block(emit_cocycle2("spliced", cls.rep, "splice_group", "splice_mod"));
    out.print();
    return 0;
}

int cmd_sdp(const CommonArgs& args, const std::string& datum, const std::string& kernel) {
    Manifest m = load_manifest(args.in_path);
    SdpResult s = sdp_iyb(named(m.data, datum, "datum"), named(m.modules, kernel, "module"));
    Output out;
    out.result("order", static_cast<long>(s.datum.group->order()));
    emit_full_datum(out, "sdp", s.datum);
    out.print();
    return 0;
}

int cmd_tower(const CommonArgs& args, const std::vector<std::string>& stages) {
    Manifest m = load_manifest(args.in_path);
    std::vector<StageModule> callbacks;
    for (const std::string& name : stages) {
        const GModule& mod = named(m.modules, name, "module");
        callbacks.push_back([&mod, name](const GroupPtr& built) {
            if (!(*mod.group == *built))
                throw std::invalid_argument("stage module '" + name + "' is not over the group built so far");
            return mod;
        });
    }
    TowerResult t = a_type_tower(callbacks);
    Output out;
    out.result("order", static_cast<long>(t.datum.group->order()));
    out.result("coprime", t.coprime);
    emit_full_datum(out, "tower", t.datum);
    out.print();
    return 0;
}

int cmd_metabelian(const CommonArgs& args, const std::string& group, const std::string& kernel_ids) {
    Manifest m = load_manifest(args.in_path);
    GroupPtr g = named(m.groups, group, "group");
    std::vector<int> ids;
    {
        std::istringstream is(kernel_ids);
        int v;
        while (is >> v) ids.push_back(v);
        if (!is.eof()) throw std::invalid_argument("kernel ids must be space-separated integers");
    }
    auto d = metabelian_datum(g, ids);
    Output out;
    out.result("found", d.has_value());
    if (d) emit_full_datum(out, "meta", *d);
    out.print();
    return d ? 0 : 1;
}

int cmd_theorem_b(const CommonArgs& args, const std::string& datum, const std::string& embedding, bool collapse) {
    Manifest m = load_manifest(args.in_path);
    const IDatum& d = named(m.data, datum, "datum");
    const std::vector<Perm>& emb = named(m.embeddings, embedding, "embedding");
    std::vector<TheoremBEntry> entries = theorem_b_enumerate(d, emb);
    std::vector<std::vector<size_t>> classes = collapse_by_class(entries);
    Output out;
    out.result("surjections", static_cast<long>(entries.size()));
    out.result("classes", static_cast<long>(classes.size()));
    std::vector<size_t> report;
    if (collapse)
        for (const auto& cls : classes) report.push_back(cls[0]);
    else
        for (size_t i = 0; i < entries.size(); ++i) report.push_back(i);

    out.block(emit_group("tb_group", *d.group));
    for (size_t idx : report) {
        const TheoremBEntry& e = entries[idx];
        std::string p = "theta" + std::to_string(idx);
        out.result(p, images_str(e.theta.images));
        // bounded-ball injectivity probe for the lifted projection
        std::set<std::vector<Int>> seen;
        bool injective = true;
        for (const PairElem& x : e.group.model->ball(args.ball))
            if (!seen.insert(e.group.pi(x)).second) injective = false;
        out.result(p + "_injective_ball", injective);
        out.block(emit_module(p + "_kernel", e.ext.kernel_module, "tb_group"));
        out.block(emit_cocycle2(p + "_beta", e.spliced, "tb_group", p + "_kernel"));
    }
    out.print();
    return 0;
}

int cmd_associated(const CommonArgs& args, const std::string& datum, const std::string& embedding, int index) {
    Manifest m = load_manifest(args.in_path);
    const IDatum& d = named(m.data, datum, "datum");
    std::vector<TheoremBEntry> entries = theorem_b_enumerate(d, named(m.embeddings, embedding, "embedding"));
    Output out;
    out.result("surjections", static_cast<long>(entries.size()));
    bool all_ok = true;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (index >= 0 && static_cast<size_t>(index) != i) continue;
        IDatum back = associated_idatum(entries[i].group);
        std::string p = "associated" + std::to_string(i);
        // the identification through the bijections must be a module iso
        bool ok = back.module.base == d.module.base;
        for (int x = 0; x < d.group->order() && ok; ++x)
            for (int y = 0; y < d.group->order(); ++y) {
                long ix = ab_index_of(d.module.base, d.pi0.values[x]);
                long iy = ab_index_of(d.module.base, d.pi0.values[y]);
                AbElem sum = ab_add(d.module.base, d.pi0.values[x], d.pi0.values[y]);
                AbElem bsum = ab_add(back.module.base, back.pi0.values[d.inverse[ix]], back.pi0.values[d.inverse[iy]]);
                if (!(back.pi0.values[d.inverse[ab_index_of(d.module.base, sum)]] == bsum)) {
                    ok = false;
                    break;
                }
            }
        all_ok = all_ok && ok;
        out.result(p + "_roundtrip", ok);
        emit_full_datum(out, p, back);
    }
    out.print();
    return all_ok ? 0 : 1;
}

int cmd_derive_solution(const CommonArgs& args, const std::string& datum, const std::string& embedding, int index) {
    Manifest m = load_manifest(args.in_path);
    const IDatum& d = named(m.data, datum, "datum");
    std::vector<TheoremBEntry> entries = theorem_b_enumerate(d, named(m.embeddings, embedding, "embedding"));
    Output out;
    out.result("solutions", static_cast<long>(index >= 0 ? 1 : entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) {
        if (index >= 0 && static_cast<size_t>(index) != i) continue;
        SolutionMap r = derive_solution(entries[i].group);
        out.result("verified" + std::to_string(i), verify_solution(r).all());
        out.block(emit_solution("sol" + std::to_string(i), r));
    }
    out.print();
    return 0;
}

int cmd_verify_solution(const CommonArgs& args, const std::string& name) {
    Manifest m = load_manifest(args.in_path);
    SolutionReport rep = verify_solution(named(m.solutions, name, "solution"));
    Output out;
    out.result("bijective", rep.bijective);
    out.result("involutive", rep.involutive);
    out.result("nondegenerate", rep.nondegenerate);
    out.result("braid", rep.braid);
    out.print();
    return rep.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bijective 1-cocycle computations on finite groups"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string name, datum, group, module, cocycle, beta, ext, pi0, embedding, kernel;
    std::string kernel_ids;
    std::vector<std::string> stages;
    int max_order = 12, index = -1;
    bool collapse = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--in", args.in_path, "manifest file")->required();
        sub->add_option("--threads", args.threads, "enumeration parallelism");
        sub->add_option("--ball", args.ball, "lattice probe radius");
    };

    CLI::App* c_check = app.add_subcommand("check-cocycle", "validate a cocycle table");
    common(c_check);
    c_check->add_option("--name", name)->required();

    CLI::App* c_iyb = app.add_subcommand("is-iyb", "certify a bijective 1-cocycle datum");
    common(c_iyb);
    c_iyb->add_option("--datum", datum);
    c_iyb->add_option("--group", group);
    c_iyb->add_option("--module", module);
    c_iyb->add_option("--cocycle", cocycle);

    CLI::App* c_search = app.add_subcommand("search-iyb", "enumerate all data on a group");
    common(c_search);
    c_search->add_option("--group", group)->required();
    c_search->add_option("--max-order", max_order);

    CLI::App* c_lift = app.add_subcommand("lift", "lift a datum through a module extension");
    common(c_lift);
    c_lift->add_option("--beta", beta)->required();
    c_lift->add_option("--ext", ext)->required();
    c_lift->add_option("--pi0", pi0)->required();

    CLI::App* c_all = app.add_subcommand("all-lifts", "enumerate every lift of the pair");
    common(c_all);
    c_all->add_option("--beta", beta)->required();
    c_all->add_option("--ext", ext)->required();
    c_all->add_option("--pi0", pi0)->required();

    CLI::App* c_splice = app.add_subcommand("splice", "splice a 1-cocycle with a module extension");
    common(c_splice);
    c_splice->add_option("--pi0", pi0)->required();
    c_splice->add_option("--ext", ext)->required();

    CLI::App* c_sdp = app.add_subcommand("sdp", "semidirect product datum");
    common(c_sdp);
    c_sdp->add_option("--datum", datum)->required();
    c_sdp->add_option("--kernel", kernel)->required();

    CLI::App* c_tower = app.add_subcommand("tower", "iterated semidirect products");
    common(c_tower);
    c_tower->add_option("--stages", stages, "stage module names in order")->required()->delimiter(',');

    CLI::App* c_meta = app.add_subcommand("metabelian", "datum from an abelian-by-abelian presentation");
    common(c_meta);
    c_meta->add_option("--group", group)->required();
    c_meta->add_option("--kernel", kernel_ids, "space-separated element ids")->required();

    CLI::App* c_tb = app.add_subcommand("theorem-b", "enumerate the groups lying above a datum");
    common(c_tb);
    c_tb->add_option("--datum", datum)->required();
    c_tb->add_option("--embedding", embedding)->required();
    c_tb->add_flag("--collapse-classes", collapse);

    CLI::App* c_assoc = app.add_subcommand("associated-datum", "finite quotient datum of the built groups");
    common(c_assoc);
    c_assoc->add_option("--datum", datum)->required();
    c_assoc->add_option("--embedding", embedding)->required();
    c_assoc->add_option("--index", index);

    CLI::App* c_derive = app.add_subcommand("derive-solution", "solution maps of the built groups");
    common(c_derive);
    c_derive->add_option("--datum", datum)->required();
    c_derive->add_option("--embedding", embedding)->required();
    c_derive->add_option("--index", index);

    CLI::App* c_verify = app.add_subcommand("verify-solution", "check the solution-map laws");
    common(c_verify);
    c_verify->add_option("--solution", name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_check_cocycle(args, name);
        if (c_iyb->parsed()) return cmd_is_iyb(args, datum, group, module, cocycle);
        if (c_search->parsed()) return cmd_search_iyb(args, group, max_order);
        if (c_lift->parsed()) return cmd_lift(args, beta, ext, pi0, false);
        if (c_all->parsed()) return cmd_lift(args, beta, ext, pi0, true);
        if (c_splice->parsed()) return cmd_splice(args, pi0, ext);
        if (c_sdp->parsed()) return cmd_sdp(args, datum, kernel);
        if (c_tower->parsed()) return cmd_tower(args, stages);
        if (c_meta->parsed()) return cmd_metabelian(args, group, kernel_ids);
        if (c_tb->parsed()) return cmd_theorem_b(args, datum, embedding, collapse);
        if (c_assoc->parsed()) return cmd_associated(args, datum, embedding, index);
        if (c_derive->parsed()) return cmd_derive_solution(args, datum, embedding, index);
        if (c_verify->parsed()) return cmd_verify_solution(args, name);
    } catch (const std::invalid_argument& e) {
        std::cout << "ERROR " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cout << "INTERNAL " << e.what() << "\n";
        return 3;
    }
    return 2;
}
