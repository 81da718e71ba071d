// End-to-end runs of the command-line tool against generated manifests.
#include "iyb/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"

using namespace iyb;

namespace {

#ifndef IYB_CLI_PATH
#define IYB_CLI_PATH "iyb"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(IYB_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

std::string temp_manifest(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/iyb_cli_") + name + ".iyb";
    std::ofstream f(path);
    f << "format=1\n\n" << body;
    return path;
}

bool has_line(const std::string& out, const std::string& line) {
    std::istringstream is(out);
    std::string l;
    while (std::getline(is, l))
        if (l == line) return true;
    return false;
}

}  // namespace

TEST_CASE("cli: parse diagnostics carry line numbers and exit 2") {
    std::string path = temp_manifest("bad", "[group g]\norder=2\ntable=0 1/1 1\n");
    RunResult r = run_cli("check-cocycle --in " + path + " --name x");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ERROR line 5") != std::string::npos);
}

TEST_CASE("cli: sdp and tower build the S3 datum") {
    std::ostringstream body;
    body << emit_group("triv", *trivial_group());
    body << "\n" << emit_group("c2", *cyclic_group(2));
    body << "\n[module stage1]\ngroup=triv\nfree_rank=0\ntorsion=2\n";
    body << "\n[module stage2]\ngroup=c2\nfree_rank=0\ntorsion=3\naction 1=[[-1]]\n";
    body << "\n[module z2]\ngroup=c2\nfree_rank=0\ntorsion=2\n";
    body << "\n[cocycle id2]\ndegree=1\ngroup=c2\nmodule=z2\nvalues=0/1\n";
    body << "\n[datum d2]\ngroup=c2\nmodule=z2\ncocycle=id2\n";
    std::string path = temp_manifest("tower", body.str());

    RunResult tower = run_cli("tower --in " + path + " --stages stage1,stage2");
    CHECK(tower.exit_code == 0);
    CHECK(has_line(tower.out, "RESULT order=6"));
    CHECK(has_line(tower.out, "RESULT coprime=true"));

    RunResult sdp = run_cli("sdp --in " + path + " --datum d2 --kernel stage2");
    CHECK(sdp.exit_code == 0);
    CHECK(has_line(sdp.out, "RESULT order=6"));

    // identical datum blocks from both routes
    auto tail_from = [](const std::string& s) { return s.substr(s.find("format=1")); };
    std::string tb = tail_from(tower.out), sb = tail_from(sdp.out);
    // block names differ by prefix; compare the numeric payloads
    auto strip = [](std::string s, const std::string& from, const std::string& to) {
        size_t p;
        while ((p = s.find(from)) != std::string::npos) s.replace(p, from.size(), to);
        return s;
    };
    CHECK(strip(tb, "tower", "out") == strip(sb, "sdp", "out"));
}

TEST_CASE("cli: metabelian on Q8") {
    std::ostringstream body;
    body << emit_group("q8", *quaternion_group());
    std::string path = temp_manifest("q8", body.str());
    RunResult r = run_cli("metabelian --in " + path + " --group q8 --kernel \"0 1\"");
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "RESULT found=true"));

    // the emitted blocks parse back into a valid datum
    std::string blocks = r.out.substr(r.out.find("format=1"));
    std::vector<Diagnostic> diags;
    auto m = parse_manifest(blocks, diags);
    REQUIRE(m.has_value());
    CHECK(m->data.count("meta") == 1);
    CHECK(m->data.at("meta").group->order() == 8);
}

TEST_CASE("cli: search output is byte-identical across runs and thread counts") {
    std::ostringstream body;
    body << emit_group("v4", *direct_product(*cyclic_group(2), *cyclic_group(2)));
    std::string path = temp_manifest("v4", body.str());
    RunResult a = run_cli("search-iyb --in " + path + " --group v4");
    RunResult b = run_cli("search-iyb --in " + path + " --group v4");
    RunResult c = run_cli("search-iyb --in " + path + " --group v4 --threads 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    // every emitted datum re-parses and re-certifies
    std::string blocks = a.out.substr(a.out.find("format=1"));
    std::vector<Diagnostic> diags;
    auto m = parse_manifest(blocks, diags);
    REQUIRE(m.has_value());
    CHECK(!m->data.empty());
}

TEST_CASE("cli: unresolved names exit 2") {
    std::string path = temp_manifest("empty", "");
    RunResult r = run_cli("search-iyb --in " + path + " --group nope");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ERROR") != std::string::npos);
}

#ifdef IYB_FIXTURE_DIR
TEST_CASE("cli: the shipped fixture exercises the documented flows") {
    std::string f = std::string(IYB_FIXTURE_DIR) + "/c2.iyb";

    RunResult pos = run_cli("lift --in " + f + " --beta beta_c4 --ext e4 --pi0 id2");
    CHECK(pos.exit_code == 0);
    CHECK(has_line(pos.out, "RESULT lift=found"));
    CHECK(has_line(pos.out, "RESULT bijective=true"));

    RunResult neg = run_cli("lift --in " + f + " --beta beta_zero --ext e4 --pi0 id2");
    CHECK(neg.exit_code == 1);
    CHECK(has_line(neg.out, "RESULT lift=none"));

    RunResult all = run_cli("all-lifts --in " + f + " --beta beta_c4 --ext e4 --pi0 id2");
    CHECK(all.exit_code == 0);
    CHECK(has_line(all.out, "RESULT count=2"));

    RunResult spl = run_cli("splice --in " + f + " --pi0 id2 --ext e4");
    CHECK(spl.exit_code == 0);
    CHECK(has_line(spl.out, "RESULT trivial=false"));

    RunResult tb = run_cli("theorem-b --in " + f + " --datum d2 --embedding emb2");
    CHECK(tb.exit_code == 0);
    CHECK(has_line(tb.out, "RESULT surjections=1"));
    CHECK(has_line(tb.out, "RESULT theta0_injective_ball=true"));

    RunResult sol = run_cli("derive-solution --in " + f + " --datum d2 --embedding emb2");
    CHECK(sol.exit_code == 0);
    CHECK(has_line(sol.out, "RESULT verified0=true"));
    CHECK(sol.out.find("left=1 0/1 0") != std::string::npos);

    RunResult iyb = run_cli("is-iyb --in " + f + " --group c2 --module z2 --cocycle id2");
    CHECK(iyb.exit_code == 0);
    CHECK(has_line(iyb.out, "RESULT iyb=true"));

    RunResult vs = run_cli("verify-solution --in " + f + " --solution shift");
    CHECK(vs.exit_code == 0);
    RunResult vi = run_cli("verify-solution --in " + f + " --solution ident");
    CHECK(vi.exit_code == 1);
    CHECK(has_line(vi.out, "RESULT nondegenerate=false"));
}
#endif
