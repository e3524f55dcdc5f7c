#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LPBC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("se-models lists the pairs of a constraint") {
    auto p = write_temp("p1.lp", ":- a.\n#vocab a b .\n");
    auto r = run("se-models " + p);
    CHECK(r.code == 0);
    CHECK(r.out == "({}, {})\n({}, {b})\n({b}, {b})\n");
}

TEST_CASE("revise with partial meet keeps the conditional") {
    auto p = write_temp("p.lp", "a.\nb :- a.\n");
    auto q = write_temp("q.lp", ":- a.\n");
    auto r = run("revise --method pm " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out == ":- a.\nb :- a.\n");
}

TEST_CASE("revise with an ensconcement file") {
    auto p = write_temp("pe.lp", "a.\na :- b.\nb :- a.\n");
    auto q = write_temp("qe.lp", ":- b.\n");
    auto e = write_temp("e4.ens", "a. | b :- a.\na :- b.\n");
    auto r = run("revise --method ens --ensconcement " + e + " " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out == ":- b.\na :- b.\n");
}

TEST_CASE("distance revision prints SE models, or a witness program") {
    auto p = write_temp("pd.lp", "a.\nb :- a.\n");
    auto q = write_temp("qd.lp", ":- a.\n");
    auto r = run("revise --method distance " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out == "({b}, {b})\n");
    auto m = run("revise --method distance --materialize " + p + " " + q);
    CHECK(m.code == 0);
    CHECK(m.out.find("not") != std::string::npos);  // canonical constraints
}

TEST_CASE("contract leaves the bridge rule") {
    auto p = write_temp("pc.lp", "a.\nb :- a.\n");
    auto q = write_temp("qc.lp", "a :- b.\n");
    auto r = run("contract --method pm " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out == "b :- a.\n");
}

TEST_CASE("json output is stable") {
    auto p = write_temp("pj.lp", "a.\n#vocab a b .\n");
    auto r1 = run("se-models --format json " + p);
    auto r2 = run("se-models --format json " + p);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\"models\"") != std::string::npos);
}

TEST_CASE("equiv distinguishes answer-set equals") {
    auto p = write_temp("ps.lp", "a :- not b.\nb :- not a.\n");
    auto q = write_temp("qs.lp", "a ; b.\n");
    auto r = run("equiv --vocab a,b " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out == "not strongly equivalent\n");
}

TEST_CASE("usage errors exit with 2, domain errors with 1") {
    CHECK(run("no-such-command").code != 0);
    auto p = write_temp("px.lp", "a.\n");
    CHECK(run("revise " + p).code == 1);  // q missing
    auto bad = write_temp("bad.lp", "a :- .\n");
    CHECK(run("se-models " + bad).code == 1);
}

TEST_CASE("compare runs methods side by side") {
    auto p = write_temp("pcmp.lp", "a.\nb :- a.\n");
    auto q = write_temp("qcmp.lp", ":- a.\n");
    auto r = run("revise --compare pm,distance --materialize " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out.find("== pm") != std::string::npos);
    CHECK(r.out.find("== distance") != std::string::npos);
    CHECK(r.out.find("b :- a.") != std::string::npos);
}

TEST_CASE("modules output") {
    auto p = write_temp("pm.lp", "a.\nb :- a.\nc :- not b.\n");
    auto q = write_temp("qm.lp", ":- a.\n");
    auto r = run("modules " + p + " " + q);
    CHECK(r.code == 0);
    CHECK(r.out.find("module anchored at \"a.\" via a:") != std::string::npos);
    CHECK(r.out.find("residue:") != std::string::npos);
}

TEST_CASE("check on a tiny corpus") {
    auto pool = write_temp("pool.lp", "a.\nb.\n:- a.\n");
    auto r = run("check --operators pm-full --pool " + pool +
                 " --max-rules 2 --vocab a,b --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("pm:full-meet  r2  holds") != std::string::npos);
}
