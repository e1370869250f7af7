// End-to-end tests driving the installed CLI binary through a shell:
// exit codes, report shapes, determinism, stdin handling, env-var caps.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct RunResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

fs::path tempDir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("syzgraph-cli-tests-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

fs::path writeFile(const std::string& name, const std::string& content) {
    fs::path p = tempDir() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

// args go through /bin/sh, so shell pipelines and env prefixes work
RunResult run(const std::string& args, const std::string& stdinData = "") {
    static int counter = 0;
    fs::path outP = tempDir() / ("out" + std::to_string(counter));
    fs::path errP = tempDir() / ("err" + std::to_string(counter));
    fs::path inP = tempDir() / ("in" + std::to_string(counter));
    ++counter;

    std::string cmd = std::string(SYZGRAPH_CLI_PATH) + " " + args;
    if (!stdinData.empty()) {
        std::ofstream f(inP);
        f << stdinData;
        cmd += " < " + inP.string();
    }
    cmd += " > " + outP.string() + " 2> " + errP.string();

    int status = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outP);
    r.err = slurp(errP);
    return r;
}

const char* kPathIdealText = "n 5\n1 2 3\n1 2 4\n1 4 5\n3 4 5\n";
const char* kWitnessText = "n 6\n1 2 3\n1 2 4\n1 4 5\n4 5 6\n3 5 6\n";
const char* kSquareText = "n 4\n1 2\n2 3\n3 4\n1 4\n";
const char* kGoodComplexText = "n 4\n3 4\n1 4\n1 2\n";

} // namespace

TEST_CASE("graph subcommand: text and JSON views of the same report") {
    fs::path f = writeFile("path.ideal", kPathIdealText);

    RunResult txt = run("graph " + f.string());
    CHECK(txt.exitCode == 0);
    CHECK(txt.out.find("shape: line") != std::string::npos);
    CHECK(txt.out.find("1 -- 2") != std::string::npos);
    CHECK(txt.out.find("linear relations") != std::string::npos);

    RunResult js = run("graph " + f.string() + " --json");
    CHECK(js.exitCode == 0);
    json r = json::parse(js.out);
    CHECK(r.at("command") == "graph");
    CHECK(r.at("graph").at("shape").at("tag") == "line");
    CHECK(r.at("graph").at("edges").size() == 3);
    CHECK(r.at("graph").at("prunedEdges").empty());
    CHECK(r.at("linearRelations").at("value") == true);
    CHECK(r.at("input").at("m") == 4);
}

TEST_CASE("graph reads stdin when the input path is '-'") {
    RunResult r = run("graph - --json", kPathIdealText);
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j.at("graph").at("vertices").size() == 4);
}

TEST_CASE("betti subcommand renders Macaulay rows from the structured table") {
    fs::path f = writeFile("square.ideal", kSquareText);

    RunResult txt = run("betti " + f.string());
    CHECK(txt.exitCode == 0);
    CHECK(txt.out.find("field: QQ") != std::string::npos);
    CHECK(txt.out.find("projective dimension: 2") != std::string::npos);
    CHECK(txt.out.find("linear resolution: yes") != std::string::npos);

    RunResult js = run("betti " + f.string() + " --field gf:2 --json");
    CHECK(js.exitCode == 0);
    json r = json::parse(js.out);
    CHECK(r.at("betti").at("field") == "GF(2)");
    REQUIRE(r.at("betti").at("entries").size() == 3);
    CHECK(r.at("betti").at("entries")[0].at("beta") == 4);
    CHECK(r.at("betti").at("projectiveDimension") == 2);
    CHECK(r.at("betti").at("linearResolution") == true);
}

TEST_CASE("identical invocations give byte-identical reports modulo timings") {
    fs::path f = writeFile("witness.ideal", kWitnessText);
    RunResult a = run("check " + f.string() + " --property linear-resolution --method both --json");
    RunResult b = run("check " + f.string() + " --property linear-resolution --method both --json");
    json ja = json::parse(a.out), jb = json::parse(b.out);
    ja.erase("timings");
    jb.erase("timings");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("check: criterion and oracle agree on the non-linear witness") {
    fs::path f = writeFile("witness2.ideal", kWitnessText);
    RunResult r = run("check " + f.string() + " --property linear-resolution --method both --json");
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j.at("check").at("criterion").at("value") == false);
    CHECK(j.at("check").at("criterion").at("rule") == "line-criterion");
    CHECK(j.at("check").at("oracle").at("value") == false);
    CHECK(j.at("check").at("agreement") == true);
    CHECK(j.at("check").at("verdict") == false);
}

TEST_CASE("check: every property runs both methods on a path-shaped ideal") {
    fs::path f = writeFile("path2.ideal", kPathIdealText);
    for (const char* prop : {"linear-resolution", "linear-quotients", "var-decomposable",
                             "linear-relations", "scarf"}) {
        RunResult r =
            run("check " + f.string() + " --property " + prop + " --method both --json");
        CHECK(r.exitCode == 0);
        json j = json::parse(r.out);
        CHECK(j.at("check").at("agreement") == true);
        CHECK(j.at("check").at("verdict") == true);
    }
}

TEST_CASE("check: oracle method reports an admissible order") {
    fs::path f = writeFile("path3.ideal", kPathIdealText);
    RunResult r = run("check " + f.string() + " --property linear-quotients --method oracle --json");
    CHECK(r.exitCode == 0);
    json j = json::parse(r.out);
    CHECK(j.at("check").at("oracle").at("value") == true);
    CHECK(j.at("check").at("oracle").at("order").size() == 4);
    CHECK_FALSE(j.at("check").contains("criterion"));
}

TEST_CASE("scarf comparison on a cycle-shaped graph is an input error") {
    fs::path f = writeFile("square2.ideal", kSquareText);
    RunResult r = run("check " + f.string() + " --property scarf --method criterion");
    CHECK(r.exitCode == 2);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("complex subcommand reports") {
    fs::path f = writeFile("good.cpx", kGoodComplexText);

    RunResult all = run("complex " + f.string());
    CHECK(all.exitCode == 0);
    CHECK(all.out.find("Cohen-Macaulay: yes") != std::string::npos);
    CHECK(all.out.find("shellable: yes") != std::string::npos);
    CHECK(all.out.find("vertex-decomposable: yes") != std::string::npos);

    RunResult js = run("complex " + f.string() + " --report shape --json");
    CHECK(js.exitCode == 0);
    json j = json::parse(js.out);
    CHECK(j.at("complex").at("shape").at("shape").at("tag") == "line");
    CHECK(j.at("complex").at("shape").at("viaCorollary") == true);
    CHECK(j.at("complex").at("shape").at("cm") == true);
    CHECK_FALSE(j.at("complex").contains("cohenMacaulay"));

    // non-pure: cm reports a reason, targeted shellability is an input error
    fs::path np = writeFile("nonpure.cpx", "n 3\n1 2\n3\n");
    RunResult cm = run("complex " + np.string() + " --report cm --json");
    CHECK(cm.exitCode == 0);
    json jc = json::parse(cm.out);
    CHECK(jc.at("complex").at("cohenMacaulay").at("value") == false);
    CHECK(jc.at("complex").at("cohenMacaulay").at("reason") == "not pure");

    RunResult sh = run("complex " + np.string() + " --report shellable");
    CHECK(sh.exitCode == 2);

    RunResult allNp = run("complex " + np.string() + " --report all");
    CHECK(allNp.exitCode == 0);
    CHECK(allNp.out.find("skipped") != std::string::npos);
}

TEST_CASE("gen emits input-format text that pipes back in") {
    RunResult gen = run("gen --family path-cycle --n 6 --t 3");
    CHECK(gen.exitCode == 0);
    CHECK(gen.out.substr(0, 3) == "n 6");

    RunResult piped = run(std::string("gen --family path-cycle --n 6 --t 3 | ") +
                          SYZGRAPH_CLI_PATH + " graph - --json");
    CHECK(piped.exitCode == 0);
    json j = json::parse(piped.out);
    CHECK(j.at("graph").at("shape").at("tag") == "cycle");
    CHECK(j.at("graph").at("shape").at("cycleLength") == 6);

    RunResult cyc = run("gen --family cycle --n 5 --json");
    CHECK(cyc.exitCode == 0);
    json jc = json::parse(cyc.out);
    CHECK(jc.at("kind") == "ideal");
    CHECK(jc.at("params").at("family") == "cycle");
    CHECK(jc.at("text").get<std::string>().substr(0, 3) == "n 5");

    RunResult tree = run("gen --family random-tree --n 6 --m 4 --seed 9");
    CHECK(tree.exitCode == 0);
    RunResult tree2 = run("gen --family random-tree --n 6 --m 4 --seed 9");
    CHECK(tree.out == tree2.out); // seeded determinism

    RunResult cpx = run("gen --family pure-complex --n 6 --m 4 --seed 2");
    CHECK(cpx.exitCode == 0);
    CHECK(cpx.out.substr(0, 3) == "n 6");

    CHECK(run("gen --family random --n 5 --m 3").exitCode == 2); // missing --d
    CHECK(run("gen --family path-cycle --n 5 --t 9").exitCode == 2);
}

TEST_CASE("verify subcommand summarizes a battery") {
    RunResult r = run("verify --suite cm2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("issues: 0") != std::string::npos);

    RunResult js = run("verify --suite tree --count 3 --seed 3 --json");
    CHECK(js.exitCode == 0);
    json j = json::parse(js.out);
    CHECK(j.at("verify").at("suite") == "tree");
    CHECK(j.at("verify").at("ok") == true);
    CHECK(j.at("verify").at("instances").get<int>() >= 3);

    CHECK(run("verify --suite nope").exitCode == 2);
}

TEST_CASE("exit codes: usage, input, and resource errors") {
    CHECK(run("--help").exitCode == 0);
    CHECK(run("graph").exitCode == 2);             // missing input
    CHECK(run("frobnicate x").exitCode == 2);      // unknown subcommand
    CHECK(run("graph x --bogus-flag").exitCode == 2);
    CHECK(run("graph /nonexistent/file.ideal").exitCode == 2);

    fs::path f = writeFile("square3.ideal", kSquareText);
    CHECK(run("betti " + f.string() + " --field gf:4").exitCode == 2);
    CHECK(run("betti " + f.string() + " --cap-n 3").exitCode == 3);

    fs::path bad = writeFile("bad.ideal", "m 4\n1 2\n");
    CHECK(run("graph " + bad.string()).exitCode == 2);
}

TEST_CASE("environment variables set default caps, flags override") {
    fs::path f = writeFile("square4.ideal", kSquareText);
    std::string envCmd = "env SYZGRAPH_CAP_N=3 " + std::string(SYZGRAPH_CLI_PATH) + " betti " +
                         f.string();

    fs::path outP = tempDir() / "envout";
    int status = std::system((envCmd + " > " + outP.string() + " 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 3);

    status = std::system((envCmd + " --cap-n 10 > " + outP.string() + " 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 0);

    std::string badEnv = "env SYZGRAPH_CAP_N=abc " + std::string(SYZGRAPH_CLI_PATH) + " betti " +
                         f.string() + " > " + outP.string() + " 2>&1";
    CHECK(WEXITSTATUS(std::system(badEnv.c_str())) == 2);
}
