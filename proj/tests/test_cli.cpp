#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "acfp/cli.hpp"
#include "fixtures.hpp"

using namespace acfp;
using namespace acfp::cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("acfp_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cmd_verify reports all six verdicts and the rate") {
    TempDir tmp;
    VerifyConfig cfg;
    cfg.code_path = tmp.file("code.txt", fixtures::kExampleCodeText);
    cfg.t = 3;
    const CommandResult r = cmd_verify(cfg);
    CHECK(r.exit_code == kExitPropertyFailed);  // fpc/sc/scld/ssc fail on this code
    const json& v = r.report["verdicts"];
    CHECK_FALSE(v["fpc"]["holds"].get<bool>());
    CHECK_FALSE(v["sc"]["holds"].get<bool>());
    CHECK_FALSE(v["ssc"]["holds"].get<bool>());
    CHECK(v["smippc"]["holds"].get<bool>());
    CHECK(v["udc"]["holds"].get<bool>());
    CHECK_THAT(r.report["rate"].get<double>(), Catch::Matchers::WithinAbs(0.5804820237, 1e-9));
    CHECK(v["fpc"]["witness"].is_array());

    cfg.properties = {"udc", "smippc"};
    CHECK(cmd_verify(cfg).exit_code == kExitOk);
}

TEST_CASE("cmd_verify on a one-column code holds everything at t=1") {
    TempDir tmp;
    VerifyConfig cfg;
    cfg.code_path = tmp.file("one.txt", "1 1 2\n0\n");
    cfg.t = 1;
    const CommandResult r = cmd_verify(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["all_hold"].get<bool>());
}

TEST_CASE("cmd_attack emits the word as JSON") {
    TempDir tmp;
    AttackConfig cfg;
    cfg.code_path = tmp.file("code.txt", fixtures::kExampleCodeText);
    cfg.colluders = "1,2,3";
    const CommandResult r = cmd_attack(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(word_from_json(r.report["word"]) == fixtures::word({{0, 1}, {2, 3}, {2, 3}, {1, 3}}));

    AttackConfig ms;
    ms.code_path = tmp.file("inner.txt", fixtures::kInnerCodeText);
    ms.multiset = "2:2,3:1";
    CHECK(word_from_json(cmd_attack(ms).report["word"]) == fixtures::word({{2, 3}, {1, 3}}));

    AttackConfig bad;
    bad.code_path = cfg.code_path;
    CHECK_THROWS_AS(cmd_attack(bad), ParseError);
}

TEST_CASE("cmd_attack piped into cmd_trace recovers the colluders") {
    TempDir tmp;
    const std::string code_path = tmp.file("code.txt", fixtures::kExampleCodeText);

    AttackConfig atk;
    atk.code_path = code_path;
    atk.colluders = "1,2,3";
    const json word = cmd_attack(atk).report["word"];
    const std::string word_path = tmp.file("word.json", word.dump());

    TraceConfig trc;
    trc.code_path = code_path;
    trc.word_path = word_path;
    trc.t_cap = 3;
    const CommandResult r = cmd_trace(trc);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["outcome"]["status"] == "success");
    CHECK(r.report["outcome"]["colluders"] == json({1, 2, 3}));
    CHECK(r.report["outcome"]["iterations"] == 2);

    // under-capped assumed bound -> structured condition failure, exit 2
    trc.t_cap = 2;
    CHECK(cmd_trace(trc).exit_code == kExitConditionsViolated);
}

TEST_CASE("cmd_trace two-stage and multiset variants") {
    TempDir tmp;
    const std::string outer_path = tmp.file("outer.txt", fixtures::kOuterCodeText);
    const std::string inner_path = tmp.file("inner.txt", fixtures::kInnerCodeText);
    const std::string cc_path = tmp.file("cc.txt", fixtures::kConcatCodeText);

    AttackConfig atk;
    atk.code_path = cc_path;
    atk.colluders = "1,2,3";
    const std::string word_path = tmp.file("word.json", cmd_attack(atk).report["word"].dump());

    TraceConfig trc;
    trc.code_path = outer_path;
    trc.word_path = word_path;
    trc.t_cap = 3;
    trc.two_stage = true;
    trc.inner_path = inner_path;
    trc.n1 = 2;
    const CommandResult r = cmd_trace(trc);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["outcome"]["colluders"] == json({1, 2, 3}));

    trc.n1 = 4;
    CHECK_THROWS_AS(cmd_trace(trc), ParseError);
    trc.n1.reset();
    trc.inner_path.reset();
    CHECK_THROWS_AS(cmd_trace(trc), ParseError);

    // multiset variant with known size
    AttackConfig matk;
    matk.code_path = inner_path;
    matk.multiset = "2:2,3:1";
    const std::string mword = tmp.file("mword.json", cmd_attack(matk).report["word"].dump());
    TraceConfig mtrc;
    mtrc.code_path = inner_path;
    mtrc.word_path = mword;
    mtrc.t_cap = 3;
    mtrc.multiset_size = 3;
    const CommandResult mr = cmd_trace(mtrc);
    CHECK(mr.exit_code == kExitOk);
    CHECK(mr.report["outcome"]["colluders"] ==
          json::parse(R"([{"index":2,"mult":2},{"index":3,"mult":1}])"));
}

TEST_CASE("cmd_concat emits the concatenated code text") {
    TempDir tmp;
    ConcatConfig cfg;
    cfg.outer_path = tmp.file("outer.txt", fixtures::kOuterCodeText);
    cfg.inner_path = tmp.file("inner.txt", fixtures::kInnerCodeText);
    const CommandResult r = cmd_concat(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.raw_output == fixtures::kConcatCodeText);
    CHECK(r.report["code"]["n"] == 4);
}

TEST_CASE("cmd_search exhaustive reproduces the frozen maxima") {
    for (const auto& [prop, want] : std::vector<std::pair<std::string, int>>{
             {"fpc", 4}, {"sc", 6}, {"ssc", 6}, {"smippc", 6}, {"udc", 6}}) {
        SearchConfig cfg;
        cfg.n = 2;
        cfg.q = 3;
        cfg.t = 2;
        cfg.property = prop;
        cfg.mode = "exhaustive";
        cfg.seed = 1;
        const CommandResult r = cmd_search(cfg);
        CHECK(r.exit_code == kExitOk);
        CHECK(r.report["M"].get<int>() == want);
        CHECK(r.report["optimal"].get<bool>());
        // the emitted code re-verifies under cmd_verify
        TempDir tmp;
        VerifyConfig vc;
        vc.code_path = tmp.file("best.txt", r.raw_output);
        vc.t = 2;
        vc.properties = {prop};
        CHECK(cmd_verify(vc).exit_code == kExitOk);
    }
}

TEST_CASE("cmd_simulate closes the loop on the worked example") {
    TempDir tmp;
    SimulateConfig cfg;
    cfg.code_path = tmp.file("code.txt", fixtures::kExampleCodeText);
    cfg.colluders = "1,2,3";
    cfg.alpha = 0.1;
    cfg.dim = 64;
    cfg.seed = 42;
    cfg.signal_out = tmp.path("pirate.sig");
    const CommandResult r = cmd_simulate(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["matches_exact_attack"].get<bool>());
    CHECK(r.report["max_extraction_error"].get<double>() < 1e-9);
    CHECK(word_from_json(r.report["word"]) == fixtures::word({{0, 1}, {2, 3}, {2, 3}, {1, 3}}));
    CHECK(read_signal(*cfg.signal_out).size() == 64);
}

TEST_CASE("atomic_write leaves no partial files behind") {
    TempDir tmp;
    const std::string p = tmp.path("report.json");
    atomic_write(p, "{}");
    CHECK(read_file(p) == "{}");
    CHECK_FALSE(std::filesystem::exists(p + ".tmp"));
}

#ifdef ACFP_CLI_PATH
TEST_CASE("the real binary wires arguments and exit codes") {
    TempDir tmp;
    const std::string code = tmp.file("code.txt", fixtures::kExampleCodeText);
    const std::string cli = ACFP_CLI_PATH;

    auto run = [&](const std::string& args) {
        const int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };

    CHECK(run("verify --code " + code + " --t 3 --props udc,smippc") == kExitOk);
    CHECK(run("verify --code " + code + " --t 3") == kExitPropertyFailed);
    CHECK(run("verify --code /nonexistent.txt --t 3") == kExitInputError);
    CHECK(run("verify --code " + code + " --t 3 --subset-budget 2") == kExitBudgetExceeded);

    const std::string word = tmp.path("word.json");
    CHECK(run("attack --code " + code + " --colluders 1,2,3 --out " + word) == kExitOk);
    // the attack report wraps the word; extract it for the trace input
    const json report = json::parse(read_file(word));
    const std::string word_only = tmp.file("word_only.json", report["word"].dump());
    CHECK(run("trace --code " + code + " --word " + word_only + " --t-cap 3") == kExitOk);
    CHECK(run("trace --code " + code + " --word " + word_only + " --t-cap 2") ==
          kExitConditionsViolated);

    const std::string outer = tmp.file("outer.txt", fixtures::kOuterCodeText);
    const std::string inner = tmp.file("inner.txt", fixtures::kInnerCodeText);
    const std::string cc = tmp.path("cc.txt");
    CHECK(run("concat --outer " + outer + " --inner " + inner + " --code-out " + cc) == kExitOk);
    CHECK(read_file(cc) == fixtures::kConcatCodeText);

    CHECK(run("search --n 2 --q 3 --t 2 --property udc --mode exhaustive --seed 1") == kExitOk);
    CHECK(run("simulate --code " + code +
              " --colluders 1,2 --alpha 0.1 --dim 64 --seed 7") == kExitOk);
    CHECK(run("bench --seed 3 --sizes 16,32 --n 20 --attacks 4 --reps 2") == kExitOk);
}
#endif
