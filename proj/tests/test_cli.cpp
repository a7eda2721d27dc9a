#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rexlab/automata.hpp"
#include "rexlab/gadget.hpp"
#include "rexlab/match.hpp"
#include "rexlab/regex.hpp"

using namespace rexlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "rexlab_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kData = REXLAB_TEST_DATA;

} // namespace

TEST_CASE("size, match, parse", "[cli]") {
    Run s = cli({"size", "(0|1)*"});
    CHECK(s.code == 0);
    CHECK(s.out == "4\n");
    CHECK(cli({"size", "(0|1){8}", "--counting"}).out == "6\n");
    CHECK(cli({"size", "(0|1){8}"}).out == "24\n");
    Run z = cli({"size", "1(0|1){0}"});
    CHECK(z.out == "1\n");
    CHECK(z.err.find("warning") != std::string::npos);

    CHECK(cli({"match", "(0|1)*1", "01"}).code == 0);
    Run no = cli({"match", "(0|1)*1", "10"});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
    CHECK(cli({"match", "0*", "e"}).code == 0);
    CHECK(cli({"parse", "(0)|(1)"}).out == "0|1\n");
}

TEST_CASE("compile commands", "[cli]") {
    Run d = cli({"compile-dnf", kData + "/sample.dnf"});
    CHECK(d.code == 0);
    CHECK(parse(d.out.substr(0, d.out.size() - 1)) == parse("(1(0|1)01)|((0|1)01(0|1))"));
    Run f = cli({"compile-formula", kData + "/sample.formula", "--target", "neg"});
    CHECK(f.code == 0);
    Regex r = parse(f.out.substr(0, f.out.size() - 1));
    CHECK(matches(r, Word::parse("100")));
    CHECK_FALSE(matches(r, Word::parse("110")));
    CHECK(cli({"compile-formula", kData + "/sample.formula"}).code == 2);
    CHECK(cli({"compile-formula", kData + "/sample.formula", "--target", "both"}).code == 2);
}

TEST_CASE("equiv", "[cli]") {
    Run e = cli({"equiv", "0|1", "1|0", "--maxlen", "4"});
    CHECK(e.code == 0);
    CHECK(e.out == "equivalent\n");
    Run n = cli({"equiv", "0*", "00*", "--maxlen", "4"});
    CHECK(n.code == 1);
    CHECK(n.out == "not equivalent\ncounterexample=e\n");
}

TEST_CASE("automata pipeline", "[cli]") {
    fs::path dir = scratch();
    std::string nfa = (dir / "a.nfa").string();
    std::string dfa = (dir / "a.dfa").string();
    std::string min = (dir / "a.min").string();
    std::string neg = (dir / "a.neg").string();
    std::string prod = (dir / "a.prod").string();
    REQUIRE(cli({"re2nfa", "(0|1)*1(0|1)", "-o", nfa}).code == 0);
    REQUIRE(cli({"nfa2dfa", nfa, "-o", dfa}).code == 0);
    REQUIRE(cli({"min", dfa, "-o", min}).code == 0);
    Dfa m = std::get<Dfa>(parse_automaton(slurp(min)));
    CHECK(m.state_count == 4);
    REQUIRE(cli({"complement", min, "-o", neg}).code == 0);
    REQUIRE(cli({"product", min, neg, "--op", "or", "-o", prod}).code == 0);
    Dfa all = std::get<Dfa>(parse_automaton(slurp(prod)));
    CHECK(all.accepts(Word::parse("0000")));
    Run back = cli({"dfa2re", min});
    REQUIRE(back.code == 0);
    CHECK(equivalent_upto(parse(back.out.substr(0, back.out.size() - 1)), parse("(0|1)*1(0|1)"), 8));
    CHECK(cli({"nfa2dfa", nfa, "--cap", "1"}).code == 2);
    CHECK(cli({"re2nfa", "0&1"}).code == 2);
}

TEST_CASE("generators require a seed and are deterministic", "[cli]") {
    CHECK(cli({"gen-hypergraph", "--n", "8", "--m", "4", "--k", "3"}).code == 2);
    Run a = cli({"gen-hypergraph", "--n", "8", "--m", "4", "--k", "3", "--seed", "9"});
    Run b = cli({"gen-hypergraph", "--n", "8", "--m", "4", "--k", "3", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("hg 8 4 3\n", 0) == 0);

    fs::path dir = scratch();
    std::string ch = (dir / "c.txt").string();
    REQUIRE(cli({"gen-challenge", "--n", "16", "--k", "3", "--m", "300", "--mode", "pseudorandom", "--seed", "4", "-o",
                 ch})
                .code == 0);
    Challenge parsed = parse_challenge(slurp(ch));
    CHECK(parsed.edges.size() == 300);
    Run ex = cli({"gen-examples", "--challenge", ch, "--count", "50", "--N", "64", "--seed", "5"});
    REQUIRE(ex.code == 0);
    auto examples = parse_examples(ex.out);
    CHECK(examples.size() == 50);
    GadgetConfig cfg = make_config(16, 3, 64, Rational(1, 5), GadgetVariant::Starred, 5);
    Matcher target(build_target(*parsed.hidden_seed, cfg));
    for (const auto& e : examples) {
        CHECK(target.matches(e.z) == (e.y == 1));
    }

    Run g = cli({"gen-gadget", "--n", "4", "--k", "2", "--N", "8", "--variant", "counting", "--seed", "2"});
    REQUIRE(g.code == 0);
    CHECK(g.out.rfind("gadget n=4 k=2 N=8 gamma=1/5 variant=counting pred=0110 seed=2\n", 0) == 0);
    CHECK(g.out.find("size measured=") != std::string::npos);
    CHECK(g.out == cli({"gen-gadget", "--n", "4", "--k", "2", "--N", "8", "--variant", "counting", "--seed", "2"}).out);
}

TEST_CASE("distinguish report", "[cli]") {
    std::vector<std::string> args{"distinguish", "--learner", "majority", "--trials", "3", "--seed", "8",
                                  "--p-train", "20", "--v-size", "20"};
    Run a = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out.find("trials=3\n") != std::string::npos);
    CHECK(a.out.find("learner=majority\n") != std::string::npos);
    CHECK(a.err.find("warning") != std::string::npos);
    CHECK(a.out == cli(args).out);
    CHECK(cli({"distinguish", "--learner", "svm", "--seed", "1"}).code == 2);
}

TEST_CASE("errors are one line with exit code 2", "[cli]") {
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"size"},
             {"size", "(0|"},
             {"match", "0", "012"},
             {"compile-dnf", "/nonexistent/file.dnf"},
             {"size", "0", "--bogus"},
             {"gen-gadget", "--n", "12", "--seed", "1"}}) {
        Run r = cli(args);
        CHECK(r.code == 2);
        CHECK(r.err.rfind("rexlab: error: ", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    Run bad = cli({"frobnicate"});
    CHECK(bad.err.find("frobnicate") != std::string::npos);
    Run pos = cli({"size", "0||1"});
    CHECK(pos.err.find("position") != std::string::npos);
    Run help = cli({"size", "--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("--counting") != std::string::npos);
}
