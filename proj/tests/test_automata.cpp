#include <catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"
#include "rexlab/automata.hpp"
#include "rexlab/error.hpp"
#include "rexlab/generators.hpp"
#include "rexlab/match.hpp"
#include "rexlab/reductions.hpp"

using namespace rexlab;

namespace {

RegexGenOptions plain_opts(std::uint64_t max_size = 12) {
    RegexGenOptions o;
    o.max_size = max_size;
    o.profile = OperatorProfile::plain();
    o.profile.allow_count = true;
    return o;
}

void check_dfa_language(const Dfa& d, const Regex& r, std::size_t max_len) {
    LanguageSample lang = enumerate_language(r, max_len);
    for (const Word& w : oracle::words_upto(max_len)) {
        INFO(print(r) << " on '" << w.to_string() << "'");
        REQUIRE(oracle::run_dfa(d, w) == lang.contains(w));
    }
}

Dfa dfa_of(const char* re) { return determinize(thompson(parse(re))); }

} // namespace

TEST_CASE("thompson examples", "[automata]") {
    Nfa a = thompson(Regex::symbol(0));
    for (const Word& w : oracle::words_upto(3)) {
        CHECK(oracle::run_nfa(a, w) == (w.to_string() == "0"));
    }
    Nfa all = thompson(parse("(0|1)*"));
    for (const Word& w : oracle::words_upto(4)) {
        CHECK(oracle::run_nfa(all, w));
    }
    Nfa sample = thompson(parse("(1(0|1)01)|((0|1)01(0|1))"));
    Dnf phi = parse_dnf("dnf 4 2\n+1 -3 +4\n-2 +3\n");
    for (const Word& x : oracle::words_of_length(4)) {
        CHECK(sample.accepts(x) == oracle::dnf_value(phi, x));
    }
    CHECK_THROWS_AS(thompson(parse("0&1")), DomainError);
    CHECK_THROWS_AS(thompson(parse("!0")), DomainError);
}

TEST_CASE("thompson is linear and language preserving", "[automata]") {
    Rng rng = derive_rng(31, 0);
    // r{0} has size 0 yet denotes e, so the bound is checked without counters.
    auto opts = plain_opts(14);
    opts.profile.allow_count = false;
    for (int t = 0; t < 1000; ++t) {
        Regex r = random_regex(opts, rng);
        Nfa a = thompson(r);
        CHECK_NOTHROW(a.validate());
        CHECK(a.state_count <= 2 * size_of(r, false) + 1);
        if (t < 200) {
            LanguageSample lang = enumerate_language(r, 6);
            for (const Word& w : oracle::words_upto(6)) {
                REQUIRE(oracle::run_nfa(a, w) == lang.contains(w));
            }
        }
    }
}

TEST_CASE("determinize examples", "[automata]") {
    Dfa one = dfa_of("1");
    CHECK(one.state_count >= 2);
    CHECK(one.state_count <= 3);
    check_dfa_language(one, parse("1"), 4);

    Dfa dead = determinize(thompson(Regex::empty_set()));
    CHECK(dead.state_count == 1);
    CHECK_FALSE(dead.finals[0]);

    for (std::size_t n = 4; n <= 10; ++n) {
        Dfa d = determinize(nth_from_end_nfa(n));
        CHECK(d.state_count >= (std::size_t{1} << n));
        CHECK(metrics(d).description_bits >= metrics(nth_from_end_nfa(n)).description_bits);
    }
    CHECK_THROWS_AS(determinize(nth_from_end_nfa(12), 1000), CapExceeded);
}

TEST_CASE("conversions preserve language", "[automata]") {
    Rng rng = derive_rng(32, 0);
    auto opts = plain_opts();
    for (int t = 0; t < 150; ++t) {
        Regex r = random_regex(opts, rng);
        Dfa d = determinize(thompson(r));
        CHECK_NOTHROW(d.validate());
        check_dfa_language(d, r, 8);
        Dfa m = minimize(d);
        CHECK(m.state_count <= d.state_count);
        check_dfa_language(m, r, 8);
        CHECK(minimize(m).state_count == m.state_count);
        Regex back = dfa_to_re(m);
        CHECK(conforms(back, OperatorProfile::plain()));
        CHECK(equivalent_upto(back, r, 6));
        check_dfa_language(complement_dfa(d), Regex::complement(r), 6);
    }
}

TEST_CASE("complement and product", "[automata]") {
    Dfa all = dfa_of("(0|1)*");
    Dfa none = complement_dfa(all);
    for (const Word& w : oracle::words_upto(4)) {
        CHECK_FALSE(none.accepts(w));
    }
    Dfa one = dfa_of("1");
    Dfa not_one = complement_dfa(one);
    CHECK_FALSE(not_one.accepts(Word::parse("1")));
    CHECK(not_one.accepts(Word::parse("0")));
    CHECK(not_one.accepts(Word()));
    CHECK(not_one.accepts(Word::parse("11")));
    Dfa twice = complement_dfa(not_one);
    CHECK(twice.state_count == one.state_count);
    CHECK(twice.finals == one.finals);
    CHECK(twice.transitions == one.transitions);

    Dfa zero = dfa_of("0");
    Dfa either = product(zero, one, ProductOp::Or);
    for (const Word& w : oracle::words_upto(3)) {
        CHECK(either.accepts(w) == (w.to_string() == "0" || w.to_string() == "1"));
    }

    Rng rng = derive_rng(33, 0);
    auto opts = plain_opts();
    for (int t = 0; t < 100; ++t) {
        Regex a = random_regex(opts, rng);
        Regex b = random_regex(opts, rng);
        Dfa da = determinize(thompson(a));
        Dfa db = determinize(thompson(b));
        Dfa both = product(da, db, ProductOp::And);
        CHECK(both.state_count <= da.state_count * db.state_count);
        check_dfa_language(both, Regex::inter(a, b), 7);
        check_dfa_language(product(da, db, ProductOp::Or), Regex::alt(a, b), 7);
        check_dfa_language(product(da, da, ProductOp::And), a, 7);
        Dfa empty = product(da, complement_dfa(da), ProductOp::And);
        for (const Word& w : oracle::words_upto(6)) {
            REQUIRE_FALSE(empty.accepts(w));
        }
    }
}

TEST_CASE("minimize", "[automata]") {
    CHECK(minimize(dfa_of("(0|1)*")).state_count == 1);
    CHECK(minimize(dfa_of("(0|1)*|0*|1(0|1)*")).state_count == 1);
    // Words with an even number of 1s.
    CHECK(minimize(dfa_of("(0|10*1)*")).state_count == 2);
    CHECK(minimize(determinize(nth_from_end_nfa(5))).state_count == 32);
}

TEST_CASE("compile extended", "[automata]") {
    Dfa all = compile_extended(Regex::complement(Regex::empty_set()));
    for (const Word& w : oracle::words_upto(5)) {
        CHECK(all.accepts(w));
    }
    Regex a = parse("(01)*");
    Dfa none = compile_extended(Regex::inter(a, Regex::complement(a)));
    for (const Word& w : oracle::words_upto(6)) {
        CHECK_FALSE(none.accepts(w));
    }

    Rng rng = derive_rng(34, 0);
    RegexGenOptions opts;
    for (int t = 0; t < 300; ++t) {
        Regex r = random_regex(opts, rng);
        Dfa d = compile_extended(r);
        Matcher m(r);
        for (const Word& w : oracle::words_upto(8)) {
            INFO(print(r) << " on " << w.to_string());
            REQUIRE(d.accepts(w) == m.matches(w));
        }
    }

    for (int t = 0; t < 20; ++t) {
        BooleanFormula phi = random_formula(6, 15, rng);
        Dfa d = compile_extended(formula_to_re(phi, FormulaTarget::Neg, false));
        for (const Word& x : oracle::words_of_length(6)) {
            REQUIRE(d.accepts(x) == oracle::formula_value(phi.root, x));
        }
    }
}

TEST_CASE("dfa to re", "[automata]") {
    Regex all = dfa_to_re(minimize(dfa_of("(0|1)*")));
    CHECK(equivalent_upto(all, parse("(0|1)*"), 6));
    Regex none = dfa_to_re(determinize(thompson(Regex::empty_set())));
    CHECK(enumerate_language(none, 6).size() == 0);
    Regex eps = dfa_to_re(minimize(dfa_of("e")));
    CHECK(equivalent_upto(eps, Regex::epsilon(), 6));
}

TEST_CASE("metrics", "[automata]") {
    Dfa d(1);
    d.finals[0] = true;
    CHECK(metrics(d).states == 1);
    CHECK(metrics(d).description_bits == 1);
    Nfa a(4);
    CHECK(metrics(a).description_bits == 16);
    CHECK(metrics(Dfa(8)).description_bits == 24);
}

TEST_CASE("automaton text format", "[automata]") {
    Dfa d = minimize(dfa_of("(0|10*1)*"));
    std::ostringstream ss;
    write_automaton(ss, d);
    Automaton back = parse_automaton(ss.str());
    REQUIRE(std::holds_alternative<Dfa>(back));
    const Dfa& e = std::get<Dfa>(back);
    CHECK(e.transitions == d.transitions);
    CHECK(e.finals == d.finals);
    CHECK(e.initial == d.initial);

    Nfa n = thompson(parse("(0|1)*1(0|1)"));
    std::ostringstream sn;
    write_automaton(sn, n);
    Automaton nb = parse_automaton(sn.str());
    REQUIRE(std::holds_alternative<Nfa>(nb));
    CHECK(std::get<Nfa>(nb).transitions == n.transitions);
    CHECK(std::get<Nfa>(nb).initials == n.initials);

    CHECK(sn.str().rfind("nfa ", 0) == 0);
    for (const char* bad : {"", "dfa x\n", "dfa 2\ninit 0\nfinal 1\nt 0 0 1\n", "nfa 2\ninit 2\nfinal\n",
                            "nfa 1\ninit 0\nfinal 0\nt 0 2 0\n", "nfa 1\nfinal 0\n", "dfa 1\ninit 0\nfinal\nq\n"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_automaton(bad), ParseError);
    }
    try {
        parse_automaton("nfa 2\ninit 0\nfinal 1\nt 0 1 5\n");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}
