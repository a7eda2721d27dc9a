#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "rexlab/error.hpp"
#include "rexlab/gadget.hpp"
#include "rexlab/match.hpp"

using namespace rexlab;

namespace {

const Regex S0 = Regex::symbol(0);
const Regex S1 = Regex::symbol(1);
const Regex U = Regex::alt(S0, S1);

constexpr GadgetVariant kVariants[] = {GadgetVariant::Starred, GadgetVariant::StarFree, GadgetVariant::Counting};

GadgetConfig cfg_of(std::size_t n, std::size_t k, std::size_t N, GadgetVariant v = GadgetVariant::Starred) {
    return make_config(n, k, N, Rational(1, 5), v, 7);
}

Hyperedge random_edge(std::size_t n, std::size_t k, Rng& rng) {
    Hyperedge e;
    while (e.size() < k) {
        std::size_t v = uniform_int(1, n, rng);
        if (std::find(e.begin(), e.end(), v) == e.end()) {
            e.push_back(v);
        }
    }
    return e;
}

// A valid extended encoding of a random edge followed by random bits.
Word random_valid(std::size_t n, std::size_t k, std::size_t N, Rng& rng) {
    Word z = encode_compressed(random_edge(n, k, rng), n);
    z.append(random_word(N - z.size(), rng));
    return z;
}

} // namespace

TEST_CASE("one-hot encoding", "[gadget]") {
    CHECK(encode_onehot({2}, 4).to_string() == "1011");
    CHECK(encode_onehot({1, 2}, 2).to_string() == "0110");
    CHECK_THROWS_AS(encode_onehot({1, 1}, 2), DomainError);
    CHECK_THROWS_AS(decode_onehot(Word::parse("0011"), 2, 2), DomainError);
    Rng rng = derive_rng(61, 0);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = uniform_int(2, 12, rng);
        std::size_t k = uniform_int(1, std::min<std::size_t>(n, 4), rng);
        Hyperedge e = random_edge(n, k, rng);
        REQUIRE(decode_onehot(encode_onehot(e, n), n, k) == e);
    }
}

TEST_CASE("compressed encoding", "[gadget]") {
    CHECK(encode_compressed({1, 8, 3}, 8).to_string() == "000111010");
    CHECK(encode_compressed({2, 1}, 2).to_string() == "10");
    CHECK_THROWS_AS(encode_compressed({1, 2}, 6), DomainError);
    Rng rng = derive_rng(62, 0);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = std::size_t{1} << uniform_int(1, 6, rng);
        std::size_t k = uniform_int(1, std::min<std::size_t>(n, 4), rng);
        Hyperedge e = random_edge(n, k, rng);
        Word z = encode_compressed(e, n);
        REQUIRE(z.size() == k * exact_log2(n));
        REQUIRE(decode_compressed(z, n, k) == e);
        REQUIRE(oracle::blocks(z, n, k) == e);
    }
}

TEST_CASE("valid extended encodings", "[gadget]") {
    Word z = Word::parse("000111010");
    z.append(Word::parse("1101"));
    CHECK(is_valid_extended(z, 8, 3));
    CHECK_FALSE(is_valid_extended(Word::zeros(12), 8, 3));
    CHECK(is_valid_extended(Word::zeros(5), 8, 1));
    CHECK_THROWS_AS(is_valid_extended(Word::zeros(8), 8, 3), DomainError);
    for (const Word& w : oracle::words_of_length(8)) {
        REQUIRE(is_valid_extended(w, 4, 3) == oracle::distinct(oracle::blocks(w, 4, 3)));
    }
}

TEST_CASE("validity probability", "[gadget]") {
    CHECK(validity_probability(8, 3) == Rational(336, 512));
    CHECK(validity_probability(8, 1) == Rational(1));
    CHECK(validity_probability(2, 2) == Rational(1, 2));
    for (std::size_t n : {4, 8, 16, 32}) {
        for (std::size_t k : {2, 3, 4}) {
            if (k > n) {
                continue;
            }
            CHECK(validity_probability(n, k) >= validity_lower_bound(n, k));
            // Exhaustive count over all k-tuples for the small cases.
            if (std::pow(n, k) <= 70000) {
                std::size_t ell = exact_log2(n);
                std::size_t good = 0;
                for (const Word& w : oracle::words_of_length(k * ell)) {
                    good += oracle::distinct(oracle::blocks(w, n, k)) ? 1 : 0;
                }
                CHECK(validity_probability(n, k) ==
                      Rational(static_cast<std::int64_t>(good), std::int64_t{1} << (k * ell)));
            }
        }
    }
    CHECK(validity_lower_bound(8, 3) == Rational(125, 512));
}

TEST_CASE("config validation and text", "[gadget]") {
    CHECK_NOTHROW(cfg_of(16, 3, 64));
    CHECK_THROWS_AS(cfg_of(12, 3, 64), DomainError);
    CHECK_THROWS_AS(cfg_of(4, 5, 64), DomainError);
    CHECK_THROWS_AS(cfg_of(16, 3, 11), DomainError);
    CHECK_THROWS_AS(make_config(16, 3, 64, Rational(1, 2), GadgetVariant::Starred, 0), DomainError);
    CHECK_THROWS_AS(make_config(16, 3, 64, Rational(0), GadgetVariant::Starred, 0), DomainError);
    GadgetConfig bad_pred = cfg_of(16, 3, 64);
    bad_pred.predicate = default_predicate(2);
    CHECK_THROWS_AS(bad_pred.validate(), DomainError);

    CHECK(cfg_of(64, 3, 64).warnings().empty());
    CHECK(cfg_of(16, 3, 64).warnings().size() == 1);

    GadgetConfig c = cfg_of(16, 3, 64, GadgetVariant::Counting);
    std::string line = format_config(c);
    CHECK(line == "gadget n=16 k=3 N=64 gamma=1/5 variant=counting pred=00011110 seed=7");
    GadgetConfig back = parse_config(line);
    CHECK(format_config(back) == line);
    CHECK(parse_config("gadget n=4 k=2 N=8 gamma=0.25 variant=star_free pred=0110 seed=1").gamma == Rational(1, 4));
    for (const char* bad : {"gadget n=4 k=2 N=8 gamma=0.2 variant=x pred=0110 seed=1",
                            "gadget n=4 k=2 N=8 gamma=0.2 variant=starred pred=0110",
                            "gadget n=4 k=2 N=8 gamma=0.2 variant=starred pred=0110 seed=1 extra=2",
                            "gadget n=4 k=2 N=8 gamma=0.2 variant=starred pred=011 seed=1",
                            "config n=4"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_config(bad), ParseError);
    }
}

TEST_CASE("I_b", "[gadget]") {
    CHECK(build_Ib(Word::parse("10"), 1, 2) == S0);
    CHECK(build_Ib(Word::parse("11"), 0, 2) == Regex::empty_set());
    Rng rng = derive_rng(63, 0);
    for (int t = 0; t < 20; ++t) {
        Word x = random_word(8, rng);
        for (Bit b : {Bit{0}, Bit{1}}) {
            Regex ib = build_Ib(x, b, 8);
            for (std::size_t i = 1; i <= 8; ++i) {
                REQUIRE(matches(ib, bin_index(i, 8)) == (x[i - 1] == b));
            }
            std::size_t c = 0;
            for (Bit v : x.bits()) {
                c += v == b;
            }
            CHECK(size_of(ib, false) == (c == 0 ? 1 : 3 * c + c - 1));
        }
    }
}

TEST_CASE("R_u", "[gadget]") {
    GadgetConfig c1 = cfg_of(2, 1, 3);
    Word x = Word::parse("10");
    CHECK(build_Ru(x, Word::parse("1"), c1) == Regex::concat(build_Ib(x, 1, 2), Regex::star(U)));
    GadgetConfig sf = cfg_of(8, 2, 10, GadgetVariant::StarFree);
    Rng rng = derive_rng(64, 0);
    Word seed = random_word(8, rng);
    CHECK_FALSE(contains_kind(build_Ru(seed, Word::parse("01"), sf), RegexKind::Star));

    for (GadgetVariant v : kVariants) {
        GadgetConfig c = cfg_of(8, 2, 10, v);
        for (const Word& u : oracle::words_of_length(2)) {
            Matcher m(build_Ru(seed, u, c));
            for (std::size_t i = 1; i <= 8; ++i) {
                for (std::size_t j = 1; j <= 8; ++j) {
                    if (i == j) {
                        continue;
                    }
                    Word z = encode_compressed({i, j}, 8);
                    if (v == GadgetVariant::Starred) {
                        z.append(Word::parse("1011"));
                    }
                    bool expect = seed[i - 1] == u[0] && seed[j - 1] == u[1];
                    REQUIRE(m.matches(z) == expect);
                }
            }
        }
    }
}

TEST_CASE("R_x", "[gadget]") {
    GadgetConfig c = cfg_of(4, 1, 6);
    Word x = Word::parse("0110");
    CHECK(build_Rx(x, Predicate{1, {0, 0}}, c) == Regex::empty_set());
    Matcher all(build_Rx(x, Predicate{1, {1, 1}}, c));
    for (const Word& z : oracle::words_of_length(6)) {
        CHECK(all.matches(z));
    }

    Rng rng = derive_rng(65, 0);
    for (GadgetVariant v : kVariants) {
        GadgetConfig big = cfg_of(16, 3, 64, v);
        Word seed = random_word(16, rng);
        Matcher rx(build_Rx(seed, big.predicate, big));
        for (int t = 0; t < 500; ++t) {
            Word z = random_valid(16, 3, 64, rng);
            Hyperedge e = decode_compressed(z, 16, 3);
            REQUIRE(rx.matches(z) == (eval_predicate(big.predicate, restrict_seed(seed, e)) == 1));
        }
    }
}

TEST_CASE("R_dup", "[gadget]") {
    CHECK(build_Rdup(cfg_of(4, 1, 4)) == Regex::empty_set());
    for (GadgetVariant v : kVariants) {
        GadgetConfig c = cfg_of(4, 2, 8, v);
        Matcher dup(build_Rdup(c));
        CHECK(dup.matches(Word::zeros(8)));
        for (const Word& z : oracle::words_of_length(8)) {
            REQUIRE(dup.matches(z) == !oracle::distinct(oracle::blocks(z, 4, 2)));
        }
    }
    // The starred pattern accepts any longer completion too.
    CHECK(matches(build_Rdup(cfg_of(4, 2, 8)), Word::parse("0101111")));
}

TEST_CASE("target labeling law", "[gadget]") {
    for (const Word& x : oracle::words_of_length(4)) {
        std::vector<std::vector<bool>> rows;
        for (GadgetVariant v : kVariants) {
            GadgetConfig c = cfg_of(4, 2, 8, v);
            Matcher r(build_target(x, c));
            Matcher rx(build_Rx(x, c.predicate, c));
            Matcher rd(build_Rdup(c));
            std::vector<bool> row;
            for (const Word& z : oracle::words_of_length(8)) {
                bool got = r.matches(z);
                REQUIRE(got == oracle::gadget_label(z, x, c.predicate, 4, 2));
                REQUIRE(got == (rx.matches(z) || rd.matches(z)));
                row.push_back(got);
            }
            rows.push_back(row);
        }
        CHECK(rows[0] == rows[1]);
        CHECK(rows[1] == rows[2]);
    }
}

TEST_CASE("gadget sizes", "[gadget]") {
    for (GadgetVariant v : kVariants) {
        for (std::size_t n : {4, 8, 16}) {
            for (std::size_t k : {2, 3}) {
                GadgetConfig c = cfg_of(n, k, n * n, v);
                GadgetSize s = gadget_size(gadget_seed(c), c);
                INFO(format_config(c));
                CHECK(s.measured == s.closed_form);
                if (v == GadgetVariant::StarFree) {
                    CHECK(s.measured >= c.N);
                }
            }
        }
        // Degenerate seeds leave one I_b empty.
        GadgetConfig c = cfg_of(8, 3, 20, v);
        for (const char* x : {"00000000", "11111111"}) {
            GadgetSize s = gadget_size(Word::parse(x), c);
            CHECK(s.measured == s.closed_form);
        }
        GadgetConfig zero = c;
        zero.predicate = Predicate{3, std::vector<Bit>(8, 0)};
        GadgetSize s = gadget_size(Word::parse("01100110"), zero);
        CHECK(s.measured == s.closed_form);
        GadgetConfig tight = cfg_of(8, 3, 9, v);
        s = gadget_size(Word::parse("01100110"), tight);
        CHECK(s.measured == s.closed_form);
    }

    double base = 0;
    for (std::size_t n : {8, 16, 32, 64}) {
        GadgetConfig c = cfg_of(n, 3, 64);
        double ell = std::log2(static_cast<double>(n));
        double ratio = static_cast<double>(gadget_size(gadget_seed(c), c).measured) / (n * ell * ell);
        if (n == 8) {
            base = ratio;
        }
        CHECK(ratio <= base);
    }
}

TEST_CASE("challenges", "[gadget]") {
    GadgetConfig c = cfg_of(16, 3, 64);
    Rng a = derive_rng(66, 0);
    Rng b = derive_rng(66, 0);
    Challenge pr = make_challenge(c, 300, ChallengeMode::Pseudorandom, a);
    Challenge rd = make_challenge(c, 300, ChallengeMode::Random, b);
    CHECK(pr.edges == rd.edges);
    REQUIRE(pr.hidden_seed);
    CHECK_FALSE(rd.hidden_seed);
    CHECK(prg_output(c.predicate, Hypergraph{16, 3, pr.edges}, *pr.hidden_seed) == pr.y);

    Rng big = derive_rng(67, 0);
    Challenge r = make_challenge(c, 10000, ChallengeMode::Random, big);
    double ones = 0;
    for (Bit y : r.y.bits()) {
        ones += y;
    }
    CHECK(std::abs(ones - 5000) <= 3 * std::sqrt(10000 * 0.25));

    std::ostringstream ss;
    write_challenge(ss, pr);
    CHECK(parse_challenge(ss.str()) == pr);
    std::ostringstream sr;
    write_challenge(sr, rd);
    CHECK(parse_challenge(sr.str()) == rd);
    for (const char* bad : {"", "challenge 4 2 1 random\n1 1 0\n", "challenge 4 2 2 random\n1 2 0\n",
                            "challenge 4 2 1 random\n1 2 3\n", "challenge 4 2 1 pseudorandom\n1 2 0\n",
                            "challenge 4 2 1 maybe\n1 2 0\n"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_challenge(bad), ParseError);
    }
}

TEST_CASE("simulated oracle", "[gadget]") {
    GadgetConfig c = cfg_of(16, 3, 64);
    Rng rng = derive_rng(68, 0);
    Challenge ch = make_challenge(c, 1000, ChallengeMode::Pseudorandom, rng);
    auto ex = simulate_oracle(c, ch, 1000, rng);
    REQUIRE(ex.size() == 1000);
    Matcher target(build_target(*ch.hidden_seed, c));
    for (const auto& e : ex) {
        REQUIRE(e.z.size() == 64);
        REQUIRE(target.matches(e.z) == (e.y == 1));
        if (!is_valid_extended(e.z, 16, 3)) {
            REQUIRE(e.y == 1);
        }
    }
    Word dup = encode_compressed({5, 9, 2}, 16);
    dup = Word::parse(dup.to_string().substr(0, 4) + dup.to_string().substr(0, 4) + dup.to_string().substr(8));
    dup.append(Word::zeros(52));
    CHECK(target.matches(dup));

    CHECK_THROWS_AS(simulate_oracle(c, ch, 1001, rng), DomainError);
    GadgetConfig other = cfg_of(8, 3, 64);
    CHECK_THROWS_AS(simulate_oracle(other, ch, 10, rng), DomainError);

    Rng u = derive_rng(69, 0);
    Challenge rc = make_challenge(c, 10000, ChallengeMode::Random, u);
    auto many = simulate_oracle(c, rc, 10000, u);
    const double sigma = std::sqrt(10000 * 0.25);
    for (std::size_t pos = 0; pos < 64; ++pos) {
        double ones = 0;
        for (const auto& e : many) {
            ones += e.z[pos];
        }
        CHECK(std::abs(ones - 5000) <= 3 * sigma);
    }

    std::ostringstream ss;
    write_examples(ss, std::span<const LabeledExample>(ex.data(), 5));
    auto back = parse_examples(ss.str());
    CHECK(back == std::vector<LabeledExample>(ex.begin(), ex.begin() + 5));
    CHECK_THROWS_AS(parse_examples("examples 3 1\n0101 1\n"), ParseError);
    CHECK_THROWS_AS(parse_examples("examples 2 2\n01 1\n"), ParseError);
    CHECK_THROWS_AS(parse_examples("examples 2 1\n01 2\n"), ParseError);
}
