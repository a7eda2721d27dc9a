#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "rexlab/error.hpp"
#include "rexlab/local_prg.hpp"

using namespace rexlab;

TEST_CASE("sampled hyperedges are distinct and reproducible", "[local_prg]") {
    Rng rng = derive_rng(51, 0);
    Hypergraph g = sample_hypergraph(10, 2000, 4, rng);
    CHECK(g.m() == 2000);
    CHECK_NOTHROW(g.validate());
    for (const auto& e : g.edges) {
        REQUIRE(oracle::distinct(e));
    }
    Rng again = derive_rng(51, 0);
    CHECK(sample_hypergraph(10, 2000, 4, again).edges == g.edges);

    Rng full = derive_rng(52, 0);
    for (const auto& e : sample_hypergraph(5, 50, 5, full).edges) {
        std::vector<std::size_t> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::size_t>{1, 2, 3, 4, 5});
    }
    CHECK_THROWS_AS(sample_hypergraph(3, 1, 4, rng), DomainError);
}

TEST_CASE("k = 1 vertices are uniform", "[local_prg]") {
    Rng rng = derive_rng(53, 0);
    const std::size_t m = 100000;
    const std::size_t n = 8;
    Hypergraph g = sample_hypergraph(n, m, 1, rng);
    std::vector<double> freq(n + 1, 0);
    for (const auto& e : g.edges) {
        freq[e[0]] += 1;
    }
    double p = 1.0 / n;
    double sigma = std::sqrt(m * p * (1 - p));
    for (std::size_t i = 1; i <= n; ++i) {
        CHECK(std::abs(freq[i] - m * p) <= 3 * sigma);
    }
}

TEST_CASE("ordered position pairs are uniform over distinct pairs", "[local_prg]") {
    Rng rng = derive_rng(54, 0);
    const std::size_t n = 8;
    const std::size_t m = 56000;
    Hypergraph g = sample_hypergraph(n, m, 3, rng);
    std::map<std::pair<std::size_t, std::size_t>, double> counts;
    for (const auto& e : g.edges) {
        counts[{e[0], e[2]}] += 1;
    }
    REQUIRE(counts.size() == n * (n - 1));
    double expected = static_cast<double>(m) / (n * (n - 1));
    double chi2 = 0;
    for (const auto& [pair, c] : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 55 degrees of freedom; the 0.999 quantile is about 93.2.
    CHECK(chi2 < 93.2);
}

TEST_CASE("restrict", "[local_prg]") {
    Word x = Word::parse("1010");
    CHECK(restrict_seed(x, {1, 3}).to_string() == "11");
    CHECK(restrict_seed(x, {2, 4}).to_string() == "00");
    CHECK(restrict_seed(x, {3, 2, 1}).to_string() == "101");
    CHECK_THROWS_AS(restrict_seed(x, {5}), DomainError);
    CHECK_THROWS_AS(restrict_seed(x, {1, 1}), DomainError);
}

TEST_CASE("predicates", "[local_prg]") {
    Predicate ones{2, {1, 1, 1, 1}};
    for (const Word& u : oracle::words_of_length(2)) {
        CHECK(eval_predicate(ones, u) == 1);
    }
    Predicate x{2, {0, 1, 1, 0}};
    CHECK(eval_predicate(x, Word::parse("10")) == 1);
    CHECK_THROWS_AS(eval_predicate(x, Word::parse("1")), DomainError);

    Predicate d = default_predicate(3);
    CHECK(eval_predicate(d, Word::parse("000")) == 0);
    CHECK(eval_predicate(d, Word::parse("111")) == 0);
    CHECK(eval_predicate(d, Word::parse("100")) == 1);
    CHECK(eval_predicate(d, Word::parse("110")) == 1);
    CHECK(eval_predicate(d, Word::parse("011")) == 1);
    for (const Word& u : oracle::words_of_length(5)) {
        Bit expect = u[0] ^ (u[1] & u[2]);
        CHECK(eval_predicate(default_predicate(5), u) == expect);
    }
    CHECK(default_predicate(2).table == std::vector<Bit>{0, 1, 1, 0});
    CHECK(default_predicate(1).table == std::vector<Bit>{0, 1});
    CHECK_THROWS_AS(default_predicate(0), DomainError);
    CHECK_THROWS_AS((Predicate{2, {1, 0}}.validate()), DomainError);
}

TEST_CASE("prg output", "[local_prg]") {
    Predicate x{2, {0, 1, 1, 0}};
    CHECK(prg_output(x, Hypergraph{2, 2, {}}, Word::parse("11")).empty());
    CHECK(prg_output(x, Hypergraph{2, 2, {{1, 2}}}, Word::parse("11")).to_string() == "0");
    CHECK_THROWS_AS(prg_output(x, Hypergraph{3, 2, {}}, Word::parse("11")), DomainError);
    CHECK_THROWS_AS(prg_output(default_predicate(3), Hypergraph{2, 2, {}}, Word::parse("11")), DomainError);

    Rng rng = derive_rng(55, 0);
    for (int t = 0; t < 100; ++t) {
        std::size_t k = uniform_int(1, 4, rng);
        std::size_t n = uniform_int(k, 12, rng);
        Predicate p{k, {}};
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            p.table.push_back(static_cast<Bit>(uniform_int(0, 1, rng)));
        }
        Hypergraph g = sample_hypergraph(n, uniform_int(0, 30, rng), k, rng);
        Word seed = random_word(n, rng);
        Word y = prg_output(p, g, seed);
        REQUIRE(y.size() == g.m());
        for (std::size_t i = 0; i < g.m(); ++i) {
            std::size_t row = 0;
            for (std::size_t v : g.edges[i]) {
                row = 2 * row + seed[v - 1];
            }
            REQUIRE(y[i] == p.table[row]);
        }
    }
}

TEST_CASE("hypergraph and predicate text", "[local_prg]") {
    Rng rng = derive_rng(56, 0);
    Hypergraph g = sample_hypergraph(8, 5, 3, rng);
    std::ostringstream ss;
    write_hypergraph(ss, g);
    CHECK(ss.str().rfind("hg 8 5 3\n", 0) == 0);
    Hypergraph back = parse_hypergraph(ss.str());
    CHECK(back.edges == g.edges);
    CHECK(back.n == 8);
    CHECK(back.k == 3);
    for (const char* bad : {"", "hg 4 1 2\n1 1\n", "hg 4 1 2\n1 5\n", "hg 4 2 2\n1 2\n", "hg 4 1 2\n1 2 3\n",
                            "hg 2 0 3\n"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_hypergraph(bad), ParseError);
    }

    std::ostringstream ps;
    write_predicate(ps, default_predicate(3));
    CHECK(ps.str() == "pred 3 00011110\n");
    CHECK(parse_predicate(ps.str()) == default_predicate(3));
    CHECK_THROWS_AS(parse_predicate("pred 2 010"), ParseError);
    CHECK_THROWS_AS(parse_predicate("pred 1 0a"), ParseError);
}
