#include "rexlab/local_prg.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <string>

#include "rexlab/error.hpp"

namespace rexlab {

void validate_edge(const Hyperedge& e, std::size_t n) {
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] < 1 || e[j] > n) {
            throw DomainError("hyperedge vertex " + std::to_string(e[j]) + " outside [1, " + std::to_string(n) + "]");
        }
        for (std::size_t l = 0; l < j; ++l) {
            if (e[l] == e[j]) {
                throw DomainError("hyperedge repeats vertex " + std::to_string(e[j]));
            }
        }
    }
}

void Hypergraph::validate() const {
    if (k > n) {
        throw DomainError("locality k exceeds n");
    }
    for (const auto& e : edges) {
        if (e.size() != k) {
            throw DomainError("hyperedge of size " + std::to_string(e.size()) + " in a k = " + std::to_string(k) +
                              " hypergraph");
        }
        validate_edge(e, n);
    }
}

void Predicate::validate() const {
    if (k >= 63 || table.size() != (std::size_t{1} << k)) {
        throw DomainError("predicate table must have exactly 2^k entries");
    }
    for (Bit b : table) {
        if (b > 1) {
            throw DomainError("predicate table entries must be 0 or 1");
        }
    }
}

Hypergraph sample_hypergraph(std::size_t n, std::size_t m, std::size_t k, Rng& rng) {
    if (k > n) {
        throw DomainError("cannot sample " + std::to_string(k) + " distinct vertices out of " + std::to_string(n));
    }
    Hypergraph g{n, k, {}};
    g.edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Hyperedge e;
        e.reserve(k);
        // Redrawing a colliding position keeps every ordered distinct tuple
        // equally likely.
        while (e.size() < k) {
            auto v = static_cast<std::size_t>(uniform_int(1, n, rng));
            if (std::find(e.begin(), e.end(), v) == e.end()) {
                e.push_back(v);
            }
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

Word restrict_seed(const Seed& x, const Hyperedge& e) {
    validate_edge(e, x.size());
    Word u;
    for (std::size_t idx : e) {
        u.push_back(x[idx - 1]);
    }
    return u;
}

Bit eval_predicate(const Predicate& p, const Word& u) {
    if (u.size() != p.k) {
        throw DomainError("predicate of arity " + std::to_string(p.k) + " applied to " + std::to_string(u.size()) +
                          " bits");
    }
    return p.table.at(u.to_index());
}

Word prg_output(const Predicate& p, const Hypergraph& g, const Seed& x) {
    if (p.k != g.k || x.size() != g.n) {
        throw DomainError("arity mismatch between predicate, hypergraph and seed");
    }
    Word y;
    for (const auto& e : g.edges) {
        y.push_back(eval_predicate(p, restrict_seed(x, e)));
    }
    return y;
}

Predicate default_predicate(std::size_t k) {
    if (k == 0 || k >= 63) {
        throw DomainError("default predicate needs 1 <= k < 63");
    }
    Predicate p{k, std::vector<Bit>(std::size_t{1} << k)};
    for (std::size_t j = 0; j < p.table.size(); ++j) {
        Word u = Word::from_index(j, k);
        Bit v = u[0];
        if (k == 2) {
            v ^= u[1];
        } else if (k >= 3) {
            v ^= static_cast<Bit>(u[1] & u[2]);
        }
        p.table[j] = v;
    }
    return p;
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
    out << "hg " << g.n << ' ' << g.m() << ' ' << g.k << '\n';
    for (const auto& e : g.edges) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            out << (j ? " " : "") << e[j];
        }
        out << '\n';
    }
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

std::size_t to_count(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    }
    try {
        return std::stoul(tok);
    } catch (const std::exception&) {
        fail(line, "number out of range '" + tok + "'");
    }
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Hypergraph g;
    std::size_t m = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::vector<std::string> toks;
        for (std::string t; tokens >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        if (!header) {
            if (toks.size() != 4 || toks[0] != "hg") {
                fail(line_no, "expected header 'hg <n> <m> <k>'");
            }
            g.n = to_count(toks[1], line_no);
            m = to_count(toks[2], line_no);
            g.k = to_count(toks[3], line_no);
            if (g.k > g.n) {
                fail(line_no, "k exceeds n");
            }
            header = true;
            continue;
        }
        if (toks.size() != g.k) {
            fail(line_no, "expected " + std::to_string(g.k) + " vertices");
        }
        Hyperedge e;
        for (const auto& t : toks) {
            e.push_back(to_count(t, line_no));
        }
        try {
            validate_edge(e, g.n);
        } catch (const DomainError& err) {
            fail(line_no, err.what());
        }
        g.edges.push_back(std::move(e));
    }
    if (!header) {
        fail(line_no + 1, "missing header 'hg <n> <m> <k>'");
    }
    if (g.edges.size() != m) {
        fail(line_no + 1, "declared " + std::to_string(m) + " edges, found " + std::to_string(g.edges.size()));
    }
    return g;
}

void write_predicate(std::ostream& out, const Predicate& p) {
    out << "pred " << p.k << ' ';
    for (Bit b : p.table) {
        out << static_cast<char>('0' + b);
    }
    out << '\n';
}

Predicate parse_predicate(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string key;
    std::string k_tok;
    std::string table;
    std::string extra;
    if (!(in >> key >> k_tok >> table) || key != "pred" || (in >> extra)) {
        fail(1, "expected 'pred <k> <table>'");
    }
    Predicate p{to_count(k_tok, 1), {}};
    if (p.k >= 32 || table.size() != (std::size_t{1} << p.k)) {
        fail(1, "predicate table must have 2^k = " + std::to_string(std::size_t{1} << std::min<std::size_t>(p.k, 31)) +
                    " bits");
    }
    try {
        Word bits = Word::parse(table);
        p.table.assign(bits.bits().begin(), bits.bits().end());
    } catch (const ParseError& err) {
        fail(1, err.what());
    }
    return p;
}

} // namespace rexlab
