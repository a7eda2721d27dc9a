#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "rexlab/error.hpp"
#include "rexlab/gadget.hpp"

namespace rexlab {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::uint64_t to_u64(const std::string& tok, std::size_t line) {
    if (!all_digits(tok)) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        fail(line, "number out of range '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) {
        toks.push_back(t);
    }
    return toks;
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> token_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = split(line);
        if (!toks.empty()) {
            out.emplace_back(no, std::move(toks));
        }
    }
    return out;
}

} // namespace

std::string format_config(const GadgetConfig& cfg) {
    std::string table;
    for (Bit b : cfg.predicate.table) {
        table.push_back(static_cast<char>('0' + b));
    }
    return "gadget n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) + " N=" + std::to_string(cfg.N) +
           " gamma=" + to_string(cfg.gamma) + " variant=" + std::string(variant_name(cfg.variant)) + " pred=" + table +
           " seed=" + std::to_string(cfg.prng_seed);
}

GadgetConfig parse_config(std::string_view line) {
    auto toks = split(std::string(line));
    if (toks.empty() || toks[0] != "gadget") {
        fail(1, "expected a line starting with 'gadget'");
    }
    std::map<std::string, std::string> fields;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) {
            fail(1, "expected key=value, got '" + toks[i] + "'");
        }
        std::string key = toks[i].substr(0, eq);
        if (!fields.emplace(key, toks[i].substr(eq + 1)).second) {
            fail(1, "duplicate key '" + key + "'");
        }
    }
    static const char* const keys[] = {"n", "k", "N", "gamma", "variant", "pred", "seed"};
    for (const auto& [key, value] : fields) {
        if (std::find_if(std::begin(keys), std::end(keys), [&](const char* k) { return key == k; }) == std::end(keys)) {
            fail(1, "unknown key '" + key + "'");
        }
    }
    for (const char* key : keys) {
        if (!fields.count(key)) {
            fail(1, std::string("missing key '") + key + "'");
        }
    }
    GadgetConfig cfg;
    cfg.n = to_u64(fields["n"], 1);
    cfg.k = to_u64(fields["k"], 1);
    cfg.N = to_u64(fields["N"], 1);
    try {
        cfg.gamma = parse_rational(fields["gamma"]);
        cfg.variant = parse_variant(fields["variant"]);
        Word table = Word::parse(fields["pred"]);
        cfg.predicate = Predicate{cfg.k, std::vector<Bit>(table.bits().begin(), table.bits().end())};
    } catch (const ParseError& e) {
        fail(1, e.what());
    }
    cfg.prng_seed = to_u64(fields["seed"], 1);
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        fail(1, e.what());
    }
    return cfg;
}

void write_challenge(std::ostream& out, const Challenge& ch) {
    out << "challenge " << ch.n << ' ' << ch.k << ' ' << ch.edges.size() << ' ' << mode_name(ch.mode) << '\n';
    if (ch.hidden_seed) {
        out << "seed " << ch.hidden_seed->to_string() << '\n';
    }
    for (std::size_t i = 0; i < ch.edges.size(); ++i) {
        for (std::size_t v : ch.edges[i]) {
            out << v << ' ';
        }
        out << static_cast<int>(ch.y[i]) << '\n';
    }
}

Challenge parse_challenge(std::string_view text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0].second.size() != 5 || lines[0].second[0] != "challenge") {
        fail(lines.empty() ? 1 : lines[0].first, "expected header 'challenge <n> <k> <m> <mode>'");
    }
    const auto& head = lines[0].second;
    Challenge ch;
    std::size_t hl = lines[0].first;
    ch.n = to_u64(head[1], hl);
    ch.k = to_u64(head[2], hl);
    std::size_t m = to_u64(head[3], hl);
    try {
        ch.mode = parse_mode(head[4]);
    } catch (const ParseError& e) {
        fail(hl, e.what());
    }
    std::size_t idx = 1;
    if (idx < lines.size() && lines[idx].second[0] == "seed") {
        if (lines[idx].second.size() != 2) {
            fail(lines[idx].first, "expected 'seed <bits>'");
        }
        try {
            ch.hidden_seed = Word::parse(lines[idx].second[1]);
        } catch (const ParseError& e) {
            fail(lines[idx].first, e.what());
        }
        ++idx;
    }
    std::vector<Bit> labels;
    for (; idx < lines.size(); ++idx) {
        const auto& [no, toks] = lines[idx];
        if (toks.size() != ch.k + 1) {
            fail(no, "expected " + std::to_string(ch.k) + " vertices and a label");
        }
        Hyperedge e;
        for (std::size_t j = 0; j < ch.k; ++j) {
            e.push_back(to_u64(toks[j], no));
        }
        try {
            validate_edge(e, ch.n);
        } catch (const DomainError& err) {
            fail(no, err.what());
        }
        if (toks.back() != "0" && toks.back() != "1") {
            fail(no, "label must be 0 or 1, got '" + toks.back() + "'");
        }
        ch.edges.push_back(std::move(e));
        labels.push_back(static_cast<Bit>(toks.back()[0] - '0'));
    }
    if (ch.edges.size() != m) {
        fail(hl, "declared " + std::to_string(m) + " pairs, found " + std::to_string(ch.edges.size()));
    }
    ch.y = Word(std::move(labels));
    try {
        ch.validate();
    } catch (const DomainError& e) {
        fail(hl, e.what());
    }
    return ch;
}

void write_examples(std::ostream& out, std::span<const LabeledExample> examples) {
    std::size_t N = examples.empty() ? 0 : examples.front().z.size();
    out << "examples " << N << ' ' << examples.size() << '\n';
    for (const auto& ex : examples) {
        if (ex.z.size() != N) {
            throw DomainError("examples of unequal length");
        }
        out << ex.z.to_string() << ' ' << static_cast<int>(ex.y) << '\n';
    }
}

std::vector<LabeledExample> parse_examples(std::string_view text) {
    auto lines = token_lines(text);
    if (lines.empty() || lines[0].second.size() != 3 || lines[0].second[0] != "examples") {
        fail(lines.empty() ? 1 : lines[0].first, "expected header 'examples <N> <count>'");
    }
    std::size_t hl = lines[0].first;
    std::size_t N = to_u64(lines[0].second[1], hl);
    std::size_t count = to_u64(lines[0].second[2], hl);
    std::vector<LabeledExample> out;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const auto& [no, toks] = lines[idx];
        if (toks.size() != 2) {
            fail(no, "expected '<word> <label>'");
        }
        LabeledExample ex;
        try {
            ex.z = Word::parse(toks[0]);
        } catch (const ParseError& e) {
            fail(no, e.what());
        }
        if (ex.z.size() != N) {
            fail(no, "word has length " + std::to_string(ex.z.size()) + ", expected " + std::to_string(N));
        }
        if (toks[1] != "0" && toks[1] != "1") {
            fail(no, "label must be 0 or 1, got '" + toks[1] + "'");
        }
        ex.y = static_cast<Bit>(toks[1][0] - '0');
        out.push_back(std::move(ex));
    }
    if (out.size() != count) {
        fail(hl, "declared " + std::to_string(count) + " examples, found " + std::to_string(out.size()));
    }
    return out;
}

} // namespace rexlab
