#include "rexlab/gadget.hpp"

#include <algorithm>

#include "rexlab/error.hpp"

namespace rexlab {

std::string_view variant_name(GadgetVariant v) {
    switch (v) {
    case GadgetVariant::Starred:
        return "starred";
    case GadgetVariant::StarFree:
        return "star_free";
    case GadgetVariant::Counting:
        return "counting";
    }
    return "starred";
}

GadgetVariant parse_variant(std::string_view name) {
    if (name == "starred") {
        return GadgetVariant::Starred;
    }
    if (name == "star_free") {
        return GadgetVariant::StarFree;
    }
    if (name == "counting") {
        return GadgetVariant::Counting;
    }
    throw ParseError("unknown gadget variant '" + std::string(name) + "'", 0);
}

std::size_t GadgetConfig::block_bits() const { return exact_log2(n); }

void GadgetConfig::validate() const {
    if (n < 2 || !is_power_of_two(n)) {
        throw DomainError("gadget n must be a power of two >= 2, got " + std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw DomainError("gadget k must satisfy 1 <= k <= n, got k = " + std::to_string(k));
    }
    predicate.validate();
    if (predicate.k != k) {
        throw DomainError("predicate arity " + std::to_string(predicate.k) + " differs from k = " + std::to_string(k));
    }
    if (N < prefix_bits()) {
        throw DomainError("N = " + std::to_string(N) + " is shorter than k*log2(n) = " + std::to_string(prefix_bits()));
    }
    if (gamma <= 0 || gamma >= Rational(1, 2)) {
        throw DomainError("gamma must lie in (0, 1/2), got " + to_string(gamma));
    }
}

std::vector<std::string> GadgetConfig::warnings() const {
    std::vector<std::string> out;
    Rational miss = 1 - validity_probability(n, k);
    if (miss > gamma / 2) {
        out.push_back("invalid-encoding rate " + to_string(miss) + " exceeds gamma/2 = " + to_string(gamma / 2) +
                      "; a perfect learner may not clear the distinguisher threshold on random challenges");
    }
    return out;
}

GadgetConfig make_config(std::size_t n, std::size_t k, std::size_t N, Rational gamma, GadgetVariant variant,
                         std::uint64_t prng_seed) {
    GadgetConfig cfg{n, k, N, gamma, variant, default_predicate(k), prng_seed};
    cfg.validate();
    return cfg;
}

Seed gadget_seed(const GadgetConfig& cfg) {
    Rng rng = derive_rng(cfg.prng_seed, 0x5eedULL);
    return random_word(cfg.n, rng);
}

Word encode_onehot(const Hyperedge& e, std::size_t n) {
    validate_edge(e, n);
    std::vector<Bit> bits(e.size() * n, 1);
    for (std::size_t j = 0; j < e.size(); ++j) {
        bits[j * n + e[j] - 1] = 0;
    }
    return Word(std::move(bits));
}

Hyperedge decode_onehot(const Word& z, std::size_t n, std::size_t k) {
    if (n == 0 || z.size() != k * n) {
        throw DomainError("one-hot encoding must have k*n bits");
    }
    Hyperedge e;
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t zero = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (z[j * n + i] == 0) {
                if (zero != 0) {
                    throw DomainError("block " + std::to_string(j + 1) + " has more than one zero");
                }
                zero = i + 1;
            }
        }
        if (zero == 0) {
            throw DomainError("block " + std::to_string(j + 1) + " has no zero");
        }
        e.push_back(zero);
    }
    validate_edge(e, n);
    return e;
}

Word encode_compressed(const Hyperedge& e, std::size_t n) {
    if (!is_power_of_two(n)) {
        throw DomainError("compressed encoding needs n to be a power of two");
    }
    validate_edge(e, n);
    Word z;
    for (std::size_t i : e) {
        z.append(bin_index(i, n));
    }
    return z;
}

Hyperedge decode_compressed(const Word& z, std::size_t n, std::size_t k) {
    std::size_t ell = exact_log2(n);
    if (z.size() < k * ell) {
        throw DomainError("word of length " + std::to_string(z.size()) + " is shorter than k*log2(n) = " +
                          std::to_string(k * ell));
    }
    Hyperedge e(k);
    for (std::size_t j = 0; j < k; ++j) {
        e[j] = decode_bin_index(z.bits().subspan(j * ell, ell));
    }
    return e;
}

bool is_valid_extended(const Word& z, std::size_t n, std::size_t k) {
    Hyperedge e = decode_compressed(z, n, k);
    std::sort(e.begin(), e.end());
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

Rational validity_probability(std::size_t n, std::size_t k) {
    if (k > n || n == 0) {
        throw DomainError("validity probability needs 1 <= n and k <= n");
    }
    Rational p = 1;
    for (std::size_t j = 0; j < k; ++j) {
        p *= Rational(static_cast<std::int64_t>(n - j), static_cast<std::int64_t>(n));
    }
    return p;
}

Rational validity_lower_bound(std::size_t n, std::size_t k) {
    if (k > n || n == 0) {
        throw DomainError("validity bound needs 1 <= n and k <= n");
    }
    Rational base(static_cast<std::int64_t>(n - k), static_cast<std::int64_t>(n));
    Rational p = 1;
    for (std::size_t j = 0; j < k; ++j) {
        p *= base;
    }
    return p;
}

namespace {

void push_word(std::vector<Regex>& factors, const Word& w) {
    for (Bit b : w.bits()) {
        factors.push_back(Regex::symbol(b));
    }
}

Regex star_any() { return Regex::star(any_symbol()); }

// Appends (0|1)^g with the variant's treatment of powers.
void push_pad(std::vector<Regex>& factors, std::uint64_t g, const GadgetConfig& cfg) {
    append_power(factors, any_symbol(), g, cfg.counting());
}

Regex with_global_pad(Regex body, const GadgetConfig& cfg) {
    if (cfg.variant == GadgetVariant::Starred) {
        return body;
    }
    std::vector<Regex> factors{std::move(body)};
    push_pad(factors, cfg.N - cfg.prefix_bits(), cfg);
    return concat_all(factors);
}

void check_seed(const Seed& x, std::size_t n) {
    if (x.size() != n) {
        throw DomainError("seed has length " + std::to_string(x.size()) + ", expected n = " + std::to_string(n));
    }
}

} // namespace

Regex build_Ib(const Seed& x, Bit b, std::size_t n) {
    if (!is_power_of_two(n)) {
        throw DomainError("n must be a power of two");
    }
    check_seed(x, n);
    std::vector<Regex> branches;
    for (std::size_t i = 1; i <= n; ++i) {
        if (x[i - 1] == b) {
            branches.push_back(literal_word(bin_index(i, n)));
        }
    }
    return union_all(branches);
}

Regex build_Ru(const Seed& x, const Word& u, const GadgetConfig& cfg) {
    if (u.size() != cfg.k) {
        throw DomainError("pattern u must have k bits");
    }
    Regex blocks[2] = {build_Ib(x, 0, cfg.n), build_Ib(x, 1, cfg.n)};
    std::vector<Regex> factors;
    for (Bit b : u.bits()) {
        factors.push_back(blocks[b]);
    }
    if (cfg.variant == GadgetVariant::Starred) {
        factors.push_back(star_any());
    }
    return concat_all(factors);
}

Regex build_Rx(const Seed& x, const Predicate& p, const GadgetConfig& cfg) {
    cfg.validate();
    check_seed(x, cfg.n);
    if (p.k != cfg.k) {
        throw DomainError("predicate arity differs from k");
    }
    p.validate();
    std::vector<Regex> branches;
    for (std::size_t j = 0; j < p.table.size(); ++j) {
        if (p.table[j] == 1) {
            branches.push_back(build_Ru(x, Word::from_index(j, cfg.k), cfg));
        }
    }
    if (branches.empty()) {
        return Regex::empty_set();
    }
    return with_global_pad(union_all(branches), cfg);
}

Regex build_Rdup(const GadgetConfig& cfg) {
    cfg.validate();
    const std::size_t ell = cfg.block_bits();
    const std::size_t k = cfg.k;
    std::vector<Regex> branches;
    for (std::size_t a = 1; a <= k; ++a) {
        for (std::size_t b = a + 1; b <= k; ++b) {
            for (std::size_t i = 1; i <= cfg.n; ++i) {
                Word bin = bin_index(i, cfg.n);
                std::vector<Regex> factors;
                push_pad(factors, (a - 1) * ell, cfg);
                push_word(factors, bin);
                push_pad(factors, (b - a - 1) * ell, cfg);
                push_word(factors, bin);
                if (cfg.variant == GadgetVariant::Starred) {
                    factors.push_back(star_any());
                } else {
                    push_pad(factors, (k - b) * ell, cfg);
                }
                branches.push_back(concat_all(factors));
            }
        }
    }
    if (branches.empty()) {
        return Regex::empty_set();
    }
    return with_global_pad(union_all(branches), cfg);
}

Regex build_target(const Seed& x, const GadgetConfig& cfg) {
    return Regex::alt(build_Rx(x, cfg.predicate, cfg), build_Rdup(cfg));
}

namespace {

// |(0|1)^g| as emitted by push_pad.
std::uint64_t pad_size(std::uint64_t g, bool counting) {
    if (g == 0) {
        return 0;
    }
    if (g == 1) {
        return 3;
    }
    return counting ? 3 + counter_digits(g) : 3 * g;
}

} // namespace

std::uint64_t gadget_size_closed_form(const Seed& x, const GadgetConfig& cfg) {
    cfg.validate();
    check_seed(x, cfg.n);
    const bool counting = cfg.counting();
    const bool starred = cfg.variant == GadgetVariant::Starred;
    const std::uint64_t ell = cfg.block_bits();
    const std::uint64_t k = cfg.k;
    const std::uint64_t n = cfg.n;
    const std::uint64_t suffix = starred ? 0 : pad_size(cfg.N - cfg.prefix_bits(), counting);

    std::uint64_t ones = static_cast<std::uint64_t>(std::count(x.bits().begin(), x.bits().end(), Bit{1}));
    std::uint64_t count_b[2] = {n - ones, ones};
    std::uint64_t ib[2];
    for (int b = 0; b < 2; ++b) {
        ib[b] = count_b[b] == 0 ? 1 : count_b[b] * ell + (count_b[b] - 1);
    }

    std::uint64_t rx = 0;
    std::uint64_t p = 0;
    for (std::size_t j = 0; j < cfg.predicate.table.size(); ++j) {
        if (cfg.predicate.table[j] == 0) {
            continue;
        }
        Word u = Word::from_index(j, cfg.k);
        std::uint64_t ru = starred ? 4 : 0;
        for (Bit b : u.bits()) {
            ru += ib[b];
        }
        rx += ru;
        ++p;
    }
    rx = p == 0 ? 1 : rx + (p - 1) + suffix;

    std::uint64_t rdup = 0;
    std::uint64_t branches = 0;
    for (std::uint64_t a = 1; a <= k; ++a) {
        for (std::uint64_t b = a + 1; b <= k; ++b) {
            std::uint64_t tail = starred ? 4 : pad_size((k - b) * ell, counting);
            std::uint64_t branch =
                pad_size((a - 1) * ell, counting) + ell + pad_size((b - a - 1) * ell, counting) + ell + tail;
            rdup += n * branch;
            branches += n;
        }
    }
    rdup = branches == 0 ? 1 : rdup + (branches - 1) + suffix;

    return rx + rdup + 1;
}

GadgetSize gadget_size(const Seed& x, const GadgetConfig& cfg) {
    return {size_of(build_target(x, cfg), cfg.counting()), gadget_size_closed_form(x, cfg)};
}

std::string_view mode_name(ChallengeMode m) {
    return m == ChallengeMode::Random ? "random" : "pseudorandom";
}

ChallengeMode parse_mode(std::string_view name) {
    if (name == "random") {
        return ChallengeMode::Random;
    }
    if (name == "pseudorandom") {
        return ChallengeMode::Pseudorandom;
    }
    throw ParseError("unknown challenge mode '" + std::string(name) + "'", 0);
}

void Challenge::validate() const {
    if (y.size() != edges.size()) {
        throw DomainError("challenge has " + std::to_string(edges.size()) + " edges but " + std::to_string(y.size()) +
                          " labels");
    }
    for (const auto& e : edges) {
        if (e.size() != k) {
            throw DomainError("challenge edge has the wrong arity");
        }
        validate_edge(e, n);
    }
    if (mode == ChallengeMode::Pseudorandom) {
        if (!hidden_seed || hidden_seed->size() != n) {
            throw DomainError("pseudorandom challenge needs a hidden seed of length n");
        }
    } else if (hidden_seed) {
        throw DomainError("random challenge must not carry a hidden seed");
    }
}

Challenge make_challenge(const GadgetConfig& cfg, std::size_t m, ChallengeMode mode, Rng& rng) {
    cfg.validate();
    Hypergraph g = sample_hypergraph(cfg.n, m, cfg.k, rng);
    Challenge ch{cfg.n, cfg.k, {}, {}, mode, std::nullopt};
    if (mode == ChallengeMode::Random) {
        ch.y = random_word(m, rng);
    } else {
        Seed x = random_word(cfg.n, rng);
        ch.y = prg_output(cfg.predicate, g, x);
        ch.hidden_seed = std::move(x);
    }
    ch.edges = std::move(g.edges);
    return ch;
}

std::vector<LabeledExample> simulate_oracle(const GadgetConfig& cfg, const Challenge& ch, std::size_t count,
                                            Rng& rng) {
    cfg.validate();
    ch.validate();
    if (ch.n != cfg.n || ch.k != cfg.k) {
        throw DomainError("challenge parameters do not match the gadget config");
    }
    if (count > ch.edges.size()) {
        throw DomainError("challenge holds " + std::to_string(ch.edges.size()) + " pairs, " + std::to_string(count) +
                          " examples requested");
    }
    const std::size_t prefix = cfg.prefix_bits();
    std::vector<LabeledExample> out;
    out.reserve(count);
    std::size_t next = 0;
    while (out.size() < count) {
        Word z = random_word(cfg.N, rng);
        if (!is_valid_extended(z, cfg.n, cfg.k)) {
            out.push_back({std::move(z), 1});
            continue;
        }
        if (next == ch.edges.size()) {
            throw DomainError("challenge exhausted after " + std::to_string(out.size()) + " of " +
                              std::to_string(count) + " examples");
        }
        Word zp = encode_compressed(ch.edges[next], cfg.n);
        zp.append(z.slice(prefix, cfg.N - prefix));
        out.push_back({std::move(zp), ch.y[next]});
        ++next;
    }
    return out;
}

} // namespace rexlab
