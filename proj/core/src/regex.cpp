#include "rexlab/regex.hpp"

#include <limits>

#include "rexlab/error.hpp"

namespace rexlab {

struct Regex::Node {
    RegexKind kind;
    Bit bit = 0;
    std::uint64_t reps = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

template <typename Node>
std::shared_ptr<const Node> make_node(RegexKind kind, Bit bit, std::uint64_t reps,
                                      std::shared_ptr<const Node> lhs,
                                      std::shared_ptr<const Node> rhs) {
    return std::make_shared<const Node>(Node{kind, bit, reps, std::move(lhs), std::move(rhs)});
}

} // namespace

Regex::Regex() : node_(empty_set().node_) {}

Regex Regex::empty_set() {
    static const auto node = make_node<Node>(RegexKind::EmptySet, 0, 0, nullptr, nullptr);
    return Regex(node);
}

Regex Regex::epsilon() {
    static const auto node = make_node<Node>(RegexKind::Epsilon, 0, 0, nullptr, nullptr);
    return Regex(node);
}

Regex Regex::symbol(Bit bit) {
    static const auto zero = make_node<Node>(RegexKind::Symbol, 0, 0, nullptr, nullptr);
    static const auto one = make_node<Node>(RegexKind::Symbol, 1, 0, nullptr, nullptr);
    if (bit > 1) {
        throw DomainError("symbol must be 0 or 1");
    }
    return Regex(bit == 0 ? zero : one);
}

Regex Regex::alt(Regex left, Regex right) {
    return Regex(make_node<Node>(RegexKind::Union, 0, 0, std::move(left.node_), std::move(right.node_)));
}

Regex Regex::concat(Regex left, Regex right) {
    return Regex(make_node<Node>(RegexKind::Concat, 0, 0, std::move(left.node_), std::move(right.node_)));
}

Regex Regex::star(Regex inner) {
    return Regex(make_node<Node>(RegexKind::Star, 0, 0, std::move(inner.node_), nullptr));
}

Regex Regex::inter(Regex left, Regex right) {
    return Regex(make_node<Node>(RegexKind::Inter, 0, 0, std::move(left.node_), std::move(right.node_)));
}

Regex Regex::complement(Regex inner) {
    return Regex(make_node<Node>(RegexKind::Compl, 0, 0, std::move(inner.node_), nullptr));
}

Regex Regex::count(Regex inner, std::uint64_t reps) {
    return Regex(make_node<Node>(RegexKind::Count, 0, reps, std::move(inner.node_), nullptr));
}

RegexKind Regex::kind() const noexcept { return node_->kind; }

Bit Regex::bit() const {
    if (node_->kind != RegexKind::Symbol) {
        throw DomainError("bit() on a non-symbol node");
    }
    return node_->bit;
}

Regex Regex::left() const {
    switch (node_->kind) {
    case RegexKind::Union:
    case RegexKind::Concat:
    case RegexKind::Inter:
        return Regex(node_->lhs);
    default:
        throw DomainError("left() on a non-binary node");
    }
}

Regex Regex::right() const {
    switch (node_->kind) {
    case RegexKind::Union:
    case RegexKind::Concat:
    case RegexKind::Inter:
        return Regex(node_->rhs);
    default:
        throw DomainError("right() on a non-binary node");
    }
}

Regex Regex::inner() const {
    switch (node_->kind) {
    case RegexKind::Star:
    case RegexKind::Compl:
    case RegexKind::Count:
        return Regex(node_->lhs);
    default:
        throw DomainError("inner() on a non-unary node");
    }
}

std::uint64_t Regex::reps() const {
    if (node_->kind != RegexKind::Count) {
        throw DomainError("reps() on a non-count node");
    }
    return node_->reps;
}

bool Regex::is_atom() const noexcept {
    switch (node_->kind) {
    case RegexKind::EmptySet:
    case RegexKind::Epsilon:
    case RegexKind::Symbol:
        return true;
    default:
        return false;
    }
}

namespace {

bool nodes_equal(const Regex& a, const Regex& b) {
    // Right spines of concatenations can be thousands of nodes deep, so walk
    // them iteratively.
    Regex x = a;
    Regex y = b;
    while (true) {
        if (x.same_node(y)) {
            return true;
        }
        if (x.kind() != y.kind()) {
            return false;
        }
        switch (x.kind()) {
        case RegexKind::EmptySet:
        case RegexKind::Epsilon:
            return true;
        case RegexKind::Symbol:
            return x.bit() == y.bit();
        case RegexKind::Union:
        case RegexKind::Concat:
        case RegexKind::Inter:
            if (!nodes_equal(x.left(), y.left())) {
                return false;
            }
            x = x.right();
            y = y.right();
            break;
        case RegexKind::Count:
            if (x.reps() != y.reps()) {
                return false;
            }
            [[fallthrough]];
        case RegexKind::Star:
        case RegexKind::Compl:
            x = x.inner();
            y = y.inner();
            break;
        }
    }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw DomainError("regex size overflows 64 bits");
    }
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw DomainError("regex size overflows 64 bits");
    }
    return a * b;
}

void accumulate_size(const Regex& r, bool counting, SizeReport& report, std::uint64_t& out) {
    std::uint64_t total = 0;
    Regex cur = r;
    // Iterate down the right child of binary nodes.
    while (true) {
        switch (cur.kind()) {
        case RegexKind::EmptySet:
        case RegexKind::Epsilon:
        case RegexKind::Symbol:
            out = checked_add(total, 1);
            return;
        case RegexKind::Union:
        case RegexKind::Inter:
            total = checked_add(total, 1);
            [[fallthrough]];
        case RegexKind::Concat: {
            std::uint64_t left = 0;
            accumulate_size(cur.left(), counting, report, left);
            total = checked_add(total, left);
            cur = cur.right();
            break;
        }
        case RegexKind::Star:
        case RegexKind::Compl:
            total = checked_add(total, 1);
            cur = cur.inner();
            break;
        case RegexKind::Count: {
            std::uint64_t inner = 0;
            accumulate_size(cur.inner(), counting, report, inner);
            if (counting) {
                out = checked_add(total, checked_add(inner, counter_digits(cur.reps())));
            } else {
                if (cur.reps() == 0) {
                    ++report.zero_count_nodes;
                }
                out = checked_add(total, checked_mul(inner, cur.reps()));
            }
            return;
        }
        }
    }
}

bool any_node(const Regex& r, const auto& pred) {
    Regex cur = r;
    while (true) {
        if (pred(cur)) {
            return true;
        }
        switch (cur.kind()) {
        case RegexKind::EmptySet:
        case RegexKind::Epsilon:
        case RegexKind::Symbol:
            return false;
        case RegexKind::Union:
        case RegexKind::Concat:
        case RegexKind::Inter:
            if (any_node(cur.left(), pred)) {
                return true;
            }
            cur = cur.right();
            break;
        case RegexKind::Star:
        case RegexKind::Compl:
        case RegexKind::Count:
            cur = cur.inner();
            break;
        }
    }
}

} // namespace

bool operator==(const Regex& a, const Regex& b) { return nodes_equal(a, b); }

bool contains_kind(const Regex& r, RegexKind kind) {
    return any_node(r, [kind](const Regex& n) { return n.kind() == kind; });
}

bool conforms(const Regex& r, const OperatorProfile& profile) {
    return !any_node(r, [&profile](const Regex& n) {
        switch (n.kind()) {
        case RegexKind::Star:
            return !profile.allow_star;
        case RegexKind::Inter:
            return !profile.allow_inter;
        case RegexKind::Compl:
            return !profile.allow_compl;
        case RegexKind::Count:
            return !profile.allow_count;
        default:
            return false;
        }
    });
}

std::uint64_t counter_digits(std::uint64_t k) {
    if (k == 0) {
        return 1;
    }
    std::uint64_t digits = 0;
    while ((std::uint64_t{1} << digits) < k) {
        if (digits == 63) {
            return 64;
        }
        ++digits;
    }
    return digits;
}

SizeReport size_report(const Regex& r, bool counting_allowed) {
    SizeReport report;
    accumulate_size(r, counting_allowed, report, report.size);
    return report;
}

std::uint64_t size_of(const Regex& r, bool counting_allowed) {
    return size_report(r, counting_allowed).size;
}

Regex desugar_count(const Regex& r) {
    switch (r.kind()) {
    case RegexKind::EmptySet:
    case RegexKind::Epsilon:
    case RegexKind::Symbol:
        return r;
    case RegexKind::Union:
        return Regex::alt(desugar_count(r.left()), desugar_count(r.right()));
    case RegexKind::Concat: {
        // Flatten the right spine to keep recursion depth bounded.
        std::vector<Regex> spine;
        Regex cur = r;
        while (cur.kind() == RegexKind::Concat) {
            spine.push_back(desugar_count(cur.left()));
            cur = cur.right();
        }
        Regex acc = desugar_count(cur);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            acc = Regex::concat(*it, acc);
        }
        return acc;
    }
    case RegexKind::Inter:
        return Regex::inter(desugar_count(r.left()), desugar_count(r.right()));
    case RegexKind::Star:
        return Regex::star(desugar_count(r.inner()));
    case RegexKind::Compl:
        return Regex::complement(desugar_count(r.inner()));
    case RegexKind::Count: {
        Regex inner = desugar_count(r.inner());
        if (r.reps() == 0) {
            return Regex::epsilon();
        }
        Regex acc = inner;
        for (std::uint64_t i = 1; i < r.reps(); ++i) {
            acc = Regex::concat(inner, acc);
        }
        return acc;
    }
    }
    return r;
}

Regex literal_word(const Word& w) {
    std::vector<Regex> factors;
    factors.reserve(w.size());
    for (Bit b : w.bits()) {
        factors.push_back(Regex::symbol(b));
    }
    return concat_all(factors);
}

Regex any_symbol() {
    return Regex::alt(Regex::symbol(0), Regex::symbol(1));
}

Regex sigma_star() {
    return Regex::star(any_symbol());
}

Regex concat_all(std::span<const Regex> factors) {
    if (factors.empty()) {
        return Regex::epsilon();
    }
    Regex acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) {
        acc = Regex::concat(factors[i], acc);
    }
    return acc;
}

Regex union_all(std::span<const Regex> branches) {
    if (branches.empty()) {
        return Regex::empty_set();
    }
    Regex acc = branches.back();
    for (std::size_t i = branches.size() - 1; i-- > 0;) {
        acc = Regex::alt(branches[i], acc);
    }
    return acc;
}

void append_power(std::vector<Regex>& factors, const Regex& r, std::uint64_t k, bool keep_count) {
    if (k == 0) {
        return;
    }
    if (k == 1) {
        factors.push_back(r);
    } else if (keep_count) {
        factors.push_back(Regex::count(r, k));
    } else {
        factors.insert(factors.end(), k, r);
    }
}

bool is_power_of_two(std::uint64_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

std::size_t exact_log2(std::uint64_t n) {
    if (!is_power_of_two(n)) {
        throw DomainError(std::to_string(n) + " is not a power of two");
    }
    std::size_t bits = 0;
    while ((std::uint64_t{1} << bits) != n) {
        ++bits;
    }
    return bits;
}

Word bin_index(std::uint64_t i, std::uint64_t n) {
    std::size_t width = exact_log2(n);
    if (i < 1 || i > n) {
        throw DomainError("index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    return Word::from_index(i - 1, width);
}

std::uint64_t decode_bin_index(std::span<const Bit> block) {
    if (block.size() >= 64) {
        throw DomainError("index block too wide");
    }
    std::uint64_t v = 0;
    for (Bit b : block) {
        v = (v << 1) | b;
    }
    return v + 1;
}

} // namespace rexlab
