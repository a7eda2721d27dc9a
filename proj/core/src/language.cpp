#include <algorithm>

#include "rexlab/error.hpp"
#include "rexlab/match.hpp"

namespace rexlab {

namespace {

using Bits = std::vector<bool>;

std::size_t slot_count(std::size_t max_len) {
    return (std::size_t{1} << (max_len + 1)) - 1;
}

// Set-level evaluation of the inductive semantics, truncated to Σ^{≤L}.
class Enumerator {
public:
    explicit Enumerator(std::size_t max_len) : max_len_(max_len), slots_(slot_count(max_len)) {}

    Bits eval(const Regex& r) {
        switch (r.kind()) {
        case RegexKind::EmptySet:
            return Bits(slots_, false);
        case RegexKind::Epsilon:
            return singleton_epsilon();
        case RegexKind::Symbol: {
            Bits out(slots_, false);
            if (max_len_ >= 1) {
                out[1 + r.bit()] = true;
            }
            return out;
        }
        case RegexKind::Union: {
            Bits a = eval(r.left());
            Bits b = eval(r.right());
            for (std::size_t i = 0; i < slots_; ++i) {
                a[i] = a[i] || b[i];
            }
            return a;
        }
        case RegexKind::Inter: {
            Bits a = eval(r.left());
            Bits b = eval(r.right());
            for (std::size_t i = 0; i < slots_; ++i) {
                a[i] = a[i] && b[i];
            }
            return a;
        }
        case RegexKind::Compl: {
            Bits a = eval(r.inner());
            a.flip();
            return a;
        }
        case RegexKind::Concat:
            return concat(eval(r.left()), eval(r.right()));
        case RegexKind::Star: {
            Bits a = eval(r.inner());
            Bits s = singleton_epsilon();
            while (true) {
                Bits next = concat(a, s);
                next[0] = true;
                if (next == s) {
                    return s;
                }
                s = std::move(next);
            }
        }
        case RegexKind::Count: {
            Bits a = eval(r.inner());
            Bits acc = singleton_epsilon();
            for (std::uint64_t i = 0; i < r.reps(); ++i) {
                Bits next = concat(a, acc);
                // Powers either die out (ε ∉ a) or grow monotonically (ε ∈ a).
                if (next == acc) {
                    break;
                }
                acc = std::move(next);
                if (std::none_of(acc.begin(), acc.end(), [](bool b) { return b; })) {
                    break;
                }
            }
            return acc;
        }
        }
        return Bits(slots_, false);
    }

private:
    Bits singleton_epsilon() const {
        Bits out(slots_, false);
        out[0] = true;
        return out;
    }

    Bits concat(const Bits& a, const Bits& b) const {
        // Members of b grouped by length as (length, value) pairs.
        std::vector<std::vector<std::uint64_t>> b_by_len(max_len_ + 1);
        for (std::size_t len = 0; len <= max_len_; ++len) {
            std::size_t base = (std::size_t{1} << len) - 1;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
                if (b[base + v]) {
                    b_by_len[len].push_back(v);
                }
            }
        }
        Bits out(slots_, false);
        for (std::size_t lu = 0; lu <= max_len_; ++lu) {
            std::size_t base_u = (std::size_t{1} << lu) - 1;
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << lu); ++u) {
                if (!a[base_u + u]) {
                    continue;
                }
                for (std::size_t lv = 0; lu + lv <= max_len_; ++lv) {
                    std::size_t base = (std::size_t{1} << (lu + lv)) - 1;
                    for (std::uint64_t v : b_by_len[lv]) {
                        out[base + ((u << lv) | v)] = true;
                    }
                }
            }
        }
        return out;
    }

    std::size_t max_len_;
    std::size_t slots_;
};

void check_bound(std::size_t max_len, std::size_t bound) {
    if (max_len > bound) {
        throw CapExceeded("enumeration length " + std::to_string(max_len) + " exceeds the bound " +
                          std::to_string(bound));
    }
    if (max_len > 24) {
        throw CapExceeded("enumeration length " + std::to_string(max_len) + " is not supported");
    }
}

} // namespace

LanguageSample::LanguageSample(std::size_t max_len)
    : max_len_(max_len), bits_(slot_count(max_len), false) {}

std::size_t LanguageSample::slot(const Word& w) {
    return (std::size_t{1} << w.size()) - 1 + w.to_index();
}

Word LanguageSample::word_at(std::size_t slot) {
    std::size_t len = 0;
    while ((std::size_t{1} << (len + 1)) - 1 <= slot) {
        ++len;
    }
    return Word::from_index(slot - ((std::size_t{1} << len) - 1), len);
}

bool LanguageSample::contains(const Word& w) const {
    return w.size() <= max_len_ && bits_[slot(w)];
}

std::size_t LanguageSample::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Word> LanguageSample::words() const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(word_at(i));
        }
    }
    return out;
}

LanguageSample enumerate_language(const Regex& r, std::size_t max_len, std::size_t bound) {
    check_bound(max_len, bound);
    LanguageSample sample(max_len);
    sample.membership() = Enumerator(max_len).eval(r);
    return sample;
}

Equivalence equivalent_upto(const Regex& a, const Regex& b, std::size_t max_len, std::size_t bound) {
    LanguageSample la = enumerate_language(a, max_len, bound);
    LanguageSample lb = enumerate_language(b, max_len, bound);
    const auto& x = la.membership();
    const auto& y = lb.membership();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            return {false, LanguageSample::word_at(i)};
        }
    }
    return {true, std::nullopt};
}

} // namespace rexlab
