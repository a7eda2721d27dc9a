#include "rexlab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>

#include "rexlab/error.hpp"

namespace rexlab {

namespace {

void sort_unique(std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<bool> final_mask(const Nfa& a) {
    std::vector<bool> mask(a.state_count, false);
    for (State f : a.finals) {
        mask[f] = true;
    }
    return mask;
}

bool accepts_epsilon(const Nfa& a) {
    return std::any_of(a.initials.begin(), a.initials.end(), [&a](State s) { return a.is_final(s); });
}

} // namespace

void Nfa::add_transition(State from, Bit b, State to) {
    if (from >= state_count || to >= state_count || b > 1) {
        throw DomainError("transition out of range");
    }
    transitions[from][b].push_back(to);
}

bool Nfa::is_final(State s) const {
    return std::binary_search(finals.begin(), finals.end(), s);
}

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> current(state_count, false);
    for (State s : initials) {
        current[s] = true;
    }
    for (Bit b : w.bits()) {
        std::vector<bool> next(state_count, false);
        for (State s = 0; s < state_count; ++s) {
            if (current[s]) {
                for (State t : transitions[s][b]) {
                    next[t] = true;
                }
            }
        }
        current = std::move(next);
    }
    return std::any_of(finals.begin(), finals.end(), [&current](State f) { return current[f]; });
}

void Nfa::normalize() {
    sort_unique(initials);
    sort_unique(finals);
    for (auto& row : transitions) {
        sort_unique(row[0]);
        sort_unique(row[1]);
    }
}

void Nfa::validate() const {
    auto check_set = [this](const std::vector<State>& set, const char* what) {
        if (!std::is_sorted(set.begin(), set.end()) ||
            std::adjacent_find(set.begin(), set.end()) != set.end()) {
            throw DomainError(std::string(what) + " set is not sorted and duplicate-free");
        }
        if (!set.empty() && set.back() >= state_count) {
            throw DomainError(std::string(what) + " references state " + std::to_string(set.back()) +
                              " >= " + std::to_string(state_count));
        }
    };
    if (transitions.size() != state_count) {
        throw DomainError("transition table size differs from state count");
    }
    check_set(initials, "initial");
    check_set(finals, "final");
    for (const auto& row : transitions) {
        check_set(row[0], "successor");
        check_set(row[1], "successor");
    }
}

bool Dfa::accepts(const Word& w) const {
    State s = initial;
    for (Bit b : w.bits()) {
        s = transitions[s][b];
    }
    return finals[s];
}

void Dfa::validate() const {
    if (state_count == 0) {
        throw DomainError("a DFA needs at least one state");
    }
    if (transitions.size() != state_count || finals.size() != state_count) {
        throw DomainError("DFA tables differ from state count");
    }
    if (initial >= state_count) {
        throw DomainError("initial state out of range");
    }
    for (const auto& row : transitions) {
        if (row[0] >= state_count || row[1] >= state_count) {
            throw DomainError("DFA successor out of range");
        }
    }
}

Nfa trim(const Nfa& a) {
    std::vector<bool> fwd(a.state_count, false);
    std::deque<State> work(a.initials.begin(), a.initials.end());
    for (State s : a.initials) {
        fwd[s] = true;
    }
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        for (Bit b = 0; b < 2; ++b) {
            for (State t : a.transitions[s][b]) {
                if (!fwd[t]) {
                    fwd[t] = true;
                    work.push_back(t);
                }
            }
        }
    }
    std::vector<std::vector<State>> preds(a.state_count);
    for (State s = 0; s < a.state_count; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            for (State t : a.transitions[s][b]) {
                preds[t].push_back(s);
            }
        }
    }
    std::vector<bool> bwd(a.state_count, false);
    work.assign(a.finals.begin(), a.finals.end());
    for (State f : a.finals) {
        bwd[f] = true;
    }
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        for (State p : preds[s]) {
            if (!bwd[p]) {
                bwd[p] = true;
                work.push_back(p);
            }
        }
    }
    constexpr State kDropped = ~State{0};
    std::vector<State> renumber(a.state_count, kDropped);
    State next = 0;
    for (State s = 0; s < a.state_count; ++s) {
        if (fwd[s] && bwd[s]) {
            renumber[s] = next++;
        }
    }
    Nfa out(next);
    for (State s = 0; s < a.state_count; ++s) {
        if (renumber[s] == kDropped) {
            continue;
        }
        for (Bit b = 0; b < 2; ++b) {
            for (State t : a.transitions[s][b]) {
                if (renumber[t] != kDropped) {
                    out.transitions[renumber[s]][b].push_back(renumber[t]);
                }
            }
        }
    }
    for (State s : a.initials) {
        if (renumber[s] != kDropped) {
            out.initials.push_back(renumber[s]);
        }
    }
    for (State f : a.finals) {
        if (renumber[f] != kDropped) {
            out.finals.push_back(renumber[f]);
        }
    }
    out.normalize();
    return out;
}

namespace {

Nfa nfa_symbol(Bit b) {
    Nfa a(2);
    a.initials = {0};
    a.finals = {1};
    a.transitions[0][b] = {1};
    return a;
}

Nfa nfa_epsilon() {
    Nfa a(1);
    a.initials = {0};
    a.finals = {0};
    return a;
}

Nfa nfa_empty() {
    Nfa a(1);
    a.initials = {0};
    return a;
}

// Copies the states of `src` into `dst` starting at `offset`.
void embed(Nfa& dst, const Nfa& src, State offset) {
    for (State s = 0; s < src.state_count; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            for (State t : src.transitions[s][b]) {
                dst.transitions[s + offset][b].push_back(t + offset);
            }
        }
    }
}

Nfa build_thompson(const Regex& r) {
    switch (r.kind()) {
    case RegexKind::EmptySet:
        return nfa_empty();
    case RegexKind::Epsilon:
        return nfa_epsilon();
    case RegexKind::Symbol:
        return nfa_symbol(r.bit());
    case RegexKind::Union:
        return nfa_union(build_thompson(r.left()), build_thompson(r.right()));
    case RegexKind::Concat: {
        std::vector<Regex> spine;
        Regex cur = r;
        while (cur.kind() == RegexKind::Concat) {
            spine.push_back(cur.left());
            cur = cur.right();
        }
        Nfa acc = build_thompson(cur);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            acc = nfa_concat(build_thompson(*it), acc);
        }
        return acc;
    }
    case RegexKind::Star:
        return nfa_star(build_thompson(r.inner()));
    case RegexKind::Inter:
    case RegexKind::Compl:
        throw DomainError("thompson accepts plain expressions only; use compile_extended for & and !");
    case RegexKind::Count:
        return build_thompson(desugar_count(r));
    }
    return nfa_empty();
}

} // namespace

Nfa nfa_union(const Nfa& a, const Nfa& b) {
    auto off = static_cast<State>(a.state_count);
    Nfa out(a.state_count + b.state_count);
    embed(out, a, 0);
    embed(out, b, off);
    out.initials = a.initials;
    for (State s : b.initials) {
        out.initials.push_back(s + off);
    }
    out.finals = a.finals;
    for (State f : b.finals) {
        out.finals.push_back(f + off);
    }
    out.normalize();
    return out;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
    auto off = static_cast<State>(a.state_count);
    Nfa out(a.state_count + b.state_count);
    embed(out, a, 0);
    embed(out, b, off);
    std::vector<bool> a_final = final_mask(a);
    // A move into a final state of `a` may continue straight into `b`.
    for (State s = 0; s < a.state_count; ++s) {
        for (Bit bit = 0; bit < 2; ++bit) {
            bool hits_final = std::any_of(a.transitions[s][bit].begin(), a.transitions[s][bit].end(),
                                          [&a_final](State t) { return a_final[t]; });
            if (hits_final) {
                for (State i : b.initials) {
                    out.transitions[s][bit].push_back(i + off);
                }
            }
        }
    }
    out.initials = a.initials;
    if (accepts_epsilon(a)) {
        for (State i : b.initials) {
            out.initials.push_back(i + off);
        }
    }
    for (State f : b.finals) {
        out.finals.push_back(f + off);
    }
    if (accepts_epsilon(b)) {
        out.finals.insert(out.finals.end(), a.finals.begin(), a.finals.end());
    }
    out.normalize();
    return out;
}

Nfa nfa_star(const Nfa& a) {
    auto fresh = static_cast<State>(a.state_count);
    Nfa out(a.state_count + 1);
    embed(out, a, 0);
    std::vector<bool> a_final = final_mask(a);
    for (State s = 0; s < a.state_count; ++s) {
        for (Bit bit = 0; bit < 2; ++bit) {
            bool hits_final = std::any_of(a.transitions[s][bit].begin(), a.transitions[s][bit].end(),
                                          [&a_final](State t) { return a_final[t]; });
            if (hits_final) {
                out.transitions[s][bit].insert(out.transitions[s][bit].end(), a.initials.begin(),
                                               a.initials.end());
            }
        }
    }
    out.normalize();
    // The fresh start state behaves like every initial state of `a`.
    for (State i : a.initials) {
        for (Bit bit = 0; bit < 2; ++bit) {
            out.transitions[fresh][bit].insert(out.transitions[fresh][bit].end(),
                                               out.transitions[i][bit].begin(), out.transitions[i][bit].end());
        }
    }
    out.initials = {fresh};
    out.finals = a.finals;
    out.finals.push_back(fresh);
    out.normalize();
    return out;
}

Nfa thompson(const Regex& r) {
    return trim(build_thompson(r));
}

Nfa to_nfa(const Dfa& d) {
    Nfa out(d.state_count);
    out.initials = {d.initial};
    for (State s = 0; s < d.state_count; ++s) {
        out.transitions[s][0] = {d.transitions[s][0]};
        out.transitions[s][1] = {d.transitions[s][1]};
        if (d.finals[s]) {
            out.finals.push_back(s);
        }
    }
    return out;
}

Dfa determinize(const Nfa& a, std::size_t cap) {
    std::vector<bool> is_final = final_mask(a);
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::vector<std::array<State, 2>> delta;

    auto intern = [&](std::vector<State> subset) -> State {
        auto it = index.find(subset);
        if (it != index.end()) {
            return it->second;
        }
        if (subsets.size() >= cap) {
            throw CapExceeded("subset construction exceeded the cap of " + std::to_string(cap) + " states");
        }
        auto id = static_cast<State>(subsets.size());
        index.emplace(subset, id);
        subsets.push_back(std::move(subset));
        delta.push_back({0, 0});
        return id;
    };

    std::vector<State> start = a.initials;
    sort_unique(start);
    intern(std::move(start));
    std::vector<bool> mark(a.state_count, false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (Bit b = 0; b < 2; ++b) {
            std::vector<State> next;
            for (State s : subsets[i]) {
                for (State t : a.transitions[s][b]) {
                    if (!mark[t]) {
                        mark[t] = true;
                        next.push_back(t);
                    }
                }
            }
            for (State t : next) {
                mark[t] = false;
            }
            std::sort(next.begin(), next.end());
            State target = intern(std::move(next));
            delta[i][b] = target;
        }
    }

    Dfa out(subsets.size());
    out.initial = 0;
    out.transitions = std::move(delta);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        out.finals[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                                    [&is_final](State s) { return is_final[s]; });
    }
    return out;
}

Dfa complement_dfa(const Dfa& d) {
    Dfa out = d;
    out.finals.flip();
    return out;
}

Dfa product(const Dfa& a, const Dfa& b, ProductOp op) {
    std::unordered_map<std::uint64_t, State> index;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State x, State y) -> State {
        std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
        auto [it, inserted] = index.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(x, y);
        }
        return it->second;
    };
    intern(a.initial, b.initial);
    std::vector<std::array<State, 2>> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        std::array<State, 2> row{};
        for (Bit bit = 0; bit < 2; ++bit) {
            row[bit] = intern(a.transitions[x][bit], b.transitions[y][bit]);
        }
        delta.push_back(row);
    }
    Dfa out(pairs.size());
    out.transitions = std::move(delta);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool fa = a.finals[pairs[i].first];
        bool fb = b.finals[pairs[i].second];
        out.finals[i] = op == ProductOp::And ? (fa && fb) : (fa || fb);
    }
    return out;
}

Dfa minimize(const Dfa& d) {
    // Reachable states in breadth-first order from the initial state.
    std::vector<State> order;
    std::vector<State> pos(d.state_count, ~State{0});
    order.push_back(d.initial);
    pos[d.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Bit b = 0; b < 2; ++b) {
            State t = d.transitions[order[i]][b];
            if (pos[t] == ~State{0}) {
                pos[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    const std::size_t n = order.size();

    // Moore refinement over the reachable part.
    std::vector<std::size_t> block(n);
    for (std::size_t i = 0; i < n; ++i) {
        block[i] = d.finals[order[i]] ? 1 : 0;
    }
    std::size_t block_count = 0;
    while (true) {
        std::map<std::array<std::size_t, 3>, std::size_t> signature;
        std::vector<std::size_t> refined(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::array<std::size_t, 3> sig{block[i], block[pos[d.transitions[order[i]][0]]],
                                           block[pos[d.transitions[order[i]][1]]]};
            auto [it, inserted] = signature.try_emplace(sig, signature.size());
            refined[i] = it->second;
        }
        block = std::move(refined);
        if (signature.size() == block_count) {
            break;
        }
        block_count = signature.size();
    }

    // Number blocks canonically by breadth-first discovery from the start.
    std::vector<State> canon(block_count, ~State{0});
    std::vector<std::size_t> representative;
    std::deque<std::size_t> work{block[0]};
    canon[block[0]] = 0;
    std::vector<std::size_t> member(block_count);
    for (std::size_t i = n; i-- > 0;) {
        member[block[i]] = i;
    }
    representative.push_back(member[block[0]]);
    Dfa out(block_count);
    for (std::size_t k = 0; k < representative.size(); ++k) {
        std::size_t rep = representative[k];
        for (Bit b = 0; b < 2; ++b) {
            std::size_t target_block = block[pos[d.transitions[order[rep]][b]]];
            if (canon[target_block] == ~State{0}) {
                canon[target_block] = static_cast<State>(representative.size());
                representative.push_back(member[target_block]);
            }
            out.transitions[k][b] = canon[target_block];
        }
        out.finals[k] = d.finals[order[rep]];
    }
    out.initial = 0;
    return out;
}

namespace {

// Expression builders that drop neutral elements; absent labels mean ∅.
using Label = std::optional<Regex>;

Label alt_label(const Label& a, const Label& b) {
    if (!a) {
        return b;
    }
    if (!b || *a == *b) {
        return a;
    }
    return Regex::alt(*a, *b);
}

Regex cat_simple(const Regex& a, const Regex& b) {
    if (a.kind() == RegexKind::Epsilon) {
        return b;
    }
    if (b.kind() == RegexKind::Epsilon) {
        return a;
    }
    return Regex::concat(a, b);
}

Regex star_simple(const Regex& a) {
    if (a.kind() == RegexKind::Epsilon || a.kind() == RegexKind::EmptySet) {
        return Regex::epsilon();
    }
    if (a.kind() == RegexKind::Star) {
        return a;
    }
    return Regex::star(a);
}

} // namespace

Regex dfa_to_re(const Dfa& d) {
    d.validate();
    // Keep useful states only; the relative index order is preserved.
    Nfa useful = trim(to_nfa(d));
    const std::size_t n = useful.state_count;
    if (n == 0) {
        return Regex::empty_set();
    }
    // Trimming a DFA keeps it deterministic with a single initial state.
    const std::size_t src = n;
    const std::size_t dst = n + 1;
    std::vector<std::vector<Label>> label(n + 2, std::vector<Label>(n + 2));
    for (State s = 0; s < n; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            for (State t : useful.transitions[s][b]) {
                label[s][t] = alt_label(label[s][t], Regex::symbol(b));
            }
        }
    }
    label[src][useful.initials.front()] = Regex::epsilon();
    for (State f : useful.finals) {
        label[f][dst] = Regex::epsilon();
    }

    std::vector<State> order;
    for (State s = 0; s < n; ++s) {
        if (s != useful.initials.front() && !useful.is_final(s)) {
            order.push_back(s);
        }
    }
    for (State s = 0; s < n; ++s) {
        if (s == useful.initials.front() || useful.is_final(s)) {
            order.push_back(s);
        }
    }

    std::vector<bool> alive(n + 2, true);
    for (State k : order) {
        alive[k] = false;
        Regex loop = label[k][k] ? star_simple(*label[k][k]) : Regex::epsilon();
        for (std::size_t p = 0; p < n + 2; ++p) {
            if (!alive[p] || !label[p][k]) {
                continue;
            }
            Regex head = cat_simple(*label[p][k], loop);
            for (std::size_t q = 0; q < n + 2; ++q) {
                if (!alive[q] || !label[k][q]) {
                    continue;
                }
                label[p][q] = alt_label(label[p][q], cat_simple(head, *label[k][q]));
            }
        }
        for (std::size_t q = 0; q < n + 2; ++q) {
            label[k][q].reset();
            label[q][k].reset();
        }
    }
    return label[src][dst].value_or(Regex::empty_set());
}

Dfa compile_extended(const Regex& r, std::size_t cap) {
    OperatorProfile plain{true, false, false, true};
    if (conforms(r, plain)) {
        return minimize(determinize(thompson(r), cap));
    }
    switch (r.kind()) {
    case RegexKind::Union:
        return minimize(product(compile_extended(r.left(), cap), compile_extended(r.right(), cap), ProductOp::Or));
    case RegexKind::Inter:
        return minimize(product(compile_extended(r.left(), cap), compile_extended(r.right(), cap), ProductOp::And));
    case RegexKind::Compl:
        return complement_dfa(compile_extended(r.inner(), cap));
    case RegexKind::Concat: {
        Nfa joined = nfa_concat(to_nfa(compile_extended(r.left(), cap)), to_nfa(compile_extended(r.right(), cap)));
        return minimize(determinize(trim(joined), cap));
    }
    case RegexKind::Star:
        return minimize(determinize(trim(nfa_star(to_nfa(compile_extended(r.inner(), cap)))), cap));
    case RegexKind::Count: {
        if (r.reps() == 0) {
            return minimize(determinize(thompson(Regex::epsilon()), cap));
        }
        Dfa unit = compile_extended(r.inner(), cap);
        Dfa acc = unit;
        for (std::uint64_t i = 1; i < r.reps(); ++i) {
            acc = minimize(determinize(trim(nfa_concat(to_nfa(acc), to_nfa(unit))), cap));
        }
        return acc;
    }
    default:
        // Atoms are plain and handled above.
        return minimize(determinize(thompson(r), cap));
    }
}

Nfa nth_from_end_nfa(std::size_t n) {
    if (n == 0) {
        throw DomainError("nth_from_end_nfa needs n >= 1");
    }
    Nfa a(n + 1);
    a.initials = {0};
    a.finals = {static_cast<State>(n)};
    a.add_transition(0, 0, 0);
    a.add_transition(0, 1, 0);
    a.add_transition(0, 1, 1);
    for (State s = 1; s < n; ++s) {
        a.add_transition(s, 0, s + 1);
        a.add_transition(s, 1, s + 1);
    }
    a.normalize();
    return a;
}

DescriptionMetrics metrics(const Nfa& a) {
    auto q = static_cast<std::uint64_t>(a.state_count);
    return {a.state_count, q * q};
}

DescriptionMetrics metrics(const Dfa& d) {
    auto q = static_cast<std::uint64_t>(d.state_count);
    return {d.state_count, q * std::max<std::uint64_t>(1, counter_digits(q))};
}

} // namespace rexlab
