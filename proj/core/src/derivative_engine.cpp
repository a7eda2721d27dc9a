#include "derivative_engine.hpp"

#include <algorithm>

namespace rexlab {

std::size_t DerivativeEngine::TermHash::operator()(const Term& t) const noexcept {
    std::size_t h = static_cast<std::size_t>(t.kind) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(t.bit);
    mix(t.reps);
    for (Id k : t.kids) {
        mix(k);
    }
    return h;
}

DerivativeEngine::DerivativeEngine() {
    empty_ = make(Term{RegexKind::EmptySet, 0, 0, {}, false});
    epsilon_ = make(Term{RegexKind::Epsilon, 0, 0, {}, true});
    sigma_star_ = mk_compl(empty_);
}

DerivativeEngine::Id DerivativeEngine::make(Term t) {
    auto it = index_.find(t);
    if (it != index_.end()) {
        return it->second;
    }
    auto id = static_cast<Id>(terms_.size());
    terms_.push_back(t);
    delta_.push_back({kUnset, kUnset});
    index_.emplace(std::move(t), id);
    return id;
}

DerivativeEngine::Id DerivativeEngine::mk_symbol(Bit b) {
    return make(Term{RegexKind::Symbol, b, 0, {}, false});
}

DerivativeEngine::Id DerivativeEngine::mk_union(std::vector<Id> operands) {
    std::vector<Id> flat;
    flat.reserve(operands.size());
    for (Id op : operands) {
        const Term& t = terms_[op];
        if (op == sigma_star_) {
            return sigma_star_;
        }
        if (t.kind == RegexKind::Union) {
            flat.insert(flat.end(), t.kids.begin(), t.kids.end());
        } else if (op != empty_) {
            flat.push_back(op);
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) {
        return empty_;
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    bool null = std::any_of(flat.begin(), flat.end(), [this](Id k) { return terms_[k].nullable; });
    return make(Term{RegexKind::Union, 0, 0, std::move(flat), null});
}

DerivativeEngine::Id DerivativeEngine::mk_inter(std::vector<Id> operands) {
    std::vector<Id> flat;
    flat.reserve(operands.size());
    for (Id op : operands) {
        const Term& t = terms_[op];
        if (op == empty_) {
            return empty_;
        }
        if (t.kind == RegexKind::Inter) {
            flat.insert(flat.end(), t.kids.begin(), t.kids.end());
        } else if (op != sigma_star_) {
            flat.push_back(op);
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) {
        return sigma_star_;
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    bool null = std::all_of(flat.begin(), flat.end(), [this](Id k) { return terms_[k].nullable; });
    return make(Term{RegexKind::Inter, 0, 0, std::move(flat), null});
}

DerivativeEngine::Id DerivativeEngine::mk_concat(Id a, Id b) {
    if (a == empty_ || b == empty_) {
        return empty_;
    }
    if (a == epsilon_) {
        return b;
    }
    if (b == epsilon_) {
        return a;
    }
    if (terms_[a].kind == RegexKind::Concat) {
        Id head = terms_[a].kids[0];
        Id tail = terms_[a].kids[1];
        return mk_concat(head, mk_concat(tail, b));
    }
    bool null = terms_[a].nullable && terms_[b].nullable;
    return make(Term{RegexKind::Concat, 0, 0, {a, b}, null});
}

DerivativeEngine::Id DerivativeEngine::mk_star(Id a) {
    if (a == empty_ || a == epsilon_) {
        return epsilon_;
    }
    if (terms_[a].kind == RegexKind::Star) {
        return a;
    }
    return make(Term{RegexKind::Star, 0, 0, {a}, true});
}

DerivativeEngine::Id DerivativeEngine::mk_compl(Id a) {
    if (terms_[a].kind == RegexKind::Compl) {
        return terms_[a].kids[0];
    }
    return make(Term{RegexKind::Compl, 0, 0, {a}, !terms_[a].nullable});
}

DerivativeEngine::Id DerivativeEngine::mk_count(Id a, std::uint64_t reps) {
    if (reps == 0 || a == epsilon_) {
        return epsilon_;
    }
    if (reps == 1 || a == empty_) {
        return a;
    }
    return make(Term{RegexKind::Count, 0, reps, {a}, terms_[a].nullable});
}

DerivativeEngine::Id DerivativeEngine::intern(const Regex& r) {
    switch (r.kind()) {
    case RegexKind::EmptySet:
        return empty_;
    case RegexKind::Epsilon:
        return epsilon_;
    case RegexKind::Symbol:
        return mk_symbol(r.bit());
    case RegexKind::Union:
        return mk_union({intern(r.left()), intern(r.right())});
    case RegexKind::Inter:
        return mk_inter({intern(r.left()), intern(r.right())});
    case RegexKind::Concat: {
        std::vector<Id> spine;
        Regex cur = r;
        while (cur.kind() == RegexKind::Concat) {
            spine.push_back(intern(cur.left()));
            cur = cur.right();
        }
        Id acc = intern(cur);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            acc = mk_concat(*it, acc);
        }
        return acc;
    }
    case RegexKind::Star:
        return mk_star(intern(r.inner()));
    case RegexKind::Compl:
        return mk_compl(intern(r.inner()));
    case RegexKind::Count:
        return mk_count(intern(r.inner()), r.reps());
    }
    return empty_;
}

Regex DerivativeEngine::to_regex(Id id) {
    if (auto it = exported_.find(id); it != exported_.end()) {
        return it->second;
    }
    const Term t = terms_[id];
    Regex out;
    switch (t.kind) {
    case RegexKind::EmptySet:
        out = Regex::empty_set();
        break;
    case RegexKind::Epsilon:
        out = Regex::epsilon();
        break;
    case RegexKind::Symbol:
        out = Regex::symbol(t.bit);
        break;
    case RegexKind::Union:
    case RegexKind::Inter: {
        out = to_regex(t.kids.back());
        for (std::size_t i = t.kids.size() - 1; i-- > 0;) {
            Regex l = to_regex(t.kids[i]);
            out = t.kind == RegexKind::Union ? Regex::alt(l, out) : Regex::inter(l, out);
        }
        break;
    }
    case RegexKind::Concat: {
        std::vector<Id> spine;
        Id cur = id;
        while (terms_[cur].kind == RegexKind::Concat) {
            spine.push_back(terms_[cur].kids[0]);
            cur = terms_[cur].kids[1];
        }
        out = to_regex(cur);
        for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
            out = Regex::concat(to_regex(*it), out);
        }
        break;
    }
    case RegexKind::Star:
        out = Regex::star(to_regex(t.kids[0]));
        break;
    case RegexKind::Compl:
        out = Regex::complement(to_regex(t.kids[0]));
        break;
    case RegexKind::Count:
        out = Regex::count(to_regex(t.kids[0]), t.reps);
        break;
    }
    exported_.emplace(id, out);
    return out;
}

DerivativeEngine::Id DerivativeEngine::derive(Id id, Bit b) {
    if (Id cached = delta_[id][b]; cached != kUnset) {
        return cached;
    }
    // Copy: recursive calls may grow terms_ and invalidate references.
    const Term t = terms_[id];
    Id result = empty_;
    switch (t.kind) {
    case RegexKind::EmptySet:
    case RegexKind::Epsilon:
        result = empty_;
        break;
    case RegexKind::Symbol:
        result = t.bit == b ? epsilon_ : empty_;
        break;
    case RegexKind::Union:
    case RegexKind::Inter: {
        std::vector<Id> parts;
        parts.reserve(t.kids.size());
        for (Id k : t.kids) {
            parts.push_back(derive(k, b));
        }
        result = t.kind == RegexKind::Union ? mk_union(std::move(parts)) : mk_inter(std::move(parts));
        break;
    }
    case RegexKind::Concat: {
        Id head = t.kids[0];
        Id tail = t.kids[1];
        Id first = mk_concat(derive(head, b), tail);
        result = terms_[head].nullable ? mk_union({first, derive(tail, b)}) : first;
        break;
    }
    case RegexKind::Star:
        result = mk_concat(derive(t.kids[0], b), id);
        break;
    case RegexKind::Compl:
        result = mk_compl(derive(t.kids[0], b));
        break;
    case RegexKind::Count:
        result = mk_concat(derive(t.kids[0], b), mk_count(t.kids[0], t.reps - 1));
        break;
    }
    delta_[id][b] = result;
    return result;
}

} // namespace rexlab
