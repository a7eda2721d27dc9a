#include "rexlab/match.hpp"

#include "derivative_engine.hpp"

namespace rexlab {

bool nullable(const Regex& r) {
    switch (r.kind()) {
    case RegexKind::EmptySet:
    case RegexKind::Symbol:
        return false;
    case RegexKind::Epsilon:
    case RegexKind::Star:
        return true;
    case RegexKind::Union:
        return nullable(r.left()) || nullable(r.right());
    case RegexKind::Concat: {
        Regex cur = r;
        while (cur.kind() == RegexKind::Concat) {
            if (!nullable(cur.left())) {
                return false;
            }
            cur = cur.right();
        }
        return nullable(cur);
    }
    case RegexKind::Inter:
        return nullable(r.left()) && nullable(r.right());
    case RegexKind::Compl:
        return !nullable(r.inner());
    case RegexKind::Count:
        return r.reps() == 0 || nullable(r.inner());
    }
    return false;
}

Regex derivative(const Regex& r, Bit b) {
    DerivativeEngine engine;
    return engine.to_regex(engine.derive(engine.intern(r), b));
}

Matcher::Matcher(const Regex& r)
    : engine_(std::make_unique<DerivativeEngine>()), mutex_(std::make_unique<std::mutex>()) {
    root_ = engine_->intern(r);
}

Matcher::~Matcher() = default;
Matcher::Matcher(Matcher&&) noexcept = default;
Matcher& Matcher::operator=(Matcher&&) noexcept = default;

bool Matcher::matches(const Word& w) const {
    std::lock_guard lock(*mutex_);
    auto state = root_;
    for (Bit b : w.bits()) {
        if (state == engine_->empty_set()) {
            return false;
        }
        if (state == engine_->sigma_star()) {
            return true;
        }
        state = engine_->derive(state, b);
    }
    return engine_->nullable(state);
}

std::size_t Matcher::explored_states() const {
    std::lock_guard lock(*mutex_);
    return engine_->term_count();
}

bool matches(const Regex& r, const Word& w) {
    return Matcher(r).matches(w);
}

} // namespace rexlab
