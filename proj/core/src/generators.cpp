#include "rexlab/generators.hpp"

#include <vector>

#include "rexlab/error.hpp"

namespace rexlab {

namespace {

enum class Op { Union, Concat, Star, Inter, Compl, Count };

Regex gen_atom(Rng& rng) {
    switch (uniform_int(0, 5, rng)) {
    case 0:
        return Regex::empty_set();
    case 1:
        return Regex::epsilon();
    case 2:
    case 3:
        return Regex::symbol(0);
    default:
        return Regex::symbol(1);
    }
}

Regex gen_regex(std::uint64_t budget, const RegexGenOptions& opts, Rng& rng) {
    if (budget <= 1) {
        return gen_atom(rng);
    }
    std::vector<Op> ops{Op::Union, Op::Concat, Op::Concat};
    if (opts.profile.allow_star) {
        ops.push_back(Op::Star);
    }
    if (opts.profile.allow_inter) {
        ops.push_back(Op::Inter);
    }
    if (opts.profile.allow_compl) {
        ops.push_back(Op::Compl);
    }
    if (opts.profile.allow_count) {
        ops.push_back(Op::Count);
    }
    Op op = ops[uniform_int(0, ops.size() - 1, rng)];
    switch (op) {
    case Op::Star:
        return Regex::star(gen_regex(budget - 1, opts, rng));
    case Op::Compl:
        return Regex::complement(gen_regex(budget - 1, opts, rng));
    case Op::Count: {
        std::uint64_t reps = uniform_int(0, opts.max_reps, rng);
        std::uint64_t digits = counter_digits(reps);
        std::uint64_t inner = budget > digits + 1 ? budget - digits : 1;
        return Regex::count(gen_regex(inner, opts, rng), reps);
    }
    case Op::Concat: {
        // Concatenation is free, so both sides may take the whole budget
        // minus what the other one needs.
        std::uint64_t left = uniform_int(1, budget - 1, rng);
        return Regex::concat(gen_regex(left, opts, rng), gen_regex(budget - left, opts, rng));
    }
    case Op::Union:
    case Op::Inter: {
        if (budget < 3) {
            return gen_atom(rng);
        }
        std::uint64_t left = uniform_int(1, budget - 2, rng);
        Regex l = gen_regex(left, opts, rng);
        Regex r = gen_regex(budget - 1 - left, opts, rng);
        return op == Op::Union ? Regex::alt(l, r) : Regex::inter(l, r);
    }
    }
    return gen_atom(rng);
}

Formula gen_formula(std::size_t n, std::size_t budget, Rng& rng) {
    auto var = [&] { return Formula::var(uniform_int(1, n, rng)); };
    if (budget <= 1) {
        return var();
    }
    if (budget == 2) {
        return Formula::negate(var());
    }
    std::uint64_t pick = uniform_int(0, 4, rng);
    if (pick == 0) {
        return Formula::negate(gen_formula(n, budget - 1, rng));
    }
    std::size_t left = uniform_int(1, budget - 2, rng);
    Formula l = gen_formula(n, left, rng);
    Formula r = gen_formula(n, budget - 1 - left, rng);
    return pick <= 2 ? Formula::conj(l, r) : Formula::disj(l, r);
}

} // namespace

Regex random_regex(const RegexGenOptions& opts, Rng& rng) {
    if (opts.max_size == 0) {
        throw DomainError("max_size must be positive");
    }
    for (;;) {
        Regex r = gen_regex(uniform_int(1, opts.max_size, rng), opts, rng);
        // The budget split can overshoot through concatenation of atoms.
        if (size_of(r, true) <= opts.max_size && conforms(r, opts.profile)) {
            return r;
        }
    }
}

Dnf random_dnf(std::size_t n, std::size_t m, Rng& rng) {
    Dnf phi{n, {}};
    for (std::size_t j = 0; j < m; ++j) {
        Term t;
        for (std::size_t v = 1; v <= n; ++v) {
            if (uniform_int(0, 1, rng) == 1) {
                t.push_back({v, uniform_int(0, 1, rng) == 1});
            }
        }
        phi.terms.push_back(std::move(t));
    }
    return phi;
}

BooleanFormula random_formula(std::size_t n, std::size_t max_size, Rng& rng) {
    if (n == 0 || max_size == 0) {
        throw DomainError("random formula needs n >= 1 and max_size >= 1");
    }
    return {n, gen_formula(n, uniform_int(1, max_size, rng), rng)};
}

} // namespace rexlab
