#include "rexlab/harness.hpp"

#include <cstdio>
#include <ostream>

#include "rexlab/error.hpp"
#include "rexlab/match.hpp"

namespace rexlab {

Rational empirical_error(const Hypothesis& h, std::span<const LabeledExample> sample) {
    if (sample.empty()) {
        throw DomainError("empirical error of an empty sample");
    }
    std::int64_t wrong = 0;
    for (const auto& ex : sample) {
        if (h(ex.z) != (ex.y == 1)) {
            ++wrong;
        }
    }
    return {wrong, static_cast<std::int64_t>(sample.size())};
}

SplitSample split_sample(std::vector<LabeledExample> examples, std::size_t p_train) {
    if (p_train > examples.size()) {
        throw DomainError("training size exceeds the sample");
    }
    SplitSample s;
    s.validation.assign(std::make_move_iterator(examples.begin() + static_cast<std::ptrdiff_t>(p_train)),
                        std::make_move_iterator(examples.end()));
    examples.resize(p_train);
    s.train = std::move(examples);
    return s;
}

namespace {

class FixedLearner final : public Learner {
public:
    FixedLearner(std::string name, Hypothesis h) : name_(std::move(name)), h_(std::move(h)) {}
    std::string name() const override { return name_; }
    Hypothesis learn(std::span<const LabeledExample>, MembershipOracle*, Rng&) override { return h_; }

private:
    std::string name_;
    Hypothesis h_;
};

class MajorityLearner final : public Learner {
public:
    std::string name() const override { return "majority"; }
    Hypothesis learn(std::span<const LabeledExample> train, MembershipOracle*, Rng&) override {
        std::size_t ones = 0;
        for (const auto& ex : train) {
            ones += ex.y;
        }
        bool label = 2 * ones >= train.size();
        return [label](const Word&) { return label; };
    }
};

} // namespace

LearnerFactory oracle_learner() {
    return [](const GadgetConfig& cfg, const Challenge& ch, Rng& rng) -> std::unique_ptr<Learner> {
        Seed x = ch.hidden_seed ? *ch.hidden_seed : random_word(cfg.n, rng);
        auto m = std::make_shared<const Matcher>(build_target(x, cfg));
        return std::make_unique<FixedLearner>("oracle", [m](const Word& w) { return m->matches(w); });
    };
}

LearnerFactory constant_zero() {
    return [](const GadgetConfig&, const Challenge&, Rng&) -> std::unique_ptr<Learner> {
        return std::make_unique<FixedLearner>("const0", [](const Word&) { return false; });
    };
}

LearnerFactory constant_one() {
    return [](const GadgetConfig&, const Challenge&, Rng&) -> std::unique_ptr<Learner> {
        return std::make_unique<FixedLearner>("const1", [](const Word&) { return true; });
    };
}

LearnerFactory majority_label() {
    return [](const GadgetConfig&, const Challenge&, Rng&) -> std::unique_ptr<Learner> {
        return std::make_unique<MajorityLearner>();
    };
}

LearnerFactory learner_by_name(const std::string& name) {
    if (name == "oracle") {
        return oracle_learner();
    }
    if (name == "const0") {
        return constant_zero();
    }
    if (name == "const1") {
        return constant_one();
    }
    if (name == "majority") {
        return majority_label();
    }
    throw DomainError("unknown learner '" + name + "'");
}

DistinguisherResult distinguisher(const GadgetConfig& cfg, Learner& learner, const Challenge& ch, std::size_t p_train,
                                  std::size_t v_size, Rng& rng) {
    if (v_size == 0) {
        throw DomainError("the distinguisher needs a nonempty validation set");
    }
    SplitSample s = split_sample(simulate_oracle(cfg, ch, p_train + v_size, rng), p_train);
    Hypothesis h = learner.learn(s.train, nullptr, rng);
    DistinguisherResult r;
    r.validation_error = empirical_error(h, s.validation);
    r.verdict = r.validation_error <= Rational(1, 2) - cfg.gamma / 2 ? 1 : 0;
    return r;
}

AdvantageReport advantage_estimate(const GadgetConfig& cfg, const LearnerFactory& factory, const std::string& name,
                                   std::size_t trials, std::size_t p_train, std::size_t v_size,
                                   std::uint64_t master_seed) {
    if (trials == 0) {
        throw DomainError("advantage estimate needs at least one trial");
    }
    cfg.validate();
    AdvantageReport rep;
    rep.learner = name;
    rep.trials = trials;
    rep.seed = master_seed;
    const std::size_t m = p_train + v_size;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = derive_rng(master_seed, t);
        for (ChallengeMode mode : {ChallengeMode::Pseudorandom, ChallengeMode::Random}) {
            Challenge ch = make_challenge(cfg, m, mode, rng);
            auto learner = factory(cfg, ch, rng);
            DistinguisherResult r = distinguisher(cfg, *learner, ch, p_train, v_size, rng);
            if (mode == ChallengeMode::Pseudorandom) {
                rep.accept_pseudo += r.verdict;
                rep.mean_err_pseudo += r.validation_error;
            } else {
                rep.accept_random += r.verdict;
                rep.mean_err_random += r.validation_error;
            }
        }
    }
    const auto T = static_cast<std::int64_t>(trials);
    rep.advantage = Rational(static_cast<std::int64_t>(rep.accept_pseudo) - static_cast<std::int64_t>(rep.accept_random), T);
    rep.mean_err_pseudo /= T;
    rep.mean_err_random /= T;
    return rep;
}

namespace {

std::string fixed6(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

} // namespace

void write_report(std::ostream& out, const GadgetConfig& cfg, const AdvantageReport& report) {
    out << "mode=distinguish\n"
        << "config=" << format_config(cfg) << '\n'
        << "learner=" << report.learner << '\n'
        << "trials=" << report.trials << '\n'
        << "seed=" << report.seed << '\n'
        << "accept_pseudo=" << report.accept_pseudo << '\n'
        << "accept_random=" << report.accept_random << '\n'
        << "adv=" << fixed6(report.advantage) << '\n'
        << "mean_err_pseudo=" << fixed6(report.mean_err_pseudo) << '\n'
        << "mean_err_random=" << fixed6(report.mean_err_random) << '\n';
}

} // namespace rexlab
