#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rexlab/gadget.hpp"
#include "rexlab/random.hpp"
#include "rexlab/rational.hpp"

namespace rexlab {

// Total predictor on words of length N. Must be safe to call concurrently.
using Hypothesis = std::function<bool(const Word&)>;

// Answers membership queries against a fixed concept and counts them.
class MembershipOracle {
public:
    explicit MembershipOracle(Hypothesis target) : concept_(std::move(target)) {}

    bool query(const Word& w) {
        queries_.fetch_add(1, std::memory_order_relaxed);
        return concept_(w);
    }
    std::size_t queries() const noexcept { return queries_.load(std::memory_order_relaxed); }

private:
    Hypothesis concept_;
    std::atomic<std::size_t> queries_{0};
};

// Fraction of examples where h disagrees with the label. Throws DomainError
// on an empty sample.
Rational empirical_error(const Hypothesis& h, std::span<const LabeledExample> sample);

struct SplitSample {
    std::vector<LabeledExample> train;
    std::vector<LabeledExample> validation;
};

// First p_train examples train, the rest validate.
SplitSample split_sample(std::vector<LabeledExample> examples, std::size_t p_train);

// A learner only ever sees the training part of a split.
class Learner {
public:
    virtual ~Learner() = default;
    virtual std::string name() const = 0;
    // mq may be null.
    virtual Hypothesis learn(std::span<const LabeledExample> train, MembershipOracle* mq, Rng& rng) = 0;
};

// Builds a learner for one trial. The challenge is visible so that the
// oracle learner can pick up the hidden seed; honest learners ignore it.
using LearnerFactory =
    std::function<std::unique_ptr<Learner>(const GadgetConfig& cfg, const Challenge& ch, Rng& rng)>;

// Cheats: returns the target built from the challenge's hidden seed, or from
// a fresh random seed when the challenge has none.
LearnerFactory oracle_learner();
LearnerFactory constant_zero();
LearnerFactory constant_one();
// Predicts the more frequent training label, 1 on ties.
LearnerFactory majority_label();

// "oracle", "const0", "const1" or "majority".
LearnerFactory learner_by_name(const std::string& name);

struct DistinguisherResult {
    Bit verdict = 0;  // 1 = pseudorandom
    Rational validation_error;
};

// Simulates p_train + v_size examples, trains on the first p_train and
// returns 1 iff the validation error is at most 1/2 - gamma/2.
DistinguisherResult distinguisher(const GadgetConfig& cfg, Learner& learner, const Challenge& ch, std::size_t p_train,
                                  std::size_t v_size, Rng& rng);

struct AdvantageReport {
    std::string learner;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t accept_pseudo = 0;
    std::size_t accept_random = 0;
    Rational advantage;
    Rational mean_err_pseudo;
    Rational mean_err_random;
};

// Trial t draws everything from derive_rng(master_seed, t): a pseudorandom
// challenge and its run, then a random challenge and its run. Each challenge
// holds p_train + v_size pairs.
AdvantageReport advantage_estimate(const GadgetConfig& cfg, const LearnerFactory& factory, const std::string& name,
                                   std::size_t trials, std::size_t p_train, std::size_t v_size,
                                   std::uint64_t master_seed);

// key=value lines.
void write_report(std::ostream& out, const GadgetConfig& cfg, const AdvantageReport& report);

} // namespace rexlab
