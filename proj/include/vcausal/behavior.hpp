#pragma once

#include "vcausal/rational.hpp"
#include "vcausal/scenario.hpp"

#include <optional>
#include <vector>

namespace vcausal {

enum class NumericMode { Double, Rational };

// One deterministic local strategy: for each party, a map input -> output.
struct DeterministicStrategy {
    std::vector<std::vector<int>> outputs;  // outputs[party][input]
};

// Conditioning on one party's (input, output) pair; the paper's xi = (b, y).
struct ConditioningContext {
    int party = 1;
    int input = 0;
    int output = 0;
};

// A full conditional-probability table P(outputs|inputs) over a Scenario.
// Carries either exact rational or double entries; conversions are explicit.
class Behavior {
public:
    Behavior() = default;
    Behavior(Scenario sc, std::vector<double> table);
    Behavior(Scenario sc, RatVec table);

    const Scenario& scenario() const { return scenario_; }
    NumericMode mode() const { return mode_; }
    bool is_rational() const { return mode_ == NumericMode::Rational; }

    const std::vector<double>& dbl_table() const;
    const RatVec& rat_table() const;

    double value(const std::vector<int>& inputs, const std::vector<int>& outputs) const;
    Rat rat_value(const std::vector<int>& inputs, const std::vector<int>& outputs) const;

    // Explicit conversions. to_rational uses the exact dyadic value of each double.
    Behavior to_double() const;
    Behavior to_rational() const;

    // Checks nonnegativity (within tol in double mode, exactly in rational mode)
    // and per-input normalization; throws std::invalid_argument on failure.
    void validate(double tol = 1e-10) const;

private:
    Scenario scenario_;
    NumericMode mode_ = NumericMode::Double;
    std::vector<double> dbl_;
    RatVec rat_;
};

// Largest change of any omitted-party marginal when one party's input varies;
// zero iff the non-signaling equalities hold exactly.
double nonsignaling_deficit(const Behavior& beh);
Rat nonsignaling_deficit_exact(const Behavior& beh);  // rational mode only

// Marginal distribution of a party subset at given subset inputs, indexed
// row-major over the subset's output tuples. Requires the behavior to be
// non-signaling within ns_tol (the omitted parties' inputs are fixed to 0).
std::vector<double> marginal(const Behavior& beh, const std::vector<int>& parties,
                             const std::vector<int>& inputs, double ns_tol = 1e-8);
RatVec marginal_exact(const Behavior& beh, const std::vector<int>& parties,
                      const std::vector<int>& inputs);

// Marginal at a full input tuple; no non-signaling requirement.
std::vector<double> marginal_at(const Behavior& beh, const std::vector<int>& parties,
                                const std::vector<int>& full_inputs);

// The behavior of the non-conditioned parties given ctx, together with the
// context weight. Contexts with weight below 1e-12 (exactly 0 in rational
// mode) are flagged empty rather than treated as errors.
struct ConditionedBehavior {
    Behavior behavior;   // over the remaining parties, in the source mode
    double weight = 0;   // P(ctx.output | ctx.input) for the conditioned party
    Rat weight_exact;    // filled in rational mode
    bool flagged_empty = false;
};
ConditionedBehavior conditioned_behavior(const Behavior& beh, const ConditioningContext& ctx,
                                         double ns_tol = 1e-8);

// Exact rational behavior with P = 1 where every party plays its strategy.
Behavior deterministic_behavior(const DeterministicStrategy& s, const Scenario& scenario);

// All deterministic strategies of a scenario, row-major per party.
std::vector<DeterministicStrategy> all_deterministic_strategies(const Scenario& scenario);

// Exact convex mixture p*b1 + (1-p)*b2 of two rational behaviors.
Behavior mix(const Behavior& b1, const Behavior& b2, const Rat& p);

}  // namespace vcausal
