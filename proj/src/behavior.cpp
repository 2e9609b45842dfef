#include "vcausal/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vcausal {

Behavior::Behavior(Scenario sc, std::vector<double> table)
    : scenario_(std::move(sc)), mode_(NumericMode::Double), dbl_(std::move(table)) {
    if (dbl_.size() != scenario_.coordinate_count())
        throw std::invalid_argument("behavior table size mismatch");
}

Behavior::Behavior(Scenario sc, RatVec table)
    : scenario_(std::move(sc)), mode_(NumericMode::Rational), rat_(std::move(table)) {
    if (rat_.size() != scenario_.coordinate_count())
        throw std::invalid_argument("behavior table size mismatch");
}

const std::vector<double>& Behavior::dbl_table() const {
    if (mode_ != NumericMode::Double) throw std::logic_error("behavior is not in double mode");
    return dbl_;
}

const RatVec& Behavior::rat_table() const {
    if (mode_ != NumericMode::Rational) throw std::logic_error("behavior is not in rational mode");
    return rat_;
}

double Behavior::value(const std::vector<int>& inputs, const std::vector<int>& outputs) const {
    std::size_t i = scenario_.coord(inputs, outputs);
    return mode_ == NumericMode::Double ? dbl_[i] : rat_[i].get_d();
}

Rat Behavior::rat_value(const std::vector<int>& inputs, const std::vector<int>& outputs) const {
    return rat_table()[scenario_.coord(inputs, outputs)];
}

Behavior Behavior::to_double() const {
    if (mode_ == NumericMode::Double) return *this;
    std::vector<double> t(rat_.size());
    for (std::size_t i = 0; i < rat_.size(); ++i) t[i] = rat_[i].get_d();
    return Behavior(scenario_, std::move(t));
}

Behavior Behavior::to_rational() const {
    if (mode_ == NumericMode::Rational) return *this;
    RatVec t(dbl_.size());
    for (std::size_t i = 0; i < dbl_.size(); ++i) t[i] = rat_from_double_exact(dbl_[i]);
    return Behavior(scenario_, std::move(t));
}

void Behavior::validate(double tol) const {
    const auto tuples = scenario_.input_tuples();
    if (mode_ == NumericMode::Double) {
        for (double v : dbl_)
            if (v < -tol || std::isnan(v)) throw std::invalid_argument("negative probability entry");
        for (const auto& in : tuples) {
            double sum = 0;
            for (const auto& out : scenario_.output_tuples(in)) sum += dbl_[scenario_.coord(in, out)];
            if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("distribution not normalized");
        }
    } else {
        for (const Rat& v : rat_)
            if (v < 0) throw std::invalid_argument("negative probability entry");
        for (const auto& in : tuples) {
            Rat sum = 0;
            for (const auto& out : scenario_.output_tuples(in)) sum += rat_[scenario_.coord(in, out)];
            if (sum != 1) throw std::invalid_argument("distribution not normalized");
        }
    }
}

namespace {

// Sums the block at `inputs` over all parties not in `parties`, at the given
// subset outputs; generic over the scalar type.
template <typename T>
std::vector<T> marginal_block(const Scenario& sc, const std::vector<T>& table,
                              const std::vector<int>& parties, const std::vector<int>& full_inputs) {
    std::vector<int> sub_radices;
    for (std::size_t k = 0; k < parties.size(); ++k)
        sub_radices.push_back(sc.num_outputs(parties[k], full_inputs[parties[k]]));
    std::size_t n = 1;
    for (int r : sub_radices) n *= static_cast<std::size_t>(r);
    std::vector<T> result(n, T(0));
    for (const auto& out : sc.output_tuples(full_inputs)) {
        std::size_t sub = 0;
        for (std::size_t k = 0; k < parties.size(); ++k)
            sub = sub * static_cast<std::size_t>(sub_radices[k]) +
                  static_cast<std::size_t>(out[parties[k]]);
        result[sub] += table[sc.coord(full_inputs, out)];
    }
    return result;
}

template <typename T>
T deficit_impl(const Scenario& sc, const std::vector<T>& table) {
    T worst(0);
    int np = sc.num_parties();
    for (int p = 0; p < np; ++p) {
        std::vector<int> others;
        for (int q = 0; q < np; ++q)
            if (q != p) others.push_back(q);
        // vary p's input over all pairs at every fixed context of the others
        std::vector<int> other_radices;
        for (int q : others) other_radices.push_back(sc.num_inputs(q));
        for_each_tuple(other_radices, [&](const std::vector<int>& oin) {
            std::vector<int> full(np, 0);
            for (std::size_t k = 0; k < others.size(); ++k) full[others[k]] = oin[k];
            std::vector<std::vector<T>> margs;
            for (int xi = 0; xi < sc.num_inputs(p); ++xi) {
                full[p] = xi;
                margs.push_back(marginal_block(sc, table, others, full));
            }
            for (std::size_t i = 0; i + 1 < margs.size(); ++i)
                for (std::size_t j = i + 1; j < margs.size(); ++j)
                    for (std::size_t k = 0; k < margs[i].size(); ++k) {
                        T d = margs[i][k] - margs[j][k];
                        if (d < T(0)) d = -d;
                        if (d > worst) worst = d;
                    }
        });
    }
    return worst;
}

}  // namespace

double nonsignaling_deficit(const Behavior& beh) {
    if (beh.is_rational())
        return nonsignaling_deficit_exact(beh).get_d();
    return deficit_impl(beh.scenario(), beh.dbl_table());
}

Rat nonsignaling_deficit_exact(const Behavior& beh) {
    return deficit_impl(beh.scenario(), beh.rat_table());
}

std::vector<double> marginal(const Behavior& beh, const std::vector<int>& parties,
                             const std::vector<int>& inputs, double ns_tol) {
    if (parties.size() != inputs.size()) throw std::invalid_argument("parties/inputs size mismatch");
    bool omits = parties.size() < static_cast<std::size_t>(beh.scenario().num_parties());
    if (omits && nonsignaling_deficit(beh) > ns_tol)
        throw std::invalid_argument("marginal over omitted inputs requires a non-signaling behavior");
    std::vector<int> full(beh.scenario().num_parties(), 0);
    for (std::size_t k = 0; k < parties.size(); ++k) full[parties[k]] = inputs[k];
    return marginal_at(beh, parties, full);
}

RatVec marginal_exact(const Behavior& beh, const std::vector<int>& parties,
                      const std::vector<int>& inputs) {
    if (parties.size() != inputs.size()) throw std::invalid_argument("parties/inputs size mismatch");
    bool omits = parties.size() < static_cast<std::size_t>(beh.scenario().num_parties());
    if (omits && nonsignaling_deficit_exact(beh) != 0)
        throw std::invalid_argument("marginal over omitted inputs requires a non-signaling behavior");
    std::vector<int> full(beh.scenario().num_parties(), 0);
    for (std::size_t k = 0; k < parties.size(); ++k) full[parties[k]] = inputs[k];
    return marginal_block(beh.scenario(), beh.rat_table(), parties, full);
}

std::vector<double> marginal_at(const Behavior& beh, const std::vector<int>& parties,
                                const std::vector<int>& full_inputs) {
    if (beh.is_rational()) {
        RatVec r = marginal_block(beh.scenario(), beh.rat_table(), parties, full_inputs);
        std::vector<double> d(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) d[i] = r[i].get_d();
        return d;
    }
    return marginal_block(beh.scenario(), beh.dbl_table(), parties, full_inputs);
}

ConditionedBehavior conditioned_behavior(const Behavior& beh, const ConditioningContext& ctx,
                                         double ns_tol) {
    const Scenario& sc = beh.scenario();
    int np = sc.num_parties();
    if (ctx.party < 0 || ctx.party >= np) throw std::out_of_range("conditioning party out of range");
    std::vector<int> rest;
    for (int q = 0; q < np; ++q)
        if (q != ctx.party) rest.push_back(q);
    Scenario sub = sc.restrict(rest);

    ConditionedBehavior result;
    if (beh.is_rational()) {
        RatVec wm = marginal_exact(beh, {ctx.party}, {ctx.input});
        Rat w = wm[static_cast<std::size_t>(ctx.output)];
        result.weight_exact = w;
        result.weight = w.get_d();
        if (w == 0) {
            result.flagged_empty = true;
            result.behavior = Behavior(sub, RatVec(sub.coordinate_count(), Rat(0)));
            return result;
        }
        RatVec table(sub.coordinate_count());
        for (const auto& sin : sub.input_tuples()) {
            std::vector<int> full_in(np);
            full_in[ctx.party] = ctx.input;
            for (std::size_t k = 0; k < rest.size(); ++k) full_in[rest[k]] = sin[k];
            for (const auto& sout : sub.output_tuples(sin)) {
                std::vector<int> full_out(np);
                full_out[ctx.party] = ctx.output;
                for (std::size_t k = 0; k < rest.size(); ++k) full_out[rest[k]] = sout[k];
                table[sub.coord(sin, sout)] = beh.rat_table()[sc.coord(full_in, full_out)] / w;
            }
        }
        result.behavior = Behavior(sub, std::move(table));
        return result;
    }

    std::vector<double> wm = marginal(beh, {ctx.party}, {ctx.input}, ns_tol);
    double w = wm[static_cast<std::size_t>(ctx.output)];
    result.weight = w;
    if (w < 1e-12) {
        result.flagged_empty = true;
        result.behavior = Behavior(sub, std::vector<double>(sub.coordinate_count(), 0.0));
        return result;
    }
    std::vector<double> table(sub.coordinate_count());
    for (const auto& sin : sub.input_tuples()) {
        std::vector<int> full_in(np);
        full_in[ctx.party] = ctx.input;
        for (std::size_t k = 0; k < rest.size(); ++k) full_in[rest[k]] = sin[k];
        for (const auto& sout : sub.output_tuples(sin)) {
            std::vector<int> full_out(np);
            full_out[ctx.party] = ctx.output;
            for (std::size_t k = 0; k < rest.size(); ++k) full_out[rest[k]] = sout[k];
            table[sub.coord(sin, sout)] = beh.dbl_table()[sc.coord(full_in, full_out)] / w;
        }
    }
    result.behavior = Behavior(sub, std::move(table));
    return result;
}

Behavior deterministic_behavior(const DeterministicStrategy& s, const Scenario& scenario) {
    int np = scenario.num_parties();
    if (static_cast<int>(s.outputs.size()) != np)
        throw std::invalid_argument("strategy arity mismatch");
    for (int p = 0; p < np; ++p) {
        if (static_cast<int>(s.outputs[p].size()) != scenario.num_inputs(p))
            throw std::invalid_argument("strategy input count mismatch");
        for (int i = 0; i < scenario.num_inputs(p); ++i)
            if (s.outputs[p][i] < 0 || s.outputs[p][i] >= scenario.num_outputs(p, i))
                throw std::out_of_range("strategy output out of range");
    }
    RatVec table(scenario.coordinate_count(), Rat(0));
    for (const auto& in : scenario.input_tuples()) {
        std::vector<int> out(np);
        for (int p = 0; p < np; ++p) out[p] = s.outputs[p][in[p]];
        table[scenario.coord(in, out)] = 1;
    }
    return Behavior(scenario, std::move(table));
}

std::vector<DeterministicStrategy> all_deterministic_strategies(const Scenario& scenario) {
    int np = scenario.num_parties();
    // per party, enumerate maps input->output
    std::vector<std::vector<std::vector<int>>> per_party(np);
    for (int p = 0; p < np; ++p) {
        std::vector<int> radices;
        for (int i = 0; i < scenario.num_inputs(p); ++i) radices.push_back(scenario.num_outputs(p, i));
        for_each_tuple(radices, [&](const std::vector<int>& t) { per_party[p].push_back(t); });
    }
    std::vector<DeterministicStrategy> out;
    std::vector<int> counts;
    for (int p = 0; p < np; ++p) counts.push_back(static_cast<int>(per_party[p].size()));
    for_each_tuple(counts, [&](const std::vector<int>& pick) {
        DeterministicStrategy s;
        s.outputs.resize(np);
        for (int p = 0; p < np; ++p) s.outputs[p] = per_party[p][pick[p]];
        out.push_back(std::move(s));
    });
    return out;
}

Behavior mix(const Behavior& b1, const Behavior& b2, const Rat& p) {
    if (!(b1.scenario() == b2.scenario())) throw std::invalid_argument("scenario mismatch");
    const RatVec& t1 = b1.rat_table();
    const RatVec& t2 = b2.rat_table();
    RatVec t(t1.size());
    Rat q = Rat(1) - p;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = p * t1[i] + q * t2[i];
    return Behavior(b1.scenario(), std::move(t));
}

}  // namespace vcausal
