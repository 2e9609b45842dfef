#include "vcausal/scenario.hpp"

#include <stdexcept>

namespace vcausal {

Scenario::Scenario(std::vector<std::vector<int>> outputs_per_input)
    : parties_(std::move(outputs_per_input)) {
    if (parties_.empty()) throw std::invalid_argument("scenario needs at least one party");
    for (const auto& p : parties_) {
        if (p.empty()) throw std::invalid_argument("party needs at least one input");
        for (int k : p)
            if (k < 1) throw std::invalid_argument("output count must be >= 1");
    }
    std::vector<int> input_radices;
    input_radices.reserve(parties_.size());
    for (const auto& p : parties_) input_radices.push_back(static_cast<int>(p.size()));
    for_each_tuple(input_radices, [&](const std::vector<int>& in) {
        input_offsets_.push_back(coord_count_);
        std::size_t block = 1;
        for (int p = 0; p < num_parties(); ++p) block *= static_cast<std::size_t>(parties_[p][in[p]]);
        coord_count_ += block;
    });
}

std::vector<std::vector<int>> Scenario::input_tuples() const {
    std::vector<int> radices;
    for (const auto& p : parties_) radices.push_back(static_cast<int>(p.size()));
    std::vector<std::vector<int>> out;
    out.reserve(input_offsets_.size());
    for_each_tuple(radices, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

std::size_t Scenario::input_index(const std::vector<int>& inputs) const {
    if (inputs.size() != parties_.size()) throw std::invalid_argument("input tuple arity mismatch");
    std::size_t idx = 0;
    for (int p = 0; p < num_parties(); ++p) {
        if (inputs[p] < 0 || inputs[p] >= num_inputs(p))
            throw std::out_of_range("input out of range");
        idx = idx * parties_[p].size() + static_cast<std::size_t>(inputs[p]);
    }
    return idx;
}

std::size_t Scenario::block_size(const std::vector<int>& inputs) const {
    std::size_t block = 1;
    for (int p = 0; p < num_parties(); ++p) block *= static_cast<std::size_t>(parties_[p][inputs[p]]);
    return block;
}

std::size_t Scenario::coord(const std::vector<int>& inputs, const std::vector<int>& outputs) const {
    std::size_t base = input_offsets_[input_index(inputs)];
    std::size_t off = 0;
    for (int p = 0; p < num_parties(); ++p) {
        int k = parties_[p][inputs[p]];
        if (outputs[p] < 0 || outputs[p] >= k) throw std::out_of_range("output out of range");
        off = off * static_cast<std::size_t>(k) + static_cast<std::size_t>(outputs[p]);
    }
    return base + off;
}

std::vector<std::vector<int>> Scenario::output_tuples(const std::vector<int>& inputs) const {
    std::vector<int> radices;
    for (int p = 0; p < num_parties(); ++p) radices.push_back(parties_[p][inputs[p]]);
    std::vector<std::vector<int>> out;
    for_each_tuple(radices, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

Scenario Scenario::restrict(const std::vector<int>& party_subset) const {
    std::vector<std::vector<int>> sub;
    for (int p : party_subset) {
        if (p < 0 || p >= num_parties()) throw std::out_of_range("party index out of range");
        sub.push_back(parties_[p]);
    }
    return Scenario(std::move(sub));
}

std::string Scenario::label() const {
    std::string s = "{";
    for (std::size_t p = 0; p < parties_.size(); ++p) {
        s += "[";
        for (std::size_t i = 0; i < parties_[p].size(); ++i) {
            if (i) s += " ";
            s += std::to_string(parties_[p][i]);
        }
        s += "]";
        if (p + 1 < parties_.size()) s += " ";
    }
    return s + "}";
}

}  // namespace vcausal
