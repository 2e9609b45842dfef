#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vcausal {

// A Bell scenario: per party, the list of output counts, one entry per input.
// The paper-style label {[2 2] [3 3 3] [2 2]} means parties A and C have two
// binary-outcome inputs while B has three ternary-outcome inputs.
class Scenario {
public:
    Scenario() = default;
    explicit Scenario(std::vector<std::vector<int>> outputs_per_input);

    int num_parties() const { return static_cast<int>(parties_.size()); }
    int num_inputs(int party) const { return static_cast<int>(parties_[party].size()); }
    int num_outputs(int party, int input) const { return parties_[party][input]; }
    const std::vector<std::vector<int>>& parties() const { return parties_; }

    // Total number of joint-probability coordinates:
    // sum over input tuples of the product of per-party output counts.
    std::size_t coordinate_count() const { return coord_count_; }

    std::size_t num_input_tuples() const { return input_offsets_.size(); }

    // Enumerates input tuples in row-major party order.
    std::vector<std::vector<int>> input_tuples() const;

    // Index of an input tuple in row-major order.
    std::size_t input_index(const std::vector<int>& inputs) const;

    // Number of output tuples for a given input tuple.
    std::size_t block_size(const std::vector<int>& inputs) const;

    // Flat coordinate of P(outputs|inputs): blocks ordered by input tuple,
    // outputs row-major within a block.
    std::size_t coord(const std::vector<int>& inputs, const std::vector<int>& outputs) const;

    // Enumerates output tuples for a given input tuple, row-major.
    std::vector<std::vector<int>> output_tuples(const std::vector<int>& inputs) const;

    // Scenario restricted to a subset of parties (order preserved).
    Scenario restrict(const std::vector<int>& party_subset) const;

    std::string label() const;  // "{[2 2] [3 3 3] [2 2]}"

    bool operator==(const Scenario& o) const { return parties_ == o.parties_; }

private:
    std::vector<std::vector<int>> parties_;
    std::vector<std::size_t> input_offsets_;  // per input tuple, start of its block
    std::size_t coord_count_ = 0;
};

// Iterate over all tuples with mixed radices; f receives each tuple.
template <typename F>
void for_each_tuple(const std::vector<int>& radices, F&& f) {
    std::vector<int> t(radices.size(), 0);
    for (const int r : radices)
        if (r <= 0) return;
    while (true) {
        f(t);
        int i = static_cast<int>(t.size()) - 1;
        for (; i >= 0; --i) {
            if (++t[i] < radices[i]) break;
            t[i] = 0;
        }
        if (i < 0) break;
    }
}

}  // namespace vcausal
