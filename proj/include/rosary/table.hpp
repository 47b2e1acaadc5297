#pragma once

#include <cstdint>
#include <vector>

#include "rosary/seq.hpp"

namespace rosary {

// Next-occurrence automaton over a text. Row v (1-based value) stores, for
// every position i, the position just past the first occurrence of v at or
// after i, or `fail` when there is none. `fail` is an absorbing state:
// step(v, fail) == fail for every v, so a matcher can run a fixed number of
// steps without bounds checks.
//
// For window matching on a cycle of length r the text is the cycle doubled;
// a greedy match of a pattern started at position j stays inside the
// one-loop window [j, j+r) iff the final state is <= j + r.
class StepTable {
public:
    // Text positions are int32 so the rows can be walked with vector gathers.
    static StepTable for_string(const std::vector<int>& text, int alphabet);
    static StepTable for_cycle(const Cycle& c);  // doubled text

    int alphabet() const { return alphabet_; }
    int text_length() const { return text_length_; }   // doubled length for cycles
    int window() const { return window_; }             // r for cycles, text length for strings
    std::int32_t fail() const { return fail_; }

    const std::int32_t* row(int value) const {
        return data_.data() + static_cast<std::size_t>(value) * stride_;
    }

    std::int32_t step(int value, std::int32_t pos) const { return row(value)[pos]; }

private:
    StepTable() = default;

    int alphabet_ = 0;
    int text_length_ = 0;
    int window_ = 0;
    std::int32_t fail_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::int32_t> data_;
};

}  // namespace rosary
