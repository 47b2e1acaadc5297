#include "rosary/table.hpp"

#include <stdexcept>

namespace rosary {

StepTable StepTable::for_string(const std::vector<int>& text, int alphabet) {
    if (alphabet < 1)
        throw std::invalid_argument("alphabet must be positive");
    for (int v : text)
        if (v < 1 || v > alphabet)
            throw std::invalid_argument("text value outside alphabet");

    StepTable t;
    t.alphabet_ = alphabet;
    t.text_length_ = static_cast<int>(text.size());
    t.window_ = t.text_length_;
    t.fail_ = t.text_length_ + 1;
    t.stride_ = static_cast<std::size_t>(t.text_length_) + 2;
    // row 0 is unused padding so row(v) can index by the 1-based value
    t.data_.assign(static_cast<std::size_t>(alphabet + 1) * t.stride_, t.fail_);
    for (int i = t.text_length_ - 1; i >= 0; --i) {
        for (int v = 1; v <= alphabet; ++v) {
            auto* r = t.data_.data() + static_cast<std::size_t>(v) * t.stride_;
            r[i] = r[i + 1];
        }
        auto* r = t.data_.data() + static_cast<std::size_t>(text[i]) * t.stride_;
        r[i] = i + 1;
    }
    return t;
}

StepTable StepTable::for_cycle(const Cycle& c) {
    std::vector<int> doubled(c.values);
    doubled.insert(doubled.end(), c.values.begin(), c.values.end());
    StepTable t = for_string(doubled, c.degree);
    t.window_ = static_cast<int>(c.length());
    return t;
}

}  // namespace rosary
