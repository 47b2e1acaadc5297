#include "rosary/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace rosary {

std::size_t Code::ones() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::size_t Code::zeros() const {
    return bits.size() - ones();
}

Code code_of_cycle(const Cycle& c) {
    const std::size_t r = c.length();
    if (r < 2)
        throw std::invalid_argument("code needs at least two elements");
    Code out;
    out.cyclic = true;
    out.bits.resize(r);
    for (std::size_t i = 0; i < r; ++i)
        out.bits[i] = c.values[(i + 1) % r] >= c.values[i] ? 1 : 0;
    return out;
}

Code code_of_string(const std::vector<int>& s) {
    if (s.size() < 2)
        throw std::invalid_argument("code needs at least two elements");
    Code out;
    out.cyclic = false;
    out.bits.resize(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        out.bits[i] = s[i + 1] >= s[i] ? 1 : 0;
    return out;
}

LambdaDecomposition lambda_decomposition(const Code& code) {
    if (!code.cyclic)
        throw std::invalid_argument("lambda decomposition is defined on cyclic codes");
    const std::size_t r = code.bits.size();
    std::vector<std::size_t> one_positions;
    for (std::size_t i = 0; i < r; ++i)
        if (code.bits[i]) one_positions.push_back(i);
    if (one_positions.empty())
        throw std::invalid_argument("code has no 1-bit, lambda decomposition undefined");

    LambdaDecomposition ld;
    ld.ones = one_positions.size();
    ld.zeros = r - ld.ones;
    ld.anchor = one_positions.front();
    ld.lambdas.reserve(ld.ones);
    for (std::size_t k = 0; k < ld.ones; ++k) {
        // zeros that follow the k-th 1-bit, wrapping for the last part
        std::size_t gap = k + 1 < ld.ones
                              ? one_positions[k + 1] - one_positions[k]
                              : r - one_positions.back() + one_positions.front();
        ld.lambdas.push_back(gap - 1);
    }
    return ld;
}

BlockDecomposition maximal_blocks(const Cycle& c) {
    const Code code = code_of_cycle(c);
    const std::size_t r = code.bits.size();
    BlockDecomposition out;

    if (code.ones() == r) {
        // cyclically non-decreasing, i.e. constant: one increasing block
        out.increasing.push_back(Block{0, r});
        return out;
    }
    // A cyclically strictly-decreasing sequence is impossible, so from here
    // both bit values occur.

    // One decreasing block per 1-bit: it starts right after the ascent and
    // spans the following 0-run. One increasing block per 0-bit, dually.
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t run = 0;
        if (code.bits[i]) {
            while (!code.bits[(i + 1 + run) % r]) ++run;
            out.decreasing.push_back(Block{(i + 1) % r, run + 1});
        } else {
            while (code.bits[(i + 1 + run) % r]) ++run;
            out.increasing.push_back(Block{(i + 1) % r, run + 1});
        }
    }
    auto by_start = [](const Block& a, const Block& b) { return a.start < b.start; };
    std::sort(out.increasing.begin(), out.increasing.end(), by_start);
    std::sort(out.decreasing.begin(), out.decreasing.end(), by_start);
    return out;
}

std::vector<int> block_values(const Cycle& c, const Block& b) {
    std::vector<int> out;
    out.reserve(b.length);
    for (std::size_t i = 0; i < b.length; ++i)
        out.push_back(c.values[(b.start + i) % c.length()]);
    return out;
}

StringRunCounts string_run_counts(const std::vector<int>& s) {
    StringRunCounts counts;
    if (s.size() < 2)
        return counts;
    const Code code = code_of_string(s);
    for (std::size_t i = 0; i < code.bits.size(); ++i) {
        if (i == 0 || code.bits[i] != code.bits[i - 1]) {
            if (code.bits[i])
                ++counts.increasing;
            else
                ++counts.decreasing;
        }
    }
    return counts;
}

}  // namespace rosary
