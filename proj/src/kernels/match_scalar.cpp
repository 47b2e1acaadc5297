#include "rosary/kernels.hpp"

namespace rosary {

namespace {

int find_start_scalar(const StepTable& t, const int* pattern, int len) {
    const int r = t.window();
    for (int j = 0; j < r; ++j) {
        std::int32_t pos = j;
        const std::int32_t limit = j + r;
        for (int k = 0; k < len; ++k) {
            pos = t.step(pattern[k], pos);
            if (pos > limit) break;
        }
        if (pos <= limit) return j;
    }
    return -1;
}

std::uint64_t screen_advance_scalar(const std::uint8_t* expected, std::uint8_t* state,
                                    int lanes, std::uint8_t symbol) {
    std::uint64_t hits = 0;
    for (int i = 0; i < lanes; ++i) {
        if (expected[i] == symbol) {
            ++state[i];
            hits |= std::uint64_t{1} << i;
        }
    }
    return hits;
}

}  // namespace

const MatchKernel& scalar_match_kernel() {
    static const MatchKernel k{"scalar", &find_start_scalar};
    return k;
}

const ScreenKernel& scalar_screen_kernel() {
    static const ScreenKernel k{"scalar", &screen_advance_scalar};
    return k;
}

}  // namespace rosary
