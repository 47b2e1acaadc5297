// Vector variants of the hot loops. This translation unit is the only one
// built with AVX2 enabled; nothing here runs unless the dispatcher saw the
// feature bit at startup.

#include "rosary/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace rosary {

namespace {

// Eight start positions per iteration. Lane l tracks the greedy match that
// begins at j0+l; a gather through the pattern's table rows advances all
// eight at once. The fail state is absorbing, so finished lanes ride along.
int find_start_avx2(const StepTable& t, const int* pattern, int len) {
    const int r = t.window();
    const std::int32_t fail = t.fail();
    const __m256i lane_ids = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i rvec = _mm256_set1_epi32(r);
    const __m256i failvec = _mm256_set1_epi32(fail);

    for (int j0 = 0; j0 < r; j0 += 8) {
        const __m256i start = _mm256_add_epi32(_mm256_set1_epi32(j0), lane_ids);
        // lanes past the last start begin at fail and are masked out below
        const __m256i valid = _mm256_cmpgt_epi32(rvec, start);
        __m256i pos = _mm256_blendv_epi8(failvec, start, valid);
        for (int k = 0; k < len; ++k)
            pos = _mm256_i32gather_epi32(t.row(pattern[k]), pos, 4);
        const __m256i limit = _mm256_add_epi32(start, rvec);
        const __m256i over = _mm256_cmpgt_epi32(pos, limit);
        unsigned ok = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(over)));
        ok &= static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(valid)));
        if (ok)
            return j0 + __builtin_ctz(ok);
    }
    return -1;
}

std::uint64_t screen_advance_avx2(const std::uint8_t* expected, std::uint8_t* state,
                                  int lanes, std::uint8_t symbol) {
    std::uint64_t hits = 0;
    const __m256i sym = _mm256_set1_epi8(static_cast<char>(symbol));
    int i = 0;
    for (; i + 32 <= lanes; i += 32) {
        const __m256i e =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(expected + i));
        const __m256i m = _mm256_cmpeq_epi8(e, sym);
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(state + i));
        s = _mm256_sub_epi8(s, m);  // mask bytes are -1, subtracting increments
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(state + i), s);
        hits |= static_cast<std::uint64_t>(
                    static_cast<std::uint32_t>(_mm256_movemask_epi8(m)))
                << i;
    }
    for (; i < lanes; ++i) {
        if (expected[i] == symbol) {
            ++state[i];
            hits |= std::uint64_t{1} << i;
        }
    }
    return hits;
}

}  // namespace

namespace detail {

const MatchKernel* avx2_match_kernel() {
    static const MatchKernel k{"avx2", &find_start_avx2};
    return &k;
}

const ScreenKernel* avx2_screen_kernel() {
    static const ScreenKernel k{"avx2", &screen_advance_avx2};
    return &k;
}

}  // namespace detail

}  // namespace rosary

#else  // !__AVX2__

namespace rosary::detail {

const MatchKernel* avx2_match_kernel() { return nullptr; }
const ScreenKernel* avx2_screen_kernel() { return nullptr; }

}  // namespace rosary::detail

#endif
