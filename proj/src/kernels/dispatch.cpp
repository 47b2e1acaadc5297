#include "rosary/kernels.hpp"

namespace rosary {

namespace detail {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace detail

namespace {

bool vector_unit_usable() {
    static const bool ok = detail::cpu_has_avx2() && detail::avx2_match_kernel() != nullptr;
    return ok;
}

}  // namespace

const MatchKernel& dispatched_match_kernel() {
    if (vector_unit_usable())
        return *detail::avx2_match_kernel();
    return scalar_match_kernel();
}

const ScreenKernel& dispatched_screen_kernel() {
    if (vector_unit_usable())
        return *detail::avx2_screen_kernel();
    return scalar_screen_kernel();
}

std::vector<const MatchKernel*> available_match_kernels() {
    std::vector<const MatchKernel*> out{&scalar_match_kernel()};
    if (vector_unit_usable())
        out.push_back(detail::avx2_match_kernel());
    return out;
}

std::vector<const ScreenKernel*> available_screen_kernels() {
    std::vector<const ScreenKernel*> out{&scalar_screen_kernel()};
    if (vector_unit_usable())
        out.push_back(detail::avx2_screen_kernel());
    return out;
}

}  // namespace rosary
