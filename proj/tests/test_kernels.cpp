#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "random_instances.hpp"
#include "rosary/containment.hpp"
#include "rosary/kernels.hpp"

using namespace rosary;

TEST_CASE("kernel registries list the scalar reference first") {
    const auto match = available_match_kernels();
    REQUIRE(!match.empty());
    CHECK(std::string(match[0]->name) == "scalar");
    for (const auto* k : match) {
        CHECK(k->find_start != nullptr);
        CHECK((std::string(k->name) == "scalar" || std::string(k->name) == "avx2"));
    }

    const auto screen = available_screen_kernels();
    REQUIRE(!screen.empty());
    CHECK(std::string(screen[0]->name) == "scalar");

    const std::string picked = dispatched_match_kernel().name;
    CHECK((picked == "scalar" || picked == "avx2"));
    CHECK(std::string(dispatched_screen_kernel().name) == picked);
    if (detail::cpu_has_avx2()) {
        CHECK(picked == "avx2");
        CHECK(match.size() == 2);
        CHECK(screen.size() == 2);
    }
}

TEST_CASE("every match kernel returns the scalar answer") {
    testutil::Rng rng(0xface0001u);
    const auto kernels = available_match_kernels();
    int checked = 0;
    for (int iter = 0; iter < 700; ++iter) {
        const int n = rng.value_in(2, 8);
        const std::size_t len = rng.value_in(n, 4 * n);
        const Cycle c = testutil::random_full_cycle(rng, len, n);
        const StepTable t = StepTable::for_cycle(c);
        const auto pattern = testutil::random_permutation(rng, n).values;
        const int want =
            scalar_match_kernel().find_start(t, pattern.data(), static_cast<int>(pattern.size()));
        for (const auto* k : kernels) {
            const int got = k->find_start(t, pattern.data(), static_cast<int>(pattern.size()));
            CHECK(got == want);
        }
        // and the kernel verdict must match the per-start reference engine
        const auto naive = cycle_contains(c, pattern, Engine::naive);
        if (naive.contained)
            CHECK(static_cast<std::size_t>(want) == *naive.start);
        else
            CHECK(want == -1);
        ++checked;
    }
    CHECK(checked >= 700);
}

TEST_CASE("match kernels agree on short and repeat-heavy patterns") {
    testutil::Rng rng(0xface0002u);
    const auto kernels = available_match_kernels();
    int checked = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const int n = rng.value_in(1, 6);
        const std::size_t len = rng.value_in(1, 14);
        std::vector<int> text = testutil::random_values(rng, len, n);
        const Cycle c{text, n};
        const StepTable t = StepTable::for_cycle(c);
        const auto pattern = testutil::random_values(rng, rng.value_in(1, len + 2), n);
        const int want =
            scalar_match_kernel().find_start(t, pattern.data(), static_cast<int>(pattern.size()));
        for (const auto* k : kernels)
            CHECK(k->find_start(t, pattern.data(), static_cast<int>(pattern.size())) == want);
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("screen kernels advance identically") {
    testutil::Rng rng(0xface0003u);
    const auto kernels = available_screen_kernels();
    for (int iter = 0; iter < 400; ++iter) {
        const int lanes = rng.value_in(1, 64);  // exercise non-multiples of 32
        std::vector<std::uint8_t> expected(static_cast<std::size_t>(lanes));
        std::vector<std::uint8_t> state(static_cast<std::size_t>(lanes));
        for (int i = 0; i < lanes; ++i) {
            expected[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.below(9));
            state[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng.below(7));
        }
        const std::uint8_t symbol = static_cast<std::uint8_t>(rng.below(9));

        std::vector<std::uint8_t> ref_state = state;
        const std::uint64_t ref_mask =
            scalar_screen_kernel().advance(expected.data(), ref_state.data(), lanes, symbol);
        for (const auto* k : kernels) {
            std::vector<std::uint8_t> got_state = state;
            const std::uint64_t got_mask =
                k->advance(expected.data(), got_state.data(), lanes, symbol);
            CHECK(got_mask == ref_mask);
            CHECK(got_state == ref_state);
        }

        // the mask names exactly the advanced lanes
        for (int i = 0; i < lanes; ++i) {
            const bool hit = (ref_mask >> i) & 1u;
            CHECK(hit == (expected[static_cast<std::size_t>(i)] == symbol));
            CHECK(ref_state[static_cast<std::size_t>(i)] ==
                  state[static_cast<std::size_t>(i)] + (hit ? 1 : 0));
        }
        CHECK((lanes == 64 || (ref_mask >> lanes) == 0));
    }
}
