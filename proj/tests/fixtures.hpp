#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

namespace fixtures {

// Semigroups per genus, 0 through 30. Frozen after being reproduced by
// the independent counters in this suite; the deeper entries take a
// while, so only the acceptance run recomputes them all.
inline constexpr std::array<std::uint64_t, 31> kCountsByGenus = {
    1,      1,      2,      4,       7,       12,      23,      39,
    67,     118,    204,    343,     592,     1001,    1693,    2857,
    4806,   8045,   13467,  22464,   37396,   62194,   103246,  170963,
    282828, 467224, 770832, 1270267, 2091030, 3437839, 5646773};

// Every node of the tree through depth 5 as a (gap string, seed string)
// pair, in depth-first ascending-step order; 1+1+2+4+7+12 = 27 nodes.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 27> kTreeStrings = {{
    {"0", "1"},
    {"10", "11"},
    {"110", "111"},
    {"1110", "1111"},
    {"11110", "11111"},
    {"111110", "111111"},
    {"1111010", "1110111"},
    {"11110010", "11000111"},
    {"111100010", "100000111"},
    {"1111000010", "0000000111"},
    {"111010", "110111"},
    {"1110110", "1011111"},
    {"11101010", "01010111"},
    {"1110100010", "0000000111"},
    {"1110010", "1000111"},
    {"11100110", "00011111"},
    {"11100010", "00000111"},
    {"11010", "10111"},
    {"110110", "011111"},
    {"11011010", "10110111"},
    {"110110010", "001000111"},
    {"11010010", "00000111"},
    {"110010", "000111"},
    {"1010", "0111"},
    {"101010", "010111"},
    {"10101010", "01010111"},
    {"1010101010", "0101010111"},
}};

// The worked example pair used all over the tests: gaps {1,2,3,4,6,7}
// (conductor 8) and gaps {1..7,9,12,13} (conductor 14).
inline constexpr std::array<std::uint32_t, 6> kExampleGapsA = {1, 2, 3, 4, 6, 7};
inline constexpr std::array<std::uint32_t, 10> kExampleGapsB = {1, 2, 3, 4, 5, 6, 7, 9, 12, 13};

}  // namespace fixtures
