#pragma once

#include <array>
#include <cstddef>

namespace golay24::fixtures {

// Reference generator of the extended (24,12,8) code, as assembled by the
// Turyn construction below.  Self-dual: the same matrix is the check matrix.
inline constexpr const char* kGeneratorText =
    "111100000000000011110000\n"
    "101010100000000010101010\n"
    "100110010000000010011001\n"
    "100101100000000010010110\n"
    "000000001111000011110000\n"
    "000000001010101010101010\n"
    "000000001001100110011001\n"
    "000000001001011010010110\n"
    "110110001101100011011000\n"
    "101100101011001010110010\n"
    "100010111000101110001011\n"
    "100101011001010110010101\n";

// Reference constraint matrix: rows' last nonzero columns are the frozen
// input positions of the chained (16+8) transform representation.
inline constexpr const char* kConstraintMatrixText =
    "100000000000000000000000\n"
    "010000000000000000000000\n"
    "001000000000000000000000\n"
    "000010000000000000000000\n"
    "000000001000000000000000\n"
    "000000000000000010000000\n"
    "000100000000000001000000\n"
    "000001000000000000100000\n"
    "000000100100000001110000\n"
    "000000000100000000001000\n"
    "000000000010000001100100\n"
    "000000000000100001000010\n";

// First (8,4,4) extended Hamming component.  Columns are labeled by the
// field elements of GF(8) in the order (0, a^0, a^1, ..., a^6).
inline constexpr const char* kComponentPrimeText =
    "11101000\n"
    "10110100\n"
    "10011010\n"
    "10001101\n";

// Second component, from the reciprocal generator polynomial.
inline constexpr const char* kComponentDoublePrimeText =
    "11011000\n"
    "10101100\n"
    "10010110\n"
    "10001011\n";

// Rearrangement from the component column labels (element order
// 0, a^0, a^1, ..., a^6) to standard bit order (0, 1, a, a+1, a^2, a^2+1,
// a^2+a, a^2+a+1): output column k takes input column kColumnOrder[k].
inline constexpr std::array<std::size_t, 8> kColumnOrder = {0, 1, 2, 4, 3, 7, 5, 6};

// Decoding schedule: frozen symbols as early as their dependencies allow.
inline constexpr std::array<std::size_t, 24> kSchedule = {
    0, 1, 2, 16, 3, 17, 4, 5, 18, 6, 7, 8, 9, 19, 20, 10, 21, 11, 12, 22, 13, 14, 15, 23};

inline constexpr std::array<std::size_t, 12> kFrozenSet = {0, 1, 2, 4, 8, 16, 17, 18, 19, 20, 21, 22};

inline constexpr std::array<std::size_t, 12> kInfoPositions = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 23};

}  // namespace golay24::fixtures
