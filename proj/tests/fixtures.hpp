#pragma once

// Step-diagram fixtures for the rare-group model lists and the worked
// decoding example (six steps).

#include <array>

namespace fixtures {

inline constexpr const char* kExampleDiagram = "01111000000000000000001010";

inline constexpr std::array<const char*, 30> kG8Models = {
    "01001000000000100000001000",
    "00000100000001100010000000",
    "00100000000000110000010000",
    "00001000000101000000000100",
    "01000000000001100000001000",
    "01000000000000110000001000",
    "10000000000001011000010000",
    "01001000001010000000000001",
    "01001000001001000000000100",
    "01001000001000100000001000",
    "00001100001001000000000100",
    "00001100000001100010000000",
    "01000000000010110000001000",
    "01000000000001100000011000",
    "00100000000010110000010000",
    "00100000000010010000010010",
    "11011000011001011000011000",
    "11001100001011011000010001",
    "01111000001011110000010100",
    "01101100001110110000110000",
    "01101100000111110000010010",
    "01011000001011011000001011",
    "01001100001011110000100110",
    "00101101001011110000010100",
    "00101100001011011000010110",
    "00001100001101110000110110",
    "00000101100101110010110000",
    "00101100000101110000010110",
    "01011000000101110000001011",
    "01111000000101110000001010",
};

inline constexpr std::array<const char*, 20> kG9Models = {
    "01010000000100010000010000",
    "01000100000010001000010000",
    "00001000001000100000001010",
    "00001000000100010010100000",
    "01001000001011100000001000",
    "01001000000010110000011000",
    "01001000000001011000110000",
    "00001100001001110010000000",
    "11001100000011001000010001",
    "01111000000011100000010100",
    "00101101001000110000010100",
    "00101000000111000000011110",
    "11011000001101000000011011",
    "01111000001110110000000110",
    "01101100000001011000110110",
    "00101101000111110000100100",
    "01011000001111010000010010",
    "01001000001011110000011010",
    "00001101001111010000110000",
    "01001100001011011000110000",
};

inline constexpr std::array<const char*, 8> kG10Models = {
    "11000000000001011000010000",
    "01100000000010110000010000",
    "01001000001010001000000001",
    "01001000001001100000000100",
    "00100100000010110000010000",
    "00100100000010010000010010",
    "00001100001001100000000100",
    "00001100001001000000000110",
};

inline constexpr std::array<const char*, 8> kG11Models = {
    "11000000000000011000010000",
    "01100000000000110000010000",
    "01001000000010000000001001",
    "01001000000001000000100100",
    "00001100001000000000000110",
    "00100100000010100000010000",
    "00100100000010000000010010",
    "00001000000101000000100100",
};

inline constexpr std::array<const char*, 4> kG12Models = {
    "01100100000000000000110010",
    "01011000000000000000001011",
    "00101100000000000000010110",
    "00000101100000000010110000",
};

}  // namespace fixtures
