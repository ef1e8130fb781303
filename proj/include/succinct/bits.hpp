#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace succinct {

/// A fixed-width bit vector. Used for circuit inputs/outputs and states.
using Bits = std::vector<bool>;
using State = Bits;

/// Smallest w >= 1 with 2^w >= count.
unsigned width_for(std::uint64_t count);

/// Big-endian encoding: bit 0 is the most significant.
Bits to_bits(std::uint64_t value, unsigned width);
std::uint64_t from_bits(const Bits& bits);
std::uint64_t from_bits(const Bits& bits, std::size_t first, std::size_t count);

std::string to_string(const Bits& bits);
/// Parses a string of '0'/'1'; throws input_error on other characters.
Bits parse_bits(std::string_view text);

/// Appends `tail` to `head` and returns the result.
Bits concat(Bits head, const Bits& tail);

} // namespace succinct
