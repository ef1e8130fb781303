#include "succinct/bits.hpp"

#include "succinct/error.hpp"

namespace succinct {

unsigned width_for(std::uint64_t count) {
  unsigned w = 1;
  while (w < 64 && (std::uint64_t{1} << w) < count) ++w;
  return w;
}

Bits to_bits(std::uint64_t value, unsigned width) {
  Bits out(width);
  for (unsigned i = 0; i < width; ++i) out[width - 1 - i] = i < 64 && ((value >> i) & 1U);
  return out;
}

std::uint64_t from_bits(const Bits& bits) { return from_bits(bits, 0, bits.size()); }

std::uint64_t from_bits(const Bits& bits, std::size_t first, std::size_t count) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < count; ++i) v = (v << 1) | (bits[first + i] ? 1U : 0U);
  return v;
}

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0') out.push_back(false);
    else if (c == '1') out.push_back(true);
    else throw input_error("invalid bit character '" + std::string(1, c) + "'");
  }
  return out;
}

Bits concat(Bits head, const Bits& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

} // namespace succinct
