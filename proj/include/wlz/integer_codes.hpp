#pragma once

// Self-delimiting integer codes: direct bit, Fibonacci, Elias gamma/delta, B-Block.
//
// DirectBit(width) covers [0, 2^width). The other codes cover n >= 1.
// Fibonacci: Zeckendorf digits over 1, 2, 3, 5, ... least significant first,
// followed by a terminating 1, so every codeword ends in "11".
// B-Block(b): q = (n-1)/b one-bits, a zero-bit, then (n-1) mod b in log2(b) bits.

#include <cstdint>
#include <string>

#include "wlz/bitstream.hpp"

namespace wlz {

enum class CoderKind : std::uint8_t {
  DirectBit = 0,
  Fibonacci = 1,
  EliasGamma = 2,
  EliasDelta = 3,
  BBlock = 4,
  AdaptiveHuffman = 5,
};

const char* to_string(CoderKind k);
/// Accepts "direct", "fibonacci", "gamma", "delta", "bblock", "huffman".
CoderKind parse_coder_kind(const std::string& name);

void encode_direct(BitWriter& out, std::uint64_t n, unsigned width);
std::uint64_t decode_direct(BitReader& in, unsigned width);

void encode_fibonacci(BitWriter& out, std::uint64_t n);
std::uint64_t decode_fibonacci(BitReader& in);
unsigned fibonacci_bits(std::uint64_t n);

void encode_elias_gamma(BitWriter& out, std::uint64_t n);
std::uint64_t decode_elias_gamma(BitReader& in);
unsigned elias_gamma_bits(std::uint64_t n);

void encode_elias_delta(BitWriter& out, std::uint64_t n);
std::uint64_t decode_elias_delta(BitReader& in);
unsigned elias_delta_bits(std::uint64_t n);

void encode_bblock(BitWriter& out, std::uint64_t n, unsigned base_log2);
std::uint64_t decode_bblock(BitReader& in, unsigned base_log2);
std::uint64_t bblock_bits(std::uint64_t n, unsigned base_log2);

/// A static integer code with its parameter. `param` is the bit width for
/// DirectBit and log2 of the base for BBlock; unused otherwise.
struct IntegerCoder {
  CoderKind kind = CoderKind::EliasGamma;
  unsigned param = 0;

  static IntegerCoder direct(unsigned width) { return {CoderKind::DirectBit, width}; }
  static IntegerCoder fibonacci() { return {CoderKind::Fibonacci, 0}; }
  static IntegerCoder gamma() { return {CoderKind::EliasGamma, 0}; }
  static IntegerCoder delta() { return {CoderKind::EliasDelta, 0}; }
  static IntegerCoder bblock(unsigned base_log2) { return {CoderKind::BBlock, base_log2}; }

  /// Smallest value in the coder's domain (0 for DirectBit, else 1).
  std::uint64_t min_value() const noexcept { return kind == CoderKind::DirectBit ? 0 : 1; }

  void encode(BitWriter& out, std::uint64_t n) const;
  std::uint64_t decode(BitReader& in) const;
  /// Exact length of encode(n); throws DomainError outside the domain.
  std::uint64_t cost_bits(std::uint64_t n) const;

  friend bool operator==(const IntegerCoder&, const IntegerCoder&) = default;
};

/// ceil(log2(count)) for count >= 1: the DirectBit width that covers [0, count).
unsigned width_for_count(std::uint64_t count) noexcept;

}  // namespace wlz
