#include <gtest/gtest.h>

#include <random>

#include "wlz/adaptive_huffman.hpp"
#include "wlz/bitstream.hpp"
#include "wlz/error.hpp"
#include "wlz/integer_codes.hpp"

using namespace wlz;

namespace {

// Encodes values with escape payloads in Elias delta of value + 1.
std::vector<std::uint8_t> encode_all(const std::vector<std::uint64_t>& values, AdaptiveHuffman& model) {
  BitWriter w;
  for (std::uint64_t v : values) {
    if (model.encode(w, v)) encode_elias_delta(w, v + 1);
  }
  return std::move(w).take();
}

std::vector<std::uint64_t> decode_all(const std::vector<std::uint8_t>& bytes, std::size_t count,
                                      AdaptiveHuffman& model) {
  BitReader r(bytes);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (auto v = model.decode(r)) {
      out.push_back(*v);
    } else {
      const std::uint64_t fresh = decode_elias_delta(r) - 1;
      model.add_new(fresh);
      out.push_back(fresh);
    }
  }
  return out;
}

}  // namespace

TEST(AdaptiveHuffman, FirstSymbolIsEmptyEscape) {
  AdaptiveHuffman m;
  EXPECT_EQ(m.escape_length(), 0u);
  BitWriter w;
  EXPECT_TRUE(m.encode(w, 42));
  EXPECT_EQ(w.bit_count(), 0u);
  EXPECT_TRUE(m.contains(42));
  EXPECT_EQ(m.code_length(42), 1u);
  EXPECT_EQ(m.escape_length(), 1u);
}

TEST(AdaptiveHuffman, RepeatedSymbolCodeLengthNonIncreasing) {
  AdaptiveHuffman m;
  BitWriter w;
  for (std::uint64_t v : {1, 2, 3, 4, 5}) m.encode(w, v);
  unsigned previous = m.code_length(1);
  for (int i = 0; i < 500; ++i) {
    EXPECT_FALSE(m.encode(w, 1));
    const unsigned now = m.code_length(1);
    ASSERT_LE(now, previous);
    previous = now;
  }
  EXPECT_EQ(previous, 1u);
}

TEST(AdaptiveHuffman, InvariantsHoldAfterEveryUpdate) {
  std::mt19937_64 rng(1);
  AdaptiveHuffman m;
  BitWriter w;
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t v = rng() % 4 == 0 ? rng() % 500 : rng() % 8;
    m.encode(w, v);
    ASSERT_TRUE(m.check_invariants()) << "after update " << i;
  }
}

TEST(AdaptiveHuffman, RandomSequencesStaySynchronized) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> values;
    const std::uint64_t alphabet = 1 + rng() % 300;
    std::geometric_distribution<std::uint64_t> skew(0.05);
    for (int i = 0; i < 2000; ++i) values.push_back(skew(rng) % alphabet);
    AdaptiveHuffman enc, dec;
    const auto bytes = encode_all(values, enc);
    EXPECT_EQ(decode_all(bytes, values.size(), dec), values);
    EXPECT_EQ(enc.serialize(), dec.serialize());
    EXPECT_TRUE(enc == dec);
  }
}

TEST(AdaptiveHuffman, RescaleKeepsSynchronyAndBoundsWeight) {
  std::mt19937_64 rng(3);
  std::vector<std::uint64_t> values;
  for (int i = 0; i < 200000; ++i) values.push_back(rng() % 3 == 0 ? rng() % 1000 : rng() % 4);
  AdaptiveHuffman enc, dec;
  const auto bytes = encode_all(values, enc);
  EXPECT_LT(enc.total_weight(), AdaptiveHuffman::kRescaleLimit);
  EXPECT_TRUE(enc.check_invariants());
  EXPECT_EQ(decode_all(bytes, values.size(), dec), values);
  EXPECT_TRUE(enc == dec);
}

TEST(AdaptiveHuffman, AlphabetLargerThanRescaleLimit) {
  std::mt19937_64 rng(6);
  std::vector<std::uint64_t> values;
  for (std::uint64_t i = 0; i < 300000; ++i) values.push_back(rng() % 2 ? i : rng() % 50);
  AdaptiveHuffman enc, dec;
  const auto bytes = encode_all(values, enc);
  EXPECT_GT(enc.alphabet_size(), AdaptiveHuffman::kRescaleLimit);
  EXPECT_LT(enc.total_weight(), enc.rescale_threshold());
  EXPECT_TRUE(enc.check_invariants());
  EXPECT_EQ(decode_all(bytes, values.size(), dec), values);
  EXPECT_TRUE(enc == dec);
}

TEST(AdaptiveHuffman, SkewedSourceCompresses) {
  std::mt19937_64 rng(4);
  std::vector<std::uint64_t> values;
  for (int i = 0; i < 20000; ++i) values.push_back(rng() % 10 < 9 ? 0 : 1 + rng() % 15);
  AdaptiveHuffman m;
  const auto bytes = encode_all(values, m);
  // A fixed 4-bit code would need 10000 bytes.
  EXPECT_LT(bytes.size(), 5000u);
}

TEST(AdaptiveHuffman, DuplicateEscapePayloadIsCorrupt) {
  AdaptiveHuffman m;
  m.add_new(7);
  EXPECT_THROW(m.add_new(7), CorruptError);
}

TEST(AdaptiveHuffman, TruncatedStreamThrows) {
  AdaptiveHuffman enc;
  const auto bytes = encode_all({1, 2, 3, 1, 2, 3}, enc);
  AdaptiveHuffman dec;
  std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + 1);
  EXPECT_THROW(decode_all(cut, 6, dec), CorruptError);
}
