#pragma once

// MSB-first bit packing. The last partial byte is zero padded.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wlz {

class BitWriter {
public:
  /// Appends the low `width` bits of `value`, most significant first. width <= 64.
  void write_bits(std::uint64_t value, unsigned width);
  void write_bit(bool bit);
  /// Emits `count` copies of `bit`.
  void write_run(bool bit, std::uint64_t count);

  std::uint64_t bit_count() const noexcept { return bits_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }
  void clear() noexcept {
    bytes_.clear();
    bits_ = 0;
  }

private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bits_ = 0;
};

class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

  /// Throws CorruptError when fewer than `width` bits remain.
  std::uint64_t read_bits(unsigned width);
  bool read_bit();
  /// Counts bits equal to `bit` up to the first differing bit, which is
  /// consumed too. Throws CorruptError past `limit` or at end of data.
  std::uint64_t read_run(bool bit, std::uint64_t limit);

  std::uint64_t bit_position() const noexcept { return pos_; }
  std::uint64_t bits_remaining() const noexcept { return data_.size() * 8 - pos_; }

private:
  std::span<const std::uint8_t> data_;
  std::uint64_t pos_ = 0;
};

}  // namespace wlz
