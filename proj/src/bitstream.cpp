#include "wlz/bitstream.hpp"

#include <algorithm>
#include <cstring>

#include "wlz/error.hpp"

namespace wlz {

void BitWriter::write_bits(std::uint64_t value, unsigned width) {
  if (width > 64) throw DomainError("bit width > 64");
  if (width < 64 && (value >> width) != 0) throw DomainError("value does not fit in width");
  while (width > 0) {
    const unsigned used = static_cast<unsigned>(bits_ & 7u);
    if (used == 0) bytes_.push_back(0);
    const unsigned take = std::min(width, 8 - used);
    const auto chunk = static_cast<std::uint8_t>((value >> (width - take)) & ((1u << take) - 1));
    bytes_.back() |= static_cast<std::uint8_t>(chunk << (8 - used - take));
    width -= take;
    bits_ += take;
  }
}

void BitWriter::write_bit(bool bit) {
  if ((bits_ & 7u) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ & 7u));
  ++bits_;
}

void BitWriter::write_run(bool bit, std::uint64_t count) {
  while (count > 0 && (bits_ & 7u) != 0) {
    write_bit(bit);
    --count;
  }
  bytes_.insert(bytes_.end(), count / 8, bit ? 0xFF : 0x00);
  bits_ += count / 8 * 8;
  for (count %= 8; count > 0; --count) write_bit(bit);
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width > 64) throw DomainError("bit width > 64");
  if (width > bits_remaining()) throw CorruptError("truncated stream");
  std::uint64_t v = 0;
  while (width > 0) {
    const unsigned used = static_cast<unsigned>(pos_ & 7u);
    const unsigned take = std::min(width, 8 - used);
    const unsigned byte = data_[pos_ >> 3];
    v = (v << take) | ((byte >> (8 - used - take)) & ((1u << take) - 1));
    width -= take;
    pos_ += take;
  }
  return v;
}

bool BitReader::read_bit() {
  if (pos_ >= data_.size() * 8) throw CorruptError("truncated stream");
  const bool bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7u))) & 1u;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::read_run(bool bit, std::uint64_t limit) {
  const std::uint64_t start = pos_;
  const std::uint8_t fill = bit ? 0xFF : 0x00;
  std::uint64_t word_fill;
  std::memset(&word_fill, fill, sizeof word_fill);
  for (;;) {
    if (pos_ - start > limit) throw CorruptError("run longer than allowed");
    if ((pos_ & 7u) == 0) {
      std::size_t i = pos_ >> 3;
      std::uint64_t word;
      while (i + 8 <= data_.size() && (pos_ - start) + 64 <= limit &&
             (std::memcpy(&word, data_.data() + i, 8), word == word_fill)) {
        i += 8;
        pos_ += 64;
      }
      while (i < data_.size() && data_[i] == fill && (pos_ - start) + 8 <= limit) {
        ++i;
        pos_ += 8;
      }
    }
    if (read_bit() != bit) return pos_ - start - 1;
  }
}

}  // namespace wlz
