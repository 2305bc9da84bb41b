#include "wlz/integer_codes.hpp"

#include <array>
#include <bit>

#include "wlz/error.hpp"

namespace wlz {
namespace {

void require_positive(std::uint64_t n, const char* coder) {
  if (n == 0) throw DomainError(std::string(coder) + " requires n >= 1");
}

// fib[i] = F(i + 2): 1, 2, 3, 5, 8, ...
constexpr std::array<std::uint64_t, 92> make_fib_table() {
  std::array<std::uint64_t, 92> f{};
  f[0] = 1;
  f[1] = 2;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}
constexpr auto kFib = make_fib_table();

}  // namespace

const char* to_string(CoderKind k) {
  switch (k) {
    case CoderKind::DirectBit: return "direct";
    case CoderKind::Fibonacci: return "fibonacci";
    case CoderKind::EliasGamma: return "gamma";
    case CoderKind::EliasDelta: return "delta";
    case CoderKind::BBlock: return "bblock";
    case CoderKind::AdaptiveHuffman: return "huffman";
  }
  return "?";
}

CoderKind parse_coder_kind(const std::string& name) {
  for (auto k : {CoderKind::DirectBit, CoderKind::Fibonacci, CoderKind::EliasGamma,
                 CoderKind::EliasDelta, CoderKind::BBlock, CoderKind::AdaptiveHuffman}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown coder '" + name + "' (direct, fibonacci, gamma, delta, bblock, huffman)");
}

unsigned width_for_count(std::uint64_t count) noexcept {
  return count <= 1 ? 0 : static_cast<unsigned>(std::bit_width(count - 1));
}

void encode_direct(BitWriter& out, std::uint64_t n, unsigned width) {
  if (width > 64 || (width < 64 && (n >> width) != 0)) {
    throw DomainError("direct: " + std::to_string(n) + " does not fit in " + std::to_string(width) + " bits");
  }
  out.write_bits(n, width);
}

std::uint64_t decode_direct(BitReader& in, unsigned width) { return in.read_bits(width); }

void encode_fibonacci(BitWriter& out, std::uint64_t n) {
  require_positive(n, "fibonacci");
  std::size_t top = 0;
  while (top + 1 < kFib.size() && kFib[top + 1] <= n) ++top;
  std::array<bool, 93> digits{};
  for (std::size_t i = top + 1; i-- > 0;) {
    if (kFib[i] <= n) {
      digits[i] = true;
      n -= kFib[i];
    }
  }
  for (std::size_t i = 0; i <= top; ++i) out.write_bit(digits[i]);
  out.write_bit(true);
}

std::uint64_t decode_fibonacci(BitReader& in) {
  std::uint64_t n = 0;
  bool prev = false;
  for (std::size_t i = 0;; ++i) {
    const bool bit = in.read_bit();
    if (bit && prev) return n;
    if (i >= kFib.size()) throw CorruptError("fibonacci codeword too long");
    if (bit) n += kFib[i];
    prev = bit;
  }
}

unsigned fibonacci_bits(std::uint64_t n) {
  require_positive(n, "fibonacci");
  unsigned top = 0;
  while (top + 1 < kFib.size() && kFib[top + 1] <= n) ++top;
  return top + 2;
}

void encode_elias_gamma(BitWriter& out, std::uint64_t n) {
  require_positive(n, "gamma");
  const unsigned len = static_cast<unsigned>(std::bit_width(n));
  out.write_run(false, len - 1);
  out.write_bits(n, len);
}

std::uint64_t decode_elias_gamma(BitReader& in) {
  const std::uint64_t zeros = in.read_run(false, 63);
  const unsigned rest = static_cast<unsigned>(zeros);
  return (std::uint64_t{1} << rest) | in.read_bits(rest);
}

unsigned elias_gamma_bits(std::uint64_t n) {
  require_positive(n, "gamma");
  return 2 * static_cast<unsigned>(std::bit_width(n)) - 1;
}

void encode_elias_delta(BitWriter& out, std::uint64_t n) {
  require_positive(n, "delta");
  const unsigned len = static_cast<unsigned>(std::bit_width(n));
  encode_elias_gamma(out, len);
  out.write_bits(n & ((std::uint64_t{1} << (len - 1)) - 1), len - 1);
}

std::uint64_t decode_elias_delta(BitReader& in) {
  const std::uint64_t len = decode_elias_gamma(in);
  if (len > 64) throw CorruptError("delta length prefix > 64");
  const unsigned rest = static_cast<unsigned>(len - 1);
  return (std::uint64_t{1} << rest) | in.read_bits(rest);
}

unsigned elias_delta_bits(std::uint64_t n) {
  require_positive(n, "delta");
  const unsigned len = static_cast<unsigned>(std::bit_width(n));
  return elias_gamma_bits(len) + len - 1;
}

void encode_bblock(BitWriter& out, std::uint64_t n, unsigned base_log2) {
  require_positive(n, "bblock");
  if (base_log2 < 1 || base_log2 > 63) throw DomainError("bblock base must be a power of two >= 2");
  const std::uint64_t v = n - 1;
  out.write_run(true, v >> base_log2);
  out.write_bit(false);
  out.write_bits(v & ((std::uint64_t{1} << base_log2) - 1), base_log2);
}

std::uint64_t decode_bblock(BitReader& in, unsigned base_log2) {
  if (base_log2 < 1 || base_log2 > 63) throw DomainError("bblock base must be a power of two >= 2");
  const std::uint64_t q = in.read_run(true, (~std::uint64_t{0}) >> base_log2);
  return ((q << base_log2) | in.read_bits(base_log2)) + 1;
}

std::uint64_t bblock_bits(std::uint64_t n, unsigned base_log2) {
  require_positive(n, "bblock");
  if (base_log2 < 1 || base_log2 > 63) throw DomainError("bblock base must be a power of two >= 2");
  return ((n - 1) >> base_log2) + 1 + base_log2;
}

void IntegerCoder::encode(BitWriter& out, std::uint64_t n) const {
  switch (kind) {
    case CoderKind::DirectBit: return encode_direct(out, n, param);
    case CoderKind::Fibonacci: return encode_fibonacci(out, n);
    case CoderKind::EliasGamma: return encode_elias_gamma(out, n);
    case CoderKind::EliasDelta: return encode_elias_delta(out, n);
    case CoderKind::BBlock: return encode_bblock(out, n, param);
    case CoderKind::AdaptiveHuffman: break;
  }
  throw ConfigError("adaptive huffman is not a static integer coder");
}

std::uint64_t IntegerCoder::decode(BitReader& in) const {
  switch (kind) {
    case CoderKind::DirectBit: return decode_direct(in, param);
    case CoderKind::Fibonacci: return decode_fibonacci(in);
    case CoderKind::EliasGamma: return decode_elias_gamma(in);
    case CoderKind::EliasDelta: return decode_elias_delta(in);
    case CoderKind::BBlock: return decode_bblock(in, param);
    case CoderKind::AdaptiveHuffman: break;
  }
  throw ConfigError("adaptive huffman is not a static integer coder");
}

std::uint64_t IntegerCoder::cost_bits(std::uint64_t n) const {
  switch (kind) {
    case CoderKind::DirectBit:
      if (param > 64 || (param < 64 && (n >> param) != 0)) throw DomainError("direct: value out of range");
      return param;
    case CoderKind::Fibonacci: return fibonacci_bits(n);
    case CoderKind::EliasGamma: return elias_gamma_bits(n);
    case CoderKind::EliasDelta: return elias_delta_bits(n);
    case CoderKind::BBlock: return bblock_bits(n, param);
    case CoderKind::AdaptiveHuffman: break;
  }
  throw ConfigError("adaptive huffman is not a static integer coder");
}

}  // namespace wlz
