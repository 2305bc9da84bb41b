#include "wlz/format.hpp"

#include <algorithm>
#include <bit>

#include "wlz/error.hpp"

namespace wlz {
namespace {

bool valid_coder(std::uint8_t v) { return v <= static_cast<std::uint8_t>(CoderKind::AdaptiveHuffman); }

// Offset and length fields are coded as values >= 1 except under DirectBit,
// where they are zero based.
IntegerCoder offset_coder(const Header& h) {
  switch (h.offset_coder) {
    case CoderKind::DirectBit: return IntegerCoder::direct(h.window_log2);
    case CoderKind::BBlock: return IntegerCoder::bblock(h.bblock_base_log2);
    default: return IntegerCoder{h.offset_coder, 0};
  }
}

// Number of distinct length field values.
std::uint64_t length_range(const Header& h) {
  return h.variant == ParseVariant::LZ77 ? std::uint64_t{h.max_match} + 1
                                         : std::uint64_t{h.max_match} - h.min_match + 1;
}

IntegerCoder length_coder(const Header& h) {
  switch (h.length_coder) {
    case CoderKind::DirectBit: return IntegerCoder::direct(width_for_count(length_range(h)));
    case CoderKind::BBlock: return IntegerCoder::bblock(derived_bblock_log2(length_range(h)));
    default: return IntegerCoder{h.length_coder, 0};
  }
}

// Literal coders depend on how many tokens the decoder already knows.
IntegerCoder literal_coder(CoderKind kind, std::size_t known) {
  switch (kind) {
    case CoderKind::DirectBit: return IntegerCoder::direct(width_for_count(known + 1));
    case CoderKind::BBlock: return IntegerCoder::bblock(derived_bblock_log2(known + 1));
    default: return IntegerCoder{kind, 0};
  }
}

void write_spelling(BitWriter& out, const std::string& bytes) {
  encode_elias_gamma(out, bytes.size());
  for (unsigned char c : bytes) out.write_bits(c, 8);
}

std::string read_spelling(BitReader& in) {
  const std::uint64_t len = decode_elias_gamma(in);
  if (len > kMaxTokenLength) throw CorruptError("token spelling longer than 65535 bytes");
  if (len * 8 > in.bits_remaining()) throw CorruptError("truncated token spelling");
  std::string s(len, '\0');
  for (auto& c : s) c = static_cast<char>(in.read_bits(8));
  return s;
}

}  // namespace

void Header::validate() const {
  if (static_cast<std::uint8_t>(variant) > static_cast<std::uint8_t>(ParseVariant::LZSSShort)) {
    throw FormatError("unknown parse variant");
  }
  if (window_log2 < 1 || window_log2 > 30) throw FormatError("window_log2 out of range");
  if (min_match < 1 || max_match < min_match) throw FormatError("invalid match length bounds");
  if ((std::uint64_t{1} << window_log2) < max_match) throw FormatError("window smaller than max_match");
  for (auto c : {offset_coder, length_coder, literal_coder}) {
    if (!valid_coder(static_cast<std::uint8_t>(c))) throw FormatError("unknown coder id");
  }
  if (offset_coder == CoderKind::BBlock) {
    if (bblock_base_log2 < 1 || bblock_base_log2 > 63) throw FormatError("bblock base out of range");
  } else if (bblock_base_log2 != 0) {
    throw FormatError("bblock base set without a bblock offset coder");
  }
}

std::vector<std::uint8_t> write_header(const Header& h) {
  h.validate();
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kFormatVersion);
  out.push_back(static_cast<std::uint8_t>(h.variant));
  out.push_back(h.window_log2);
  out.push_back(static_cast<std::uint8_t>(h.max_match >> 8));
  out.push_back(static_cast<std::uint8_t>(h.max_match & 0xFF));
  out.push_back(h.min_match);
  out.push_back(static_cast<std::uint8_t>(h.offset_coder));
  out.push_back(static_cast<std::uint8_t>(h.length_coder));
  out.push_back(static_cast<std::uint8_t>(h.literal_coder));
  out.push_back(h.bblock_base_log2);
  std::uint64_t n = h.original_length;
  do {
    std::uint8_t b = n & 0x7F;
    n >>= 7;
    if (n != 0) b |= 0x80;
    out.push_back(b);
  } while (n != 0);
  return out;
}

std::pair<Header, std::size_t> read_header(std::span<const std::uint8_t> bytes) {
  constexpr std::size_t kFixed = 15;
  if (bytes.size() < kFixed) throw FormatError("container shorter than header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw FormatError("bad magic");
  if (bytes[4] != kFormatVersion) throw FormatError("unsupported version " + std::to_string(bytes[4]));
  if (bytes[5] > static_cast<std::uint8_t>(ParseVariant::LZSSShort)) throw FormatError("unknown parse variant");
  for (std::size_t i : {10u, 11u, 12u}) {
    if (!valid_coder(bytes[i])) throw FormatError("unknown coder id");
  }
  Header h;
  h.variant = static_cast<ParseVariant>(bytes[5]);
  h.window_log2 = bytes[6];
  h.max_match = static_cast<std::uint16_t>((bytes[7] << 8) | bytes[8]);
  h.min_match = bytes[9];
  h.offset_coder = static_cast<CoderKind>(bytes[10]);
  h.length_coder = static_cast<CoderKind>(bytes[11]);
  h.literal_coder = static_cast<CoderKind>(bytes[12]);
  h.bblock_base_log2 = bytes[13];
  std::size_t i = 14;
  std::uint64_t n = 0;
  for (unsigned shift = 0;; shift += 7) {
    if (i >= bytes.size()) throw FormatError("truncated length field");
    if (shift > 63) throw FormatError("length field overflow");
    const std::uint8_t b = bytes[i++];
    n |= static_cast<std::uint64_t>(b & 0x7F) << shift;
    if ((b & 0x80) == 0) break;
  }
  h.original_length = n;
  h.validate();
  return {h, i};
}

unsigned derived_bblock_log2(std::uint64_t range) {
  const auto w = static_cast<unsigned>(std::bit_width(range));
  return w > 5 ? w - 4 : 1;
}

// ---------------------------------------------------------------- encoder

ItemEncoder::ItemEncoder(const Header& h) : h_(h), offset_(offset_coder(h)), length_(length_coder(h)) {}

void ItemEncoder::integer_value(BitWriter& out, CoderKind kind, const IntegerCoder& coder,
                                AdaptiveHuffman& model, std::uint64_t value) {
  if (kind != CoderKind::AdaptiveHuffman) {
    coder.encode(out, value);
    return;
  }
  if (model.encode(out, value)) encode_elias_delta(out, value);
}

void ItemEncoder::literal_payload(BitWriter& out, Symbol symbol, const Vocabulary& vocab) {
  if (symbol > sent_) throw Error("literal symbol skips ahead of the decoder vocabulary");
  const bool fresh = symbol == sent_;
  if (h_.literal_coder == CoderKind::AdaptiveHuffman) {
    literal_model_.encode(out, symbol);
  } else {
    const IntegerCoder coder = literal_coder(h_.literal_coder, sent_);
    coder.encode(out, symbol + coder.min_value());
  }
  if (fresh) {
    write_spelling(out, vocab.resolve(symbol));
    ++sent_;
  }
}

void ItemEncoder::emit_literal(BitWriter& out, Symbol symbol, const Vocabulary& vocab) {
  out.write_bit(false);
  literal_payload(out, symbol, vocab);
}

void ItemEncoder::emit_copy(BitWriter& out, const Match& m) {
  if (m.length < h_.min_match || m.length > h_.max_match) throw Error("copy length out of range");
  if (m.offset < 1 || m.offset > (std::uint64_t{1} << h_.window_log2)) throw Error("copy offset out of range");
  out.write_bit(true);
  const std::uint64_t off = h_.offset_coder == CoderKind::DirectBit ? m.offset - 1 : m.offset;
  integer_value(out, h_.offset_coder, offset_, offset_model_, off);
  const std::uint64_t len = m.length - h_.min_match + length_.min_value();
  integer_value(out, h_.length_coder, length_, length_model_, len);
}

void ItemEncoder::emit_triplet(BitWriter& out, const Triplet& t, const Vocabulary& vocab) {
  const std::uint64_t capacity = std::uint64_t{1} << h_.window_log2;
  std::uint64_t off = 0;
  std::uint64_t len = 0;
  if (t.match) {
    if (t.match->length < h_.min_match || t.match->length > h_.max_match) throw Error("triplet length out of range");
    if (t.match->offset < 1 || t.match->offset > capacity) throw Error("triplet offset out of range");
    off = t.match->offset;
    len = t.match->length;
  }
  if (h_.offset_coder == CoderKind::DirectBit) {
    offset_.encode(out, off % capacity);  // length 0 tells "no match" apart from offset == capacity
  } else {
    integer_value(out, h_.offset_coder, offset_, offset_model_, off + 1);
  }
  integer_value(out, h_.length_coder, length_, length_model_, len + length_.min_value());
  literal_payload(out, t.next, vocab);
}

void ItemEncoder::emit(BitWriter& out, const ParseItem& item, const Vocabulary& vocab) {
  if (const auto* lit = std::get_if<Literal>(&item)) emit_literal(out, lit->symbol, vocab);
  else if (const auto* copy = std::get_if<Copy>(&item)) emit_copy(out, copy->match);
  else emit_triplet(out, std::get<Triplet>(item), vocab);
}

// ---------------------------------------------------------------- decoder

ItemDecoder::ItemDecoder(const Header& h) : h_(h), offset_(offset_coder(h)), length_(length_coder(h)) {
  h_.validate();
}

std::uint64_t ItemDecoder::integer_value(BitReader& in, CoderKind kind, const IntegerCoder& coder,
                                         AdaptiveHuffman& model) {
  if (kind != CoderKind::AdaptiveHuffman) return coder.decode(in);
  if (auto v = model.decode(in)) return *v;
  const std::uint64_t v = decode_elias_delta(in);
  model.add_new(v);
  return v;
}

Symbol ItemDecoder::literal_payload(BitReader& in, std::optional<std::string>& spelled) {
  const std::size_t known = vocab_.size();
  std::uint64_t id;
  if (h_.literal_coder == CoderKind::AdaptiveHuffman) {
    if (auto v = literal_model_.decode(in)) {
      id = *v;
      if (id >= known) throw CorruptError("literal id beyond vocabulary");
    } else {
      id = known;
      literal_model_.add_new(id);
    }
  } else {
    const IntegerCoder coder = literal_coder(h_.literal_coder, known);
    const std::uint64_t v = coder.decode(in);
    if (v < coder.min_value() || v - coder.min_value() > known) throw CorruptError("literal id beyond vocabulary");
    id = v - coder.min_value();
  }
  if (id == known) {
    spelled = read_spelling(in);
    vocab_.push_back(*spelled);
  }
  return static_cast<Symbol>(id);
}

Match ItemDecoder::read_copy(BitReader& in) {
  std::uint64_t off = integer_value(in, h_.offset_coder, offset_, offset_model_);
  if (h_.offset_coder == CoderKind::DirectBit) ++off;
  const std::uint64_t field = integer_value(in, h_.length_coder, length_, length_model_);
  if (field < length_.min_value()) throw CorruptError("length field below domain");
  const std::uint64_t len = field - length_.min_value() + h_.min_match;
  if (len > h_.max_match) throw CorruptError("copy length above max_match");
  if (off < 1 || off > (std::uint64_t{1} << h_.window_log2)) throw CorruptError("copy offset outside window");
  return Match{static_cast<std::uint32_t>(off), static_cast<std::uint32_t>(len)};
}

DecodedItem ItemDecoder::next(BitReader& in) {
  DecodedItem d{Literal{0}, std::nullopt};
  if (h_.variant != ParseVariant::LZ77) {
    if (in.read_bit()) {
      d.item = Copy{read_copy(in)};
    } else {
      d.item = Literal{literal_payload(in, d.new_token)};
    }
    return d;
  }
  const std::uint64_t capacity = std::uint64_t{1} << h_.window_log2;
  std::uint64_t off = integer_value(in, h_.offset_coder, offset_, offset_model_);
  if (h_.offset_coder != CoderKind::DirectBit) {
    if (off < 1) throw CorruptError("offset field below domain");
    off -= 1;
  }
  const std::uint64_t field = integer_value(in, h_.length_coder, length_, length_model_);
  if (field < length_.min_value()) throw CorruptError("length field below domain");
  const std::uint64_t len = field - length_.min_value();
  Triplet t{std::nullopt, 0};
  if (len == 0) {
    if (off != 0) throw CorruptError("triplet offset without a length");
  } else {
    if (len < h_.min_match || len > h_.max_match) throw CorruptError("triplet length out of range");
    if (h_.offset_coder == CoderKind::DirectBit && off == 0) off = capacity;
    if (off < 1 || off > capacity) throw CorruptError("triplet offset outside window");
    t.match = Match{static_cast<std::uint32_t>(off), static_cast<std::uint32_t>(len)};
  }
  t.next = literal_payload(in, d.new_token);
  d.item = t;
  return d;
}

DecodedContainer decode_items(std::span<const std::uint8_t> container) {
  auto [header, consumed] = read_header(container);
  BitReader in(container.subspan(consumed));
  ItemDecoder decoder(header);
  DecodedContainer out{header, {}, {}};
  std::vector<Symbol> symbols;
  std::uint64_t bytes = 0;
  const auto& vocab = decoder.vocabulary();
  auto append = [&](Symbol s) {
    symbols.push_back(s);
    bytes += vocab[s].size();
  };
  auto copy = [&](const Match& m) {
    if (m.offset > symbols.size()) throw CorruptError("copy offset before start of data");
    const std::size_t from = symbols.size() - m.offset;
    for (std::uint32_t k = 0; k < m.length; ++k) append(symbols[from + k]);
  };
  while (bytes < header.original_length) {
    DecodedItem d = decoder.next(in);
    if (const auto* lit = std::get_if<Literal>(&d.item)) {
      append(lit->symbol);
    } else if (const auto* c = std::get_if<Copy>(&d.item)) {
      copy(c->match);
    } else {
      const auto& t = std::get<Triplet>(d.item);
      if (t.match) copy(*t.match);
      append(t.next);
    }
    out.items.push_back(std::move(d.item));
  }
  if (bytes != header.original_length) throw CorruptError("items overrun the original length");
  if (in.bits_remaining() >= 8) throw CorruptError("trailing data after last item");
  out.vocabulary = vocab;
  return out;
}

}  // namespace wlz
