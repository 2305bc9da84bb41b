#pragma once

// Word / non-word segmentation and the dynamically grown token vocabulary.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wlz {

using Symbol = std::uint32_t;

enum class TokenKind : std::uint8_t { Word, NonWord };

/// Longest run emitted as a single token; longer runs are split.
inline constexpr std::size_t kMaxTokenLength = 65535;

inline constexpr bool is_word_byte(unsigned char c) noexcept {
  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

struct Token {
  TokenKind kind = TokenKind::Word;
  std::string bytes;

  static Token from_bytes(std::string bytes);

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits input into maximal runs of word / non-word bytes. Runs longer than
/// kMaxTokenLength continue as further tokens of the same kind.
std::vector<Token> tokenize(std::string_view input);

/// Same segmentation as tokenize() but as views into `input`.
std::vector<std::string_view> tokenize_views(std::string_view input);

std::string detokenize(std::span<const Token> tokens);

/// Bidirectional token <-> symbol map. Ids are dense, in first-appearance order.
class Vocabulary {
public:
  struct Interned {
    Symbol symbol;
    bool was_new;
  };

  Interned intern(std::string_view bytes);
  Interned intern(const Token& token) { return intern(std::string_view(token.bytes)); }

  /// Throws InvalidSymbolError when `s` is not a known id.
  const std::string& resolve(Symbol s) const;
  Token resolve_token(Symbol s) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Tokenizes and interns in one pass. `symbols` receives one id per token.
void intern_all(std::string_view input, Vocabulary& vocab, std::vector<Symbol>& symbols);

}  // namespace wlz
