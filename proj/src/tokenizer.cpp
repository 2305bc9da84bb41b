#include "wlz/tokenizer.hpp"

#include "wlz/error.hpp"

namespace wlz {

Token Token::from_bytes(std::string bytes) {
  Token t;
  t.kind = (!bytes.empty() && is_word_byte(static_cast<unsigned char>(bytes.front())))
               ? TokenKind::Word
               : TokenKind::NonWord;
  t.bytes = std::move(bytes);
  return t;
}

std::vector<std::string_view> tokenize_views(std::string_view input) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  const std::size_t n = input.size();
  while (i < n) {
    const bool word = is_word_byte(static_cast<unsigned char>(input[i]));
    std::size_t j = i + 1;
    while (j < n && j - i < kMaxTokenLength &&
           is_word_byte(static_cast<unsigned char>(input[j])) == word) {
      ++j;
    }
    out.push_back(input.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  for (std::string_view v : tokenize_views(input)) {
    out.push_back(Token::from_bytes(std::string(v)));
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (const Token& t : tokens) out += t.bytes;
  return out;
}

Vocabulary::Interned Vocabulary::intern(std::string_view bytes) {
  auto [it, inserted] = index_.try_emplace(std::string(bytes), static_cast<Symbol>(entries_.size()));
  if (inserted) entries_.push_back(it->first);
  return {it->second, inserted};
}

const std::string& Vocabulary::resolve(Symbol s) const {
  if (s >= entries_.size()) {
    throw InvalidSymbolError("id " + std::to_string(s) + " >= vocabulary size " +
                             std::to_string(entries_.size()));
  }
  return entries_[s];
}

Token Vocabulary::resolve_token(Symbol s) const { return Token::from_bytes(resolve(s)); }

void intern_all(std::string_view input, Vocabulary& vocab, std::vector<Symbol>& symbols) {
  for (std::string_view v : tokenize_views(input)) symbols.push_back(vocab.intern(v).symbol);
}

}  // namespace wlz
