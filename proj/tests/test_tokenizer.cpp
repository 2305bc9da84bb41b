#include <gtest/gtest.h>

#include <random>

#include "wlz/error.hpp"
#include "wlz/tokenizer.hpp"

using namespace wlz;

namespace {

Token word(std::string s) { return {TokenKind::Word, std::move(s)}; }
Token nonword(std::string s) { return {TokenKind::NonWord, std::move(s)}; }

std::string random_bytes(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '\0');
  for (char& c : s) c = static_cast<char>(rng() & 0xFF);
  return s;
}

}  // namespace

TEST(Tokenize, WordsAndSeparators) {
  EXPECT_EQ(tokenize("abc, def"), (std::vector<Token>{word("abc"), nonword(", "), word("def")}));
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, AlphanumericRunIsOneWord) {
  EXPECT_EQ(tokenize("A1033"), std::vector<Token>{word("A1033")});
}

TEST(Tokenize, CompositesAreSplit) {
  EXPECT_EQ(tokenize("F-117"), (std::vector<Token>{word("F"), nonword("-"), word("117")}));
}

TEST(Tokenize, HighBytesAreNonWord) {
  EXPECT_EQ(tokenize("na\xC3\xAFve"), (std::vector<Token>{word("na"), nonword("\xC3\xAF"), word("ve")}));
}

TEST(Tokenize, LongRunsSplitAtCap) {
  const std::string run(kMaxTokenLength * 2 + 7, 'x');
  const auto tokens = tokenize(run + " ");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(tokens[0].bytes.size(), kMaxTokenLength);
  EXPECT_EQ(tokens[1].bytes.size(), kMaxTokenLength);
  EXPECT_EQ(tokens[2].bytes.size(), 7u);
  EXPECT_EQ(tokens[3], nonword(" "));
  EXPECT_EQ(detokenize(tokens), run + " ");
}

TEST(Tokenize, ViewsMatchTokens) {
  const std::string text = "The quick, brown fox... 42 times!";
  const auto tokens = tokenize(text);
  const auto views = tokenize_views(text);
  ASSERT_EQ(tokens.size(), views.size());
  for (std::size_t i = 0; i < views.size(); ++i) EXPECT_EQ(tokens[i].bytes, views[i]);
}

TEST(Tokenize, RandomBytesRoundTripAlternateAndAreMaximal) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string input = random_bytes(rng, 1024);
    const auto tokens = tokenize(input);
    EXPECT_EQ(detokenize(tokens), input);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      ASSERT_FALSE(tokens[i].bytes.empty());
      const bool w = tokens[i].kind == TokenKind::Word;
      for (unsigned char c : tokens[i].bytes) ASSERT_EQ(is_word_byte(c), w);
      if (i > 0) ASSERT_NE(tokens[i].kind, tokens[i - 1].kind);
    }
  }
}

TEST(Detokenize, Basics) {
  EXPECT_EQ(detokenize({}), "");
  const std::vector<Token> one{word("a")};
  EXPECT_EQ(detokenize(one), "a");
}

TEST(TokenFromBytes, ClassifiesByFirstByte) {
  EXPECT_EQ(Token::from_bytes("abc").kind, TokenKind::Word);
  EXPECT_EQ(Token::from_bytes(", ").kind, TokenKind::NonWord);
}

TEST(Vocabulary, InternAssignsDenseIds) {
  Vocabulary v;
  auto a = v.intern(word("a"));
  EXPECT_EQ(a.symbol, 0u);
  EXPECT_TRUE(a.was_new);
  a = v.intern(word("a"));
  EXPECT_EQ(a.symbol, 0u);
  EXPECT_FALSE(a.was_new);
  for (const char* t : {"b", " ", "c", ", "}) v.intern(std::string_view(t));
  ASSERT_EQ(v.size(), 5u);
  const auto fresh = v.intern(word("zzz"));
  EXPECT_EQ(fresh.symbol, 5u);
  EXPECT_TRUE(fresh.was_new);
}

TEST(Vocabulary, ResolveAndBounds) {
  Vocabulary v;
  v.intern(word("a"));
  EXPECT_EQ(v.resolve_token(0), word("a"));
  EXPECT_THROW(v.resolve(1), InvalidSymbolError);
}

TEST(Vocabulary, BijectionOverBuiltVocabulary) {
  Vocabulary v;
  std::vector<Symbol> symbols;
  intern_all("to be or not to be, that is the question: to be", v, symbols);
  for (Symbol i = 0; i < v.size(); ++i) {
    const auto r = v.intern(v.resolve(i));
    EXPECT_EQ(r.symbol, i);
    EXPECT_FALSE(r.was_new);
  }
}

TEST(Vocabulary, DeterministicAssignment) {
  const std::string text = "alpha beta alpha gamma, beta; delta";
  Vocabulary v1, v2;
  std::vector<Symbol> s1, s2;
  intern_all(text, v1, s1);
  intern_all(text, v2, s2);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1, (std::vector<Symbol>{0, 1, 2, 1, 0, 1, 3, 4, 2, 5, 6}));
}
