#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordorder/random.hpp"

namespace wordorder {

inline constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz";
inline constexpr std::size_t kDefaultWordLength = 3;

/// Index of `letter` in kAlphabet, or kAlphabet.size() if absent.
std::size_t alphabet_index(char letter) noexcept;

enum class LexiconKind { Unified, Noun, Verb };

std::string_view to_string(LexiconKind kind) noexcept;

/// Fixed, ordered list of distinct words of equal length over kAlphabet.
class Lexicon {
 public:
  /// Throws std::invalid_argument on an empty list, duplicates, a word of
  /// the wrong length or a letter outside the alphabet.
  Lexicon(LexiconKind kind, std::size_t word_length, std::vector<std::string> words);

  LexiconKind kind() const noexcept { return kind_; }
  std::size_t word_length() const noexcept { return word_length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::string& operator[](std::size_t i) const noexcept { return words_[i]; }
  const std::vector<std::string>& words() const noexcept { return words_; }

  bool contains(std::string_view word) const;
  /// Position of `word`, or size() when absent.
  std::size_t find(std::string_view word) const;

 private:
  LexiconKind kind_;
  std::size_t word_length_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// `size` distinct uniformly random words, none of which appear in
/// `exclude`. Throws std::invalid_argument when size is zero or the
/// alphabet cannot supply that many distinct words.
Lexicon generate_lexicon(RandomStream& rng, std::size_t size, std::size_t word_length,
                         LexiconKind kind = LexiconKind::Unified,
                         std::span<const std::string> exclude = {});

/// Unit-cost edit distance (insert, delete, substitute).
std::size_t levenshtein(std::string_view a, std::string_view b);

struct WordMatch {
  std::size_t index = 0;
  std::size_t distance = 0;
};

/// Lexicon word closest to `observed` in edit distance; ties go to the lowest index.
WordMatch nearest_word(const Lexicon& lexicon, std::string_view observed);

struct WordClass {
  LexiconKind kind = LexiconKind::Noun;
  std::size_t index = 0;
  std::size_t distance = 0;
};

/// Nearest word over the union of a noun and a verb lexicon. Ties prefer
/// the noun lexicon, then the lower index.
WordClass classify_word(const Lexicon& nouns, const Lexicon& verbs, std::string_view observed);

/// Plain-text form: a header line `lexicon <kind> <word_length>` followed by
/// one word per line.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);
Lexicon read_lexicon(std::istream& in);

}  // namespace wordorder
