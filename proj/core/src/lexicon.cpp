#include "wordorder/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace wordorder {

std::size_t alphabet_index(char letter) noexcept {
  if (letter < 'a' || letter > 'z') return kAlphabet.size();
  return static_cast<std::size_t>(letter - 'a');
}

std::string_view to_string(LexiconKind kind) noexcept {
  switch (kind) {
    case LexiconKind::Unified: return "unified";
    case LexiconKind::Noun: return "noun";
    case LexiconKind::Verb: return "verb";
  }
  return "unknown";
}

Lexicon::Lexicon(LexiconKind kind, std::size_t word_length, std::vector<std::string> words)
    : kind_(kind), word_length_(word_length), words_(std::move(words)) {
  if (word_length_ == 0) throw std::invalid_argument("lexicon word length must be positive");
  if (words_.empty()) throw std::invalid_argument("lexicon must contain at least one word");
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto& w = words_[i];
    if (w.size() != word_length_) {
      throw std::invalid_argument("lexicon word '" + w + "' has wrong length");
    }
    for (char c : w) {
      if (alphabet_index(c) == kAlphabet.size()) {
        throw std::invalid_argument("lexicon word '" + w + "' has a letter outside the alphabet");
      }
    }
    if (!index_.emplace(w, i).second) {
      throw std::invalid_argument("duplicate lexicon word '" + w + "'");
    }
  }
}

bool Lexicon::contains(std::string_view word) const { return find(word) != size(); }

std::size_t Lexicon::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? size() : it->second;
}

namespace {

// alphabet^length, saturating.
std::size_t word_space(std::size_t length) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / kAlphabet.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= kAlphabet.size();
  }
  return total;
}

}  // namespace

Lexicon generate_lexicon(RandomStream& rng, std::size_t size, std::size_t word_length,
                         LexiconKind kind, std::span<const std::string> exclude) {
  if (size == 0) throw std::invalid_argument("lexicon size must be at least 1");
  if (word_length == 0) throw std::invalid_argument("word length must be at least 1");
  std::unordered_set<std::string> taken(exclude.begin(), exclude.end());
  const std::size_t space = word_space(word_length);
  if (taken.size() > space || space - taken.size() < size) {
    throw std::invalid_argument("alphabet cannot supply " + std::to_string(size) +
                                " distinct words of length " + std::to_string(word_length));
  }

  std::vector<std::string> words;
  words.reserve(size);
  std::string w(word_length, 'a');
  while (words.size() < size) {
    for (char& c : w) c = kAlphabet[rng.uniform_index(kAlphabet.size())];
    if (taken.insert(w).second) words.push_back(w);
  }
  return Lexicon(kind, word_length, std::move(words));
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), curr(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitute = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitute});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

WordMatch nearest_word(const Lexicon& lexicon, std::string_view observed) {
  if (auto hit = lexicon.find(observed); hit != lexicon.size()) return {hit, 0};
  // Observed is not a lexicon word, so no distance below 1 exists and the
  // first word at distance 1 is the lowest-index minimizer.
  WordMatch best{0, std::numeric_limits<std::size_t>::max()};
  for (std::size_t i = 0; i < lexicon.size(); ++i) {
    const std::size_t d = levenshtein(lexicon[i], observed);
    if (d < best.distance) {
      best = {i, d};
      if (d == 1) break;
    }
  }
  return best;
}

WordClass classify_word(const Lexicon& nouns, const Lexicon& verbs, std::string_view observed) {
  const WordMatch noun = nearest_word(nouns, observed);
  if (noun.distance == 0) return {LexiconKind::Noun, noun.index, 0};
  const WordMatch verb = nearest_word(verbs, observed);
  if (verb.distance < noun.distance) return {LexiconKind::Verb, verb.index, verb.distance};
  return {LexiconKind::Noun, noun.index, noun.distance};
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  out << "lexicon " << to_string(lexicon.kind()) << ' ' << lexicon.word_length() << '\n';
  for (const auto& w : lexicon.words()) out << w << '\n';
}

Lexicon read_lexicon(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("lexicon file is empty");
  std::istringstream fields(header);
  std::string magic, kind_name;
  std::size_t word_length = 0;
  if (!(fields >> magic >> kind_name >> word_length) || magic != "lexicon") {
    throw std::invalid_argument("malformed lexicon header: '" + header + "'");
  }
  LexiconKind kind;
  if (kind_name == "unified") {
    kind = LexiconKind::Unified;
  } else if (kind_name == "noun") {
    kind = LexiconKind::Noun;
  } else if (kind_name == "verb") {
    kind = LexiconKind::Verb;
  } else {
    throw std::invalid_argument("unknown lexicon kind '" + kind_name + "'");
  }
  std::vector<std::string> words;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) words.push_back(line);
  }
  return Lexicon(kind, word_length, std::move(words));
}

}  // namespace wordorder
