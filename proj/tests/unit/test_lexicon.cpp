#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "support/oracles.hpp"
#include "wordorder/lexicon.hpp"

using namespace wordorder;

namespace {

std::string random_string(RandomStream& rng, std::size_t max_len, std::size_t letters) {
  std::string s(rng.uniform_index(max_len + 1), 'a');
  for (char& c : s) c = static_cast<char>('a' + rng.uniform_index(letters));
  return s;
}

}  // namespace

TEST_CASE("generate_lexicon: default-sized lexicon") {
  RandomStream rng(42);
  const Lexicon lex = generate_lexicon(rng, 1000, 3);
  CHECK(lex.size() == 1000);
  CHECK(lex.kind() == LexiconKind::Unified);
  std::set<std::string> distinct(lex.words().begin(), lex.words().end());
  CHECK(distinct.size() == 1000);
  for (const auto& w : lex.words()) {
    CHECK(w.size() == 3);
    for (char c : w) CHECK(alphabet_index(c) < kAlphabet.size());
  }
}

TEST_CASE("generate_lexicon: determinism and errors") {
  RandomStream a(7), b(7);
  CHECK(generate_lexicon(a, 200, 3).words() == generate_lexicon(b, 200, 3).words());

  RandomStream rng(1);
  CHECK_THROWS_AS(generate_lexicon(rng, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate_lexicon(rng, 27, 1), std::invalid_argument);
  CHECK_NOTHROW(generate_lexicon(rng, 26, 1));  // exactly the whole space

  std::vector<std::string> exclude;
  for (char c = 'a'; c <= 'y'; ++c) exclude.emplace_back(1, c);
  const Lexicon rest = generate_lexicon(rng, 1, 1, LexiconKind::Verb, exclude);
  CHECK(rest[0] == "z");
  CHECK_THROWS_AS(generate_lexicon(rng, 2, 1, LexiconKind::Verb, exclude), std::invalid_argument);
}

TEST_CASE("generate_lexicon honours the exclusion set") {
  RandomStream rng(3);
  const Lexicon nouns = generate_lexicon(rng, 500, 3, LexiconKind::Noun);
  const Lexicon verbs = generate_lexicon(rng, 500, 3, LexiconKind::Verb, nouns.words());
  for (const auto& v : verbs.words()) CHECK_FALSE(nouns.contains(v));
}

TEST_CASE("Lexicon rejects malformed word lists") {
  CHECK_THROWS_AS(Lexicon(LexiconKind::Unified, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Lexicon(LexiconKind::Unified, 3, {"abc", "abc"}), std::invalid_argument);
  CHECK_THROWS_AS(Lexicon(LexiconKind::Unified, 3, {"abcd"}), std::invalid_argument);
  CHECK_THROWS_AS(Lexicon(LexiconKind::Unified, 3, {"aBc"}), std::invalid_argument);
}

TEST_CASE("levenshtein examples") {
  CHECK(levenshtein("abc", "abc") == 0);
  CHECK(levenshtein("abc", "") == 3);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("abc", "axc") == 1);
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("abc", "bca") == 2);
}

TEST_CASE("levenshtein agrees with the full-matrix oracle on random pairs") {
  RandomStream rng(2718);
  for (int i = 0; i < 1000; ++i) {
    // Small alphabet so that near-matches are common.
    const std::string a = random_string(rng, 7, 4);
    const std::string b = random_string(rng, 7, 4);
    CHECK(levenshtein(a, b) == oracle::levenshtein(a, b));
    CHECK(levenshtein(a, b) == levenshtein(b, a));
  }
}

TEST_CASE("nearest_word: members decode to themselves") {
  RandomStream rng(5);
  const Lexicon lex = generate_lexicon(rng, 1000, 3);
  for (std::size_t i = 0; i < lex.size(); ++i) {
    const auto m = nearest_word(lex, lex[i]);
    CHECK(m.index == i);
    CHECK(m.distance == 0);
  }
}

TEST_CASE("nearest_word: one-letter corruption with an isolated word") {
  const Lexicon lex(LexiconKind::Unified, 3, {"abc", "xyz", "mmm"});
  const auto m = nearest_word(lex, "abd");
  CHECK(m.index == 0);
  CHECK(m.distance == 1);
  const auto [oi, od] = oracle::nearest(lex.words(), "abd");
  CHECK(oi == 0);
  CHECK(od == 1);
}

TEST_CASE("nearest_word: ties go to the lower index") {
  // "abz" is one substitution from both "abc" (index 1) and "abd" (index 2).
  const Lexicon lex(LexiconKind::Unified, 3, {"qqq", "abc", "abd"});
  const auto m = nearest_word(lex, "abz");
  CHECK(m.index == 1);
  CHECK(m.distance == 1);
  CHECK(oracle::nearest(lex.words(), "abz").first == 1);

  // Distance-2 tie, no early exit possible.
  const Lexicon far(LexiconKind::Unified, 3, {"qqq", "azz", "zbz"});
  const auto f = nearest_word(far, "abc");
  CHECK(f.index == oracle::nearest(far.words(), "abc").first);
  CHECK(f.distance == 2);
}

TEST_CASE("nearest_word matches the exhaustive scan on random observations") {
  RandomStream rng(77);
  const Lexicon lex = generate_lexicon(rng, 300, 3);
  for (int i = 0; i < 2000; ++i) {
    const std::string obs = random_string(rng, 4, 26);
    const auto m = nearest_word(lex, obs);
    const auto [oi, od] = oracle::nearest(lex.words(), obs);
    CHECK(m.index == oi);
    CHECK(m.distance == od);
  }
}

TEST_CASE("classify_word") {
  const Lexicon nouns(LexiconKind::Noun, 3, {"cat", "dog"});
  const Lexicon verbs(LexiconKind::Verb, 3, {"run", "cab"});
  CHECK(classify_word(nouns, verbs, "run").kind == LexiconKind::Verb);
  CHECK(classify_word(nouns, verbs, "run").index == 0);
  CHECK(classify_word(nouns, verbs, "dog").kind == LexiconKind::Noun);
  CHECK(classify_word(nouns, verbs, "dog").index == 1);
  // "cax" is one edit from noun "cat" and from verb "cab": noun wins.
  const auto tie = classify_word(nouns, verbs, "cax");
  CHECK(tie.kind == LexiconKind::Noun);
  CHECK(tie.index == 0);
  CHECK(tie.distance == 1);
  // Oracle over the concatenated list, nouns first.
  std::vector<std::string> all = nouns.words();
  all.insert(all.end(), verbs.words().begin(), verbs.words().end());
  CHECK(oracle::nearest(all, "cax").first == 0);
  CHECK(classify_word(nouns, verbs, "rux").kind == LexiconKind::Verb);
}

TEST_CASE("decoder robustness under single-letter substitutions") {
  RandomStream rng(1000);
  const Lexicon lex = generate_lexicon(rng, 1000, 3);
  std::size_t total = 0;
  std::size_t recovered = 0;
  std::vector<std::pair<std::string, std::size_t>> sample;
  for (std::size_t i = 0; i < lex.size(); ++i) {
    for (std::size_t pos = 0; pos < 3; ++pos) {
      for (char c : kAlphabet) {
        if (c == lex[i][pos]) continue;
        std::string w = lex[i];
        w[pos] = c;
        ++total;
        const std::size_t got = nearest_word(lex, w).index;
        recovered += got == i;
        if (total % 97 == 0) sample.emplace_back(w, got);
      }
    }
  }
  CHECK(total == 1000 * 3 * 25);
  for (const auto& [w, got] : sample) CHECK(got == oracle::nearest(lex.words(), w).first);

  // A short word with one substitution is often equidistant from several
  // entries, so recovery of corrupted words alone is low. At p = 0.01 most
  // words arrive intact; counting double and triple flips as failures gives
  // a lower bound on the overall decode rate.
  const double single = static_cast<double>(recovered) / static_cast<double>(total);
  CHECK(single > 0.1);
  constexpr double p = 0.01;
  const double intact = std::pow(1 - p, 3);
  const double one_flip = 3 * p * (1 - p) * (1 - p);
  CHECK(intact + one_flip * single >= 0.97);
}

TEST_CASE("lexicon text round trip") {
  RandomStream rng(9);
  const Lexicon lex = generate_lexicon(rng, 50, 4, LexiconKind::Verb);
  std::stringstream buf;
  write_lexicon(buf, lex);
  CHECK(buf.str().rfind("lexicon verb 4\n", 0) == 0);
  const Lexicon back = read_lexicon(buf);
  CHECK(back.kind() == LexiconKind::Verb);
  CHECK(back.word_length() == 4);
  CHECK(back.words() == lex.words());

  std::stringstream bad("dictionary noun 3\nabc\n");
  CHECK_THROWS_AS(read_lexicon(bad), std::invalid_argument);
  std::stringstream bad_kind("lexicon adjective 3\nabc\n");
  CHECK_THROWS_AS(read_lexicon(bad_kind), std::invalid_argument);
}
