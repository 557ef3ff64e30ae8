#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "wordorder/agents.hpp"

using namespace wordorder;

namespace {

LexiconSet unified_set(std::uint64_t seed, std::size_t size = 1000) {
  RandomStream rng(seed);
  return LexiconSet::unified(generate_lexicon(rng, size, 3));
}

LexiconSet split_set(std::uint64_t seed) {
  RandomStream rng(seed);
  Lexicon nouns = generate_lexicon(rng, 500, 3, LexiconKind::Noun);
  Lexicon verbs = generate_lexicon(rng, 500, 3, LexiconKind::Verb, nouns.words());
  return LexiconSet::split(std::move(nouns), std::move(verbs));
}

const LexiconSet& lexicons_for(Scenario s) {
  static const LexiconSet unified = unified_set(10);
  static const LexiconSet split = split_set(11);
  return uses_split_lexicons(s) ? split : unified;
}

Grammar random_grammar(RandomStream& rng) {
  Probabilities p{};
  double total = 0.0;
  for (double& x : p) total += x = rng.uniform() + 1e-3;
  for (double& x : p) x /= total;
  return Grammar(p);
}

}  // namespace

TEST_CASE("scenario names round trip") {
  for (auto s : kScenarios) CHECK(parse_scenario(to_string(s)) == s);
  CHECK(to_string(Scenario::NounVerbCase) == "nv-case");
  CHECK_FALSE(parse_scenario("nvcase").has_value());
  for (auto role : kRoles) CHECK(role_from_marker(marker_letter(role)) == role);
  CHECK_FALSE(role_from_marker('x').has_value());
}

TEST_CASE("LexiconSet validation") {
  const Lexicon nouns(LexiconKind::Noun, 3, {"abc", "def"});
  const Lexicon verbs(LexiconKind::Verb, 3, {"ghi"});
  const Lexicon clash(LexiconKind::Verb, 3, {"abc"});
  const Lexicon longer(LexiconKind::Verb, 4, {"ghij"});
  CHECK_NOTHROW(LexiconSet::split(nouns, verbs));
  CHECK_THROWS_AS(LexiconSet::split(nouns, clash), std::invalid_argument);
  CHECK_THROWS_AS(LexiconSet::split(nouns, longer), std::invalid_argument);
  CHECK_THROWS_AS(LexiconSet::split(verbs, nouns), std::invalid_argument);

  const auto split = LexiconSet::split(nouns, verbs);
  CHECK_THROWS_AS(split.require(Scenario::Base), std::invalid_argument);
  CHECK_NOTHROW(split.require(Scenario::NounVerbCase));
  const auto unified = unified_set(1, 10);
  CHECK_THROWS_AS(unified.require(Scenario::NounVerb), std::invalid_argument);
  CHECK_NOTHROW(unified.require(Scenario::Case));
}

TEST_CASE("speak: one-hot grammar fixes the order, words are distinct lexicon entries") {
  RandomStream rng(1);
  for (auto s : kScenarios) {
    const auto& lex = lexicons_for(s);
    for (auto order : all_orders()) {
      const auto sentence = speak(Grammar::one_hot(order), lex, s, rng);
      CHECK(sentence.truth == order);
      CHECK(sentence.utterance.marker_attached == uses_markers(s));
      std::set<std::string> words;
      for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
        std::string word = sentence.utterance.tokens[pos];
        if (uses_markers(s)) {
          REQUIRE(word.size() == 4);
          CHECK(word.back() == marker_letter(order.role_at(pos)));
          word.pop_back();
        }
        words.insert(word);
        if (lex.is_split()) {
          const bool is_verb = order.role_at(pos) == Role::Verb;
          CHECK((is_verb ? lex.verbs() : lex.nouns()).contains(word));
        } else {
          CHECK(lex.unified().contains(word));
        }
      }
      CHECK(words.size() == 3);
    }
  }
}

TEST_CASE("speak: uniform grammar uses every order at rate 1/6") {
  RandomStream rng(2);
  const auto& lex = lexicons_for(Scenario::Base);
  constexpr int n = 60000;
  std::array<int, 6> counts{};
  for (int i = 0; i < n; ++i) ++counts[speak(uniform_grammar(), lex, Scenario::Base, rng).truth.index()];
  const auto band = oracle::binomial_interval(n, 1.0 / 6.0);
  for (int c : counts) CHECK(band.contains(c));
}

TEST_CASE("hear: clean case markers always give the truth") {
  RandomStream rng(3);
  for (auto s : {Scenario::Case, Scenario::NounVerbCase}) {
    for (int i = 0; i < 2000; ++i) {
      const Grammar speaker = random_grammar(rng);
      const Grammar hearer = random_grammar(rng);
      const auto sentence = speak(speaker, lexicons_for(s), s, rng);
      CHECK(hear(hearer, lexicons_for(s), s, sentence.utterance, rng) == sentence.truth);
    }
  }
}

TEST_CASE("hear: base hearer follows its own grammar") {
  RandomStream rng(4);
  const auto& lex = lexicons_for(Scenario::Base);
  const auto sentence = speak(Grammar::one_hot(orders::SVO), lex, Scenario::Base, rng);
  CHECK(hear(Grammar::one_hot(orders::OVS), lex, Scenario::Base, sentence.utterance, rng) == orders::OVS);
}

TEST_CASE("hear: a verb in first position leaves VSO and VOS evenly") {
  RandomStream rng(5);
  const auto& lex = lexicons_for(Scenario::NounVerb);
  Utterance u;
  u.tokens = {lex.verbs()[0], lex.nouns()[0], lex.nouns()[1]};
  constexpr int n = 20000;
  int vso = 0;
  for (int i = 0; i < n; ++i) {
    const auto order = hear(uniform_grammar(), lex, Scenario::NounVerb, u, rng);
    CHECK((order == orders::VSO || order == orders::VOS));
    vso += order == orders::VSO;
  }
  CHECK(oracle::binomial_interval(n, 0.5).contains(vso));
  // The grammar still breaks the tie when it can.
  Probabilities p{0.3, 0.3, 0.1, 0.2, 0.05, 0.05};
  CHECK(hear(Grammar(p), lex, Scenario::NounVerb, u, rng) == orders::VOS);
}

TEST_CASE("hear: partial markers narrow the candidates") {
  RandomStream rng(6);
  const auto& lex = lexicons_for(Scenario::Case);
  const std::string w0 = lex.unified()[0], w1 = lex.unified()[1], w2 = lex.unified()[2];
  Utterance u;
  u.marker_attached = true;
  // Markers "o", "s", "s": only the object marker is unique, pinning O first.
  u.tokens = {w0 + "o", w1 + "s", w2 + "s"};
  for (int i = 0; i < 200; ++i) {
    const auto order = hear(uniform_grammar(), lex, Scenario::Case, u, rng);
    CHECK(order.role_at(0) == Role::Object);
  }
  // Every marker unreadable: the grammar decides.
  u.tokens = {w0 + "x", w1 + "y", w2 + "z"};
  CHECK(hear(Grammar::one_hot(orders::VOS), lex, Scenario::Case, u, rng) == orders::VOS);
}

TEST_CASE("hear rejects malformed tokens") {
  RandomStream rng(7);
  Utterance u;
  u.tokens = {"abcd", "efg", "hij"};
  CHECK_THROWS_AS(hear(uniform_grammar(), lexicons_for(Scenario::Base), Scenario::Base, u, rng),
                  std::invalid_argument);
  u.tokens = {"abc", "efg", "hij"};
  u.marker_attached = true;
  CHECK_THROWS_AS(hear(uniform_grammar(), lexicons_for(Scenario::Case), Scenario::Case, u, rng),
                  std::invalid_argument);
}

TEST_CASE("noiseless base trials with a uniform grammar average 2/3") {
  RandomStream rng(8);
  const auto& lex = lexicons_for(Scenario::Base);
  constexpr int n = 100000;
  long thirds = 0;
  for (int i = 0; i < n; ++i)
    thirds += communication_trial(uniform_grammar(), lex, Scenario::Base, {0.0}, rng).mismatches();
  const double mean = thirds / (3.0 * n);
  // Exact value from the oracle.
  oracle::Rational u(1, 6);
  const double exact = boost::rational_cast<double>(oracle::expected_distance(
      {u, u, u, u, u, u}, {u, u, u, u, u, u}));
  CHECK(mean == doctest::Approx(exact).epsilon(0.03));
  CHECK(std::abs(mean - 2.0 / 3.0) <= 0.02);
}

TEST_CASE("noiseless one-hot trials never fail, in every scenario") {
  RandomStream rng(9);
  for (auto s : kScenarios)
    for (auto order : all_orders())
      for (int i = 0; i < 50; ++i)
        CHECK(communication_trial(Grammar::one_hot(order), lexicons_for(s), s, {0.0}, rng).mismatches() == 0);
}

TEST_CASE("noiseless case trials never fail for arbitrary grammars") {
  RandomStream rng(10);
  for (int i = 0; i < 2000; ++i)
    CHECK(communication_trial(random_grammar(rng), lexicons_for(Scenario::Case), Scenario::Case, {0.0}, rng)
              .mismatches() == 0);
}

TEST_CASE("noiseless noun/verb trials always place the verb correctly") {
  RandomStream rng(11);
  const auto& lex = lexicons_for(Scenario::NounVerb);
  for (int i = 0; i < 5000; ++i) {
    const Grammar g = random_grammar(rng);
    const auto sentence = speak(g, lex, Scenario::NounVerb, rng);
    const auto heard = hear(g, lex, Scenario::NounVerb, sentence.utterance, rng);
    CHECK(heard.position_of(Role::Verb) == sentence.truth.position_of(Role::Verb));
    CHECK(role_distance(heard, sentence.truth).mismatches() != 3);
  }
}

TEST_CASE("two or more corrupted markers occur at the analytic rate") {
  RandomStream rng(12);
  const auto& lex = lexicons_for(Scenario::Case);
  constexpr double p = 0.1;
  constexpr int n = 100000;
  int corrupted = 0;
  for (int i = 0; i < n; ++i) {
    const auto sentence = speak(uniform_grammar(), lex, Scenario::Case, rng);
    const auto noisy = apply_noise(sentence.utterance.tokens, {p}, rng);
    int flipped = 0;
    for (std::size_t k = 0; k < kRoleCount; ++k) flipped += noisy[k].back() != sentence.utterance.tokens[k].back();
    corrupted += flipped >= 2;
  }
  const double analytic = 3 * p * p * (1 - p) + p * p * p;
  CHECK(oracle::binomial_interval(n, analytic, 4.0).contains(corrupted));
}
