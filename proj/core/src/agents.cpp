#include "wordorder/agents.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordorder {

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::Base: return "base";
    case Scenario::NounVerb: return "nv";
    case Scenario::Case: return "case";
    case Scenario::NounVerbCase: return "nv-case";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) noexcept {
  for (auto s : kScenarios) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<Role> role_from_marker(char letter) noexcept {
  for (auto role : kRoles) {
    if (marker_letter(role) == letter) return role;
  }
  return std::nullopt;
}

LexiconSet LexiconSet::unified(Lexicon lexicon) { return LexiconSet(std::move(lexicon), std::nullopt); }

LexiconSet LexiconSet::split(Lexicon nouns, Lexicon verbs) {
  if (nouns.kind() != LexiconKind::Noun || verbs.kind() != LexiconKind::Verb) {
    throw std::invalid_argument("split lexicon set needs a noun and a verb lexicon");
  }
  if (nouns.word_length() != verbs.word_length()) {
    throw std::invalid_argument("noun and verb lexicons differ in word length");
  }
  for (const auto& w : verbs.words()) {
    if (nouns.contains(w)) throw std::invalid_argument("word '" + w + "' is both noun and verb");
  }
  return LexiconSet(std::move(nouns), std::move(verbs));
}

const Lexicon& LexiconSet::unified() const {
  if (is_split()) throw std::logic_error("lexicon set is split into nouns and verbs");
  return primary_;
}

const Lexicon& LexiconSet::nouns() const {
  if (!is_split()) throw std::logic_error("lexicon set is unified");
  return primary_;
}

const Lexicon& LexiconSet::verbs() const {
  if (!is_split()) throw std::logic_error("lexicon set is unified");
  return *verbs_;
}

void LexiconSet::require(Scenario scenario) const {
  if (uses_split_lexicons(scenario) != is_split()) {
    throw std::invalid_argument("lexicon set does not match scenario '" +
                                std::string(to_string(scenario)) + "'");
  }
}

namespace {

// k distinct indices from {0..n-1}, in draw order.
template <std::size_t K>
std::array<std::size_t, K> draw_distinct(std::size_t n, RandomStream& rng) {
  if (n < K) throw std::invalid_argument("lexicon too small to fill every role with a distinct word");
  std::array<std::size_t, K> out{};
  std::array<std::size_t, K> sorted{};
  for (std::size_t k = 0; k < K; ++k) {
    // Map r onto the (n - k) unused indices in increasing order.
    std::size_t r = rng.uniform_index(n - k);
    for (std::size_t j = 0; j < k && sorted[j] <= r; ++j) ++r;
    out[k] = r;
    sorted[k] = r;
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k + 1));
  }
  return out;
}

struct MarkerReading {
  std::optional<WordOrder> complete;
  OrderSet consistent = OrderSet::all();
};

MarkerReading read_markers(const Utterance& u) {
  std::array<std::optional<Role>, kRoleCount> roles;
  std::array<int, kRoleCount> counts{};
  for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
    roles[pos] = role_from_marker(u.tokens[pos].back());
    if (roles[pos]) ++counts[static_cast<std::size_t>(*roles[pos])];
  }
  MarkerReading reading;
  WordOrder::Positions positions{};
  bool all_unique = true;
  for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
    if (roles[pos] && counts[static_cast<std::size_t>(*roles[pos])] == 1) {
      reading.consistent = reading.consistent & orders_with(*roles[pos], pos);
      positions[pos] = *roles[pos];
    } else {
      all_unique = false;
    }
  }
  if (all_unique) reading.complete = WordOrder::from_positions(positions);
  return reading;
}

WordOrder pick_most_probable(const Grammar& g, OrderSet candidates, RandomStream& rng) {
  if (candidates.empty()) candidates = OrderSet::all();
  const OrderSet best = argmax_orders(g, candidates);
  if (best.size() == 1) return best.nth(0);
  return best.nth(rng.uniform_index(best.size()));
}

}  // namespace

SpokenSentence speak(const Grammar& grammar, const LexiconSet& lexicons, Scenario scenario,
                     RandomStream& rng) {
  lexicons.require(scenario);
  std::array<const std::string*, kRoleCount> words{};  // indexed by Role
  if (lexicons.is_split()) {
    const auto nouns = draw_distinct<2>(lexicons.nouns().size(), rng);
    words[static_cast<std::size_t>(Role::Subject)] = &lexicons.nouns()[nouns[0]];
    words[static_cast<std::size_t>(Role::Object)] = &lexicons.nouns()[nouns[1]];
    words[static_cast<std::size_t>(Role::Verb)] =
        &lexicons.verbs()[rng.uniform_index(lexicons.verbs().size())];
  } else {
    const auto picks = draw_distinct<3>(lexicons.unified().size(), rng);
    for (auto role : kRoles) {
      words[static_cast<std::size_t>(role)] = &lexicons.unified()[picks[static_cast<std::size_t>(role)]];
    }
  }

  const WordOrder order = sample_order(grammar, rng);
  SpokenSentence out{{}, order};
  out.utterance.marker_attached = uses_markers(scenario);
  for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
    const Role role = order.role_at(pos);
    auto& token = out.utterance.tokens[pos];
    token = *words[static_cast<std::size_t>(role)];
    if (out.utterance.marker_attached) token.push_back(marker_letter(role));
  }
  return out;
}

RoleAssignment hear(const Grammar& grammar, const LexiconSet& lexicons, Scenario scenario,
                    const Utterance& noisy, RandomStream& rng) {
  lexicons.require(scenario);
  const bool markers = uses_markers(scenario);
  const std::size_t expected = lexicons.word_length() + (markers ? 1 : 0);
  for (const auto& token : noisy.tokens) {
    if (token.size() != expected) {
      throw std::invalid_argument("utterance token '" + token + "' has length " +
                                  std::to_string(token.size()) + ", expected " +
                                  std::to_string(expected));
    }
  }

  OrderSet candidates = OrderSet::all();
  if (markers) {
    const MarkerReading reading = read_markers(noisy);
    if (reading.complete) return *reading.complete;
    candidates = reading.consistent;
  }

  std::array<std::string_view, kRoleCount> stems;
  for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
    stems[pos] = std::string_view(noisy.tokens[pos]).substr(0, lexicons.word_length());
  }

  if (lexicons.is_split()) {
    std::size_t verbs_seen = 0;
    std::size_t verb_position = 0;
    for (std::size_t pos = 0; pos < kRoleCount; ++pos) {
      if (classify_word(lexicons.nouns(), lexicons.verbs(), stems[pos]).kind == LexiconKind::Verb) {
        ++verbs_seen;
        verb_position = pos;
      }
    }
    if (verbs_seen == 1) {
      const OrderSet narrowed = candidates & orders_with(Role::Verb, verb_position);
      if (!narrowed.empty()) candidates = narrowed;
    }
  } else {
    // Word identities carry no role information here; decoding is part of
    // the hearer's procedure but does not affect the chosen order.
    for (auto stem : stems) (void)nearest_word(lexicons.unified(), stem);
  }

  return pick_most_probable(grammar, candidates, rng);
}

RoleDistance communication_trial(const Grammar& grammar, const LexiconSet& lexicons,
                                 Scenario scenario, const NoiseParams& noise, RandomStream& rng) {
  SpokenSentence spoken = speak(grammar, lexicons, scenario, rng);
  apply_noise_in_place(spoken.utterance.tokens, noise, rng);
  const RoleAssignment inferred = hear(grammar, lexicons, scenario, spoken.utterance, rng);
  return role_distance(spoken.truth, inferred);
}

}  // namespace wordorder
