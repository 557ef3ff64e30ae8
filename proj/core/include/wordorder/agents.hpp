#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "wordorder/channel.hpp"
#include "wordorder/grammar.hpp"
#include "wordorder/lexicon.hpp"
#include "wordorder/order.hpp"
#include "wordorder/random.hpp"

namespace wordorder {

/// Information available to the hearer beyond word order.
enum class Scenario {
  Base,          ///< single lexicon, no markers
  NounVerb,      ///< separate noun and verb lexicons
  Case,          ///< single lexicon, one-letter role suffix on every word
  NounVerbCase,  ///< both
};

inline constexpr std::array<Scenario, 4> kScenarios{Scenario::Base, Scenario::NounVerb,
                                                    Scenario::Case, Scenario::NounVerbCase};

constexpr bool uses_markers(Scenario s) noexcept {
  return s == Scenario::Case || s == Scenario::NounVerbCase;
}
constexpr bool uses_split_lexicons(Scenario s) noexcept {
  return s == Scenario::NounVerb || s == Scenario::NounVerbCase;
}

/// "base", "nv", "case", "nv-case"
std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name) noexcept;

constexpr char marker_letter(Role role) noexcept {
  switch (role) {
    case Role::Subject: return 's';
    case Role::Verb: return 'v';
    case Role::Object: return 'o';
  }
  return '?';
}
std::optional<Role> role_from_marker(char letter) noexcept;

/// The lexicons a scenario draws from: either one unified lexicon, or a
/// disjoint noun/verb pair of equal word length.
class LexiconSet {
 public:
  static LexiconSet unified(Lexicon lexicon);
  /// Throws std::invalid_argument if the lexicons overlap, differ in word
  /// length, or have the wrong kinds.
  static LexiconSet split(Lexicon nouns, Lexicon verbs);

  bool is_split() const noexcept { return verbs_.has_value(); }
  std::size_t word_length() const noexcept { return primary_.word_length(); }

  /// Precondition: !is_split().
  const Lexicon& unified() const;
  /// Precondition: is_split().
  const Lexicon& nouns() const;
  const Lexicon& verbs() const;

  /// Throws std::invalid_argument when the set does not fit the scenario.
  void require(Scenario scenario) const;

 private:
  explicit LexiconSet(Lexicon primary, std::optional<Lexicon> verbs)
      : primary_(std::move(primary)), verbs_(std::move(verbs)) {}

  Lexicon primary_;
  std::optional<Lexicon> verbs_;
};

struct Utterance {
  std::array<std::string, kRoleCount> tokens;
  bool marker_attached = false;
};

/// The hearer's (or speaker's) mapping of sentence positions to roles.
using RoleAssignment = WordOrder;

struct SpokenSentence {
  Utterance utterance;
  RoleAssignment truth;
};

/// Samples the three role words and an order from `grammar`, then arranges
/// (and in marker scenarios suffixes) the words. Draw order: words, then
/// the word order.
SpokenSentence speak(const Grammar& grammar, const LexiconSet& lexicons, Scenario scenario,
                     RandomStream& rng);

/// Infers the role assignment of a possibly noisy utterance.
///
/// Words are first snapped to their nearest lexicon entries. The candidate
/// orders are then narrowed by whatever the scenario exposes:
///  - markers: if the three suffix letters name three distinct roles, that
///    assignment is returned outright. Otherwise every marker naming a role
///    that occurs exactly once pins that role to its position.
///  - split lexicons: if exactly one word decodes as a verb, only the two
///    orders with V at that position remain (intersected with the marker
///    constraints when those are present and compatible).
/// The answer is the most probable remaining order under `grammar`, ties
/// broken uniformly at random with `rng`.
///
/// Throws std::invalid_argument for a token of the wrong length.
RoleAssignment hear(const Grammar& grammar, const LexiconSet& lexicons, Scenario scenario,
                    const Utterance& noisy, RandomStream& rng);

/// speak, then apply_noise, then hear, with one grammar shared by both
/// agents; returns the distance between the true and inferred assignments.
RoleDistance communication_trial(const Grammar& grammar, const LexiconSet& lexicons,
                                 Scenario scenario, const NoiseParams& noise, RandomStream& rng);

}  // namespace wordorder
