#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordorder {

enum class Role : std::uint8_t { Subject = 0, Verb = 1, Object = 2 };

inline constexpr std::size_t kRoleCount = 3;
inline constexpr std::size_t kOrderCount = 6;

inline constexpr std::array<Role, kRoleCount> kRoles{Role::Subject, Role::Verb, Role::Object};

constexpr char role_symbol(Role role) noexcept {
  switch (role) {
    case Role::Subject: return 'S';
    case Role::Verb: return 'V';
    case Role::Object: return 'O';
  }
  return '?';
}

/// One of the six arrangements of subject, verb and object.
///
/// Orders are indexed in the conventional typological listing
/// SVO, SOV, VSO, VOS, OVS, OSV, and every CSV column, JSON array and
/// probability vector in this project uses that index.
class WordOrder {
 public:
  using Positions = std::array<Role, kRoleCount>;

  constexpr WordOrder() noexcept = default;

  /// Throws std::out_of_range for index >= 6.
  static constexpr WordOrder from_index(std::size_t index) {
    if (index >= kOrderCount) throw std::out_of_range("word order index out of range");
    return WordOrder(static_cast<std::uint8_t>(index));
  }

  /// Returns nullopt unless `positions` is a permutation of the three roles.
  static std::optional<WordOrder> from_positions(const Positions& positions) noexcept;

  /// Accepts "SVO", "svo", etc.
  static std::optional<WordOrder> parse(std::string_view name) noexcept;

  constexpr std::size_t index() const noexcept { return index_; }

  const Positions& positions() const noexcept;
  Role role_at(std::size_t position) const noexcept { return positions()[position]; }
  std::size_t position_of(Role role) const noexcept;

  std::string name() const;

  friend constexpr bool operator==(WordOrder, WordOrder) noexcept = default;

 private:
  constexpr explicit WordOrder(std::uint8_t index) noexcept : index_(index) {}

  std::uint8_t index_ = 0;
};

/// All six orders in canonical index order.
const std::array<WordOrder, kOrderCount>& all_orders() noexcept;

namespace orders {
inline constexpr WordOrder SVO = WordOrder::from_index(0);
inline constexpr WordOrder SOV = WordOrder::from_index(1);
inline constexpr WordOrder VSO = WordOrder::from_index(2);
inline constexpr WordOrder VOS = WordOrder::from_index(3);
inline constexpr WordOrder OVS = WordOrder::from_index(4);
inline constexpr WordOrder OSV = WordOrder::from_index(5);
}  // namespace orders

/// Role distance in units of 1/3: the number of sentence positions whose
/// roles disagree. Kept as an integer count so comparisons are exact.
class RoleDistance {
 public:
  constexpr RoleDistance() noexcept = default;
  constexpr explicit RoleDistance(std::uint8_t mismatches) noexcept : mismatches_(mismatches) {}

  constexpr std::uint8_t mismatches() const noexcept { return mismatches_; }
  static constexpr std::uint8_t denominator() noexcept { return kRoleCount; }
  constexpr double value() const noexcept {
    return static_cast<double>(mismatches_) / static_cast<double>(kRoleCount);
  }

  friend constexpr auto operator<=>(RoleDistance, RoleDistance) noexcept = default;

 private:
  std::uint8_t mismatches_ = 0;
};

RoleDistance role_distance(WordOrder a, WordOrder b) noexcept;

class OrderDistanceMatrix {
 public:
  RoleDistance operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i][j]; }
  RoleDistance operator()(WordOrder a, WordOrder b) const noexcept {
    return cells_[a.index()][b.index()];
  }

 private:
  friend OrderDistanceMatrix build_distance_matrix() noexcept;
  std::array<std::array<RoleDistance, kOrderCount>, kOrderCount> cells_{};
};

OrderDistanceMatrix build_distance_matrix() noexcept;

/// Shared instance; the matrix is immutable.
const OrderDistanceMatrix& distance_matrix() noexcept;

/// Small set of word orders, stored as a 6-bit mask.
class OrderSet {
 public:
  constexpr OrderSet() noexcept = default;

  static constexpr OrderSet all() noexcept { return OrderSet(0x3F); }
  static OrderSet of(std::initializer_list<WordOrder> members) noexcept;

  void insert(WordOrder order) noexcept { mask_ |= bit(order); }
  bool contains(WordOrder order) const noexcept { return (mask_ & bit(order)) != 0; }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

  /// The k-th member in canonical order; k must be < size().
  WordOrder nth(std::size_t k) const;
  std::vector<WordOrder> members() const;

  OrderSet operator&(OrderSet other) const noexcept {
    return OrderSet(static_cast<std::uint8_t>(mask_ & other.mask_));
  }
  friend constexpr bool operator==(OrderSet, OrderSet) noexcept = default;

 private:
  constexpr explicit OrderSet(std::uint8_t mask) noexcept : mask_(mask) {}
  static std::uint8_t bit(WordOrder order) noexcept {
    return static_cast<std::uint8_t>(1U << order.index());
  }

  std::uint8_t mask_ = 0;
};

/// Orders that put `role` at sentence position `position`.
OrderSet orders_with(Role role, std::size_t position) noexcept;

}  // namespace wordorder
