#include "wordorder/order.hpp"

#include <cctype>

namespace wordorder {
namespace {

constexpr std::array<WordOrder::Positions, kOrderCount> kPositions{{
    {Role::Subject, Role::Verb, Role::Object},
    {Role::Subject, Role::Object, Role::Verb},
    {Role::Verb, Role::Subject, Role::Object},
    {Role::Verb, Role::Object, Role::Subject},
    {Role::Object, Role::Verb, Role::Subject},
    {Role::Object, Role::Subject, Role::Verb},
}};

std::array<WordOrder, kOrderCount> make_all_orders() {
  std::array<WordOrder, kOrderCount> out{};
  for (std::size_t i = 0; i < kOrderCount; ++i) out[i] = WordOrder::from_index(i);
  return out;
}

}  // namespace

std::optional<WordOrder> WordOrder::from_positions(const Positions& positions) noexcept {
  for (std::size_t i = 0; i < kOrderCount; ++i) {
    if (kPositions[i] == positions) return WordOrder(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

std::optional<WordOrder> WordOrder::parse(std::string_view name) noexcept {
  if (name.size() != kRoleCount) return std::nullopt;
  Positions positions{};
  for (std::size_t i = 0; i < kRoleCount; ++i) {
    switch (std::toupper(static_cast<unsigned char>(name[i]))) {
      case 'S': positions[i] = Role::Subject; break;
      case 'V': positions[i] = Role::Verb; break;
      case 'O': positions[i] = Role::Object; break;
      default: return std::nullopt;
    }
  }
  return from_positions(positions);
}

const WordOrder::Positions& WordOrder::positions() const noexcept { return kPositions[index_]; }

std::size_t WordOrder::position_of(Role role) const noexcept {
  const auto& p = positions();
  for (std::size_t i = 0; i < kRoleCount; ++i) {
    if (p[i] == role) return i;
  }
  return kRoleCount;  // unreachable for a valid order
}

std::string WordOrder::name() const {
  std::string out(kRoleCount, ' ');
  for (std::size_t i = 0; i < kRoleCount; ++i) out[i] = role_symbol(role_at(i));
  return out;
}

const std::array<WordOrder, kOrderCount>& all_orders() noexcept {
  static const auto orders = make_all_orders();
  return orders;
}

RoleDistance role_distance(WordOrder a, WordOrder b) noexcept {
  std::uint8_t mismatches = 0;
  for (std::size_t i = 0; i < kRoleCount; ++i) {
    if (a.role_at(i) != b.role_at(i)) ++mismatches;
  }
  return RoleDistance(mismatches);
}

OrderDistanceMatrix build_distance_matrix() noexcept {
  OrderDistanceMatrix m;
  for (auto a : all_orders()) {
    for (auto b : all_orders()) m.cells_[a.index()][b.index()] = role_distance(a, b);
  }
  return m;
}

const OrderDistanceMatrix& distance_matrix() noexcept {
  static const OrderDistanceMatrix matrix = build_distance_matrix();
  return matrix;
}

OrderSet OrderSet::of(std::initializer_list<WordOrder> members) noexcept {
  OrderSet set;
  for (auto order : members) set.insert(order);
  return set;
}

WordOrder OrderSet::nth(std::size_t k) const {
  for (auto order : all_orders()) {
    if (!contains(order)) continue;
    if (k == 0) return order;
    --k;
  }
  throw std::out_of_range("OrderSet::nth past the end");
}

std::vector<WordOrder> OrderSet::members() const {
  std::vector<WordOrder> out;
  out.reserve(size());
  for (auto order : all_orders()) {
    if (contains(order)) out.push_back(order);
  }
  return out;
}

OrderSet orders_with(Role role, std::size_t position) noexcept {
  OrderSet set;
  for (auto order : all_orders()) {
    if (order.role_at(position) == role) set.insert(order);
  }
  return set;
}

}  // namespace wordorder
