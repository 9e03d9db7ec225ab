#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ownet {

// The 13-way shareholder classification. Ids are 1-based and stable; they are
// the ids used in type CSV files.
enum class OwnerType : std::uint8_t {
  VentureCapital = 1,
  FinancialCo = 2,
  Families = 3,
  PublicCo = 4,
  State = 5,
  HedgeFunds = 6,
  InsuranceCo = 7,
  SelfOwned = 8,
  PrivateEquity = 9,
  Corporates = 10,
  Mutuals = 11,
  Banks = 12,
  Foundations = 13,
};

inline constexpr std::size_t owner_type_count = 13;

constexpr int owner_type_id(OwnerType t) { return static_cast<int>(t); }

// 0-based index for dense per-type arrays.
constexpr std::size_t owner_type_index(OwnerType t) {
  return static_cast<std::size_t>(t) - 1;
}

std::string_view owner_type_name(OwnerType t);

// Accepts a numeric id ("1".."13") or an enumeration name ("Banks").
std::optional<OwnerType> parse_owner_type(std::string_view s);

constexpr std::array<OwnerType, owner_type_count> all_owner_types() {
  std::array<OwnerType, owner_type_count> out{};
  for (std::size_t i = 0; i < owner_type_count; ++i)
    out[i] = static_cast<OwnerType>(i + 1);
  return out;
}

}  // namespace ownet
