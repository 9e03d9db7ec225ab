#include "ownet/owner_type.hpp"

#include <cctype>

namespace ownet {

namespace {

constexpr std::array<std::string_view, owner_type_count> names = {
    "VentureCapital", "FinancialCo", "Families",      "PublicCo", "State",
    "HedgeFunds",     "InsuranceCo", "SelfOwned",     "PrivateEquity",
    "Corporates",     "Mutuals",     "Banks",         "Foundations",
};

}  // namespace

std::string_view owner_type_name(OwnerType t) {
  return names[owner_type_index(t)];
}

std::optional<OwnerType> parse_owner_type(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool numeric = true;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      numeric = false;
      break;
    }
  if (numeric) {
    if (s.size() > 2) return std::nullopt;
    int id = 0;
    for (char c : s) id = id * 10 + (c - '0');
    if (id < 1 || id > static_cast<int>(owner_type_count)) return std::nullopt;
    return static_cast<OwnerType>(id);
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<OwnerType>(i + 1);
  return std::nullopt;
}

}  // namespace ownet
