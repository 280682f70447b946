#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>

namespace aubench {

// A facial action unit identifier in canonical form "AU<k>". Canonical codes
// carry no intensity grade (A-E) and no laterality marker (L/R); presence is
// the only information the label space keeps.
struct AuCode {
  int number = 0;

  std::string token() const { return "AU" + std::to_string(number); }
  auto operator<=>(const AuCode&) const = default;
};

using AuSet = std::set<AuCode>;

// Accepts the spellings found in annotation files ("AU12", "AU12B", "L12",
// "R12", "AU12L", "4") and canonicalizes them. Throws DataError on anything
// that does not reduce to a positive AU number.
AuCode parse_au(std::string_view raw);

// Splits a compound annotation string such as "AU4+AU12B" and canonicalizes
// each part. Empty parts are ignored.
AuSet parse_au_list(std::string_view raw, char sep = '+');

// Canonical one-line key for an AU set, e.g. "AU4+AU12". Empty set -> "".
std::string au_set_key(const AuSet& aus);

}  // namespace aubench
