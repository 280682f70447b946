#include "aubench/au_code.hpp"

#include <cctype>

#include "aubench/error.hpp"
#include "aubench/text.hpp"

namespace aubench {

namespace {
bool is_laterality(char c) { return c == 'L' || c == 'R'; }
bool is_intensity(char c) { return c >= 'A' && c <= 'E'; }
}  // namespace

AuCode parse_au(std::string_view raw) {
  std::string s = to_upper(trim(raw));
  if (s.empty()) throw DataError("empty AU token");

  size_t i = 0;
  if (is_laterality(s[i]) && i + 1 < s.size() && s[i + 1] != 'U') ++i;
  if (i + 1 < s.size() && s[i] == 'A' && s[i + 1] == 'U') i += 2;

  size_t digits_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_begin)
    throw DataError("unparsable AU token '" + std::string(raw) + "'");
  const int number = std::stoi(s.substr(digits_begin, i - digits_begin));

  // Trailing intensity grade and/or laterality marker, in either order.
  while (i < s.size() && (is_intensity(s[i]) || is_laterality(s[i]))) ++i;
  if (i != s.size())
    throw DataError("unparsable AU token '" + std::string(raw) + "'");
  if (number <= 0)
    throw DataError("AU number must be positive in '" + std::string(raw) + "'");
  return AuCode{number};
}

AuSet parse_au_list(std::string_view raw, char sep) {
  AuSet out;
  for (const auto& part : split(raw, sep)) {
    if (trim(part).empty()) continue;
    out.insert(parse_au(part));
  }
  return out;
}

std::string au_set_key(const AuSet& aus) {
  std::string key;
  for (const auto& au : aus) {
    if (!key.empty()) key += '+';
    key += au.token();
  }
  return key;
}

}  // namespace aubench
