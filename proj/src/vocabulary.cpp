#include "aubench/vocabulary.hpp"

#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"

namespace aubench {

using nlohmann::json;

int AuVocabulary::index_of(const AuCode& au) const {
  for (size_t i = 0; i < aus.size(); ++i)
    if (aus[i] == au) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> AuVocabulary::tokens() const {
  std::vector<std::string> out;
  out.reserve(aus.size());
  for (const auto& au : aus) out.push_back(au.token());
  return out;
}

AuVocabulary AuVocabulary::cd6me() {
  AuVocabulary v;
  for (int k : {1, 2, 4, 5, 6, 7, 9, 10, 12, 14, 15, 17}) v.aus.push_back(AuCode{k});
  return v;
}

AuVocabulary select_cd6me_aus(const std::vector<DatasetTable>& tables,
                              long min_total) {
  if (tables.empty()) throw DataError("select_cd6me_aus: no tables given");
  std::map<AuCode, long> totals;
  std::map<AuCode, long> presence;
  for (const auto& table : tables) {
    std::set<AuCode> seen;
    for (const auto& s : table.samples)
      for (const auto& au : s.au_set) {
        ++totals[au];
        seen.insert(au);
      }
    for (const auto& au : seen) ++presence[au];
  }
  const long n_tables = static_cast<long>(tables.size());
  const long min_presence = (n_tables + 1) / 2 + 1;
  AuVocabulary v;
  for (const auto& [au, total] : totals)
    if (total >= min_total && presence[au] >= min_presence) v.aus.push_back(au);
  return v;  // std::map iteration keeps AU-number order
}

AuVocabulary load_vocabulary(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open vocabulary file '" + p.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("vocabulary file '" + p.string() + "': " + e.what());
  }
  AuVocabulary v;
  std::set<AuCode> seen;
  for (const auto& tok : j.at("aus")) {
    const AuCode au = parse_au(tok.get<std::string>());
    if (!seen.insert(au).second)
      throw ConfigError("vocabulary file '" + p.string() + "': duplicate " + au.token());
    v.aus.push_back(au);
  }
  return v;
}

void save_vocabulary(const AuVocabulary& v, const std::filesystem::path& p) {
  json j;
  j["aus"] = v.tokens();
  std::ofstream out(p);
  if (!out) throw Error("cannot write vocabulary file '" + p.string() + "'");
  out << j.dump(2) << '\n';
}

std::string vocabulary_checksum(const AuVocabulary& v) {
  std::string joined;
  for (const auto& au : v.aus) joined += au.token() + "|";
  return hex_u64(fnv1a64(joined));
}

}  // namespace aubench
