#include "aubench/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"

namespace aubench {

using nlohmann::json;

bool Sample::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

void validate(const Sample& s) {
  if (s.sample_id.empty()) throw DataError("sample with empty sample_id");
  if (s.subject_id.empty())
    throw DataError("sample '" + s.sample_id + "' has empty subject id");
  if (s.onset < 0)
    throw DataError("sample '" + s.sample_id + "' has negative onset");
  if (!(s.onset <= s.apex && s.apex <= s.offset))
    throw DataError("sample '" + s.sample_id +
                    "': non-monotone temporal landmarks");
}

std::vector<std::string> DatasetTable::subjects() const {
  std::set<std::string> distinct;
  for (const auto& s : samples) distinct.insert(s.subject_id);
  return {distinct.begin(), distinct.end()};
}

void validate(const DatasetTable& t) {
  std::set<std::string> ids;
  for (const auto& s : t.samples) {
    validate(s);
    if (s.dataset_id != t.dataset_id)
      throw DataError("sample '" + s.sample_id + "' carries dataset id '" +
                      s.dataset_id + "' inside table '" + t.dataset_id + "'");
    if (!ids.insert(s.sample_id).second)
      throw DataError("duplicate sample_id '" + s.sample_id + "'");
  }
}

DatasetStats compute_stats(const DatasetTable& t) {
  if (t.samples.empty())
    throw DataError("compute_stats: table '" + t.dataset_id + "' is empty");
  DatasetStats st;
  st.n_samples = static_cast<long>(t.samples.size());
  st.n_subjects = static_cast<long>(t.subjects().size());
  std::map<AuCode, long> instances;
  for (const auto& s : t.samples) {
    st.n_au_sequences += static_cast<long>(s.au_set.size());
    for (const auto& au : s.au_set) ++instances[au];
  }
  st.cardinality =
      static_cast<double>(st.n_au_sequences) / static_cast<double>(st.n_samples);
  st.n_distinct_aus = static_cast<long>(instances.size());
  for (const auto& [au, count] : instances)
    if (count >= 10) ++st.n_aus_geq10;
  return st;
}

double reliability(const std::vector<DualAnnotation>& annotations) {
  if (annotations.empty()) throw DataError("reliability: no annotations");
  double sum = 0.0;
  for (const auto& a : annotations) {
    const size_t total = a.coder1_aus.size() + a.coder2_aus.size();
    if (total == 0)
      throw DataError("reliability: both coder sets empty for sample '" +
                      a.sample_id + "'");
    std::vector<AuCode> agreed;
    std::set_intersection(a.coder1_aus.begin(), a.coder1_aus.end(),
                          a.coder2_aus.begin(), a.coder2_aus.end(),
                          std::back_inserter(agreed));
    sum += 2.0 * static_cast<double>(agreed.size()) / static_cast<double>(total);
  }
  return sum / static_cast<double>(annotations.size());
}

namespace {

json sample_to_json(const Sample& s) {
  json j;
  j["sample"] = s.sample_id;
  j["dataset"] = s.dataset_id;
  j["subject"] = s.subject_id;
  j["onset"] = s.onset;
  j["apex"] = s.apex;
  j["offset"] = s.offset;
  json aus = json::array();
  for (const auto& au : s.au_set) aus.push_back(au.token());
  j["aus"] = aus;
  if (s.emotion) j["emotion"] = *s.emotion;
  if (s.feature_ref) j["feature_ref"] = *s.feature_ref;
  if (!s.flags.empty()) j["flags"] = s.flags;
  return j;
}

Sample sample_from_json(const json& j) {
  Sample s;
  s.sample_id = j.at("sample").get<std::string>();
  s.dataset_id = j.at("dataset").get<std::string>();
  s.subject_id = j.at("subject").get<std::string>();
  s.onset = j.at("onset").get<int>();
  s.apex = j.at("apex").get<int>();
  s.offset = j.at("offset").get<int>();
  for (const auto& tok : j.at("aus")) s.au_set.insert(parse_au(tok.get<std::string>()));
  if (j.contains("emotion")) s.emotion = j["emotion"].get<std::string>();
  if (j.contains("feature_ref")) s.feature_ref = j["feature_ref"].get<std::string>();
  if (j.contains("flags")) s.flags = j["flags"].get<std::vector<std::string>>();
  return s;
}

}  // namespace

void write_table(const DatasetTable& t, std::ostream& out) {
  json header;
  header["kind"] = "dataset-table";
  header["dataset"] = t.dataset_id;
  header["n"] = t.samples.size();
  out << header.dump() << '\n';
  for (const auto& s : t.samples) out << sample_to_json(s).dump() << '\n';
}

DatasetTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("table stream is empty");
  json header = json::parse(line);
  if (header.value("kind", "") != "dataset-table")
    throw DataError("not a dataset table file");
  DatasetTable t;
  t.dataset_id = header.at("dataset").get<std::string>();
  const auto n = header.at("n").get<size_t>();
  t.samples.reserve(n);
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    t.samples.push_back(sample_from_json(json::parse(line)));
  }
  if (t.samples.size() != n)
    throw DataError("table record count mismatch: header says " +
                    std::to_string(n) + ", found " +
                    std::to_string(t.samples.size()));
  validate(t);
  return t;
}

void write_table_file(const DatasetTable& t, const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot open '" + p.string() + "' for writing");
  write_table(t, out);
}

DatasetTable read_table_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open table file '" + p.string() + "'");
  return read_table(in);
}

std::string table_serialization(const DatasetTable& t) {
  std::ostringstream os;
  write_table(t, os);
  return os.str();
}

std::string table_digest(const DatasetTable& t) {
  return hex_u64(fnv1a64(table_serialization(t)));
}

}  // namespace aubench
