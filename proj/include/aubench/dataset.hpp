#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aubench/au_code.hpp"

namespace aubench {

// Well-known flags attached to samples during ingestion.
inline constexpr const char* kFlagOnsetEqualsApex = "onset-equals-apex";
inline constexpr const char* kFlagOffsetImputed = "offset-imputed";

// One micro-expression clip: identity, temporal landmarks, AU set and
// optional emotion label. Frame indices satisfy 0 <= onset <= apex <= offset;
// onset == apex is a known annotation quirk and is flagged rather than
// rejected.
struct Sample {
  std::string sample_id;
  std::string dataset_id;
  std::string subject_id;
  int onset = 0;
  int apex = 0;
  int offset = 0;
  AuSet au_set;
  std::optional<std::string> emotion;
  std::optional<std::string> feature_ref;
  std::vector<std::string> flags;

  bool has_flag(std::string_view flag) const;
  // Subject ids are namespaced by dataset; the same raw id in two datasets is
  // two different people.
  std::string subject_key() const { return dataset_id + "/" + subject_id; }
};

void validate(const Sample& s);

struct DatasetTable {
  std::string dataset_id;
  std::vector<Sample> samples;

  std::vector<std::string> subjects() const;  // distinct, sorted
};

void validate(const DatasetTable& t);

struct DatasetStats {
  long n_samples = 0;
  long n_subjects = 0;
  long n_au_sequences = 0;   // sum over samples of |au_set|
  double cardinality = 0.0;  // n_au_sequences / n_samples
  long n_distinct_aus = 0;
  long n_aus_geq10 = 0;  // AUs with at least 10 instances
};

DatasetStats compute_stats(const DatasetTable& t);  // throws on empty table

struct DualAnnotation {
  std::string sample_id;
  AuSet coder1_aus;
  AuSet coder2_aus;
};

// Mean over samples of R = 2*|C1 n C2| / (|C1| + |C2|). The denominator is
// the summed set sizes, the only reading under which complete agreement
// scores 1. Throws if both coder sets are empty for some sample.
double reliability(const std::vector<DualAnnotation>& annotations);

// Line-oriented structured text: one JSON record per sample, first line is a
// header record. Round-trips exactly.
void write_table(const DatasetTable& t, std::ostream& out);
DatasetTable read_table(std::istream& in);
void write_table_file(const DatasetTable& t, const std::filesystem::path& p);
DatasetTable read_table_file(const std::filesystem::path& p);

std::string table_serialization(const DatasetTable& t);
std::string table_digest(const DatasetTable& t);

}  // namespace aubench
