#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aubench/dataset.hpp"

namespace aubench {

// Ordered AU vocabulary. Column order of every label matrix is bound to one
// of these.
struct AuVocabulary {
  std::vector<AuCode> aus;

  int index_of(const AuCode& au) const;  // -1 when absent
  size_t size() const { return aus.size(); }
  std::vector<std::string> tokens() const;

  // The twelve CD6ME action units in canonical column order.
  static AuVocabulary cd6me();
};

// Selects the benchmark vocabulary from raw tables: an AU qualifies when its
// summed instance count across all tables reaches min_total and it appears in
// at least ceil(n_tables/2)+1 tables. Result ordered by AU number. On the six
// source tables this reproduces the canonical twelve.
AuVocabulary select_cd6me_aus(const std::vector<DatasetTable>& tables,
                              long min_total = 50);

AuVocabulary load_vocabulary(const std::filesystem::path& p);
void save_vocabulary(const AuVocabulary& v, const std::filesystem::path& p);

// Stable digest recorded into run reports for provenance.
std::string vocabulary_checksum(const AuVocabulary& v);

}  // namespace aubench
