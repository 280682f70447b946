#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "aubench/dataset.hpp"

namespace aubench {

// Declares how one dataset's annotation file is laid out. The six source
// datasets ship heterogeneous files, so layouts live in versioned descriptor
// files rather than in code.
struct TableSchema {
  std::string schema_id;
  std::string dataset_id;
  int version = 1;
  char delimiter = ',';
  std::string sample_col;   // optional; ids are synthesized when empty
  std::string subject_col;
  std::string onset_col;
  std::string apex_col;
  std::string offset_col;   // optional; missing offset is imputed from apex
  std::string au_col;
  std::string emotion_col;  // optional
  char au_separator = '+';
};

TableSchema load_schema(const std::filesystem::path& p);

// Parses a delimited annotation file into a normalized table. The header row
// must contain every column the schema declares. AU strings are split on the
// schema separator and canonicalized. A missing or empty offset cell becomes
// offset := apex with an "offset-imputed" flag; onset == apex is flagged.
DatasetTable parse_annotations(std::istream& raw, const TableSchema& schema);
DatasetTable parse_annotations_file(const std::filesystem::path& p,
                                    const TableSchema& schema);

}  // namespace aubench
