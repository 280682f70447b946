#include "aubench/schema.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "aubench/error.hpp"
#include "aubench/text.hpp"

namespace aubench {

using nlohmann::json;

namespace {

char single_char(const json& j, const std::string& field, char fallback) {
  if (!j.contains(field)) return fallback;
  const auto s = j[field].get<std::string>();
  if (s == "\\t" || s == "tab") return '\t';
  if (s.size() != 1)
    throw ConfigError("schema field '" + field + "' must be a single character");
  return s[0];
}

int parse_frame_index(const std::string& cell, const std::string& column,
                      size_t row) {
  const std::string v = trim(cell);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw DataError("row " + std::to_string(row) + ": unparsable frame index '" +
                    cell + "' in column '" + column + "'");
  return value;
}

}  // namespace

TableSchema load_schema(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open schema descriptor '" + p.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("schema descriptor '" + p.string() + "': " + e.what());
  }
  TableSchema s;
  try {
    s.schema_id = j.at("schema_id").get<std::string>();
    s.dataset_id = j.at("dataset_id").get<std::string>();
    s.version = j.value("version", 1);
    s.delimiter = single_char(j, "delimiter", ',');
    const auto& cols = j.at("columns");
    s.subject_col = cols.at("subject").get<std::string>();
    s.onset_col = cols.at("onset").get<std::string>();
    s.apex_col = cols.at("apex").get<std::string>();
    s.au_col = cols.at("aus").get<std::string>();
    s.sample_col = cols.value("sample", "");
    s.offset_col = cols.value("offset", "");
    s.emotion_col = cols.value("emotion", "");
    s.au_separator = single_char(j, "au_separator", '+');
  } catch (const json::exception& e) {
    throw ConfigError("schema descriptor '" + p.string() + "': " + e.what());
  }
  return s;
}

DatasetTable parse_annotations(std::istream& raw, const TableSchema& schema) {
  std::string line;
  if (!std::getline(raw, line))
    throw DataError("annotation input is empty (no header row)");

  std::map<std::string, size_t> col_index;
  {
    const auto headers = split(line, schema.delimiter);
    for (size_t i = 0; i < headers.size(); ++i) col_index[trim(headers[i])] = i;
  }
  const auto require = [&](const std::string& name) -> size_t {
    const auto it = col_index.find(name);
    if (it == col_index.end())
      throw DataError("header row does not match schema '" + schema.schema_id +
                      "': missing column '" + name + "'");
    return it->second;
  };
  const size_t subject_ix = require(schema.subject_col);
  const size_t onset_ix = require(schema.onset_col);
  const size_t apex_ix = require(schema.apex_col);
  const size_t au_ix = require(schema.au_col);
  const size_t sample_ix =
      schema.sample_col.empty() ? SIZE_MAX : require(schema.sample_col);
  const size_t offset_ix =
      schema.offset_col.empty() ? SIZE_MAX : require(schema.offset_col);
  const size_t emotion_ix =
      schema.emotion_col.empty() ? SIZE_MAX : require(schema.emotion_col);

  DatasetTable table;
  table.dataset_id = schema.dataset_id;
  size_t row = 1;
  while (std::getline(raw, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split(line, schema.delimiter);
    const auto cell = [&](size_t ix) -> std::string {
      return ix < cells.size() ? trim(cells[ix]) : std::string();
    };

    Sample s;
    s.dataset_id = schema.dataset_id;
    s.subject_id = cell(subject_ix);
    if (s.subject_id.empty())
      throw DataError("row " + std::to_string(row) + ": empty subject id");
    s.sample_id = sample_ix != SIZE_MAX && !cell(sample_ix).empty()
                      ? cell(sample_ix)
                      : schema.dataset_id + "_r" + std::to_string(row);
    s.onset = parse_frame_index(cell(onset_ix), schema.onset_col, row);
    s.apex = parse_frame_index(cell(apex_ix), schema.apex_col, row);
    if (offset_ix != SIZE_MAX && !cell(offset_ix).empty()) {
      s.offset = parse_frame_index(cell(offset_ix), schema.offset_col, row);
    } else {
      s.offset = s.apex;
      s.flags.push_back(kFlagOffsetImputed);
    }
    if (s.onset == s.apex) s.flags.push_back(kFlagOnsetEqualsApex);
    s.au_set = parse_au_list(cell(au_ix), schema.au_separator);
    if (emotion_ix != SIZE_MAX && !cell(emotion_ix).empty())
      s.emotion = cell(emotion_ix);

    try {
      validate(s);
    } catch (const DataError& e) {
      throw DataError("row " + std::to_string(row) + ": " + e.what());
    }
    table.samples.push_back(std::move(s));
  }
  validate(table);
  return table;
}

DatasetTable parse_annotations_file(const std::filesystem::path& p,
                                    const TableSchema& schema) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open annotation file '" + p.string() + "'");
  return parse_annotations(in, schema);
}

}  // namespace aubench
