#include "aubench/feature_store.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "aubench/checksum.hpp"
#include "aubench/error.hpp"

namespace aubench {

const char* to_string(FeatureLayout layout) {
  switch (layout) {
    case FeatureLayout::flow_uv: return "flow-uv";
    case FeatureLayout::flow_uvs: return "flow-uvs";
    case FeatureLayout::raw_gray_frames: return "raw-gray-frames";
  }
  return "unknown";
}

namespace {

template <typename T>
void put(std::ostream& out, T v) {
  // Little-endian on every supported target.
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw DataError("feature file: unexpected end of stream");
  return v;
}

uint64_t payload_elems(const std::vector<uint32_t>& shape) {
  uint64_t n = 1;
  for (const uint32_t d : shape) n *= d;
  return n;
}

}  // namespace

void write_feature_file(const std::vector<FeatureRecord>& records,
                        const std::filesystem::path& p) {
  for (const auto& r : records) {
    if (r.sample_id.empty()) throw DataError("feature record with empty sample_id");
    if (r.shape.empty()) throw DataError("feature record '" + r.sample_id + "' has no shape");
    if (payload_elems(r.shape) != r.payload.size())
      throw DataError("feature record '" + r.sample_id +
                      "': payload length does not match shape");
  }

  // Index size must be known before payload offsets can be assigned.
  uint64_t index_bytes = 0;
  for (const auto& r : records)
    index_bytes += 4 + r.sample_id.size() + 1 + 1 + 4ull * r.shape.size() + 8 + 8 + 4;
  uint64_t offset = 4 + 2 + 4 + index_bytes;

  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot open feature file '" + p.string() + "' for writing");
  out.write(kFeatureMagic, 4);
  put<uint16_t>(out, kFeatureVersion);
  put<uint32_t>(out, static_cast<uint32_t>(records.size()));
  for (const auto& r : records) {
    put<uint32_t>(out, static_cast<uint32_t>(r.sample_id.size()));
    out.write(r.sample_id.data(), static_cast<std::streamsize>(r.sample_id.size()));
    put<uint8_t>(out, static_cast<uint8_t>(r.layout));
    put<uint8_t>(out, static_cast<uint8_t>(r.shape.size()));
    for (const uint32_t d : r.shape) put<uint32_t>(out, d);
    const uint64_t bytes = r.payload.size() * sizeof(float);
    put<uint64_t>(out, offset);
    put<uint64_t>(out, bytes);
    put<uint32_t>(out, crc32(r.payload.data(), bytes));
    offset += bytes;
  }
  for (const auto& r : records)
    out.write(reinterpret_cast<const char*>(r.payload.data()),
              static_cast<std::streamsize>(r.payload.size() * sizeof(float)));
  if (!out) throw Error("write failure on feature file '" + p.string() + "'");
}

FeatureStore::FeatureStore(std::filesystem::path p) : path_(std::move(p)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw Error("cannot open feature file '" + path_.string() + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kFeatureMagic, 4) != 0)
    throw DataError("'" + path_.string() + "' is not a feature file");
  const auto version = get<uint16_t>(in);
  if (version != kFeatureVersion)
    throw DataError("feature file '" + path_.string() + "': unknown version " +
                    std::to_string(version));
  const auto count = get<uint32_t>(in);
  index_.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    const auto id_len = get<uint32_t>(in);
    std::string id(id_len, '\0');
    in.read(id.data(), id_len);
    if (!in) throw DataError("feature file: truncated index");
    IndexEntry e;
    e.layout = static_cast<FeatureLayout>(get<uint8_t>(in));
    const auto ndims = get<uint8_t>(in);
    for (uint8_t d = 0; d < ndims; ++d) e.shape.push_back(get<uint32_t>(in));
    e.offset = get<uint64_t>(in);
    e.bytes = get<uint64_t>(in);
    e.crc = get<uint32_t>(in);
    if (payload_elems(e.shape) * sizeof(float) != e.bytes)
      throw DataError("feature file: corrupt index entry for '" + id + "'");
    index_.emplace_back(std::move(id), std::move(e));
  }
}

std::vector<std::string> FeatureStore::sample_ids() const {
  std::vector<std::string> out;
  out.reserve(index_.size());
  for (const auto& [id, entry] : index_) out.push_back(id);
  return out;
}

bool FeatureStore::contains(const std::string& sample_id) const {
  return std::any_of(index_.begin(), index_.end(),
                     [&](const auto& kv) { return kv.first == sample_id; });
}

FeatureRecord FeatureStore::load(const std::string& sample_id) const {
  const auto it = std::find_if(index_.begin(), index_.end(),
                               [&](const auto& kv) { return kv.first == sample_id; });
  if (it == index_.end())
    throw DataError("feature store: sample '" + sample_id + "' not found");
  const IndexEntry& e = it->second;

  std::ifstream in(path_, std::ios::binary);
  if (!in) throw Error("cannot open feature file '" + path_.string() + "'");
  in.seekg(static_cast<std::streamoff>(e.offset));
  FeatureRecord r;
  r.sample_id = sample_id;
  r.layout = e.layout;
  r.shape = e.shape;
  r.payload.resize(e.bytes / sizeof(float));
  in.read(reinterpret_cast<char*>(r.payload.data()),
          static_cast<std::streamsize>(e.bytes));
  if (in.gcount() != static_cast<std::streamsize>(e.bytes))
    throw DataError("feature store: checksum mismatch for '" + sample_id +
                    "' (truncated payload)");
  if (crc32(r.payload.data(), e.bytes) != e.crc)
    throw DataError("feature store: checksum mismatch for '" + sample_id + "'");
  return r;
}

}  // namespace aubench
