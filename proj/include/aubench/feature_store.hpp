#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace aubench {

enum class FeatureLayout : uint8_t {
  flow_uv = 0,
  flow_uvs = 1,
  raw_gray_frames = 2,
};

const char* to_string(FeatureLayout layout);

struct FeatureRecord {
  std::string sample_id;
  FeatureLayout layout = FeatureLayout::flow_uvs;
  std::vector<uint32_t> shape;
  std::vector<float> payload;  // length == product of shape
};

// Binary feature file. Layout, all little-endian:
//   magic "MEBF" | u16 version | u32 record count
//   per record: u32 id_len, id bytes, u8 layout, u8 ndims, u32 dims...,
//               u64 payload_offset, u64 payload_bytes, u32 crc32(payload)
//   payload blob region (f32 arrays)
inline constexpr char kFeatureMagic[4] = {'M', 'E', 'B', 'F'};
inline constexpr uint16_t kFeatureVersion = 1;

void write_feature_file(const std::vector<FeatureRecord>& records,
                        const std::filesystem::path& p);

// Read side. The index is loaded eagerly and validated; payloads are read on
// demand with a CRC check. Each load opens its own stream, so concurrent
// readers are safe.
class FeatureStore {
 public:
  explicit FeatureStore(std::filesystem::path p);

  std::vector<std::string> sample_ids() const;
  bool contains(const std::string& sample_id) const;
  FeatureRecord load(const std::string& sample_id) const;

 private:
  struct IndexEntry {
    FeatureLayout layout;
    std::vector<uint32_t> shape;
    uint64_t offset;
    uint64_t bytes;
    uint32_t crc;
  };
  std::filesystem::path path_;
  std::vector<std::pair<std::string, IndexEntry>> index_;
};

}  // namespace aubench
