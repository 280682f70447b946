#include "aubench/checksum.hpp"

#include <cstdio>

namespace aubench {

std::string hex_u64(uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace aubench
