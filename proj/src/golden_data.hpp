#pragma once

// Table of golden files generated at configure time from data/golden.

#include <cstddef>

namespace fourfold::detail {

struct GoldenFile {
  const char* name;  // file stem, e.g. "families"
  const char* text;
};

extern const GoldenFile kGoldenFiles[];
extern const std::size_t kGoldenFileCount;

}  // namespace fourfold::detail
