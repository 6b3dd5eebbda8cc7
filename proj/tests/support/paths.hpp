#pragma once

#include <filesystem>
#include <string>

namespace selberg::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(SELBERG_DATA_DIR) / name;
}

}  // namespace selberg::testing
