#pragma once

#include <string>

#include "z2cover/bdfile.hpp"

namespace z2cover::testing {

inline std::string data_path(const std::string& name) {
  return std::string(Z2COVER_DATA_DIR) + "/" + name;
}

inline BuildingData load_construction(int which) {
  return load_bd_file(data_path("construction" + std::to_string(which) + ".bd")).bd;
}

}  // namespace z2cover::testing
