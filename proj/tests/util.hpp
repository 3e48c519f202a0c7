#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "dimer/quiver.hpp"

inline std::string data_path(const std::string& name) { return std::string(DIMER_DATA_DIR) + "/" + name; }

inline dimer::Quiver load_quiver(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream s;
  s << in.rdbuf();
  return dimer::parse_quiver(s.str());
}
