#pragma once

#include <string>

#include "nomcode/data_model.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(NOMCODE_DATA_DIR) + "/" + name;
}

inline nomcode::Dataset cars() {
  return nomcode::load_csv(data_path("cars.csv"),
                           nomcode::load_schema(data_path("cars.schema.json")));
}

}  // namespace fixtures
