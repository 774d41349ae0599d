#pragma once

#include <string>
#include <vector>

namespace gpd {

// Outcome of one verified identity family: how many instances were checked
// exactly and which ones failed. Serialized into the report JSON.
struct Certificate {
  std::string name;
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& witness) {
    ++checks;
    if (!cond) {
      pass = false;
      if (witnesses.size() < 32) witnesses.push_back(witness);
    }
  }
};

}  // namespace gpd
