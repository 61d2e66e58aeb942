#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covg/arrangement.hpp"
#include "covg/fixtures.hpp"

namespace covg::testing {

struct NamedCom {
  std::string name;
  COM com;
};

/// figure1, figure1-rectangle and braid n = 1..4.
inline std::vector<NamedCom> corpus() {
  std::vector<NamedCom> out;
  out.push_back({"figure1", fixture("figure1")});
  out.push_back({"figure1-rectangle", fixture("figure1-rectangle")});
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"braid" + std::to_string(n), braid_com(n)});
  return out;
}

inline std::vector<std::string> strings(const std::vector<SignedVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace covg::testing
