#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powerbetti/monomial.hpp"

namespace testing {

inline oracle::Mono mono(const powerbetti::ExponentVector& v) { return {v.entries().begin(), v.entries().end()}; }

inline std::vector<oracle::Mono> gens(const powerbetti::MonomialIdeal& I) {
  std::vector<oracle::Mono> out;
  for (const auto& g : I.generators()) out.push_back(mono(g));
  return out;
}

inline powerbetti::MonomialIdeal load(const std::string& name) {
  return powerbetti::load_ideal_file(oracle::fixture(name));
}

// Every *.ideal fixture, sorted by file name.
inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(POWERBETTI_FIXTURES)) {
    if (e.path().extension() == ".ideal") out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Fixtures cheap enough to profile up to k = n + 6. The projective-plane
// ideal is a characteristic probe; its powers grow too fast for that.
inline std::vector<std::string> profiled_fixture_names() {
  auto out = fixture_names();
  std::erase(out, std::string("rp2.ideal"));
  return out;
}

}  // namespace testing
