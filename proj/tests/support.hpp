#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "suturant/diagram.hpp"

namespace support {

inline std::string corpus_path(const std::string& name) { return std::string(SUTURANT_CORPUS_DIR) + "/" + name + ".hd"; }

inline suturant::ExtendedDiagram load(const std::string& name) { return suturant::load_diagram(corpus_path(name)); }

inline std::vector<std::string> corpus_names() {
  return {"unknot",   "trefoil",  "lens_1_1", "lens_2_1", "lens_3_1",     "lens_4_1",     "lens_5_1",
          "lens_6_1", "lens_7_1", "s1xs2",    "hopf",     "figure_eight", "trefoil_moved"};
}

// SUTURANT_SEED overrides the default seed of every randomized test.
inline uint64_t seed(uint64_t fallback = 20261015) {
  const char* s = std::getenv("SUTURANT_SEED");
  return s && *s ? std::strtoull(s, nullptr, 10) : fallback;
}

}  // namespace support

#include <random>

namespace support {

// Combinatorial diagram with d closed alphas, d closed betas and one beta arc; no surface behind it.
inline suturant::ExtendedDiagram random_diagram(std::mt19937_64& rng, int d, int per_alpha) {
  using namespace suturant;
  ExtendedDiagram g;
  g.name = "random";
  for (int i = 0; i < d; ++i) g.curves.push_back({"a" + std::to_string(i + 1), Family::Alpha, Topology::Closed, {}});
  for (int i = 0; i < d; ++i) g.curves.push_back({"b" + std::to_string(i + 1), Family::Beta, Topology::Closed, {}});
  g.curves.push_back({"w", Family::Beta, Topology::Arc, {}});
  std::uniform_int_distribution<int> beta(0, d), coin(0, 1);
  int k = 0;
  for (int i = 0; i < d; ++i) {
    Curve& a = g.curves[i];
    for (int t = 0; t < per_alpha; ++t) {
      int j = t < d ? (i + t) % d : beta(rng);
      std::string b = j == d ? "w" : "b" + std::to_string(j + 1);
      std::string id = "x" + std::to_string(++k);
      g.crossings.push_back({id, a.id, b, coin(rng) ? 1 : -1});
      a.order.push_back(id);
    }
    std::shuffle(a.order.begin(), a.order.end(), rng);
  }
  for (const auto& x : g.crossings) g.curve(x.beta).order.push_back(x.id);
  for (auto& c : g.curves)
    if (c.family == Family::Beta) std::shuffle(c.order.begin(), c.order.end(), rng);
  return g;
}

}  // namespace support
