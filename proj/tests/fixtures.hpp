#pragma once

// The worked examples, built directly through the library API.

#include "tfr/moncomplex.hpp"

namespace fixtures {

using tfr::IntVector;
using tfr::make_vector;
using tfr::moncomplex::MonoidalComplex;
using tfr::polyhedral::cone_build;
using tfr::polyhedral::Fan;

inline IntVector v(std::initializer_list<long> e) { return make_vector(e); }

struct Cell {
  std::vector<IntVector> rays;
  std::vector<IntVector> gens;
};

inline MonoidalComplex make(const std::vector<Cell>& cells, bool stanley = false) {
  std::vector<tfr::polyhedral::Cone> cones;
  for (const auto& c : cells) cones.push_back(cone_build(c.rays));
  Fan f = tfr::polyhedral::fan_build(cones);
  std::map<std::size_t, std::vector<IntVector>> gens;
  for (std::size_t i = 0; i < cells.size(); ++i) gens[*f.find(cones[i])] = cells[i].gens;
  return tfr::moncomplex::build_complex(f, gens, stanley);
}

// octant boundary with A4 = (1,1,0) added on the A1A2 face
inline MonoidalComplex fix_a() {
  IntVector a1 = v({2, 0, 0}), a2 = v({0, 2, 0}), a3 = v({0, 0, 2}), a4 = v({1, 1, 0});
  return make({{{a1, a2}, {a1, a2, a4}}, {{a1, a3}, {a1, a3}}, {{a2, a3}, {a2, a3}}});
}

inline MonoidalComplex fix_b() {
  IntVector x = v({3, 0}), y = v({3, 1}), z = v({3, 3}), t = v({0, 1});
  return make({{{x, y, z}, {x, y, z}}, {{z, t}, {z, t}}});
}

inline MonoidalComplex fix_c() {
  IntVector x = v({1, 0}), y = v({0, 2}), t = v({1, 1}), z = v({-2, 2});
  return make({{{x, y}, {x, y, t}}, {{y, z}, {y, z}}});
}

// k[x,y]/(xy)
inline MonoidalComplex two_rays() { return make({{{v({1})}, {}}, {{v({-1})}, {}}}, true); }

inline MonoidalComplex octant_boundary() {
  return make({{{v({1, 0, 0}), v({0, 1, 0})}, {}}, {{v({1, 0, 0}), v({0, 0, 1})}, {}}, {{v({0, 1, 0}), v({0, 0, 1})}, {}}}, true);
}

}  // namespace fixtures
