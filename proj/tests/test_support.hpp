#pragma once

// Helpers shared by the test binaries.

#include <random>
#include <vector>

#include "arcalg/arc.hpp"
#include "arcalg/decoration.hpp"
#include "arcalg/permutation.hpp"

namespace arcalg::testing {

inline Permutation P(const char* s) { return Permutation::parse(s); }

inline Arc A(int a, int b, int n, std::initializer_list<int> above = {}, bool extended = false) {
  return Arc::make(a, b, n, PointSet(above), extended);
}

/// Forcing closure of a few random arcs of A_n.
inline ArcIdeal random_ideal(int n, Rng& rng, int max_generators = 3) {
  ArcSet all = all_arcs(n);
  ArcSet gens;
  if (!all.empty()) {
    int count = uniform_int(rng, 0, max_generators);
    for (int g = 0; g < count; ++g) gens.insert(all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))]);
  }
  return ArcIdeal::closure_of(n, gens);
}

inline Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[uniform_int(rng, 0, i)]);
  return Permutation(v);
}

}  // namespace arcalg::testing
