#pragma once

/// @file diagram_maps.hpp
/// Bijections between permutations and noncrossing arc diagrams, the
/// surjections eta onto the diagrams of an arc ideal, and the projections
/// pi onto the bottom and top elements of congruence classes.

#include <compare>
#include <string>
#include <vector>

#include "arcalg/arc.hpp"
#include "arcalg/permutation.hpp"

namespace arcalg {

struct BoxPair {
  int i = 0;
  int j = 0;
  bool operator==(const BoxPair&) const = default;
  auto operator<=>(const BoxPair&) const = default;
};

/// Arc of an inversion pair (i, j): (s_j, s_i, n, {s_k : k < i, s_k in ]s_j, s_i[}).
Arc arc_down(int i, int j, const Permutation& sigma);
/// Arc of a non-inversion pair (i, j): (s_i, s_j, n, {s_k : k < i, s_k in ]s_i, s_j[}).
Arc arc_up(int i, int j, const Permutation& sigma);

NoncrossingArcDiagram delta_down(const Permutation& sigma);
NoncrossingArcDiagram delta_up(const Permutation& sigma);
/// Inverses of delta_down and delta_up; throw InvalidInput on a cyclic
/// component priority.
Permutation delta_down_inv(const NoncrossingArcDiagram& diagram);
Permutation delta_up_inv(const NoncrossingArcDiagram& diagram);

/// Inversion pairs with an empty rectangle.
std::vector<BoxPair> box_down(const Permutation& sigma);
/// Non-inversion pairs with an empty rectangle.
std::vector<BoxPair> box_up(const Permutation& sigma);
/// Maximal pairs, in the nesting order, among those whose arc lies in I.
std::vector<BoxPair> box_down_I(const Permutation& sigma, const ArcIdeal& ideal);
std::vector<BoxPair> box_up_I(const Permutation& sigma, const ArcIdeal& ideal);

NoncrossingArcDiagram eta_down(const ArcIdeal& ideal, const Permutation& sigma);
NoncrossingArcDiagram eta_up(const ArcIdeal& ideal, const Permutation& sigma);

enum class RewritePolicy { kLeftmost, kRightmost };

/// Swap descents whose arc is outside the set until none is left. Accepts
/// any arc set; only ideals give well-defined projections.
Permutation pi_down(const ArcSet& arcs, const Permutation& sigma,
                    RewritePolicy policy = RewritePolicy::kLeftmost);
Permutation pi_up(const ArcSet& arcs, const Permutation& sigma,
                  RewritePolicy policy = RewritePolicy::kLeftmost);
Permutation pi_down(const ArcIdeal& ideal, const Permutation& sigma,
                    RewritePolicy policy = RewritePolicy::kLeftmost);
Permutation pi_up(const ArcIdeal& ideal, const Permutation& sigma,
                  RewritePolicy policy = RewritePolicy::kLeftmost);

struct CongruenceClass {
  NoncrossingArcDiagram diagram;
  Permutation bottom;
  Permutation top;
  std::vector<Permutation> members;  // ascending
};

/// Classes of S_n keyed by eta_down, in canonical diagram order.
std::vector<CongruenceClass> congruence_classes(const ArcIdeal& ideal);

struct QuotientPoset {
  std::vector<CongruenceClass> classes;
  /// Hasse diagram as index pairs (lower, upper).
  std::vector<std::pair<int, int>> covers;
};

QuotientPoset quotient_poset(const ArcIdeal& ideal);

struct CongruenceReport {
  bool classes_are_intervals = true;
  bool projections_order_preserving = true;
  bool respects_join = true;
  bool respects_meet = true;
  std::size_t class_count = 0;
  /// First few violations, human readable.
  std::vector<std::string> witnesses;

  bool pass() const {
    return classes_are_intervals && projections_order_preserving && respects_join && respects_meet;
  }
};

/// Tests whether the fibers of eta_down over `arcs` form a lattice
/// congruence of the weak order on S_n. Any arc set is accepted; sets that
/// are not forcing-closed are expected to fail.
CongruenceReport is_lattice_congruence(const ArcSet& arcs, int n);

}  // namespace arcalg
