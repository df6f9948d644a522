#pragma once

/// @file arc.hpp
/// Arcs, extended arcs, noncrossing arc diagrams and forcing-closed arc ideals.
///
/// An arc (a, b, n, S) is an x-monotone curve between points a < b of
/// {1, ..., n} passing above exactly the interior points in S. Extended arcs
/// may also start at 0 or end at n + 1.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace arcalg {

/// Subset of {0, ..., 31} stored as a bitmask. Ordered as sorted lists.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t mask) : mask_(mask) {}
  PointSet(std::initializer_list<int> points);
  static PointSet from_vector(const std::vector<int>& points);
  /// {lo, ..., hi}; empty if lo > hi.
  static PointSet range(int lo, int hi);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int p) const noexcept {
    return p >= 0 && p < 32 && ((mask_ >> p) & 1U) != 0;
  }
  int size() const noexcept { return std::popcount(mask_); }
  std::vector<int> elements() const;

  void insert(int p);
  void erase(int p) { mask_ &= ~(1U << p); }

  PointSet operator|(PointSet o) const { return PointSet(mask_ | o.mask_); }
  PointSet operator&(PointSet o) const { return PointSet(mask_ & o.mask_); }
  PointSet minus(PointSet o) const { return PointSet(mask_ & ~o.mask_); }
  /// Every point translated by d (d may be negative).
  PointSet shifted(int d) const;
  bool is_subset_of(PointSet o) const { return (mask_ & ~o.mask_) == 0; }

  bool operator==(const PointSet&) const = default;
  std::strong_ordering operator<=>(const PointSet& other) const;

 private:
  std::uint32_t mask_ = 0;
};

/// Largest ground size supported by the PointSet representation.
inline constexpr int kMaxGroundSize = 30;

struct Arc {
  int a = 0;
  int b = 0;
  int n = 0;
  PointSet above;

  /// Throws InvalidInput unless 1 <= a < b <= n (or 0 <= a < b <= n+1 when
  /// extended) and above lies in ]a, b[ intersected with [n].
  static Arc make(int a, int b, int n, PointSet above, bool extended = false);

  bool is_strict() const noexcept { return a >= 1 && b <= n; }
  bool is_initial() const noexcept { return a == 0; }
  bool is_terminal() const noexcept { return b == n + 1; }
  /// Interior points ]a, b[ restricted to [n].
  PointSet interior() const;
  PointSet below() const { return interior().minus(above); }

  std::string to_string() const;

  bool operator==(const Arc&) const = default;
  /// Canonical order: n, a, b, then above as a sorted list.
  std::strong_ordering operator<=>(const Arc& other) const;
};

/// Sorted duplicate-free arc collection.
class ArcSet {
 public:
  ArcSet() = default;
  ArcSet(std::vector<Arc> arcs);  // NOLINT: implicit on purpose
  ArcSet(std::initializer_list<Arc> arcs) : ArcSet(std::vector<Arc>(arcs)) {}

  bool contains(const Arc& arc) const;
  std::size_t size() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return arcs_.empty(); }
  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& operator[](std::size_t i) const { return arcs_[i]; }

  void insert(const Arc& arc);
  ArcSet unite(const ArcSet& other) const;
  ArcSet intersect(const ArcSet& other) const;
  ArcSet minus(const ArcSet& other) const;
  bool is_subset_of(const ArcSet& other) const;

  bool operator==(const ArcSet&) const = default;
  auto operator<=>(const ArcSet& other) const { return arcs_ <=> other.arcs_; }

 private:
  std::vector<Arc> arcs_;
};

class NoncrossingArcDiagram {
 public:
  NoncrossingArcDiagram() = default;
  /// Throws InvalidInput unless the arcs are strict arcs on n, pairwise
  /// noncrossing, with distinct left and distinct right endpoints.
  NoncrossingArcDiagram(int n, ArcSet arcs);

  int n() const noexcept { return n_; }
  const ArcSet& arcs() const noexcept { return arcs_; }

  bool operator==(const NoncrossingArcDiagram&) const = default;
  std::strong_ordering operator<=>(const NoncrossingArcDiagram& other) const;

 private:
  int n_ = 0;
  ArcSet arcs_;
};

class ArcIdeal {
 public:
  ArcIdeal() = default;
  /// Throws SemanticError if the arcs are not closed under forcing.
  ArcIdeal(int n, ArcSet arcs, bool extended = false);
  /// Smallest forcing-closed superset.
  static ArcIdeal closure_of(int n, const ArcSet& arcs, bool extended = false);

  int n() const noexcept { return n_; }
  bool extended() const noexcept { return extended_; }
  const ArcSet& arcs() const noexcept { return arcs_; }
  bool contains(const Arc& arc) const { return arcs_.contains(arc); }
  std::size_t size() const noexcept { return arcs_.size(); }

  bool operator==(const ArcIdeal&) const = default;
  std::strong_ordering operator<=>(const ArcIdeal& other) const;

 private:
  int n_ = 0;
  bool extended_ = false;
  ArcSet arcs_;
};

ArcSet all_arcs(int n);
ArcSet all_extended_arcs(int n);
/// Arcs of A_n passing above every interior point.
ArcSet up_arcs(int n);
/// Arcs of A_n passing below every interior point.
ArcSet down_arcs(int n);

bool crosses(const Arc& alpha, const Arc& beta);
bool is_noncrossing_diagram(const ArcSet& arcs, int n);

/// True iff beta is the restriction of alpha to a subinterval.
bool forces(const Arc& alpha, const Arc& beta);
ArcSet forcing_closure(const ArcSet& arcs);
bool is_ideal(const ArcSet& arcs);
/// Restriction (b, c, n, S cap ]b,c[) of alpha to a <= b < c <= d.
Arc restrict_arc(const Arc& alpha, int b, int c);

/// All noncrossing diagrams built from strict arcs of I, canonical order.
std::vector<NoncrossingArcDiagram> enumerate_noncrossing_diagrams(const ArcIdeal& ideal);
std::vector<NoncrossingArcDiagram> enumerate_noncrossing_diagrams(const ArcSet& arcs, int n);

/// (a, b, m+n, S).
Arc augment(const Arc& alpha, int n);
/// (a+n, b+n, m+n, S+n).
Arc shift(const Arc& alpha, int n);
ArcSet augment(const ArcSet& arcs, int n);
ArcSet shift(const ArcSet& arcs, int n);

/// Mirror image (n+1-b, n+1-a, n, n+1-S).
Arc reflect(const Arc& alpha);
ArcSet reflect(const ArcSet& arcs);

/// Wall counts: N and S per point, E and W per point (horizontal walls sit
/// in the gap between c and c+1 and count min(E(c), W(c+1))).
struct WallSpec {
  int n = 0;
  std::vector<int> north, south, east, west;
  int k = 1;

  /// Throws InvalidInput on length mismatch, negative values or k < 1.
  void validate() const;
  /// Every function constant.
  static WallSpec uniform(int n, int north, int south, int horizontal, int k);

  bool operator==(const WallSpec&) const = default;
  auto operator<=>(const WallSpec&) const = default;
};

int wall_crossing_count(const Arc& alpha, const WallSpec& walls);
ArcIdeal bounded_crossing_ideal(const WallSpec& walls);

/// Named wall presets: full, down, up, tamari, boolean, rect, sash,
/// twist(k), descent(k). Throws InvalidInput on an unknown name.
WallSpec preset_walls(const std::string& name, int n);
std::vector<std::string> preset_names();

/// {(a, d, n, R cup S)} when b = c + 1, else nothing.
std::optional<Arc> juxtapose_arcs(const Arc& alpha, const Arc& beta);
ArcIdeal juxtapose_ideals(const ArcIdeal& left, const ArcIdeal& right);
/// juxtapose(I^{+n}, J^{->m}) for I on m and J on n.
ArcIdeal concat_ideals(const ArcIdeal& left, const ArcIdeal& right);
/// Ideal on |X| of merged paths through unselected points; X sorted in [p].
ArcIdeal select_ideal(const ArcIdeal& ideal, const std::vector<int>& selected);
/// Classical ideal of the arcs with 1 <= a and b <= n.
ArcIdeal strict_arcs(const ArcIdeal& ideal);

/// Extended arcs (a, b, n, S') with N(c) = 0 on S' and S(c) = 0 on the rest
/// of the interior.
ArcIdeal permutree_embed(const std::vector<int>& north, const std::vector<int>& south);

/// True iff all short arcs (i, i+1, n, {}) for 0 <= i <= n are present.
bool is_connected_extended(const ArcIdeal& ideal);

}  // namespace arcalg
