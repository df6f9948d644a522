#pragma once

/// @file permutation.hpp
/// Permutations in one-line notation and the weak order on S_n.
///
/// Values and positions are 1-indexed. Inversions are recorded as value
/// pairs (b, a) with b > a and b appearing before a.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcalg {

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);
  /// The longest element n(n-1)...1.
  static Permutation longest(int n);
  /// Compact digit string such as "2537146" (n <= 9); "" is the empty one.
  static Permutation parse(std::string_view digits);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// Value at 1-indexed position i.
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const noexcept { return values_; }

  Permutation inverse() const;
  /// Composition (this o other): position i maps to this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// Copy with positions i and i+1 exchanged.
  Permutation swap_adjacent(int i) const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  /// Graded order: size first, then one-line notation lexicographically.
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  std::vector<int> values_;
};

/// Square bit matrix over value pairs; contains(b, a) for b > a.
class InversionPairSet {
 public:
  InversionPairSet() = default;
  explicit InversionPairSet(int n) : n_(n), bits_(static_cast<std::size_t>(n * n), false) {}

  int n() const noexcept { return n_; }
  bool contains(int b, int a) const { return bits_[index(b, a)]; }
  void insert(int b, int a) { bits_[index(b, a)] = true; }
  void erase(int b, int a) { bits_[index(b, a)] = false; }
  std::size_t count() const;
  /// Pairs (b, a) sorted by b then a.
  std::vector<std::pair<int, int>> pairs() const;

  bool is_subset_of(const InversionPairSet& other) const;
  bool operator==(const InversionPairSet&) const = default;

 private:
  std::size_t index(int b, int a) const {
    return static_cast<std::size_t>((b - 1) * n_ + (a - 1));
  }
  int n_ = 0;
  std::vector<bool> bits_;
};

InversionPairSet inversions(const Permutation& sigma);

/// True iff both the set and its complement within all pairs are transitively
/// closed, i.e. the set is inv(sigma) for a unique sigma.
bool is_inversion_set(const InversionPairSet& pairs);
/// The permutation with the given inversion set; throws InvalidInput if none.
Permutation from_inversions(const InversionPairSet& pairs);

bool weak_leq(const Permutation& sigma, const Permutation& tau);
Permutation weak_join(const Permutation& sigma, const Permutation& tau);
Permutation weak_meet(const Permutation& sigma, const Permutation& tau);

/// Upward covers, in the order of the swapped position.
std::vector<Permutation> cover_relations(const Permutation& sigma);
/// Downward covers, in the order of the swapped position.
std::vector<Permutation> lower_covers(const Permutation& sigma);
/// All sigma with mu <= sigma <= nu, ascending.
std::vector<Permutation> interval(const Permutation& mu, const Permutation& nu);

std::vector<int> descents(const Permutation& sigma);
std::vector<int> ascents(const Permutation& sigma);

/// The join-irreducible lambda(sigma, i) at a descent i.
Permutation join_irreducible(const Permutation& sigma, int i);
/// The meet-irreducible at an ascent i, via conjugation by the longest element.
Permutation meet_irreducible(const Permutation& sigma, int i);

/// Standardization of an arbitrary word of distinct integers.
Permutation standardize(const std::vector<int>& word);
/// Keep the entries at positions in R, then standardize.
Permutation std_pos(const Permutation& rho, const std::vector<int>& positions);
/// Keep the entries with values in R, then standardize.
Permutation std_val(const Permutation& rho, const std::vector<int>& values);

/// Ascending lists; both have binomial(m+n, m) elements.
std::vector<Permutation> shifted_shuffle(const Permutation& sigma, const Permutation& tau);
std::vector<Permutation> convolution(const Permutation& sigma, const Permutation& tau);

/// sigma followed by tau shifted up by |sigma|.
Permutation backslash(const Permutation& sigma, const Permutation& tau);
/// tau shifted up by |sigma|, followed by sigma.
Permutation slash(const Permutation& tau, const Permutation& sigma);

/// All of S_n in ascending one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace arcalg
