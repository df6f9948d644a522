#pragma once

/// @file hopf.hpp
/// Free modules over decorated permutations (F basis) and decorated
/// noncrossing arc diagrams (P basis), with their products and coproducts.

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "arcalg/arc.hpp"
#include "arcalg/decoration.hpp"
#include "arcalg/permutation.hpp"

namespace arcalg {

struct DecoratedPermutation {
  Permutation perm;
  Decoration dec;

  DecoratedPermutation() = default;
  /// Throws InvalidInput on a size mismatch.
  DecoratedPermutation(Permutation perm, Decoration dec);

  int size() const { return perm.size(); }
  std::string to_string() const;

  bool operator==(const DecoratedPermutation&) const = default;
  std::strong_ordering operator<=>(const DecoratedPermutation& other) const;
};

struct DecoratedDiagram {
  NoncrossingArcDiagram diagram;
  Decoration dec;
  ConservativeMap map;

  DecoratedDiagram() = default;
  /// Throws InvalidInput on a size mismatch and SemanticError if an arc lies
  /// outside iota(map, dec).
  DecoratedDiagram(NoncrossingArcDiagram diagram, Decoration dec, ConservativeMap map);

  int size() const { return diagram.n(); }
  std::string to_string() const;

  bool operator==(const DecoratedDiagram&) const = default;
  std::strong_ordering operator<=>(const DecoratedDiagram& other) const;
};

template <class Key>
struct Tensor {
  Key left;
  Key right;
  bool operator==(const Tensor&) const = default;
  auto operator<=>(const Tensor&) const = default;
};

/// Finite integer combination of basis keys; zero coefficients are dropped
/// and iteration follows the key order.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, long long>;

  LinComb() = default;
  static LinComb single(Key key, long long coeff = 1) {
    LinComb c;
    c.add(std::move(key), coeff);
    return c;
  }

  void add(const Key& key, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }
  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb scaled(long long factor) const {
    LinComb out;
    for (const auto& [k, c] : terms_) out.add(k, c * factor);
    return out;
  }
  long long coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

  bool operator==(const LinComb&) const = default;

 private:
  Terms terms_;
};

template <class Key>
using TensorComb = LinComb<Tensor<Key>>;

using FElement = LinComb<DecoratedPermutation>;
using PElement = LinComb<DecoratedDiagram>;
using FTensor = TensorComb<DecoratedPermutation>;
using PTensor = TensorComb<DecoratedDiagram>;

/// Product and coproduct on basis elements, extended (bi)linearly below.
template <class Key>
struct AlgebraOps {
  std::function<LinComb<Key>(const Key&, const Key&)> product;
  std::function<TensorComb<Key>(const Key&)> coproduct;
};

template <class Key>
LinComb<Key> multiply(const AlgebraOps<Key>& ops, const LinComb<Key>& x, const LinComb<Key>& y) {
  LinComb<Key> out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out += ops.product(a, b).scaled(ca * cb);
  }
  return out;
}

template <class Key>
TensorComb<Key> comultiply(const AlgebraOps<Key>& ops, const LinComb<Key>& x) {
  TensorComb<Key> out;
  for (const auto& [a, ca] : x) out += ops.coproduct(a).scaled(ca);
  return out;
}

/// (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
template <class Key>
TensorComb<Key> multiply_tensors(const AlgebraOps<Key>& ops, const TensorComb<Key>& x,
                                 const TensorComb<Key>& y) {
  TensorComb<Key> out;
  for (const auto& [s, cs] : x) {
    for (const auto& [t, ct] : y) {
      LinComb<Key> left = ops.product(s.left, t.left);
      LinComb<Key> right = ops.product(s.right, t.right);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) out.add(Tensor<Key>{l, r}, cs * ct * cl * cr);
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------- F basis

LinComb<DecoratedPermutation> product_F(const DecoratedPermutation& a, const DecoratedPermutation& b);
FElement product_F(const FElement& x, const FElement& y);
/// Positional deconcatenation; each side is decorated by the selection of
/// the values it contains.
FTensor coproduct_F(const DecoratedPermutation& a);
FTensor coproduct_F(const FElement& x);
AlgebraOps<DecoratedPermutation> f_basis_ops();
/// F at the empty permutation with the given size-0 decoration.
FElement unit_F(const Decoration& empty);
/// Sum of the degree-0 coefficients.
long long counit(const FElement& x);

// ----------------------------------------------------------------- P basis

/// Support of P_(D, X): the interval [delta_down_inv(D), pi_up(delta_down_inv(D))].
std::vector<Permutation> fiber(const DecoratedDiagram& d);
FElement P_to_F(const DecoratedDiagram& d);
FElement P_to_F(const PElement& x);
/// Regroups by fibers of eta; throws NotInSubspace if some fiber is not
/// uniformly covered.
PElement F_to_P(const FElement& x, const ConservativeMap& map);
PTensor F_to_P(const FTensor& x, const ConservativeMap& map);

/// Throw SemanticError on mismatched maps or decoration kinds.
PElement product_P(const DecoratedDiagram& d, const DecoratedDiagram& e);
PElement product_P(const PElement& x, const PElement& y);
PTensor coproduct_P(const DecoratedDiagram& d);
PTensor coproduct_P(const PElement& x);
AlgebraOps<DecoratedDiagram> p_basis_ops();
/// The product via the interval between mu\lambda and omega/nu.
PElement product_P_interval(const DecoratedDiagram& d, const DecoratedDiagram& e);

/// All P basis keys with decoration x under the map.
std::vector<DecoratedDiagram> p_basis(const Decoration& x, const ConservativeMap& map);
/// All F basis keys with decoration x.
std::vector<DecoratedPermutation> f_basis(const Decoration& x);

// ---------------------------------------------------------------- checkers

struct HopfCheckOptions {
  int max_total = 5;
  int jobs = 1;
};

/// Delta(a b) = Delta(a) Delta(b) on all given basis pairs of total degree
/// at most max_total; `by_size[n]` lists the basis keys of degree n.
template <class Key>
CheckReport check_compatibility(const std::vector<std::vector<Key>>& by_size,
                                const AlgebraOps<Key>& ops, const HopfCheckOptions& options);
template <class Key>
CheckReport check_associativity(const std::vector<std::vector<Key>>& by_size,
                                const AlgebraOps<Key>& ops, const HopfCheckOptions& options);
template <class Key>
CheckReport check_coassociativity(const std::vector<std::vector<Key>>& by_size,
                                  const AlgebraOps<Key>& ops, const HopfCheckOptions& options);

/// Basis keys by degree for the given decorations (F basis when map is absent).
std::vector<std::vector<DecoratedPermutation>> f_basis_by_size(
    const std::vector<std::vector<Decoration>>& decorations);
std::vector<std::vector<DecoratedDiagram>> p_basis_by_size(
    const std::vector<std::vector<Decoration>>& decorations, const ConservativeMap& map);

/// Decorations of each size 0..max_size: the whole instance when it is
/// enumerable, otherwise `samples` seeded random ones.
std::vector<std::vector<Decoration>> decorations_by_size(const DecorationInstance& instance,
                                                         int max_size, int samples,
                                                         std::uint64_t seed);

/// Compatibility in the F basis, or in the P basis of `map` when given.
CheckReport check_hopf_compatibility(const std::vector<std::vector<Decoration>>& decorations,
                                     const std::optional<ConservativeMap>& map,
                                     const HopfCheckOptions& options);

}  // namespace arcalg
