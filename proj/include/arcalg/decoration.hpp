#pragma once

/// @file decoration.hpp
/// Decoration sets (graded sets with concatenation and selection) and
/// conservative maps from decorations to arc ideals.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "arcalg/arc.hpp"

namespace arcalg {

class Decoration;

struct WordDecoration {
  std::string letters;
  bool operator==(const WordDecoration&) const = default;
  auto operator<=>(const WordDecoration&) const = default;
};

struct WallsDecoration {
  WallSpec walls;
  bool operator==(const WallsDecoration&) const = default;
  auto operator<=>(const WallsDecoration&) const = default;
};

struct ExtIdealDecoration {
  ArcIdeal ideal;  // extended
  bool operator==(const ExtIdealDecoration&) const = default;
  auto operator<=>(const ExtIdealDecoration&) const = default;
};

struct PairDecoration {
  std::shared_ptr<const Decoration> left;
  std::shared_ptr<const Decoration> right;
  bool operator==(const PairDecoration& other) const;
  std::strong_ordering operator<=>(const PairDecoration& other) const;
};

enum class DecorationKind { kWord, kWalls, kExtIdeal, kPair };

/// Immutable decoration value; equality and order are structural.
class Decoration {
 public:
  using Value = std::variant<WordDecoration, WallsDecoration, ExtIdealDecoration, PairDecoration>;

  Decoration() : value_(WordDecoration{}) {}
  static Decoration word(std::string letters);
  /// Validates the wall counts.
  static Decoration walls(WallSpec walls);
  /// Requires an extended ideal.
  static Decoration ext_ideal(ArcIdeal ideal);
  /// Requires equal sizes.
  static Decoration pair(Decoration left, Decoration right);

  int size() const;
  DecorationKind kind() const { return static_cast<DecorationKind>(value_.index()); }
  const Value& value() const noexcept { return value_; }

  const WordDecoration* as_word() const { return std::get_if<WordDecoration>(&value_); }
  const WallsDecoration* as_walls() const { return std::get_if<WallsDecoration>(&value_); }
  const ExtIdealDecoration* as_ext_ideal() const { return std::get_if<ExtIdealDecoration>(&value_); }
  const PairDecoration* as_pair() const { return std::get_if<PairDecoration>(&value_); }

  /// "word", "walls", "extideal", or "pair(L,R)"; equal tags concatenate.
  std::string tag() const;
  std::string to_string() const;

  bool operator==(const Decoration& other) const { return value_ == other.value_; }
  std::strong_ordering operator<=>(const Decoration& other) const;

 private:
  explicit Decoration(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// Concatenation; throws SemanticError on mismatched kinds (or crossing
/// bounds for walls).
Decoration concat(const Decoration& x, const Decoration& y);
/// Selection at the sorted positions R of [p]; throws InvalidInput if R is
/// out of range.
Decoration select(const Decoration& z, const std::vector<int>& positions);

/// Size-n unit-like decoration used to decorate plain permutations: the word
/// of n bullets.
Decoration trivial_decoration(int n);

// ------------------------------------------------------- conservative maps

class ConservativeMap {
 public:
  enum class Kind { kFull, kDown, kPreset, kWalls, kStrict, kIntersect, kRestrict };

  static ConservativeMap full();
  static ConservativeMap down();
  /// Ignores the decoration and returns the named preset ideal of its size.
  static ConservativeMap preset(std::string name);
  /// Bounded-crossing ideal of a walls decoration.
  static ConservativeMap walls();
  /// Strict arcs of an extended-ideal decoration.
  static ConservativeMap strict();
  /// Intersection of two maps on a pair decoration.
  static ConservativeMap intersect(ConservativeMap left, ConservativeMap right);
  /// Delegates after checking a named predicate: "uniform-walls",
  /// "connected", or "letters:<alphabet>".
  static ConservativeMap restrict(ConservativeMap inner, std::string predicate);

  Kind kind() const noexcept { return kind_; }
  const std::string& parameter() const noexcept { return parameter_; }
  const std::vector<ConservativeMap>& children() const noexcept { return children_; }

  /// Canonical text form, e.g. "intersect(walls,preset:tamari)".
  const std::string& tag() const noexcept { return tag_; }

  bool operator==(const ConservativeMap& o) const { return tag_ == o.tag_; }
  std::strong_ordering operator<=>(const ConservativeMap& o) const { return tag_ <=> o.tag_; }

 private:
  static ConservativeMap make(Kind kind, std::string parameter, std::vector<ConservativeMap> children);

  Kind kind_ = Kind::kFull;
  std::string parameter_;
  std::vector<ConservativeMap> children_;
  std::string tag_ = "full";
};

/// Whether the restriction predicate holds for a decoration.
bool satisfies_predicate(const std::string& predicate, const Decoration& x);

/// The arc ideal of a decoration; throws SemanticError when inapplicable.
ArcIdeal iota(const ConservativeMap& map, const Decoration& x);

// --------------------------------------------------------------- checkers

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementation.
int uniform_int(Rng& rng, int lo, int hi);

/// A family of decorations to check, with the operations under test.
struct DecorationInstance {
  std::string name;
  /// All decorations of a size, or nullopt when that set is too large.
  std::function<std::optional<std::vector<Decoration>>(int)> enumerate;
  std::function<Decoration(int, Rng&)> sample;
  std::function<Decoration(const Decoration&, const Decoration&)> concat = arcalg::concat;
  std::function<Decoration(const Decoration&, const std::vector<int>&)> select = arcalg::select;
};

/// Words over the given alphabet.
DecorationInstance word_instance(const std::string& alphabet);
/// Walls with N, S in [0, max_value], E = W = horizontal everywhere and
/// the given crossing bound.
DecorationInstance walls_instance(int max_value, int k, int horizontal);
/// Walls with independent per-point E and W (fails the axioms; kept as a
/// negative instance).
DecorationInstance walls_general_instance(int max_value, int k);
/// Extended ideals containing every short arc (i, i+1, n, {}).
DecorationInstance extideal_instance();
/// Arbitrary extended ideals (fails compatibility; negative instance).
DecorationInstance extideal_general_instance();
DecorationInstance pair_instance(const DecorationInstance& left, const DecorationInstance& right);
/// Parses "words:<alphabet>", "walls[:max[:k[:h]]]", "walls-general[:max[:k]]",
/// "extideal", "extideal-general" and "pair:<left>+<right>".
DecorationInstance instance_from_spec(const std::string& spec);

/// Seeded random extended ideal on n; connected ones contain all short arcs.
ArcIdeal random_extended_ideal(int n, Rng& rng, bool connected);

struct CheckOptions {
  int max_size = 4;
  std::uint64_t seed = 1;
  /// Randomized trials per axiom when exhaustive search is too large.
  int trials = 2000;
  /// Exhaustive search is used when the case count is at most this.
  std::uint64_t exhaustive_limit = 1000000;
  int jobs = 1;
};

struct CheckReport {
  std::string check;
  bool pass = true;
  std::uint64_t cases = 0;
  bool exhaustive = true;
  /// Description of the first failure.
  std::string witness;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  /// Pass iff both pass; keeps the first witness.
  void merge(const CheckReport& other);
};

/// Associativity, select-of-select and concat/select compatibility.
CheckReport check_decoration_axioms(const DecorationInstance& instance, const CheckOptions& options);

/// Map signature used by check_conservative; returns a raw arc set so that
/// non-ideal mutants can be tested.
using IotaFunction = std::function<ArcSet(const Decoration&)>;

/// Ideal-valuedness and conditions (i) and (ii) of conservativity.
CheckReport check_conservative(const IotaFunction& map, const DecorationInstance& instance,
                               const CheckOptions& options);
CheckReport check_conservative(const ConservativeMap& map, const DecorationInstance& instance,
                               const CheckOptions& options);

/// n |-> ideal on n.
using IdealFamily = std::function<ArcSet(int)>;

/// Conditions under which a family of congruences gives a Hopf subalgebra
/// with one-letter decorations: augmentation/shift inclusion and restriction.
CheckReport check_hopf_family(const IdealFamily& family, int max_n);

}  // namespace arcalg
