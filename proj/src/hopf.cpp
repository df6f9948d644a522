#include "arcalg/hopf.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <tuple>

#include "arcalg/diagram_maps.hpp"
#include "arcalg/error.hpp"

namespace arcalg {

DecoratedPermutation::DecoratedPermutation(Permutation p, Decoration d)
    : perm(std::move(p)), dec(std::move(d)) {
  if (perm.size() != dec.size()) {
    throw InvalidInput("permutation of size " + std::to_string(perm.size()) +
                       " with decoration of size " + std::to_string(dec.size()));
  }
}

std::string DecoratedPermutation::to_string() const {
  return "F(" + perm.to_string() + "," + dec.to_string() + ")";
}

std::strong_ordering DecoratedPermutation::operator<=>(const DecoratedPermutation& other) const {
  if (auto c = perm <=> other.perm; c != 0) return c;
  return dec <=> other.dec;
}

DecoratedDiagram::DecoratedDiagram(NoncrossingArcDiagram d, Decoration x, ConservativeMap m)
    : diagram(std::move(d)), dec(std::move(x)), map(std::move(m)) {
  if (diagram.n() != dec.size()) {
    throw InvalidInput("diagram of size " + std::to_string(diagram.n()) +
                       " with decoration of size " + std::to_string(dec.size()));
  }
  ArcIdeal ideal = iota(map, dec);
  for (const Arc& arc : diagram.arcs()) {
    if (!ideal.contains(arc)) {
      throw SemanticError("arc " + arc.to_string() + " is not in the ideal of " + dec.to_string() +
                          " under " + map.tag());
    }
  }
}

std::string DecoratedDiagram::to_string() const {
  std::string s = "P({";
  bool first = true;
  for (const Arc& arc : diagram.arcs()) {
    if (!first) s += ',';
    s += arc.to_string();
    first = false;
  }
  return s + "}@" + std::to_string(diagram.n()) + "," + dec.to_string() + "," + map.tag() + ")";
}

std::strong_ordering DecoratedDiagram::operator<=>(const DecoratedDiagram& other) const {
  if (auto c = diagram <=> other.diagram; c != 0) return c;
  if (auto c = dec <=> other.dec; c != 0) return c;
  return map <=> other.map;
}

namespace {

std::string describe(const DecoratedPermutation& k) { return k.to_string(); }
std::string describe(const DecoratedDiagram& k) { return k.to_string(); }
template <class Key>
std::string describe(const Tensor<Key>& t) {
  return describe(t.left) + " (x) " + describe(t.right);
}
template <class Key>
std::string describe(const std::tuple<Key, Key, Key>& t) {
  return describe(std::get<0>(t)) + " (x) " + describe(std::get<1>(t)) + " (x) " +
         describe(std::get<2>(t));
}


}  // namespace

// ----------------------------------------------------------------- F basis

FElement product_F(const DecoratedPermutation& a, const DecoratedPermutation& b) {
  Decoration z = concat(a.dec, b.dec);
  FElement out;
  for (Permutation& rho : shifted_shuffle(a.perm, b.perm)) out.add({std::move(rho), z}, 1);
  return out;
}

FElement product_F(const FElement& x, const FElement& y) {
  return multiply(f_basis_ops(), x, y);
}

FTensor coproduct_F(const DecoratedPermutation& a) {
  const Permutation& rho = a.perm;
  int p = rho.size();
  FTensor out;
  for (int k = 0; k <= p; ++k) {
    std::vector<int> left_values, right_values;
    for (int i = 1; i <= k; ++i) left_values.push_back(rho(i));
    for (int i = k + 1; i <= p; ++i) right_values.push_back(rho(i));
    std::vector<int> left_sorted = left_values, right_sorted = right_values;
    std::sort(left_sorted.begin(), left_sorted.end());
    std::sort(right_sorted.begin(), right_sorted.end());
    DecoratedPermutation left(standardize(left_values), select(a.dec, left_sorted));
    DecoratedPermutation right(standardize(right_values), select(a.dec, right_sorted));
    out.add({std::move(left), std::move(right)}, 1);
  }
  return out;
}

FTensor coproduct_F(const FElement& x) { return comultiply(f_basis_ops(), x); }

AlgebraOps<DecoratedPermutation> f_basis_ops() {
  return {[](const DecoratedPermutation& a, const DecoratedPermutation& b) { return product_F(a, b); },
          [](const DecoratedPermutation& a) { return coproduct_F(a); }};
}

FElement unit_F(const Decoration& empty) {
  if (empty.size() != 0) throw InvalidInput("unit needs a size-0 decoration");
  return FElement::single({Permutation(), empty});
}

long long counit(const FElement& x) {
  long long total = 0;
  for (const auto& [k, c] : x) {
    if (k.size() == 0) total += c;
  }
  return total;
}

// ----------------------------------------------------------------- P basis

namespace {

std::vector<Permutation> fiber_in(const ArcIdeal& ideal, const NoncrossingArcDiagram& diagram) {
  Permutation bottom = delta_down_inv(diagram);
  return interval(bottom, pi_up(ideal, bottom));
}

// Memoizes iota within one computation.
class IdealCache {
 public:
  explicit IdealCache(const ConservativeMap& map) : map_(map) {}
  const ArcIdeal& get(const Decoration& x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, iota(map_, x)).first;
    return it->second;
  }

 private:
  const ConservativeMap& map_;
  std::map<Decoration, ArcIdeal> cache_;
};

}  // namespace

std::vector<Permutation> fiber(const DecoratedDiagram& d) {
  return fiber_in(iota(d.map, d.dec), d.diagram);
}

FElement P_to_F(const DecoratedDiagram& d) {
  FElement out;
  for (Permutation& sigma : fiber(d)) out.add({std::move(sigma), d.dec}, 1);
  return out;
}

FElement P_to_F(const PElement& x) {
  FElement out;
  for (const auto& [d, c] : x) out += P_to_F(d).scaled(c);
  return out;
}

PElement F_to_P(const FElement& x, const ConservativeMap& map) {
  IdealCache ideals(map);
  std::map<DecoratedDiagram, std::vector<std::pair<const DecoratedPermutation*, long long>>> groups;
  for (const auto& [k, c] : x) {
    const ArcIdeal& ideal = ideals.get(k.dec);
    groups[DecoratedDiagram(eta_down(ideal, k.perm), k.dec, map)].emplace_back(&k, c);
  }
  PElement out;
  for (const auto& [d, members] : groups) {
    std::vector<Permutation> f = fiber_in(ideals.get(d.dec), d.diagram);
    long long c = members.front().second;
    for (const auto& [k, ck] : members) {
      if (ck != c) {
        throw NotInSubspace("combination is not constant on a fiber",
                            "fiber of " + d.to_string() + ": " + members.front().first->to_string() +
                                " has coefficient " + std::to_string(c) + " but " + k->to_string() +
                                " has " + std::to_string(ck));
      }
    }
    if (members.size() != f.size()) {
      for (const Permutation& sigma : f) {
        DecoratedPermutation key(sigma, d.dec);
        if (x.coeff(key) == 0) {
          throw NotInSubspace("combination is not constant on a fiber",
                              "fiber of " + d.to_string() + ": " +
                                  members.front().first->to_string() + " has coefficient " +
                                  std::to_string(c) + " but " + key.to_string() + " is missing");
        }
      }
    }
    out.add(d, c);
  }
  return out;
}

PTensor F_to_P(const FTensor& x, const ConservativeMap& map) {
  IdealCache ideals(map);
  std::map<Tensor<DecoratedDiagram>, std::vector<std::pair<const Tensor<DecoratedPermutation>*, long long>>>
      groups;
  for (const auto& [t, c] : x) {
    DecoratedDiagram l(eta_down(ideals.get(t.left.dec), t.left.perm), t.left.dec, map);
    DecoratedDiagram r(eta_down(ideals.get(t.right.dec), t.right.perm), t.right.dec, map);
    groups[{std::move(l), std::move(r)}].emplace_back(&t, c);
  }
  PTensor out;
  for (const auto& [d, members] : groups) {
    std::size_t expected = fiber_in(ideals.get(d.left.dec), d.left.diagram).size() *
                           fiber_in(ideals.get(d.right.dec), d.right.diagram).size();
    long long c = members.front().second;
    for (const auto& [t, ct] : members) {
      if (ct != c) {
        throw NotInSubspace("tensor is not constant on a fiber product",
                            "fiber of " + describe(d) + ": " + describe(*members.front().first) +
                                " has coefficient " + std::to_string(c) + " but " + describe(*t) +
                                " has " + std::to_string(ct));
      }
    }
    if (members.size() != expected) {
      throw NotInSubspace("tensor is not constant on a fiber product",
                          "fiber of " + describe(d) + " has " + std::to_string(expected) +
                              " elements but only " + std::to_string(members.size()) +
                              " appear");
    }
    out.add(d, c);
  }
  return out;
}

namespace {

void require_same_map(const DecoratedDiagram& d, const DecoratedDiagram& e) {
  if (d.map != e.map) {
    throw SemanticError("cannot multiply P elements over maps " + d.map.tag() + " and " + e.map.tag());
  }
  if (d.dec.tag() != e.dec.tag()) {
    throw SemanticError("cannot multiply P elements with decorations " + d.dec.tag() + " and " +
                        e.dec.tag());
  }
}

}  // namespace

PElement product_P(const DecoratedDiagram& d, const DecoratedDiagram& e) {
  require_same_map(d, e);
  return F_to_P(product_F(P_to_F(d), P_to_F(e)), d.map);
}

PElement product_P(const PElement& x, const PElement& y) { return multiply(p_basis_ops(), x, y); }

PTensor coproduct_P(const DecoratedDiagram& d) { return F_to_P(coproduct_F(P_to_F(d)), d.map); }

PTensor coproduct_P(const PElement& x) { return comultiply(p_basis_ops(), x); }

AlgebraOps<DecoratedDiagram> p_basis_ops() {
  return {[](const DecoratedDiagram& a, const DecoratedDiagram& b) { return product_P(a, b); },
          [](const DecoratedDiagram& a) { return coproduct_P(a); }};
}

PElement product_P_interval(const DecoratedDiagram& d, const DecoratedDiagram& e) {
  require_same_map(d, e);
  Permutation mu = delta_down_inv(d.diagram);
  Permutation nu = pi_up(iota(d.map, d.dec), mu);
  Permutation lambda = delta_down_inv(e.diagram);
  Permutation omega = pi_up(iota(e.map, e.dec), lambda);
  Decoration z = concat(d.dec, e.dec);
  ArcIdeal ideal = iota(d.map, z);
  std::set<NoncrossingArcDiagram> diagrams;
  for (const Permutation& rho : interval(backslash(mu, lambda), slash(omega, nu))) {
    diagrams.insert(eta_down(ideal, rho));
  }
  PElement out;
  for (const NoncrossingArcDiagram& f : diagrams) out.add(DecoratedDiagram(f, z, d.map), 1);
  return out;
}

std::vector<DecoratedDiagram> p_basis(const Decoration& x, const ConservativeMap& map) {
  std::vector<DecoratedDiagram> out;
  for (NoncrossingArcDiagram& d : enumerate_noncrossing_diagrams(iota(map, x))) {
    out.emplace_back(std::move(d), x, map);
  }
  return out;
}

std::vector<DecoratedPermutation> f_basis(const Decoration& x) {
  std::vector<DecoratedPermutation> out;
  for (Permutation& p : all_permutations(x.size())) out.emplace_back(std::move(p), x);
  return out;
}

// ---------------------------------------------------------------- checkers

namespace {

// Evaluates `test(i)` for i < count on `jobs` threads; returns the witness of
// the smallest failing index.
template <class Test>
std::optional<std::string> first_failure(std::size_t count, int jobs, Test&& test) {
  std::vector<std::optional<std::string>> results(count);
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < count; i += stride) {
      try {
        results[i] = test(i);
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker, w, workers);
    for (std::thread& t : threads) t.join();
  }
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

template <class Key>
std::string first_difference(const LinComb<Key>& lhs, const LinComb<Key>& rhs) {
  LinComb<Key> diff = lhs;
  diff -= rhs;
  const auto& [k, c] = *diff.begin();
  return describe(k) + ": " + std::to_string(lhs.coeff(k)) + " vs " + std::to_string(rhs.coeff(k));
}

}  // namespace

template <class Key>
CheckReport check_compatibility(const std::vector<std::vector<Key>>& by_size,
                                const AlgebraOps<Key>& ops, const HopfCheckOptions& options) {
  CheckReport report;
  report.check = "hopf-compatibility";
  std::vector<std::pair<const Key*, const Key*>> pairs;
  int top = static_cast<int>(by_size.size()) - 1;
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= top && m + n <= options.max_total; ++n) {
      for (const Key& a : by_size[m]) {
        for (const Key& b : by_size[n]) pairs.emplace_back(&a, &b);
      }
    }
  }
  report.cases = pairs.size();
  auto failure = first_failure(pairs.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Key& a = *pairs[i].first;
    const Key& b = *pairs[i].second;
    TensorComb<Key> lhs = comultiply(ops, ops.product(a, b));
    TensorComb<Key> rhs = multiply_tensors(ops, ops.coproduct(a), ops.coproduct(b));
    if (lhs == rhs) return std::nullopt;
    return "a=" + describe(a) + " b=" + describe(b) + ": " + first_difference(lhs, rhs);
  });
  if (failure) report.fail(*failure);
  return report;
}

template <class Key>
CheckReport check_associativity(const std::vector<std::vector<Key>>& by_size,
                                const AlgebraOps<Key>& ops, const HopfCheckOptions& options) {
  CheckReport report;
  report.check = "associativity";
  std::vector<std::tuple<const Key*, const Key*, const Key*>> triples;
  int top = static_cast<int>(by_size.size()) - 1;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top && a + b <= options.max_total; ++b)
      for (int c = 0; c <= top && a + b + c <= options.max_total; ++c)
        for (const Key& x : by_size[a])
          for (const Key& y : by_size[b])
            for (const Key& z : by_size[c]) triples.emplace_back(&x, &y, &z);
  report.cases = triples.size();
  auto failure = first_failure(triples.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    auto [x, y, z] = triples[i];
    LinComb<Key> lhs = multiply(ops, ops.product(*x, *y), LinComb<Key>::single(*z));
    LinComb<Key> rhs = multiply(ops, LinComb<Key>::single(*x), ops.product(*y, *z));
    if (lhs == rhs) return std::nullopt;
    return "x=" + describe(*x) + " y=" + describe(*y) + " z=" + describe(*z) + ": " +
           first_difference(lhs, rhs);
  });
  if (failure) report.fail(*failure);
  return report;
}

template <class Key>
CheckReport check_coassociativity(const std::vector<std::vector<Key>>& by_size,
                                  const AlgebraOps<Key>& ops, const HopfCheckOptions& options) {
  CheckReport report;
  report.check = "coassociativity";
  std::vector<const Key*> keys;
  for (int n = 0; n < static_cast<int>(by_size.size()) && n <= options.max_total; ++n) {
    for (const Key& k : by_size[n]) keys.push_back(&k);
  }
  report.cases = keys.size();
  using Triple = std::tuple<Key, Key, Key>;
  auto failure = first_failure(keys.size(), options.jobs, [&](std::size_t i) -> std::optional<std::string> {
    TensorComb<Key> first = ops.coproduct(*keys[i]);
    LinComb<Triple> lhs, rhs;
    for (const auto& [t, c] : first) {
      for (const auto& [u, cu] : ops.coproduct(t.left)) lhs.add(Triple{u.left, u.right, t.right}, c * cu);
      for (const auto& [u, cu] : ops.coproduct(t.right)) rhs.add(Triple{t.left, u.left, u.right}, c * cu);
    }
    if (lhs == rhs) return std::nullopt;
    return "x=" + describe(*keys[i]) + ": " + first_difference(lhs, rhs);
  });
  if (failure) report.fail(*failure);
  return report;
}

template CheckReport check_compatibility(const std::vector<std::vector<DecoratedPermutation>>&,
                                         const AlgebraOps<DecoratedPermutation>&, const HopfCheckOptions&);
template CheckReport check_compatibility(const std::vector<std::vector<DecoratedDiagram>>&,
                                         const AlgebraOps<DecoratedDiagram>&, const HopfCheckOptions&);
template CheckReport check_associativity(const std::vector<std::vector<DecoratedPermutation>>&,
                                         const AlgebraOps<DecoratedPermutation>&, const HopfCheckOptions&);
template CheckReport check_associativity(const std::vector<std::vector<DecoratedDiagram>>&,
                                         const AlgebraOps<DecoratedDiagram>&, const HopfCheckOptions&);
template CheckReport check_coassociativity(const std::vector<std::vector<DecoratedPermutation>>&,
                                           const AlgebraOps<DecoratedPermutation>&, const HopfCheckOptions&);
template CheckReport check_coassociativity(const std::vector<std::vector<DecoratedDiagram>>&,
                                           const AlgebraOps<DecoratedDiagram>&, const HopfCheckOptions&);

std::vector<std::vector<DecoratedPermutation>> f_basis_by_size(
    const std::vector<std::vector<Decoration>>& decorations) {
  std::vector<std::vector<DecoratedPermutation>> out;
  for (const auto& decs : decorations) {
    out.emplace_back();
    for (const Decoration& x : decs) {
      for (DecoratedPermutation& k : f_basis(x)) out.back().push_back(std::move(k));
    }
  }
  return out;
}

std::vector<std::vector<DecoratedDiagram>> p_basis_by_size(
    const std::vector<std::vector<Decoration>>& decorations, const ConservativeMap& map) {
  std::vector<std::vector<DecoratedDiagram>> out;
  for (const auto& decs : decorations) {
    out.emplace_back();
    for (const Decoration& x : decs) {
      for (DecoratedDiagram& k : p_basis(x, map)) out.back().push_back(std::move(k));
    }
  }
  return out;
}

std::vector<std::vector<Decoration>> decorations_by_size(const DecorationInstance& instance,
                                                         int max_size, int samples,
                                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Decoration>> out;
  for (int n = 0; n <= max_size; ++n) {
    auto all = instance.enumerate(n);
    if (all && static_cast<int>(all->size()) <= samples) {
      out.push_back(std::move(*all));
      continue;
    }
    std::set<Decoration> picked;
    for (int t = 0; t < 50 * samples && static_cast<int>(picked.size()) < samples; ++t) {
      picked.insert(instance.sample(n, rng));
    }
    out.emplace_back(picked.begin(), picked.end());
  }
  return out;
}

CheckReport check_hopf_compatibility(const std::vector<std::vector<Decoration>>& decorations,
                                     const std::optional<ConservativeMap>& map,
                                     const HopfCheckOptions& options) {
  if (map) {
    CheckReport r = check_compatibility(p_basis_by_size(decorations, *map), p_basis_ops(), options);
    r.check = "hopf-compatibility:P:" + map->tag();
    return r;
  }
  CheckReport r = check_compatibility(f_basis_by_size(decorations), f_basis_ops(), options);
  r.check = "hopf-compatibility:F";
  return r;
}

}  // namespace arcalg
