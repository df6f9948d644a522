#include "arcalg/diagram_maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "arcalg/error.hpp"

namespace arcalg {

namespace {

bool empty_rectangle(const Permutation& s, int i, int j) {
  int lo = std::min(s(i), s(j));
  int hi = std::max(s(i), s(j));
  for (int k = i + 1; k < j; ++k) {
    if (s(k) > lo && s(k) < hi) return false;
  }
  return true;
}

void require_pair(const Permutation& s, int i, int j) {
  if (i < 1 || j > s.size() || i >= j) {
    throw InvalidInput("positions (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
  }
}

}  // namespace

Arc arc_down(int i, int j, const Permutation& sigma) {
  require_pair(sigma, i, j);
  if (sigma(i) < sigma(j) || !empty_rectangle(sigma, i, j)) {
    throw InvalidInput("(" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not an empty inversion rectangle of " + sigma.to_string());
  }
  PointSet above;
  for (int k = 1; k < i; ++k) {
    if (sigma(k) > sigma(j) && sigma(k) < sigma(i)) above.insert(sigma(k));
  }
  return Arc{sigma(j), sigma(i), sigma.size(), above};
}

Arc arc_up(int i, int j, const Permutation& sigma) {
  require_pair(sigma, i, j);
  if (sigma(i) > sigma(j) || !empty_rectangle(sigma, i, j)) {
    throw InvalidInput("(" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not an empty non-inversion rectangle of " + sigma.to_string());
  }
  PointSet above;
  for (int k = 1; k < i; ++k) {
    if (sigma(k) > sigma(i) && sigma(k) < sigma(j)) above.insert(sigma(k));
  }
  return Arc{sigma(i), sigma(j), sigma.size(), above};
}

NoncrossingArcDiagram delta_down(const Permutation& sigma) {
  std::vector<Arc> arcs;
  for (int i : descents(sigma)) arcs.push_back(arc_down(i, i + 1, sigma));
  return NoncrossingArcDiagram(sigma.size(), ArcSet(std::move(arcs)));
}

NoncrossingArcDiagram delta_up(const Permutation& sigma) {
  std::vector<Arc> arcs;
  for (int i : ascents(sigma)) arcs.push_back(arc_up(i, i + 1, sigma));
  return NoncrossingArcDiagram(sigma.size(), ArcSet(std::move(arcs)));
}

namespace {

Permutation delta_inverse(const NoncrossingArcDiagram& diagram, bool down) {
  int n = diagram.n();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& arc : diagram.arcs()) parent[find(arc.a)] = find(arc.b);

  // Components as sorted value lists, indexed by root.
  std::map<int, std::vector<int>> members;
  for (int v = 1; v <= n; ++v) members[find(v)].push_back(v);
  std::vector<int> roots;
  for (const auto& [root, values] : members) roots.push_back(root);
  std::map<int, int> slot;
  for (std::size_t i = 0; i < roots.size(); ++i) slot[roots[i]] = static_cast<int>(i);
  std::size_t c = roots.size();

  // before[x][y]: component x must precede component y.
  std::vector<std::vector<bool>> before(c, std::vector<bool>(c, false));
  for (const Arc& arc : diagram.arcs()) {
    int own = slot[find(arc.a)];
    for (int p : arc.above.elements()) {
      int other = slot[find(p)];
      if (other != own) before[other][own] = true;
    }
    for (int p : arc.below().elements()) {
      int other = slot[find(p)];
      if (other != own) before[own][other] = true;
    }
  }
  std::vector<int> indegree(c, 0);
  for (std::size_t x = 0; x < c; ++x) {
    for (std::size_t y = 0; y < c; ++y) indegree[y] += before[x][y] ? 1 : 0;
  }
  // Tie-break: leftmost component first for down, rightmost for up.
  auto key = [&](int s) {
    const std::vector<int>& vals = members[roots[s]];
    return down ? vals.front() : -vals.back();
  };
  auto cmp = [&](int x, int y) { return key(x) > key(y); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (std::size_t s = 0; s < c; ++s) {
    if (indegree[s] == 0) ready.push(static_cast<int>(s));
  }
  std::vector<int> word;
  std::size_t placed = 0;
  while (!ready.empty()) {
    int s = ready.top();
    ready.pop();
    ++placed;
    std::vector<int> vals = members[roots[s]];
    if (down) std::reverse(vals.begin(), vals.end());
    word.insert(word.end(), vals.begin(), vals.end());
    for (std::size_t y = 0; y < c; ++y) {
      if (before[s][y] && --indegree[y] == 0) ready.push(static_cast<int>(y));
    }
  }
  if (placed != c) throw InvalidInput("cyclic component priority: not a noncrossing diagram");
  return Permutation(std::move(word));
}

}  // namespace

Permutation delta_down_inv(const NoncrossingArcDiagram& diagram) {
  return delta_inverse(diagram, true);
}

Permutation delta_up_inv(const NoncrossingArcDiagram& diagram) {
  return delta_inverse(diagram, false);
}

std::vector<BoxPair> box_down(const Permutation& sigma) {
  std::vector<BoxPair> out;
  for (int i = 1; i <= sigma.size(); ++i) {
    for (int j = i + 1; j <= sigma.size(); ++j) {
      if (sigma(i) > sigma(j) && empty_rectangle(sigma, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<BoxPair> box_up(const Permutation& sigma) {
  std::vector<BoxPair> out;
  for (int i = 1; i <= sigma.size(); ++i) {
    for (int j = i + 1; j <= sigma.size(); ++j) {
      if (sigma(i) < sigma(j) && empty_rectangle(sigma, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

namespace {

void require_ideal_size(const ArcIdeal& ideal, const Permutation& sigma) {
  if (ideal.n() != sigma.size() || ideal.extended()) {
    throw InvalidInput("ideal on " + std::to_string(ideal.n()) + " used with permutation of size " +
                       std::to_string(sigma.size()));
  }
}

// Keeps the pairs with no other candidate nested inside them.
std::vector<BoxPair> maximal_pairs(const std::vector<BoxPair>& candidates,
                                   const Permutation& s, bool down) {
  auto nested = [&](BoxPair outer, BoxPair inner) {
    if (!(outer.i <= inner.i && inner.i < inner.j && inner.j <= outer.j)) return false;
    if (down) return s(inner.i) >= s(outer.i) && s(outer.j) >= s(inner.j);
    return s(inner.i) <= s(outer.i) && s(outer.j) <= s(inner.j);
  };
  std::vector<BoxPair> out;
  for (BoxPair p : candidates) {
    bool maximal = true;
    for (BoxPair q : candidates) {
      if (q != p && nested(p, q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

}  // namespace

namespace {

std::vector<BoxPair> box_down_arcs(const Permutation& sigma, const ArcSet& arcs) {
  std::vector<BoxPair> candidates;
  for (BoxPair p : box_down(sigma)) {
    if (arcs.contains(arc_down(p.i, p.j, sigma))) candidates.push_back(p);
  }
  return maximal_pairs(candidates, sigma, true);
}

NoncrossingArcDiagram eta_down_arcs(const ArcSet& arcs, const Permutation& sigma) {
  std::vector<Arc> out;
  for (BoxPair p : box_down_arcs(sigma, arcs)) out.push_back(arc_down(p.i, p.j, sigma));
  return NoncrossingArcDiagram(sigma.size(), ArcSet(std::move(out)));
}

}  // namespace

std::vector<BoxPair> box_down_I(const Permutation& sigma, const ArcIdeal& ideal) {
  require_ideal_size(ideal, sigma);
  return box_down_arcs(sigma, ideal.arcs());
}

std::vector<BoxPair> box_up_I(const Permutation& sigma, const ArcIdeal& ideal) {
  require_ideal_size(ideal, sigma);
  std::vector<BoxPair> candidates;
  for (BoxPair p : box_up(sigma)) {
    if (ideal.contains(arc_up(p.i, p.j, sigma))) candidates.push_back(p);
  }
  return maximal_pairs(candidates, sigma, false);
}

NoncrossingArcDiagram eta_down(const ArcIdeal& ideal, const Permutation& sigma) {
  require_ideal_size(ideal, sigma);
  return eta_down_arcs(ideal.arcs(), sigma);
}

NoncrossingArcDiagram eta_up(const ArcIdeal& ideal, const Permutation& sigma) {
  std::vector<Arc> arcs;
  for (BoxPair p : box_up_I(sigma, ideal)) arcs.push_back(arc_up(p.i, p.j, sigma));
  return NoncrossingArcDiagram(sigma.size(), ArcSet(std::move(arcs)));
}

namespace {

Permutation rewrite(const ArcSet& arcs, Permutation sigma, RewritePolicy policy, bool down) {
  while (true) {
    std::vector<int> moves = down ? descents(sigma) : ascents(sigma);
    if (policy == RewritePolicy::kRightmost) std::reverse(moves.begin(), moves.end());
    bool moved = false;
    for (int i : moves) {
      Arc arc = down ? arc_down(i, i + 1, sigma) : arc_up(i, i + 1, sigma);
      if (!arcs.contains(arc)) {
        sigma = sigma.swap_adjacent(i);
        moved = true;
        break;
      }
    }
    if (!moved) return sigma;
  }
}

}  // namespace

Permutation pi_down(const ArcSet& arcs, const Permutation& sigma, RewritePolicy policy) {
  return rewrite(arcs, sigma, policy, true);
}

Permutation pi_up(const ArcSet& arcs, const Permutation& sigma, RewritePolicy policy) {
  return rewrite(arcs, sigma, policy, false);
}

Permutation pi_down(const ArcIdeal& ideal, const Permutation& sigma, RewritePolicy policy) {
  require_ideal_size(ideal, sigma);
  return rewrite(ideal.arcs(), sigma, policy, true);
}

Permutation pi_up(const ArcIdeal& ideal, const Permutation& sigma, RewritePolicy policy) {
  require_ideal_size(ideal, sigma);
  return rewrite(ideal.arcs(), sigma, policy, false);
}

std::vector<CongruenceClass> congruence_classes(const ArcIdeal& ideal) {
  if (ideal.extended()) throw InvalidInput("congruence classes need a classical arc ideal");
  std::map<NoncrossingArcDiagram, std::vector<Permutation>> groups;
  for (const Permutation& sigma : all_permutations(ideal.n())) {
    groups[eta_down(ideal, sigma)].push_back(sigma);
  }
  std::vector<CongruenceClass> out;
  for (auto& [diagram, members] : groups) {
    Permutation bottom = delta_down_inv(diagram);
    Permutation top = pi_up(ideal, bottom);
    out.push_back({diagram, bottom, top, std::move(members)});
  }
  return out;
}

QuotientPoset quotient_poset(const ArcIdeal& ideal) {
  QuotientPoset q{congruence_classes(ideal), {}};
  std::map<Permutation, int> class_of;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    for (const Permutation& s : q.classes[c].members) class_of[s] = static_cast<int>(c);
  }
  std::size_t k = q.classes.size();
  // Quotient order from weak-order covers, then transitive reduction.
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) leq[c][c] = true;
  for (const auto& [s, c] : class_of) {
    for (const Permutation& t : cover_relations(s)) leq[c][class_of[t]] = true;
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!leq[x][m]) continue;
      for (std::size_t y = 0; y < k; ++y) {
        if (leq[m][y]) leq[x][y] = true;
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y || !leq[x][y]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < k && cover; ++z) {
        if (z != x && z != y && leq[x][z] && leq[z][y]) cover = false;
      }
      if (cover) q.covers.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return q;
}

CongruenceReport is_lattice_congruence(const ArcSet& arcs, int n) {
  CongruenceReport report;
  std::vector<Permutation> perms = all_permutations(n);
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  // Classes: fibers of eta_down. For a non-closed arc set these need not be
  // intervals, which the report then exhibits.
  std::map<NoncrossingArcDiagram, int> fiber_id;
  std::vector<int> class_id(perms.size());
  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto [it, inserted] = fiber_id.try_emplace(eta_down_arcs(arcs, perms[i]), static_cast<int>(fiber_id.size()));
    class_id[i] = it->second;
    classes[it->second].push_back(static_cast<int>(i));
  }
  auto find = [&](int x) { return class_id[x]; };
  report.class_count = classes.size();

  auto note = [&](std::string w) {
    if (report.witnesses.size() < 8) report.witnesses.push_back(std::move(w));
  };

  std::vector<int> rep(perms.size());
  for (const auto& [root, members] : classes) {
    std::vector<int> bottoms, tops;
    for (int i : members) {
      bool has_lower = false, has_upper = false;
      for (const Permutation& t : lower_covers(perms[i])) has_lower |= find(index[t]) == root;
      for (const Permutation& t : cover_relations(perms[i])) has_upper |= find(index[t]) == root;
      if (!has_lower) bottoms.push_back(i);
      if (!has_upper) tops.push_back(i);
      rep[i] = members.front();
    }
    bool ok = bottoms.size() == 1 && tops.size() == 1 &&
              weak_leq(perms[bottoms[0]], perms[tops[0]]) &&
              interval(perms[bottoms[0]], perms[tops[0]]).size() == members.size();
    if (!ok) {
      report.classes_are_intervals = false;
      note("class of " + perms[members.front()].to_string() + " is not an interval");
    }
  }

  for (const Permutation& s : perms) {
    for (const Permutation& t : cover_relations(s)) {
      if (!weak_leq(pi_down(arcs, s), pi_down(arcs, t)) ||
          !weak_leq(pi_up(arcs, s), pi_up(arcs, t))) {
        report.projections_order_preserving = false;
        note("projection not monotone on cover " + s.to_string() + " < " + t.to_string());
      }
    }
  }

  // x congruent to x' implies x v y congruent to x' v y; comparing each x with
  // its class representative covers all pairs by transitivity.
  for (std::size_t x = 0; x < perms.size(); ++x) {
    if (rep[x] == static_cast<int>(x)) continue;
    const Permutation& r = perms[rep[x]];
    for (const Permutation& y : perms) {
      if (find(index[weak_join(perms[x], y)]) != find(index[weak_join(r, y)])) {
        if (report.respects_join) {
          note("join: " + perms[x].to_string() + " ~ " + r.to_string() + " but joins with " +
               y.to_string() + " differ");
        }
        report.respects_join = false;
      }
      if (find(index[weak_meet(perms[x], y)]) != find(index[weak_meet(r, y)])) {
        if (report.respects_meet) {
          note("meet: " + perms[x].to_string() + " ~ " + r.to_string() + " but meets with " +
               y.to_string() + " differ");
        }
        report.respects_meet = false;
      }
    }
  }
  return report;
}

}  // namespace arcalg
