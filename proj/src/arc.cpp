#include "arcalg/arc.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "arcalg/error.hpp"

namespace arcalg {

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::initializer_list<int> points) {
  for (int p : points) insert(p);
}

PointSet PointSet::from_vector(const std::vector<int>& points) {
  PointSet s;
  for (int p : points) s.insert(p);
  return s;
}

PointSet PointSet::range(int lo, int hi) {
  PointSet s;
  for (int p = lo; p <= hi; ++p) s.insert(p);
  return s;
}

std::vector<int> PointSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void PointSet::insert(int p) {
  if (p < 0 || p >= 32) throw InvalidInput("point " + std::to_string(p) + " out of range");
  mask_ |= 1U << p;
}

PointSet PointSet::shifted(int d) const {
  PointSet s;
  for (int p : elements()) s.insert(p + d);
  return s;
}

std::strong_ordering PointSet::operator<=>(const PointSet& other) const {
  std::uint32_t diff = mask_ ^ other.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  int t = std::countr_zero(diff);
  std::uint32_t above_t = t == 31 ? 0U : ~((2U << t) - 1U);
  // The side holding t is smaller iff the other side continues past t.
  if (contains(t)) {
    return (other.mask_ & above_t) != 0 ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  }
  return (mask_ & above_t) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

// --------------------------------------------------------------------- Arc

Arc Arc::make(int a, int b, int n, PointSet above, bool extended) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidInput("ground size " + std::to_string(n) + " out of range");
  }
  int lo = extended ? 0 : 1;
  int hi = extended ? n + 1 : n;
  if (a < lo || b > hi || a >= b) {
    throw InvalidInput("invalid arc endpoints (" + std::to_string(a) + "," + std::to_string(b) +
                       ") on " + std::to_string(n));
  }
  Arc arc{a, b, n, above};
  if (!above.is_subset_of(arc.interior())) {
    throw InvalidInput("arc " + arc.to_string() + " passes above a non-interior point");
  }
  return arc;
}

PointSet Arc::interior() const { return PointSet::range(std::max(a + 1, 1), std::min(b - 1, n)); }

std::string Arc::to_string() const {
  std::string s = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + ",{";
  bool first = true;
  for (int p : above.elements()) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s + "})";
}

std::strong_ordering Arc::operator<=>(const Arc& other) const {
  if (auto c = n <=> other.n; c != 0) return c;
  if (auto c = a <=> other.a; c != 0) return c;
  if (auto c = b <=> other.b; c != 0) return c;
  return above <=> other.above;
}

// ------------------------------------------------------------------ ArcSet

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ArcSet::contains(const Arc& arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

void ArcSet::insert(const Arc& arc) {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
  if (it == arcs_.end() || *it != arc) arcs_.insert(it, arc);
}

ArcSet ArcSet::unite(const ArcSet& other) const {
  std::vector<Arc> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  ArcSet s;
  s.arcs_ = std::move(out);
  return s;
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  std::vector<Arc> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  ArcSet s;
  s.arcs_ = std::move(out);
  return s;
}

ArcSet ArcSet::minus(const ArcSet& other) const {
  std::vector<Arc> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  ArcSet s;
  s.arcs_ = std::move(out);
  return s;
}

bool ArcSet::is_subset_of(const ArcSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

// ---------------------------------------------------- diagrams and ideals

NoncrossingArcDiagram::NoncrossingArcDiagram(int n, ArcSet arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const Arc& arc : arcs_) {
    if (arc.n != n || !arc.is_strict()) {
      throw InvalidInput("arc " + arc.to_string() + " is not a strict arc on " + std::to_string(n));
    }
  }
  if (!is_noncrossing_diagram(arcs_, n)) throw InvalidInput("arcs do not form a noncrossing diagram");
}

std::strong_ordering NoncrossingArcDiagram::operator<=>(const NoncrossingArcDiagram& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  return arcs_ <=> other.arcs_;
}

ArcIdeal::ArcIdeal(int n, ArcSet arcs, bool extended)
    : n_(n), extended_(extended), arcs_(std::move(arcs)) {
  for (const Arc& arc : arcs_) {
    if (arc.n != n || (!extended && !arc.is_strict())) {
      throw InvalidInput("arc " + arc.to_string() + " does not belong to " +
                         (extended ? "extended arcs on " : "arcs on ") + std::to_string(n));
    }
  }
  if (!is_ideal(arcs_)) throw SemanticError("arc set is not closed under forcing");
}

ArcIdeal ArcIdeal::closure_of(int n, const ArcSet& arcs, bool extended) {
  return ArcIdeal(n, forcing_closure(arcs), extended);
}

std::strong_ordering ArcIdeal::operator<=>(const ArcIdeal& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = extended_ <=> other.extended_; c != 0) return c;
  return arcs_ <=> other.arcs_;
}

// ------------------------------------------------------------- enumeration

namespace {

ArcSet arcs_between(int n, int lo, int hi) {
  std::vector<Arc> out;
  for (int a = lo; a <= hi; ++a) {
    for (int b = a + 1; b <= hi; ++b) {
      PointSet inner = PointSet::range(std::max(a + 1, 1), std::min(b - 1, n));
      // Enumerate all submasks of the interior.
      std::uint32_t full = inner.mask();
      std::uint32_t sub = full;
      while (true) {
        out.push_back(Arc{a, b, n, PointSet(sub)});
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
  }
  return ArcSet(std::move(out));
}

void require_same_n(const Arc& x, const Arc& y) {
  if (x.n != y.n) throw InvalidInput("arc size mismatch: " + x.to_string() + " vs " + y.to_string());
}

}  // namespace

ArcSet all_arcs(int n) { return arcs_between(n, 1, n); }

ArcSet all_extended_arcs(int n) { return arcs_between(n, 0, n + 1); }

ArcSet up_arcs(int n) {
  std::vector<Arc> out;
  for (const Arc& arc : all_arcs(n)) {
    if (arc.above == arc.interior()) out.push_back(arc);
  }
  return ArcSet(std::move(out));
}

ArcSet down_arcs(int n) {
  std::vector<Arc> out;
  for (const Arc& arc : all_arcs(n)) {
    if (arc.above.empty()) out.push_back(arc);
  }
  return ArcSet(std::move(out));
}

bool crosses(const Arc& alpha, const Arc& beta) {
  require_same_n(alpha, beta);
  PointSet ends_a{alpha.a, alpha.b};
  PointSet ends_b{beta.a, beta.b};
  PointSet common = PointSet::range(std::max(alpha.a, beta.a), std::min(alpha.b, beta.b))
                        .minus(ends_a & ends_b);
  // r: alpha weakly above the axis where beta is not above; s: the converse.
  PointSet r = (alpha.above | ends_a).minus(beta.above) & common;
  PointSet s = (beta.above | ends_b).minus(alpha.above) & common;
  return !r.empty() && !s.empty();
}

bool is_noncrossing_diagram(const ArcSet& arcs, int n) {
  PointSet lefts, rights;
  for (const Arc& arc : arcs) {
    if (arc.n != n || !arc.is_strict()) return false;
    if (lefts.contains(arc.a) || rights.contains(arc.b)) return false;
    lefts.insert(arc.a);
    rights.insert(arc.b);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (crosses(arcs[i], arcs[j])) return false;
    }
  }
  return true;
}

Arc restrict_arc(const Arc& alpha, int b, int c) {
  if (b < alpha.a || c > alpha.b || b >= c) throw InvalidInput("restriction outside the arc");
  return Arc{b, c, alpha.n, alpha.above & PointSet::range(b + 1, c - 1)};
}

bool forces(const Arc& alpha, const Arc& beta) {
  require_same_n(alpha, beta);
  if (beta.a < alpha.a || beta.b > alpha.b) return false;
  return restrict_arc(alpha, beta.a, beta.b) == beta;
}

ArcSet forcing_closure(const ArcSet& arcs) {
  std::set<Arc> out;
  for (const Arc& arc : arcs) {
    for (int b = arc.a; b <= arc.b; ++b) {
      for (int c = b + 1; c <= arc.b; ++c) out.insert(restrict_arc(arc, b, c));
    }
  }
  return ArcSet(std::vector<Arc>(out.begin(), out.end()));
}

bool is_ideal(const ArcSet& arcs) {
  for (const Arc& arc : arcs) {
    for (int b = arc.a; b <= arc.b; ++b) {
      for (int c = b + 1; c <= arc.b; ++c) {
        if (!arcs.contains(restrict_arc(arc, b, c))) return false;
      }
    }
  }
  return true;
}

std::vector<NoncrossingArcDiagram> enumerate_noncrossing_diagrams(const ArcSet& arcs, int n) {
  std::vector<Arc> pool;
  for (const Arc& arc : arcs) {
    if (arc.n == n && arc.is_strict()) pool.push_back(arc);
  }
  std::vector<ArcSet> found;
  std::vector<Arc> chosen;
  auto search = [&](auto&& self, std::size_t i, PointSet lefts, PointSet rights) -> void {
    if (i == pool.size()) {
      found.emplace_back(chosen);
      return;
    }
    self(self, i + 1, lefts, rights);
    const Arc& arc = pool[i];
    if (lefts.contains(arc.a) || rights.contains(arc.b)) return;
    for (const Arc& other : chosen) {
      if (crosses(arc, other)) return;
    }
    chosen.push_back(arc);
    lefts.insert(arc.a);
    rights.insert(arc.b);
    self(self, i + 1, lefts, rights);
    chosen.pop_back();
  };
  search(search, 0, PointSet(), PointSet());
  std::sort(found.begin(), found.end());
  std::vector<NoncrossingArcDiagram> out;
  out.reserve(found.size());
  for (ArcSet& s : found) out.emplace_back(n, std::move(s));
  return out;
}

std::vector<NoncrossingArcDiagram> enumerate_noncrossing_diagrams(const ArcIdeal& ideal) {
  return enumerate_noncrossing_diagrams(ideal.arcs(), ideal.n());
}

// ------------------------------------------------------ augment and shift

Arc augment(const Arc& alpha, int n) { return Arc{alpha.a, alpha.b, alpha.n + n, alpha.above}; }

Arc shift(const Arc& alpha, int n) {
  return Arc{alpha.a + n, alpha.b + n, alpha.n + n, alpha.above.shifted(n)};
}

ArcSet augment(const ArcSet& arcs, int n) {
  std::vector<Arc> out;
  for (const Arc& arc : arcs) out.push_back(augment(arc, n));
  return ArcSet(std::move(out));
}

ArcSet shift(const ArcSet& arcs, int n) {
  std::vector<Arc> out;
  for (const Arc& arc : arcs) out.push_back(shift(arc, n));
  return ArcSet(std::move(out));
}

Arc reflect(const Arc& alpha) {
  PointSet mirrored;
  for (int p : alpha.above.elements()) mirrored.insert(alpha.n + 1 - p);
  return Arc{alpha.n + 1 - alpha.b, alpha.n + 1 - alpha.a, alpha.n, mirrored};
}

ArcSet reflect(const ArcSet& arcs) {
  std::vector<Arc> out;
  for (const Arc& arc : arcs) out.push_back(reflect(arc));
  return ArcSet(std::move(out));
}

// ------------------------------------------------------------------- walls

void WallSpec::validate() const {
  auto check = [&](const std::vector<int>& f, const char* name) {
    if (static_cast<int>(f.size()) != n) {
      throw InvalidInput(std::string("wall function ") + name + " has length " +
                         std::to_string(f.size()) + ", expected " + std::to_string(n));
    }
    for (int v : f) {
      if (v < 0) throw InvalidInput(std::string("negative wall count in ") + name);
    }
  };
  if (n < 0 || n > kMaxGroundSize) throw InvalidInput("wall spec size out of range");
  check(north, "N");
  check(south, "S");
  check(east, "E");
  check(west, "W");
  if (k < 1) throw InvalidInput("crossing bound k must be positive");
}

WallSpec WallSpec::uniform(int n, int north, int south, int horizontal, int k) {
  auto f = [n](int v) { return std::vector<int>(static_cast<std::size_t>(n), v); };
  return WallSpec{n, f(north), f(south), f(horizontal), f(horizontal), k};
}

int wall_crossing_count(const Arc& alpha, const WallSpec& walls) {
  if (alpha.n != walls.n) throw InvalidInput("arc and wall spec sizes differ");
  int count = 0;
  for (int c : alpha.above.elements()) count += walls.north[c - 1];
  for (int c : alpha.below().elements()) count += walls.south[c - 1];
  for (int c = std::max(alpha.a + 1, 1); c + 1 < alpha.b && c + 1 <= walls.n; ++c) {
    if (alpha.above.contains(c) != alpha.above.contains(c + 1)) {
      count += std::min(walls.east[c - 1], walls.west[c]);
    }
  }
  return count;
}

ArcIdeal bounded_crossing_ideal(const WallSpec& walls) {
  walls.validate();
  std::vector<Arc> out;
  for (const Arc& arc : all_arcs(walls.n)) {
    if (wall_crossing_count(arc, walls) <= walls.k - 1) out.push_back(arc);
  }
  return ArcIdeal(walls.n, ArcSet(std::move(out)));
}

namespace {

// Splits "twist(3)" or "twist:3" into ("twist", 3); bare names give fallback.
std::pair<std::string, int> split_parameter(const std::string& name, int fallback) {
  auto pos = name.find_first_of("(:");
  if (pos == std::string::npos) return {name, fallback};
  std::string base = name.substr(0, pos);
  std::string arg = name.substr(pos + 1);
  if (name[pos] == '(') {
    if (arg.empty() || arg.back() != ')') throw InvalidInput("bad preset: " + name);
    arg.pop_back();
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || k < 1) {
    throw InvalidInput("bad preset parameter: " + name);
  }
  return {base, k};
}

}  // namespace

WallSpec preset_walls(const std::string& name, int n) {
  auto [base, k] = split_parameter(name, 2);
  if (base == "full") return WallSpec::uniform(n, 0, 0, 0, 1);
  if (base == "down") return WallSpec::uniform(n, 1, 0, 0, 1);
  if (base == "up" || base == "tamari") return WallSpec::uniform(n, 0, 1, 0, 1);
  if (base == "boolean") return WallSpec::uniform(n, 1, 1, 0, 1);
  if (base == "rect") return WallSpec::uniform(n, 0, 0, 1, 1);
  if (base == "sash") return WallSpec::uniform(n, 1, 2, 0, 2);
  if (base == "twist") return WallSpec::uniform(n, 0, 1, 0, k);
  if (base == "descent") return WallSpec::uniform(n, 1, 1, 0, k);
  throw InvalidInput("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"full", "down", "up", "tamari", "boolean", "rect", "sash", "twist(2)", "descent(2)"};
}

// ------------------------------------------------------ extended ideals

std::optional<Arc> juxtapose_arcs(const Arc& alpha, const Arc& beta) {
  require_same_n(alpha, beta);
  if (alpha.b != beta.a + 1) return std::nullopt;
  return Arc{alpha.a, beta.b, alpha.n, alpha.above | beta.above};
}

ArcIdeal juxtapose_ideals(const ArcIdeal& left, const ArcIdeal& right) {
  if (left.n() != right.n()) throw InvalidInput("juxtaposed ideals have different sizes");
  // Index right arcs by their left endpoint.
  std::map<int, std::vector<Arc>> starting_at;
  for (const Arc& beta : right.arcs()) starting_at[beta.a].push_back(beta);
  std::vector<Arc> out(left.arcs().begin(), left.arcs().end());
  out.insert(out.end(), right.arcs().begin(), right.arcs().end());
  for (const Arc& alpha : left.arcs()) {
    auto it = starting_at.find(alpha.b - 1);
    if (it == starting_at.end()) continue;
    for (const Arc& beta : it->second) out.push_back(*juxtapose_arcs(alpha, beta));
  }
  return ArcIdeal(left.n(), ArcSet(std::move(out)), true);
}

ArcIdeal concat_ideals(const ArcIdeal& left, const ArcIdeal& right) {
  int m = left.n();
  int n = right.n();
  ArcIdeal lifted(m + n, augment(left.arcs(), n), true);
  ArcIdeal shifted(m + n, shift(right.arcs(), m), true);
  return juxtapose_ideals(lifted, shifted);
}

ArcIdeal select_ideal(const ArcIdeal& ideal, const std::vector<int>& selected) {
  int p = ideal.n();
  int q = static_cast<int>(selected.size());
  // index[v] = l if v = x_l, with x_0 = 0 and x_{q+1} = p+1; -1 otherwise.
  std::vector<int> index(static_cast<std::size_t>(p) + 2, -1);
  index[0] = 0;
  index[p + 1] = q + 1;
  int prev = 0;
  for (int l = 1; l <= q; ++l) {
    int x = selected[l - 1];
    if (x <= prev || x > p) throw InvalidInput("selection must be strictly increasing in [1,p]");
    index[x] = l;
    prev = x;
  }
  std::vector<std::vector<const Arc*>> outgoing(static_cast<std::size_t>(p) + 2);
  for (const Arc& arc : ideal.arcs()) outgoing[arc.a].push_back(&arc);

  std::vector<Arc> out;
  for (int a = 0; a <= q; ++a) {
    int start = a == 0 ? 0 : selected[a - 1];
    std::set<std::pair<int, std::uint32_t>> seen;
    std::set<Arc> emitted;
    auto walk = [&](auto&& self, int v, PointSet above) -> void {
      if (!seen.emplace(v, above.mask()).second) return;
      for (const Arc* arc : outgoing[v]) {
        PointSet next = above;
        for (int s : arc->above.elements()) {
          if (index[s] > 0) next.insert(index[s]);
        }
        int w = arc->b;
        if (index[w] >= 0) {
          emitted.insert(Arc{a, index[w], q, next});
        } else {
          self(self, w, next);
        }
      }
    };
    walk(walk, start, PointSet());
    out.insert(out.end(), emitted.begin(), emitted.end());
  }
  return ArcIdeal(q, ArcSet(std::move(out)), true);
}

ArcIdeal strict_arcs(const ArcIdeal& ideal) {
  std::vector<Arc> out;
  for (const Arc& arc : ideal.arcs()) {
    if (arc.is_strict()) out.push_back(arc);
  }
  return ArcIdeal(ideal.n(), ArcSet(std::move(out)), false);
}

ArcIdeal permutree_embed(const std::vector<int>& north, const std::vector<int>& south) {
  if (north.size() != south.size()) throw InvalidInput("sign vectors have different lengths");
  int n = static_cast<int>(north.size());
  for (std::size_t i = 0; i < north.size(); ++i) {
    if ((north[i] != 0 && north[i] != 1) || (south[i] != 0 && south[i] != 1)) {
      throw InvalidInput("permutree signs must be 0 or 1");
    }
  }
  std::vector<Arc> out;
  for (const Arc& arc : all_extended_arcs(n)) {
    bool ok = true;
    for (int c : arc.above.elements()) ok = ok && north[c - 1] == 0;
    for (int c : arc.below().elements()) ok = ok && south[c - 1] == 0;
    if (ok) out.push_back(arc);
  }
  return ArcIdeal(n, ArcSet(std::move(out)), true);
}

bool is_connected_extended(const ArcIdeal& ideal) {
  for (int i = 0; i <= ideal.n(); ++i) {
    if (!ideal.contains(Arc{i, i + 1, ideal.n(), PointSet()})) return false;
  }
  return true;
}

}  // namespace arcalg
