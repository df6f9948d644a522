#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "arcalg/decoration.hpp"
#include "arcalg/error.hpp"

namespace arcalg {

int uniform_int(Rng& rng, int lo, int hi) {
  if (lo > hi) throw InvalidInput("empty random range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

void CheckReport::merge(const CheckReport& other) {
  if (!other.pass) fail(other.witness);
  cases += other.cases;
  exhaustive = exhaustive && other.exhaustive;
}

// ---------------------------------------------------------------- instances

namespace {

constexpr std::size_t kMaxEnumerated = 200000;

// All vectors of length n with entries in [0, v].
std::vector<std::vector<int>> all_vectors(int n, int v) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int x = 0; x <= v; ++x) {
        next.push_back(prefix);
        next.back().push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> random_vector(int n, int v, Rng& rng) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(uniform_int(rng, 0, v));
  return out;
}

double power(double base, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<int> subset_positions(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string positions_string(const std::vector<int>& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "}";
}

}  // namespace

DecorationInstance word_instance(const std::string& alphabet) {
  if (alphabet.empty()) throw InvalidInput("empty alphabet");
  DecorationInstance inst;
  inst.name = "words:" + alphabet;
  inst.enumerate = [alphabet](int n) -> std::optional<std::vector<Decoration>> {
    if (power(static_cast<double>(alphabet.size()), n) > kMaxEnumerated) return std::nullopt;
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> next;
      for (const std::string& w : words) {
        for (char c : alphabet) next.push_back(w + c);
      }
      words = std::move(next);
    }
    std::vector<Decoration> out;
    for (std::string& w : words) out.push_back(Decoration::word(std::move(w)));
    return out;
  };
  inst.sample = [alphabet](int n, Rng& rng) {
    std::string w;
    for (int i = 0; i < n; ++i) w += alphabet[uniform_int(rng, 0, static_cast<int>(alphabet.size()) - 1)];
    return Decoration::word(std::move(w));
  };
  return inst;
}

DecorationInstance walls_instance(int max_value, int k, int horizontal) {
  DecorationInstance inst;
  inst.name = "walls:" + std::to_string(max_value) + ":" + std::to_string(k) + ":" +
              std::to_string(horizontal);
  auto h = [horizontal](int n) { return std::vector<int>(static_cast<std::size_t>(n), horizontal); };
  inst.enumerate = [=](int n) -> std::optional<std::vector<Decoration>> {
    if (power(max_value + 1, 2 * n) > kMaxEnumerated) return std::nullopt;
    std::vector<Decoration> out;
    auto vs = all_vectors(n, max_value);
    for (const auto& north : vs) {
      for (const auto& south : vs) {
        out.push_back(Decoration::walls(WallSpec{n, north, south, h(n), h(n), k}));
      }
    }
    return out;
  };
  inst.sample = [=](int n, Rng& rng) {
    auto north = random_vector(n, max_value, rng);
    auto south = random_vector(n, max_value, rng);
    return Decoration::walls(WallSpec{n, north, south, h(n), h(n), k});
  };
  return inst;
}

DecorationInstance walls_general_instance(int max_value, int k) {
  DecorationInstance inst;
  inst.name = "walls-general:" + std::to_string(max_value) + ":" + std::to_string(k);
  inst.enumerate = [=](int n) -> std::optional<std::vector<Decoration>> {
    if (power(max_value + 1, 4 * n) > kMaxEnumerated) return std::nullopt;
    std::vector<Decoration> out;
    auto vs = all_vectors(n, max_value);
    for (const auto& north : vs) {
      for (const auto& south : vs) {
        for (const auto& east : vs) {
          for (const auto& west : vs) {
            out.push_back(Decoration::walls(WallSpec{n, north, south, east, west, k}));
          }
        }
      }
    }
    return out;
  };
  inst.sample = [=](int n, Rng& rng) {
    auto north = random_vector(n, max_value, rng);
    auto south = random_vector(n, max_value, rng);
    auto east = random_vector(n, max_value, rng);
    auto west = random_vector(n, max_value, rng);
    return Decoration::walls(WallSpec{n, north, south, east, west, k});
  };
  return inst;
}

ArcIdeal random_extended_ideal(int n, Rng& rng, bool connected) {
  ArcSet pool = all_extended_arcs(n);
  std::vector<Arc> generators;
  int count = uniform_int(rng, 0, 3);
  for (int i = 0; i < count; ++i) {
    generators.push_back(pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))]);
  }
  if (connected) {
    for (int i = 0; i <= n; ++i) generators.push_back(Arc{i, i + 1, n, PointSet()});
  }
  return ArcIdeal::closure_of(n, ArcSet(std::move(generators)), true);
}

namespace {

DecorationInstance extended_instance(bool connected) {
  DecorationInstance inst;
  inst.name = connected ? "extideal" : "extideal-general";
  inst.enumerate = [connected](int n) -> std::optional<std::vector<Decoration>> {
    ArcSet pool = all_extended_arcs(n);
    if (pool.size() > 16) return std::nullopt;
    std::vector<Decoration> out;
    for (std::uint32_t mask = 0; mask < (1U << pool.size()); ++mask) {
      std::vector<Arc> chosen;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask & (1U << i)) chosen.push_back(pool[i]);
      }
      ArcSet arcs(std::move(chosen));
      if (!is_ideal(arcs)) continue;
      ArcIdeal ideal(n, std::move(arcs), true);
      if (connected && !is_connected_extended(ideal)) continue;
      out.push_back(Decoration::ext_ideal(std::move(ideal)));
    }
    return out;
  };
  inst.sample = [connected](int n, Rng& rng) {
    return Decoration::ext_ideal(random_extended_ideal(n, rng, connected));
  };
  return inst;
}

}  // namespace

DecorationInstance extideal_instance() { return extended_instance(true); }

DecorationInstance extideal_general_instance() { return extended_instance(false); }

DecorationInstance pair_instance(const DecorationInstance& left, const DecorationInstance& right) {
  DecorationInstance inst;
  inst.name = "pair:" + left.name + "+" + right.name;
  inst.enumerate = [left, right](int n) -> std::optional<std::vector<Decoration>> {
    auto l = left.enumerate(n);
    auto r = right.enumerate(n);
    if (!l || !r || l->size() * r->size() > kMaxEnumerated) return std::nullopt;
    std::vector<Decoration> out;
    for (const Decoration& x : *l) {
      for (const Decoration& y : *r) out.push_back(Decoration::pair(x, y));
    }
    return out;
  };
  inst.sample = [left, right](int n, Rng& rng) {
    Decoration x = left.sample(n, rng);
    return Decoration::pair(x, right.sample(n, rng));
  };
  return inst;
}

namespace {

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("bad integer in instance spec: " + text);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

DecorationInstance instance_from_spec(const std::string& spec) {
  auto rest = [&](std::size_t prefix) { return spec.size() > prefix ? spec.substr(prefix + 1) : ""; };
  if (spec.rfind("words:", 0) == 0) return word_instance(spec.substr(6));
  if (spec == "extideal") return extideal_instance();
  if (spec == "extideal-general") return extideal_general_instance();
  if (spec.rfind("pair:", 0) == 0) {
    std::string body = spec.substr(5);
    auto plus = body.find('+');
    if (plus == std::string::npos) throw InvalidInput("pair instance needs <left>+<right>");
    return pair_instance(instance_from_spec(body.substr(0, plus)),
                         instance_from_spec(body.substr(plus + 1)));
  }
  if (spec.rfind("walls-general", 0) == 0) {
    std::vector<int> p = parse_ints(rest(13), ':');
    if (p.size() > 2) throw InvalidInput("walls-general takes at most max:k");
    return walls_general_instance(p.size() > 0 ? p[0] : 2, p.size() > 1 ? p[1] : 1);
  }
  if (spec.rfind("walls", 0) == 0 && (spec.size() == 5 || spec[5] == ':')) {
    std::vector<int> p = parse_ints(rest(5), ':');
    if (p.size() > 3) throw InvalidInput("walls takes at most max:k:h");
    return walls_instance(p.size() > 0 ? p[0] : 2, p.size() > 1 ? p[1] : 1, p.size() > 2 ? p[2] : 1);
  }
  throw InvalidInput("unknown decoration instance: " + spec);
}

// ------------------------------------------------------------------ checks

namespace {

// Decorations by size, enumerated once when small enough.
class Pool {
 public:
  Pool(const DecorationInstance& inst, int max_size) {
    for (int n = 0; n <= max_size; ++n) by_size_.push_back(inst.enumerate(n));
  }
  const std::vector<Decoration>* at(int n) const { return by_size_[n] ? &*by_size_[n] : nullptr; }
  /// Product of the enumeration sizes, or nullopt if some size is not enumerated.
  std::optional<double> count(std::initializer_list<int> sizes) const {
    double c = 1;
    for (int n : sizes) {
      if (!by_size_[n]) return std::nullopt;
      c *= static_cast<double>(by_size_[n]->size());
    }
    return c;
  }

 private:
  std::vector<std::optional<std::vector<Decoration>>> by_size_;
};

// Splits total <= max into `parts` random sizes.
std::vector<int> random_sizes(Rng& rng, int max_size, int parts) {
  std::vector<int> sizes;
  int left = max_size;
  for (int i = 0; i < parts; ++i) {
    int s = uniform_int(rng, 0, left);
    sizes.push_back(s);
    left -= s;
  }
  for (int i = parts - 1; i > 0; --i) std::swap(sizes[i], sizes[uniform_int(rng, 0, i)]);
  return sizes;
}

std::uint32_t random_mask(Rng& rng, int n) {
  return n == 0 ? 0U : static_cast<std::uint32_t>(rng() & ((1ULL << n) - 1));
}

bool use_exhaustive(double cases, const CheckOptions& options) {
  return cases <= static_cast<double>(options.exhaustive_limit);
}

// Runs `body` with exhaustive or random cases, counting them in the report.
struct CaseRunner {
  CheckReport& report;
  const CheckOptions& options;
  template <class Exhaustive, class Random>
  void run(std::optional<double> cases, Exhaustive&& exhaustive, Random&& random, Rng& rng) {
    if (cases && use_exhaustive(*cases, options)) {
      exhaustive();
    } else {
      report.exhaustive = false;
      for (int t = 0; t < options.trials && report.pass; ++t) random(rng);
    }
  }
};

}  // namespace

CheckReport check_decoration_axioms(const DecorationInstance& inst, const CheckOptions& options) {
  CheckReport report;
  report.check = "decoration:" + inst.name;
  const int max = options.max_size;
  Pool pool(inst, max);
  Rng rng(options.seed);
  CaseRunner runner{report, options};

  // (i) associativity of concatenation.
  auto assoc = [&](const Decoration& x, const Decoration& y, const Decoration& z) {
    ++report.cases;
    Decoration lhs = inst.concat(inst.concat(x, y), z);
    Decoration rhs = inst.concat(x, inst.concat(y, z));
    if (lhs != rhs) {
      report.fail("associativity: X=" + x.to_string() + " Y=" + y.to_string() + " Z=" +
                  z.to_string() + ": (XY)Z=" + lhs.to_string() + " X(YZ)=" + rhs.to_string());
    }
  };
  std::optional<double> triples = 0.0;
  for (int a = 0; a <= max; ++a) {
    for (int b = 0; a + b <= max; ++b) {
      for (int c = 0; a + b + c <= max; ++c) {
        auto k = pool.count({a, b, c});
        triples = (triples && k) ? std::optional<double>(*triples + *k) : std::nullopt;
      }
    }
  }
  runner.run(
      triples,
      [&] {
        for (int a = 0; a <= max; ++a)
          for (int b = 0; a + b <= max; ++b)
            for (int c = 0; a + b + c <= max; ++c)
              for (const auto& x : *pool.at(a))
                for (const auto& y : *pool.at(b))
                  for (const auto& z : *pool.at(c)) {
                    if (!report.pass) return;
                    assoc(x, y, z);
                  }
      },
      [&](Rng& r) {
        auto s = random_sizes(r, max, 3);
        Decoration x = inst.sample(s[0], r);
        Decoration y = inst.sample(s[1], r);
        assoc(x, y, inst.sample(s[2], r));
      },
      rng);

  // (ii) selecting twice equals selecting the composed positions.
  auto twice = [&](const Decoration& z, std::uint32_t rmask, std::uint32_t smask) {
    ++report.cases;
    std::vector<int> r = subset_positions(rmask);
    std::vector<int> s = subset_positions(smask);
    std::vector<int> composed;
    for (int i : s) composed.push_back(r[i - 1]);
    Decoration lhs = inst.select(inst.select(z, r), s);
    Decoration rhs = inst.select(z, composed);
    if (lhs != rhs) {
      report.fail("select-of-select: Z=" + z.to_string() + " R=" + positions_string(r) +
                  " S=" + positions_string(s) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  };
  std::optional<double> selections = 0.0;
  for (int p = 0; p <= max; ++p) {
    auto k = pool.count({p});
    selections = (selections && k) ? std::optional<double>(*selections + *k * power(3, p)) : std::nullopt;
  }
  runner.run(
      selections,
      [&] {
        for (int p = 0; p <= max; ++p)
          for (const auto& z : *pool.at(p))
            for (std::uint32_t rm = 0; rm < (1U << p); ++rm) {
              int q = std::popcount(rm);
              for (std::uint32_t sm = 0; sm < (1U << q); ++sm) {
                if (!report.pass) return;
                twice(z, rm, sm);
              }
            }
      },
      [&](Rng& r) {
        int p = uniform_int(r, 0, max);
        Decoration z = inst.sample(p, r);
        std::uint32_t rm = random_mask(r, p);
        twice(z, rm, random_mask(r, std::popcount(rm)));
      },
      rng);

  // (iii) concat/select compatibility.
  auto compat = [&](const Decoration& x, const Decoration& y, std::uint32_t rmask, std::uint32_t smask) {
    ++report.cases;
    int m = x.size();
    std::vector<int> r = subset_positions(rmask);
    std::vector<int> s = subset_positions(smask);
    std::vector<int> both = r;
    for (int i : s) both.push_back(i + m);
    Decoration lhs = inst.concat(inst.select(x, r), inst.select(y, s));
    Decoration rhs = inst.select(inst.concat(x, y), both);
    if (lhs != rhs) {
      report.fail("compatibility: X=" + x.to_string() + " Y=" + y.to_string() + " R=" +
                  positions_string(r) + " S=" + positions_string(s) + ": X|R.Y|S=" +
                  lhs.to_string() + " (XY)|=" + rhs.to_string());
    }
  };
  std::optional<double> compat_cases = 0.0;
  for (int m = 0; m <= max; ++m) {
    for (int n = 0; m + n <= max; ++n) {
      auto k = pool.count({m, n});
      compat_cases = (compat_cases && k)
                         ? std::optional<double>(*compat_cases + *k * power(2, m + n))
                         : std::nullopt;
    }
  }
  runner.run(
      compat_cases,
      [&] {
        for (int m = 0; m <= max; ++m)
          for (int n = 0; m + n <= max; ++n)
            for (const auto& x : *pool.at(m))
              for (const auto& y : *pool.at(n))
                for (std::uint32_t rm = 0; rm < (1U << m); ++rm)
                  for (std::uint32_t sm = 0; sm < (1U << n); ++sm) {
                    if (!report.pass) return;
                    compat(x, y, rm, sm);
                  }
      },
      [&](Rng& r) {
        auto s = random_sizes(r, max, 2);
        Decoration x = inst.sample(s[0], r);
        Decoration y = inst.sample(s[1], r);
        std::uint32_t rm = random_mask(r, s[0]);
        compat(x, y, rm, random_mask(r, s[1]));
      },
      rng);
  return report;
}

CheckReport check_conservative(const IotaFunction& map, const DecorationInstance& inst,
                               const CheckOptions& options) {
  CheckReport report;
  report.check = "conservative:" + inst.name;
  const int max = options.max_size;
  Pool pool(inst, max);
  Rng rng(options.seed);
  CaseRunner runner{report, options};

  auto ideal_of = [&](const Decoration& x) -> std::optional<ArcSet> {
    ArcSet arcs = map(x);
    for (const Arc& arc : arcs) {
      if (arc.n != x.size() || !arc.is_strict()) {
        report.fail("map value of " + x.to_string() + " contains " + arc.to_string() +
                    ", which is not an arc on " + std::to_string(x.size()));
        return std::nullopt;
      }
    }
    if (!is_ideal(arcs)) {
      ArcSet missing = forcing_closure(arcs).minus(arcs);
      report.fail("map value of " + x.to_string() + " is not forcing-closed: missing " +
                  missing[0].to_string());
      return std::nullopt;
    }
    return arcs;
  };

  // Ideal-valuedness and condition (i).
  auto cond1 = [&](const Decoration& x, const Decoration& y) {
    ++report.cases;
    auto ix = ideal_of(x);
    auto iy = ideal_of(y);
    auto ixy = ideal_of(inst.concat(x, y));
    if (!ix || !iy || !ixy) return;
    int m = x.size();
    int n = y.size();
    for (const Arc& arc : *ix) {
      if (!ixy->contains(augment(arc, n))) {
        report.fail("condition (i): X=" + x.to_string() + " Y=" + y.to_string() + ": " +
                    augment(arc, n).to_string() + " missing from the map of XY");
        return;
      }
    }
    for (const Arc& arc : *iy) {
      if (!ixy->contains(shift(arc, m))) {
        report.fail("condition (i): X=" + x.to_string() + " Y=" + y.to_string() + ": " +
                    shift(arc, m).to_string() + " missing from the map of XY");
        return;
      }
    }
  };
  std::optional<double> pairs = 0.0;
  for (int m = 0; m <= max; ++m) {
    for (int n = 0; m + n <= max; ++n) {
      auto k = pool.count({m, n});
      pairs = (pairs && k) ? std::optional<double>(*pairs + *k) : std::nullopt;
    }
  }
  runner.run(
      pairs,
      [&] {
        for (int m = 0; m <= max; ++m)
          for (int n = 0; m + n <= max; ++n)
            for (const auto& x : *pool.at(m))
              for (const auto& y : *pool.at(n)) {
                if (!report.pass) return;
                cond1(x, y);
              }
      },
      [&](Rng& r) {
        auto s = random_sizes(r, max, 2);
        Decoration x = inst.sample(s[0], r);
        cond1(x, inst.sample(s[1], r));
      },
      rng);

  // Condition (ii): arcs between selected points restrict into the map of
  // the selection.
  auto cond2 = [&](const Decoration& z, std::uint32_t rmask) {
    ++report.cases;
    std::vector<int> r = subset_positions(rmask);
    auto iz = ideal_of(z);
    if (!iz) return;
    Decoration sel = inst.select(z, r);
    auto is = ideal_of(sel);
    if (!is) return;
    std::vector<int> index(static_cast<std::size_t>(z.size()) + 1, 0);
    for (std::size_t l = 0; l < r.size(); ++l) index[r[l]] = static_cast<int>(l) + 1;
    int q = static_cast<int>(r.size());
    for (const Arc& arc : *iz) {
      if (index[arc.a] == 0 || index[arc.b] == 0) continue;
      PointSet above;
      for (int s : arc.above.elements()) {
        if (index[s] > 0) above.insert(index[s]);
      }
      Arc restricted{index[arc.a], index[arc.b], q, above};
      if (!is->contains(restricted)) {
        report.fail("condition (ii): Z=" + z.to_string() + " R=" + positions_string(r) + ": " +
                    arc.to_string() + " restricts to " + restricted.to_string() +
                    ", missing from the map of the selection");
        return;
      }
    }
  };
  std::optional<double> subsets = 0.0;
  for (int p = 0; p <= max; ++p) {
    auto k = pool.count({p});
    subsets = (subsets && k) ? std::optional<double>(*subsets + *k * power(2, p)) : std::nullopt;
  }
  runner.run(
      subsets,
      [&] {
        for (int p = 0; p <= max; ++p)
          for (const auto& z : *pool.at(p))
            for (std::uint32_t rm = 0; rm < (1U << p); ++rm) {
              if (!report.pass) return;
              cond2(z, rm);
            }
      },
      [&](Rng& r) {
        int p = uniform_int(r, 0, max);
        Decoration z = inst.sample(p, r);
        cond2(z, random_mask(r, p));
      },
      rng);
  return report;
}

CheckReport check_conservative(const ConservativeMap& map, const DecorationInstance& inst,
                               const CheckOptions& options) {
  CheckReport report = check_conservative(
      [&map](const Decoration& x) { return iota(map, x).arcs(); }, inst, options);
  report.check = "conservative:" + map.tag() + ":" + inst.name;
  return report;
}

CheckReport check_hopf_family(const IdealFamily& family, int max_n) {
  CheckReport report;
  report.check = "family";
  std::vector<ArcSet> ideals;
  for (int n = 0; n <= max_n; ++n) {
    ideals.push_back(family(n));
    ++report.cases;
    for (const Arc& arc : ideals.back()) {
      if (arc.n != n || !arc.is_strict()) {
        report.fail("member " + std::to_string(n) + " contains " + arc.to_string());
        return report;
      }
    }
    if (!is_ideal(ideals.back())) {
      report.fail("member " + std::to_string(n) + " is not forcing-closed");
      return report;
    }
  }
  // Condition 1: I_m^{+n} and I_n^{->m} lie in I_{m+n}.
  for (int m = 1; m <= max_n; ++m) {
    for (int n = 1; m + n <= max_n; ++n) {
      ++report.cases;
      for (const Arc& arc : ideals[m]) {
        if (!ideals[m + n].contains(augment(arc, n))) {
          report.fail("condition 1 at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                      "): " + arc.to_string() + " augments to " + augment(arc, n).to_string() +
                      ", missing from member " + std::to_string(m + n));
          return report;
        }
      }
      for (const Arc& arc : ideals[n]) {
        if (!ideals[m + n].contains(shift(arc, m))) {
          report.fail("condition 1 at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                      "): " + arc.to_string() + " shifts to " + shift(arc, m).to_string() +
                      ", missing from member " + std::to_string(m + n));
          return report;
        }
      }
    }
  }
  // Condition 2: restrictions to selected endpoints stay in the family.
  for (int p = 1; p <= max_n; ++p) {
    for (std::uint32_t rm = 1; rm < (1U << p); ++rm) {
      ++report.cases;
      std::vector<int> r = subset_positions(rm);
      std::vector<int> index(static_cast<std::size_t>(p) + 1, 0);
      for (std::size_t l = 0; l < r.size(); ++l) index[r[l]] = static_cast<int>(l) + 1;
      int q = static_cast<int>(r.size());
      for (const Arc& arc : ideals[p]) {
        if (index[arc.a] == 0 || index[arc.b] == 0) continue;
        PointSet above;
        for (int s : arc.above.elements()) {
          if (index[s] > 0) above.insert(index[s]);
        }
        Arc restricted{index[arc.a], index[arc.b], q, above};
        if (!ideals[q].contains(restricted)) {
          report.fail("condition 2 at p=" + std::to_string(p) + ", R=" + positions_string(r) +
                      ": " + arc.to_string() + " restricts to " + restricted.to_string() +
                      ", missing from member " + std::to_string(q));
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace arcalg
