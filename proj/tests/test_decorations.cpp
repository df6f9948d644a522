#include <doctest.h>

#include <algorithm>
#include <limits>

#include "arcalg/decoration.hpp"
#include "arcalg/error.hpp"
#include "test_support.hpp"

using namespace arcalg;
using arcalg::testing::A;

namespace {

Decoration W(std::vector<int> n, std::vector<int> s, std::vector<int> e, std::vector<int> w, int k = 1) {
  int size = static_cast<int>(n.size());
  return Decoration::walls(WallSpec{size, std::move(n), std::move(s), std::move(e), std::move(w), k});
}

CheckOptions small(int max_size = 4) {
  CheckOptions o;
  o.max_size = max_size;
  o.trials = 500;
  o.seed = 7;
  return o;
}

// Takes the largest north count over ]r_{a-1}, r_a] instead of the value at
// r_a; breaks the compatibility axiom.
Decoration range_max_select(const Decoration& z, const std::vector<int>& positions) {
  const WallSpec& w = z.as_walls()->walls;
  Decoration base = select(z, positions);
  WallSpec out = base.as_walls()->walls;
  int prev = 0;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    int best = std::numeric_limits<int>::min();
    for (int c = prev + 1; c <= positions[a]; ++c) best = std::max(best, w.north[c - 1]);
    out.north[a] = best;
    prev = positions[a];
  }
  return Decoration::walls(out);
}

ArcSet ideal_arcs(const ArcIdeal& i) { return i.arcs(); }

}  // namespace

TEST_CASE("word concatenation and selection") {
  CHECK(concat(Decoration::word("ab"), Decoration::word("c")) == Decoration::word("abc"));
  CHECK(select(Decoration::word("abc"), {1, 3}) == Decoration::word("ac"));
  CHECK(select(Decoration::word("abc"), {1, 2, 3}) == Decoration::word("abc"));
  CHECK(select(Decoration::word("abc"), {}) == Decoration::word(""));
  CHECK_THROWS_AS(select(Decoration::word("abc"), {2, 1}), InvalidInput);
  CHECK_THROWS_AS(select(Decoration::word("abc"), {4}), InvalidInput);
  CHECK(trivial_decoration(3) == Decoration::word("***"));
}

TEST_CASE("walls concatenation and selection") {
  Decoration x = W({1, 2}, {0, 1}, {1, 1}, {1, 1});
  Decoration y = W({3}, {2}, {0}, {0});
  CHECK(concat(x, y) == W({1, 2, 3}, {0, 1, 2}, {1, 1, 0}, {1, 1, 0}));
  CHECK_THROWS_AS(concat(x, W({3}, {2}, {0}, {0}, 2)), SemanticError);
  CHECK(select(W({1, 0, 2}, {0, 0, 0}, {3, 1, 2}, {2, 0, 5}), {2}) == W({0}, {0}, {1}, {0}));
  Decoration z = W({1, 0, 2}, {0, 0, 0}, {3, 1, 2}, {2, 0, 5});
  CHECK(select(z, {1, 2, 3}) == z);
  CHECK_THROWS_AS(Decoration::walls(WallSpec{2, {1}, {0, 0}, {0, 0}, {0, 0}, 1}), InvalidInput);
}

TEST_CASE("mixed kinds do not concatenate") {
  CHECK_THROWS_AS(concat(Decoration::word("a"), W({0}, {0}, {0}, {0})), SemanticError);
  Decoration p = Decoration::pair(Decoration::word("a"), W({0}, {0}, {0}, {0}));
  CHECK_THROWS_AS(concat(p, Decoration::pair(Decoration::word("a"), Decoration::word("b"))), SemanticError);
  CHECK_THROWS_AS(Decoration::pair(Decoration::word("a"), Decoration::word("bc")), InvalidInput);
}

TEST_CASE("extended ideal decorations") {
  ArcIdeal unit(0, ArcSet({A(0, 1, 0, {}, true)}), true);
  Decoration u = Decoration::ext_ideal(unit);
  Decoration empty0 = Decoration::ext_ideal(ArcIdeal(0, ArcSet(), true));
  CHECK(concat(u, u) == u);
  CHECK(concat(empty0, empty0) == empty0);
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    int n = uniform_int(rng, 0, 3);
    Decoration c = Decoration::ext_ideal(random_extended_ideal(n, rng, true));
    CHECK(concat(u, c) == c);
    CHECK(concat(c, u) == c);
    Decoration g = Decoration::ext_ideal(random_extended_ideal(n, rng, false));
    CHECK(concat(empty0, g) == g);
    CHECK(concat(g, empty0) == g);
  }
  CHECK_THROWS_AS(Decoration::ext_ideal(ArcIdeal(2, all_arcs(2))), InvalidInput);
}

TEST_CASE("iota on examples") {
  CHECK(iota(ConservativeMap::down(), Decoration::word("abc")).arcs() ==
        ArcSet({A(1, 2, 3), A(2, 3, 3), A(1, 3, 3)}));
  CHECK(iota(ConservativeMap::preset("tamari"), trivial_decoration(3)).arcs() ==
        ArcSet({A(1, 2, 3), A(2, 3, 3), A(1, 3, 3, {2})}));
  CHECK(iota(ConservativeMap::full(), trivial_decoration(4)).arcs() == all_arcs(4));
  for (int n = 0; n <= 4; ++n) {
    Decoration full_ext = Decoration::ext_ideal(ArcIdeal(n, all_extended_arcs(n), true));
    CHECK(iota(ConservativeMap::strict(), full_ext).arcs() == all_arcs(n));
  }
  Decoration walls = Decoration::walls(preset_walls("boolean", 3));
  CHECK(iota(ConservativeMap::walls(), walls) == bounded_crossing_ideal(preset_walls("boolean", 3)));
  CHECK_THROWS_AS(iota(ConservativeMap::walls(), Decoration::word("ab")), SemanticError);
  CHECK_THROWS_AS(iota(ConservativeMap::strict(), walls), SemanticError);

  Decoration pair = Decoration::pair(walls, Decoration::ext_ideal(ArcIdeal(3, all_extended_arcs(3), true)));
  ConservativeMap both = ConservativeMap::intersect(ConservativeMap::walls(), ConservativeMap::strict());
  CHECK(both.tag() == "intersect(walls,strict)");
  CHECK(iota(both, pair) == bounded_crossing_ideal(preset_walls("boolean", 3)));

  ConservativeMap ab = ConservativeMap::restrict(ConservativeMap::full(), "letters:ab");
  CHECK(iota(ab, Decoration::word("abba")).arcs() == all_arcs(4));
  CHECK_THROWS_AS(iota(ab, Decoration::word("abc")), SemanticError);
  CHECK_THROWS_AS(ConservativeMap::restrict(ConservativeMap::full(), "bogus"), InvalidInput);
  CHECK_THROWS_AS(ConservativeMap::preset("bogus"), InvalidInput);
}

TEST_CASE("instance specs") {
  CHECK(instance_from_spec("words:ab").name == "words:ab");
  CHECK(instance_from_spec("walls").name == "walls:2:1:1");
  CHECK(instance_from_spec("walls:1:2:0").name == "walls:1:2:0");
  CHECK(instance_from_spec("walls-general:1").name == "walls-general:1:1");
  CHECK(instance_from_spec("pair:walls:1+extideal").name == "pair:walls:1:1:1+extideal");
  CHECK_THROWS_AS(instance_from_spec("wallsx"), InvalidInput);
  CHECK_THROWS_AS(instance_from_spec("walls:a"), InvalidInput);
  CHECK_THROWS_AS(instance_from_spec("pair:walls"), InvalidInput);
  CHECK_THROWS_AS(instance_from_spec("words:"), InvalidInput);
  auto words = instance_from_spec("words:ab").enumerate(3);
  REQUIRE(words);
  CHECK(words->size() == 8);
  auto ext = extideal_instance().enumerate(1);
  REQUIRE(ext);
  for (const Decoration& d : *ext) CHECK(is_connected_extended(d.as_ext_ideal()->ideal));
}

TEST_CASE("decoration axioms hold on the shipped instances" * doctest::timeout(300)) {
  for (const char* spec : {"words:ab", "words:abc", "walls", "walls:2:2:0", "extideal", "pair:walls:1+extideal",
                           "pair:words:ab+walls:1"}) {
    CAPTURE(spec);
    CheckReport r = check_decoration_axioms(instance_from_spec(spec), small());
    CHECK_MESSAGE(r.pass, r.witness);
    CHECK(r.cases > 0);
  }
  CHECK(check_decoration_axioms(instance_from_spec("words:ab"), small()).exhaustive);
}

TEST_CASE("decoration axioms fail on the negative instances" * doctest::timeout(120)) {
  for (const char* spec : {"walls-general:1", "extideal-general"}) {
    CAPTURE(spec);
    CheckReport r = check_decoration_axioms(instance_from_spec(spec), small(3));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());
  }
  DecorationInstance broken = walls_instance(2, 1, 1);
  broken.select = range_max_select;
  CheckReport r = check_decoration_axioms(broken, small(3));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());

  DecorationInstance reversed = word_instance("ab");
  reversed.select = [](const Decoration& z, const std::vector<int>& pos) {
    std::string s = select(z, pos).as_word()->letters;
    std::reverse(s.begin(), s.end());
    return Decoration::word(s);
  };
  CHECK_FALSE(check_decoration_axioms(reversed, small(3)).pass);
}

TEST_CASE("conservative maps" * doctest::timeout(300)) {
  struct Case {
    ConservativeMap map;
    const char* instance;
  };
  std::vector<Case> cases{
      {ConservativeMap::full(), "words:ab"},
      {ConservativeMap::down(), "words:ab"},
      {ConservativeMap::preset("tamari"), "words:ab"},
      {ConservativeMap::preset("boolean"), "words:a"},
      {ConservativeMap::walls(), "walls"},
      {ConservativeMap::walls(), "walls:1:2:0"},
      {ConservativeMap::strict(), "extideal"},
      {ConservativeMap::intersect(ConservativeMap::walls(), ConservativeMap::strict()), "pair:walls:1+extideal"},
      {ConservativeMap::intersect(ConservativeMap::preset("tamari"), ConservativeMap::walls()),
       "pair:words:ab+walls:1"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.map.tag());
    CAPTURE(c.instance);
    CheckReport r = check_conservative(c.map, instance_from_spec(c.instance), small());
    CHECK_MESSAGE(r.pass, r.witness);
  }
}

TEST_CASE("conservativity mutants fail") {
  IotaFunction not_ideal = [](const Decoration& x) {
    int n = x.size();
    if (n < 3) return ArcSet();
    return ArcSet({Arc::make(1, n, n, PointSet::range(2, n - 1))});
  };
  CheckReport r = check_conservative(not_ideal, word_instance("ab"), small());
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());

  // All arcs on even sizes, none on odd ones: condition (i) fails at (2, 1).
  IotaFunction parity = [](const Decoration& x) {
    int n = x.size();
    return n % 2 == 0 ? all_arcs(n) : ArcSet();
  };
  CHECK_FALSE(check_conservative(parity, word_instance("a"), small()).pass);
}

TEST_CASE("hopf families") {
  auto preset_family = [](const char* name) -> IdealFamily {
    return [name](int n) { return ideal_arcs(bounded_crossing_ideal(preset_walls(name, n))); };
  };
  for (const char* name : {"tamari", "boolean", "full", "down", "rect"}) {
    CAPTURE(name);
    CheckReport r = check_hopf_family(preset_family(name), 5);
    CHECK_MESSAGE(r.pass, r.witness);
  }
  IdealFamily alternating = [](int n) { return n % 2 == 0 ? all_arcs(n) : down_arcs(n); };
  CheckReport r = check_hopf_family(alternating, 5);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("condition 1") != std::string::npos);
}

TEST_CASE("permutree decorations commute with the extended embedding") {
  auto signs = [](int n, std::uint32_t bits) {
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int c = 0; c < n; ++c) {
      out.first.push_back((bits >> (2 * c)) & 1U);
      out.second.push_back((bits >> (2 * c + 1)) & 1U);
    }
    return out;
  };
  auto as_walls = [](const std::vector<int>& north, const std::vector<int>& south) {
    int n = static_cast<int>(north.size());
    return Decoration::walls(WallSpec{n, north, south, std::vector<int>(n, 0), std::vector<int>(n, 0), 1});
  };
  auto as_ext = [](const std::vector<int>& north, const std::vector<int>& south) {
    return Decoration::ext_ideal(permutree_embed(north, south));
  };
  auto same = [](const Decoration& ext, const Decoration& walls) {
    return iota(ConservativeMap::strict(), ext) == iota(ConservativeMap::walls(), walls);
  };
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (std::uint32_t a = 0; a < (1U << (2 * m)); ++a) {
        for (std::uint32_t b = 0; b < (1U << (2 * n)); ++b) {
          auto [n1, s1] = signs(m, a);
          auto [n2, s2] = signs(n, b);
          CHECK(same(concat(as_ext(n1, s1), as_ext(n2, s2)), concat(as_walls(n1, s1), as_walls(n2, s2))));
        }
      }
    }
  }
  for (int p = 0; p <= 4; ++p) {
    for (std::uint32_t bits = 0; bits < (1U << (2 * p)); ++bits) {
      auto [north, south] = signs(p, bits);
      for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
        std::vector<int> r;
        for (int c = 1; c <= p; ++c) {
          if (mask & (1U << (c - 1))) r.push_back(c);
        }
        CHECK(same(select(as_ext(north, south), r), select(as_walls(north, south), r)));
      }
    }
  }
}
