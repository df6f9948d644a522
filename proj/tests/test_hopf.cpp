#include <doctest.h>

#include <set>

#include "arcalg/diagram_maps.hpp"
#include "arcalg/error.hpp"
#include "arcalg/hopf.hpp"
#include "test_support.hpp"

using namespace arcalg;
using arcalg::testing::A;
using arcalg::testing::P;

namespace {

DecoratedPermutation F(const char* perm, const char* word) {
  return DecoratedPermutation(P(perm), Decoration::word(word));
}

DecoratedPermutation F(const char* perm) {
  Permutation p = P(perm);
  return DecoratedPermutation(p, trivial_decoration(p.size()));
}

FElement sum(std::initializer_list<DecoratedPermutation> keys) {
  FElement out;
  for (const auto& k : keys) out.add(k, 1);
  return out;
}

DecoratedDiagram Pd(int n, std::initializer_list<Arc> arcs, const ConservativeMap& map) {
  return DecoratedDiagram(NoncrossingArcDiagram(n, ArcSet(arcs)), trivial_decoration(n), map);
}

ConservativeMap tamari() { return ConservativeMap::preset("tamari"); }

// All P keys of degree <= max for one decoration per size.
std::vector<std::vector<DecoratedDiagram>> basis(const ConservativeMap& map, int max,
                                                 const std::function<Decoration(int)>& dec) {
  std::vector<std::vector<DecoratedDiagram>> out;
  for (int n = 0; n <= max; ++n) out.push_back(p_basis(dec(n), map));
  return out;
}

bool coefficients_zero_one(const PElement& x) {
  for (const auto& [k, c] : x) {
    if (c != 1) return false;
  }
  return true;
}

bool coefficients_zero_one(const PTensor& x) {
  for (const auto& [k, c] : x) {
    if (c != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("F product on examples") {
  CHECK(product_F(F("1", "a"), F("1", "b")) == sum({F("12", "ab"), F("21", "ab")}));
  FElement ten = product_F(F("12", "aa"), F("231", "bbb"));
  CHECK(ten.size() == 10);
  for (const char* rho : {"12453", "14253", "14523", "14532", "41253", "41523", "41532", "45123", "45132", "45312"}) {
    CHECK(ten.coeff(F(rho, "aabbb")) == 1);
  }
  FElement unit = unit_F(Decoration::word(""));
  FElement x = FElement::single(F("231", "abc"));
  CHECK(product_F(unit, x) == x);
  CHECK(product_F(x, unit) == x);
  CHECK_THROWS_AS(product_F(F("1", "a"), DecoratedPermutation(P("1"), Decoration::walls(preset_walls("full", 1)))),
                  SemanticError);
  CHECK_THROWS_AS(DecoratedPermutation(P("12"), Decoration::word("a")), InvalidInput);
}

TEST_CASE("F coproduct on examples") {
  FTensor d = coproduct_F(F("231", "abc"));
  CHECK(d.size() == 4);
  CHECK(d.coeff({F("1", "b"), F("21", "ac")}) == 1);
  CHECK(d.coeff({F("e", ""), F("231", "abc")}) == 1);
  CHECK(d.coeff({F("231", "abc"), F("e", "")}) == 1);
  CHECK(d.coeff({F("12", "bc"), F("1", "a")}) == 1);
  CHECK(coproduct_F(F("14352")).coeff({F("12"), F("231")}) == 1);
  CHECK(coproduct_F(F("e", "")) == FTensor::single({F("e", ""), F("e", "")}));
  CHECK(counit(FElement::single(F("e", ""), 3)) == 3);
  CHECK(counit(FElement::single(F("1", "a"))) == 0);
}

TEST_CASE("P to F and back") {
  DecoratedDiagram d = Pd(3, {A(2, 3, 3)}, tamari());
  CHECK(P_to_F(d) == sum({F("132"), F("312")}));
  CHECK(fiber(d) == std::vector<Permutation>{P("132"), P("312")});
  CHECK(F_to_P(sum({F("132"), F("312")}), tamari()) == PElement::single(d));
  CHECK_THROWS_AS(F_to_P(FElement::single(F("132")), tamari()), NotInSubspace);
  CHECK(P_to_F(Pd(2, {}, ConservativeMap::preset("boolean"))) == FElement::single(F("12")));
  for (const Permutation& s : all_permutations(4)) {
    DecoratedDiagram e(delta_down(s), trivial_decoration(4), ConservativeMap::full());
    CHECK(P_to_F(e) == FElement::single(DecoratedPermutation(s, trivial_decoration(4))));
  }
  CHECK_THROWS_AS(Pd(3, {A(1, 3, 3)}, tamari()), SemanticError);
  for (const ConservativeMap& map : {tamari(), ConservativeMap::preset("rect"), ConservativeMap::down()}) {
    std::set<Permutation> seen;
    std::size_t total = 0;
    for (const DecoratedDiagram& k : p_basis(Decoration::word("abab"), map)) {
      FElement f = P_to_F(k);
      CHECK(F_to_P(f, map) == PElement::single(k));
      for (const auto& [key, c] : f) {
        CHECK(c == 1);
        seen.insert(key.perm);
      }
      total += f.size();
    }
    // Fibers partition S_4.
    CHECK(seen.size() == 24);
    CHECK(total == 24);
  }
}

TEST_CASE("P product and coproduct") {
  DecoratedDiagram one = Pd(1, {}, tamari());
  PElement prod = product_P(one, one);
  CHECK(prod.size() == 2);
  CHECK(prod.coeff(Pd(2, {}, tamari())) == 1);
  CHECK(prod.coeff(Pd(2, {A(1, 2, 2)}, tamari())) == 1);
  CHECK(product_P_interval(one, one) == prod);
  DecoratedDiagram empty = Pd(0, {}, tamari());
  PTensor cut = coproduct_P(one);
  CHECK(cut.size() == 2);
  CHECK(cut.coeff({empty, one}) == 1);
  CHECK(cut.coeff({one, empty}) == 1);
  CHECK_THROWS_AS(product_P(one, Pd(1, {}, ConservativeMap::full())), SemanticError);

  // Degree-0 idempotent of the empty extended ideal.
  Decoration none = Decoration::ext_ideal(ArcIdeal(0, ArcSet(), true));
  DecoratedDiagram idem(NoncrossingArcDiagram(0, ArcSet()), none, ConservativeMap::strict());
  CHECK(product_P(idem, idem) == PElement::single(idem));
}

TEST_CASE("P expansions are multiplicity free" * doctest::timeout(300)) {
  Rng rng(11);
  std::vector<std::pair<ConservativeMap, std::function<Decoration(int)>>> cases;
  cases.push_back({tamari(), trivial_decoration});
  cases.push_back({ConservativeMap::preset("boolean"), trivial_decoration});
  cases.push_back({ConservativeMap::preset("rect"), trivial_decoration});
  std::vector<Decoration> walls;
  for (int n = 0; n <= 3; ++n) walls.push_back(walls_instance(2, 1, 1).sample(n, rng));
  cases.push_back({ConservativeMap::walls(), [walls](int n) { return walls[n]; }});
  for (const auto& [map, dec] : cases) {
    CAPTURE(map.tag());
    auto keys = basis(map, 3, dec);
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; m + n <= 4 && n <= 3; ++n) {
        for (const auto& a : keys[m]) {
          for (const auto& b : keys[n]) {
            PElement x = product_P(a, b);
            CHECK(coefficients_zero_one(x));
            CHECK(product_P_interval(a, b) == x);
            CHECK(P_to_F(x) == product_F(P_to_F(a), P_to_F(b)));
          }
        }
      }
      for (const auto& a : keys[m]) CHECK(coefficients_zero_one(coproduct_P(a)));
    }
  }
}

TEST_CASE("hopf identities in the F basis") {
  std::vector<std::vector<Decoration>> decs;
  for (int n = 0; n <= 4; ++n) decs.push_back(*word_instance("ab").enumerate(n));
  auto by_size = f_basis_by_size(decs);
  HopfCheckOptions opts;
  opts.max_total = 4;
  auto ops = f_basis_ops();
  CheckReport c = check_compatibility(by_size, ops, opts);
  CHECK_MESSAGE(c.pass, c.witness);
  CHECK(c.cases > 0);
  CheckReport a = check_associativity(by_size, ops, opts);
  CHECK_MESSAGE(a.pass, a.witness);
  CheckReport co = check_coassociativity(by_size, ops, opts);
  CHECK_MESSAGE(co.pass, co.witness);
}

TEST_CASE("hopf identities in the P basis" * doctest::timeout(300)) {
  HopfCheckOptions opts;
  opts.max_total = 4;
  std::vector<std::vector<Decoration>> trivial;
  for (int n = 0; n <= 4; ++n) trivial.push_back({trivial_decoration(n)});
  for (const char* preset : {"tamari", "boolean", "rect", "sash"}) {
    CAPTURE(preset);
    CheckReport r = check_hopf_compatibility(trivial, ConservativeMap::preset(preset), opts);
    CHECK_MESSAGE(r.pass, r.witness);
    CHECK(r.check == std::string("hopf-compatibility:P:preset:") + preset);
  }
  auto p_ops = p_basis_ops();
  auto keys = p_basis_by_size(trivial, tamari());
  CHECK(check_associativity(keys, p_ops, opts).pass);
  CHECK(check_coassociativity(keys, p_ops, opts).pass);

  auto ext = decorations_by_size(extideal_instance(), 3, 4, 5);
  opts.max_total = 3;
  CheckReport e = check_hopf_compatibility(ext, ConservativeMap::strict(), opts);
  CHECK_MESSAGE(e.pass, e.witness);
}

TEST_CASE("a coproduct without the k = 0 term is not compatible") {
  AlgebraOps<DecoratedPermutation> ops = f_basis_ops();
  ops.coproduct = [](const DecoratedPermutation& a) {
    FTensor t = coproduct_F(a);
    DecoratedPermutation empty(Permutation(), select(a.dec, {}));
    t.add({empty, a}, -1);
    return t;
  };
  std::vector<std::vector<Decoration>> decs;
  for (int n = 0; n <= 3; ++n) decs.push_back(*word_instance("ab").enumerate(n));
  HopfCheckOptions opts;
  opts.max_total = 3;
  CheckReport r = check_compatibility(f_basis_by_size(decs), ops, opts);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("decorations by size") {
  auto words = decorations_by_size(word_instance("ab"), 3, 100, 1);
  CHECK(words[3].size() == 8);
  auto sampled = decorations_by_size(walls_instance(2, 1, 1), 3, 2, 1);
  CHECK(sampled[3].size() <= 2);
  CHECK(decorations_by_size(walls_instance(2, 1, 1), 3, 2, 1) == sampled);
}

TEST_CASE("boolean coproducts are not multiplicity free") {
  // 2143 and 4231 lie in one class and both cut into 21 (x) 21.
  ConservativeMap boolean = ConservativeMap::preset("boolean");
  DecoratedDiagram d = Pd(4, {A(1, 2, 4), A(3, 4, 4)}, boolean);
  CHECK(fiber(d) == std::vector<Permutation>{P("2143"), P("2413"), P("2431"), P("4213"), P("4231")});
  DecoratedDiagram cut = Pd(2, {A(1, 2, 2)}, boolean);
  CHECK(coproduct_P(d).coeff({cut, cut}) == 2);
  CHECK(coproduct_F(P_to_F(d)).coeff({F("21"), F("21")}) == 2);
}
