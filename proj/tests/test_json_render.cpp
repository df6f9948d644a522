#include <doctest.h>

#include "arcalg/error.hpp"
#include "arcalg/json_io.hpp"
#include "arcalg/render.hpp"
#include "test_support.hpp"

using namespace arcalg;
using arcalg::testing::A;
using arcalg::testing::P;

TEST_CASE("permutations and arcs round trip") {
  for (const Permutation& s : all_permutations(4)) CHECK(permutation_from_json(to_json(s)) == s);
  CHECK(permutation_from_json(Json("2537146")) == P("2537146"));
  CHECK(to_json(P("231")).dump() == "[2,3,1]");
  CHECK_THROWS_AS(permutation_from_json(Json("221")), InvalidInput);
  CHECK_THROWS_AS(permutation_from_json(Json{{"x", 1}}), InvalidInput);

  Arc a = A(1, 4, 4, {2});
  CHECK(to_json(a).dump() == R"({"a":1,"b":4,"n":4,"above":[2]})");
  CHECK(arc_from_json(to_json(a), 4, false) == a);
  CHECK_THROWS_AS(arc_from_json(to_json(A(0, 2, 2, {}, true)), 2, false), InvalidInput);
}

TEST_CASE("diagrams and ideals round trip") {
  NoncrossingArcDiagram d(7, ArcSet({A(3, 5, 7), A(1, 7, 7, {2, 3, 5})}));
  CHECK(diagram_from_json(to_json(d)) == d);
  ArcIdeal t = bounded_crossing_ideal(preset_walls("tamari", 4));
  CHECK(ideal_from_json(to_json(t)) == t);
  ArcIdeal e = permutree_embed({0, 1}, {1, 0});
  CHECK(ideal_from_json(to_json(e)) == e);

  Json bad = parse_json(R"({"n":3,"extended":false,"arcs":[{"a":1,"b":3,"n":3,"above":[2]}]})");
  CHECK_THROWS_AS(ideal_from_json(bad), SemanticError);
  CHECK(ideal_from_json(bad, true).size() == 3);
  int n = 0;
  CHECK(arc_set_from_json(bad, n).size() == 1);
  CHECK(n == 3);

  Json crossing = parse_json(R"({"n":4,"arcs":[{"a":1,"b":3,"n":4,"above":[]},{"a":2,"b":4,"n":4,"above":[]}]})");
  CHECK_THROWS(diagram_from_json(crossing));
  CHECK_THROWS_AS(parse_json("{"), InvalidInput);
}

TEST_CASE("walls, decorations and maps round trip") {
  WallSpec w{3, {1, 0, 2}, {0, 0, 1}, {1, 1, 1}, {1, 1, 1}, 2};
  CHECK(walls_from_json(to_json(w)) == w);
  CHECK(ideal_from_json(to_json(w)) == bounded_crossing_ideal(w));
  CHECK_THROWS_AS(walls_from_json(parse_json(R"({"type":"walls","k":1,"N":[0],"S":[0,0],"E":[0],"W":[0]})")),
                  InvalidInput);
  std::vector<Decoration> decs{
      Decoration::word("abba"), Decoration::walls(w),
      Decoration::ext_ideal(permutree_embed({0, 1, 0}, {1, 0, 0})),
      Decoration::pair(Decoration::word("ab"), Decoration::walls(preset_walls("boolean", 2)))};
  for (const Decoration& x : decs) CHECK(decoration_from_json(to_json(x)) == x);
  for (const ConservativeMap& m :
       {ConservativeMap::full(), ConservativeMap::down(), ConservativeMap::preset("rect"), ConservativeMap::walls(),
        ConservativeMap::strict(), ConservativeMap::intersect(ConservativeMap::walls(), ConservativeMap::strict()),
        ConservativeMap::restrict(ConservativeMap::full(), "letters:ab")}) {
    CHECK(map_from_json(to_json(m)) == m);
  }
  CHECK(map_from_json(Json("preset:tamari")) == ConservativeMap::preset("tamari"));
  CHECK(map_from_json(Json("tamari")) == ConservativeMap::preset("tamari"));
  CHECK_THROWS_AS(map_from_json(Json("nope")), InvalidInput);
}

TEST_CASE("basis keys and combinations") {
  DecoratedPermutation f(P("231"), Decoration::word("abc"));
  CHECK(decorated_permutation_from_json(to_json(f)) == f);
  DecoratedDiagram d(NoncrossingArcDiagram(3, ArcSet({A(2, 3, 3)})), trivial_decoration(3), ConservativeMap::preset("tamari"));
  CHECK(decorated_diagram_from_json(to_json(d)) == d);
  Json bad = to_json(d);
  bad["diagram"] = to_json(NoncrossingArcDiagram(3, ArcSet({A(1, 3, 3)})));
  CHECK_THROWS_AS(decorated_diagram_from_json(bad), SemanticError);
  FElement c = product_F(DecoratedPermutation(P("1"), Decoration::word("a")), DecoratedPermutation(P("1"), Decoration::word("b")));
  Json j = to_json(c);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == 1);
  CHECK(j[0]["key"]["perm"].dump() == "[1,2]");
}

TEST_CASE("reports") {
  CheckReport r;
  r.check = "x";
  r.cases = 3;
  CHECK(to_json(r).dump() == R"({"check":"x","status":"PASS","cases":3,"exhaustive":true})");
  r.fail("boom");
  CHECK(to_json(r)["status"] == "FAIL");
  CHECK(to_json(r)["witness"] == "boom");
}

TEST_CASE("ascii pictures") {
  CHECK(render_ascii(Picture::of(NoncrossingArcDiagram(3, ArcSet()))) == "   o   o   o\n   1   2   3\n");
  std::string one = render_ascii(Picture::of(NoncrossingArcDiagram(3, ArcSet({A(1, 3, 3, {2})}))));
  CHECK(one.find("o---^---o") != std::string::npos);
  CHECK(one.find("(1,3,3,{2})") != std::string::npos);
  std::string below = render_ascii(Picture::of(NoncrossingArcDiagram(3, ArcSet({A(1, 3, 3)}))));
  CHECK(below.find("o---v---o") != std::string::npos);
  CHECK(render_ascii(Picture::of(preset_walls("rect", 4))) ==
        "k=1\nN  0   0   0   0\n   o = o = o = o\n   1   2   3   4\nS  0   0   0   0\n");
  std::string tam = render_ascii(Picture::of(preset_walls("tamari", 2)));
  CHECK(tam.find("N  0   0") != std::string::npos);
  CHECK(tam.find("S  1   1") != std::string::npos);
  std::string ext = render_ascii(Picture::of(permutree_embed({0}, {1})));
  CHECK(ext.find(".") != std::string::npos);
}

TEST_CASE("svg pictures") {
  Picture pic = Picture::of(bounded_crossing_ideal(preset_walls("tamari", 4)));
  std::string svg = render_svg(pic);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(render_svg(pic) == svg);
  std::string walls = render_svg(Picture::of(preset_walls("boolean", 3)));
  CHECK(walls.find("#c33") != std::string::npos);
}
