// arcalg: enumeration, maps, algebra, checks and rendering from the shell.
//
// Exit codes: 0 success or PASS, 1 check FAIL, 2 malformed input,
// 3 semantic error, 4 resource limit.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "arcalg/arc.hpp"
#include "arcalg/decoration.hpp"
#include "arcalg/diagram_maps.hpp"
#include "arcalg/error.hpp"
#include "arcalg/hopf.hpp"
#include "arcalg/json_io.hpp"
#include "arcalg/permutation.hpp"
#include "arcalg/render.hpp"

using namespace arcalg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitLimit = 4;

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json load_json(const std::string& arg) {
  std::size_t start = arg.find_first_not_of(" \t\n");
  if (start != std::string::npos && (arg[start] == '{' || arg[start] == '[')) return parse_json(arg);
  std::ifstream in(arg);
  if (!in) throw InvalidInput("cannot read " + arg);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

ConservativeMap load_map(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return map_from_json(parse_json(arg));
  if (std::filesystem::exists(arg)) return map_from_json(load_json(arg));
  return map_from_json(Json(arg));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_limit(int n, int limit, const char* what) {
  if (n > limit) {
    throw ResourceLimit(std::string(what) + " " + std::to_string(n) + " exceeds --limit " +
                        std::to_string(limit));
  }
}

ArcIdeal resolve_ideal(const std::string& ideal_arg, const std::string& preset, int n, bool close) {
  if (!ideal_arg.empty()) {
    ArcIdeal ideal = ideal_from_json(load_json(ideal_arg), close);
    if (ideal.extended()) throw InvalidInput("expected an ideal of strict arcs");
    if (n >= 0 && ideal.n() != n) {
      throw InvalidInput("ideal is on " + std::to_string(ideal.n()) + " points, expected " + std::to_string(n));
    }
    return ideal;
  }
  if (n < 0) throw InvalidInput("--n is required");
  if (!preset.empty()) return bounded_crossing_ideal(preset_walls(preset, n));
  return ArcIdeal(n, all_arcs(n));
}

std::string ideal_label(const std::string& ideal_arg, const std::string& preset) {
  if (!ideal_arg.empty()) return "custom";
  return preset.empty() ? "full" : preset;
}

std::string diagram_string(const NoncrossingArcDiagram& d) {
  std::string s = "{";
  bool first = true;
  for (const Arc& arc : d.arcs()) {
    if (!first) s += ", ";
    s += arc.to_string();
    first = false;
  }
  return s + "}";
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw InvalidInput("unsupported --format " + format + " for this command");
}

// ------------------------------------------------------------------ operands

// "231:bbb" decorates 231 by the word bbb; "231" uses the trivial word.
DecoratedPermutation compact_permutation(const std::string& text) {
  std::size_t colon = text.find(':');
  Permutation perm = Permutation::parse(text.substr(0, colon));
  Decoration dec = colon == std::string::npos ? trivial_decoration(perm.size())
                                              : Decoration::word(text.substr(colon + 1));
  return DecoratedPermutation(perm, dec);
}

FElement f_operand(const std::string& arg) {
  std::size_t start = arg.find_first_not_of(" \t");
  if (start == std::string::npos || (arg[start] != '{' && arg[start] != '[')) {
    if (!std::filesystem::exists(arg)) return FElement::single(compact_permutation(arg));
  }
  Json j = load_json(arg);
  if (j.is_object()) return FElement::single(decorated_permutation_from_json(j));
  FElement out;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("key") || !term["coeff"].is_number_integer()) {
      throw InvalidInput("linear combination terms need integer \"coeff\" and \"key\"");
    }
    out.add(decorated_permutation_from_json(term["key"]), term["coeff"].get<long long>());
  }
  return out;
}

// Compact P operands name the class of a permutation: "312:ab" is
// P_(eta(312), ab) under the given map.
PElement p_operand(const std::string& arg, const std::optional<ConservativeMap>& map) {
  std::size_t start = arg.find_first_not_of(" \t");
  if (start == std::string::npos || (arg[start] != '{' && arg[start] != '[')) {
    if (!std::filesystem::exists(arg)) {
      if (!map) throw InvalidInput("compact P operands need --map");
      DecoratedPermutation key = compact_permutation(arg);
      ArcIdeal ideal = iota(*map, key.dec);
      return PElement::single(DecoratedDiagram(eta_down(ideal, key.perm), key.dec, *map));
    }
  }
  Json j = load_json(arg);
  if (j.is_object()) return PElement::single(decorated_diagram_from_json(j));
  PElement out;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("key") || !term["coeff"].is_number_integer()) {
      throw InvalidInput("linear combination terms need integer \"coeff\" and \"key\"");
    }
    out.add(decorated_diagram_from_json(term["key"]), term["coeff"].get<long long>());
  }
  return out;
}

template <class Key>
void print_combination(const LinComb<Key>& c, const std::string& basis, const std::string& format) {
  if (format == "ascii") {
    for (const auto& [k, coeff] : c) std::cout << coeff << " " << k.to_string() << '\n';
    return;
  }
  print(Json{{"basis", basis}, {"terms", c.size()}, {"result", to_json(c)}});
}

template <class Key>
void print_tensor(const TensorComb<Key>& c, const std::string& basis, const std::string& format) {
  if (format == "ascii") {
    for (const auto& [t, coeff] : c) {
      std::cout << coeff << " " << t.left.to_string() << " (x) " << t.right.to_string() << '\n';
    }
    return;
  }
  print(Json{{"basis", basis}, {"terms", c.size()}, {"result", to_json(c)}});
}

int report_exit(const CheckReport& r) {
  print(to_json(r));
  return r.pass ? 0 : kExitFail;
}

IdealFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw InvalidInput("family spec needs a \"type\" string");
  }
  std::string type = j["type"].get<std::string>();
  auto name = [&](const char* key, const char* fallback) {
    if (!j.contains(key)) return std::string(fallback);
    if (!j[key].is_string()) throw InvalidInput(std::string("\"") + key + "\" must be a preset name");
    return j[key].get<std::string>();
  };
  if (type == "preset") {
    std::string preset = name("preset", "full");
    preset_walls(preset, 0);
    return [preset](int n) { return bounded_crossing_ideal(preset_walls(preset, n)).arcs(); };
  }
  if (type == "alternating") {
    std::string even = name("even", "full");
    std::string odd = name("odd", "down");
    preset_walls(even, 0);
    preset_walls(odd, 0);
    return [even, odd](int n) {
      return bounded_crossing_ideal(preset_walls(n % 2 == 0 ? even : odd, n)).arcs();
    };
  }
  if (type == "explicit") {
    if (!j.contains("ideals") || !j["ideals"].is_array()) throw InvalidInput("explicit family needs \"ideals\"");
    std::vector<ArcSet> members;
    for (std::size_t n = 0; n < j["ideals"].size(); ++n) {
      int size = 0;
      members.push_back(arc_set_from_json(j["ideals"][n], size));
      if (size != static_cast<int>(n)) throw InvalidInput("explicit family member " + std::to_string(n) + " has wrong size");
    }
    return [members](int n) {
      if (n >= static_cast<int>(members.size())) {
        throw InvalidInput("explicit family has no member of size " + std::to_string(n));
      }
      return members[n];
    };
  }
  throw InvalidInput("unknown family type: " + type);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice congruences of the weak order and decorated Hopf algebras"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string format;
  std::uint64_t seed = 1;
  int jobs = 1;
  int limit = 8;
  bool close = false;
  std::string preset;
  std::string ideal_arg;
  int n = -1;
  int max_n = -1;

  // Options share storage across subcommands, so the format default is
  // applied when the selected command runs.
  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--format", format, "json, ascii or svg (default " + default_format + ")");
    cmd->add_option("--limit", limit, "size cap for exhaustive commands")->default_val(8);
  };

  // map
  CLI::App* map_cmd = app.add_subcommand("map", "diagram of the congruence class of a permutation");
  std::string perm_arg;
  bool up = false;
  bool down = false;
  map_cmd->add_option("--perm", perm_arg, "permutation in one-line notation")->required();
  auto* map_preset = map_cmd->add_option("--preset", preset, "walls preset naming the ideal");
  map_cmd->add_option("--ideal", ideal_arg, "ideal JSON or file")->excludes(map_preset);
  map_cmd->add_flag("--close", close, "apply the forcing closure to --ideal");
  auto* down_flag = map_cmd->add_flag("--down", down, "bottom-anchored map (default)");
  map_cmd->add_flag("--up", up, "top-anchored map")->excludes(down_flag);
  add_common(map_cmd, "json");
  map_cmd->callback([&] {
    action = [&] {
      if (format.empty()) format = "json";
      check_format(format, {"json", "ascii", "svg"});
      Permutation sigma = Permutation::parse(perm_arg);
      ArcIdeal ideal = resolve_ideal(ideal_arg, preset, sigma.size(), close);
      NoncrossingArcDiagram d = up ? eta_up(ideal, sigma) : eta_down(ideal, sigma);
      if (format == "ascii") {
        std::cout << render_ascii(Picture::of(d));
      } else if (format == "svg") {
        std::cout << render_svg(Picture::of(d));
      } else {
        bool full = ideal.arcs() == all_arcs(ideal.n());
        print(Json{{"perm", to_json(sigma)},
                   {"direction", up ? "up" : "down"},
                   {"ideal", ideal_label(ideal_arg, preset)},
                   {"map", full ? "delta" : "eta"},
                   {"diagram", to_json(d)}});
      }
      return 0;
    };
  });

  // classes
  CLI::App* classes_cmd = app.add_subcommand("classes", "congruence classes of S_n");
  classes_cmd->add_option("--n", n, "size");
  auto* classes_preset = classes_cmd->add_option("--preset", preset, "walls preset naming the ideal");
  classes_cmd->add_option("--ideal", ideal_arg, "ideal JSON or file")->excludes(classes_preset);
  classes_cmd->add_flag("--close", close, "apply the forcing closure to --ideal");
  add_common(classes_cmd, "json");
  classes_cmd->callback([&] {
    action = [&] {
      if (format.empty()) format = "json";
      check_format(format, {"json", "ascii"});
      ArcIdeal ideal = resolve_ideal(ideal_arg, preset, n, close);
      require_limit(ideal.n(), limit, "n");
      std::vector<CongruenceClass> classes = congruence_classes(ideal);
      if (format == "ascii") {
        for (const CongruenceClass& c : classes) {
          std::cout << diagram_string(c.diagram) << "  min " << c.bottom.to_string() << "  max "
                    << c.top.to_string() << "  size " << c.members.size() << '\n';
        }
        return 0;
      }
      Json list = Json::array();
      for (const CongruenceClass& c : classes) list.push_back(to_json(c));
      print(Json{{"n", ideal.n()}, {"ideal", ideal_label(ideal_arg, preset)}, {"count", classes.size()},
                 {"classes", list}});
      return 0;
    };
  });

  // counts
  CLI::App* counts_cmd = app.add_subcommand("counts", "number of classes for n = 1..max-n");
  counts_cmd->add_option("--preset", preset, "walls preset")->default_val("full");
  counts_cmd->add_option("--max-n", max_n, "largest size")->required();
  add_common(counts_cmd, "json");
  counts_cmd->callback([&] {
    action = [&] {
      if (format.empty()) format = "json";
      check_format(format, {"json", "ascii"});
      if (max_n < 1) throw InvalidInput("--max-n must be at least 1");
      require_limit(max_n, limit, "--max-n");
      std::vector<std::size_t> counts;
      for (int m = 1; m <= max_n; ++m) {
        counts.push_back(enumerate_noncrossing_diagrams(bounded_crossing_ideal(preset_walls(preset, m))).size());
      }
      if (format == "ascii") {
        for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
        std::cout << '\n';
      } else {
        print(Json{{"preset", preset}, {"counts", counts}});
      }
      return 0;
    };
  });

  // check
  CLI::App* check_cmd = app.add_subcommand("check", "run a property checker");
  check_cmd->require_subcommand(1);
  std::string decoration_spec;
  std::string map_spec;
  std::string basis;
  std::string family_spec;
  int max_size = 4;
  int trials = 2000;
  int samples = 64;
  auto add_check_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "seed for randomized trials")->default_val(1);
    cmd->add_option("--jobs", jobs, "worker threads")->default_val(1);
  };

  CLI::App* check_dec = check_cmd->add_subcommand("decoration", "decoration set axioms");
  check_dec->add_option("--decoration", decoration_spec, "instance, e.g. words:ab or walls:2:1:1")->required();
  check_dec->add_option("--max-size", max_size, "largest size")->default_val(4);
  check_dec->add_option("--trials", trials, "random trials per axiom when not exhaustive")->default_val(2000);
  add_check_common(check_dec);
  check_dec->callback([&] {
    action = [&] {
      DecorationInstance inst = instance_from_spec(decoration_spec);
      return report_exit(check_decoration_axioms(inst, CheckOptions{max_size, seed, trials, 1000000, jobs}));
    };
  });

  CLI::App* check_cons = check_cmd->add_subcommand("conservative", "conservative map conditions");
  check_cons->add_option("--decoration", decoration_spec, "instance")->required();
  check_cons->add_option("--map", map_spec, "map, e.g. walls or preset:tamari")->required();
  check_cons->add_option("--max-size", max_size, "largest size")->default_val(4);
  check_cons->add_option("--trials", trials, "random trials when not exhaustive")->default_val(2000);
  add_check_common(check_cons);
  check_cons->callback([&] {
    action = [&] {
      DecorationInstance inst = instance_from_spec(decoration_spec);
      ConservativeMap m = load_map(map_spec);
      return report_exit(check_conservative(m, inst, CheckOptions{max_size, seed, trials, 1000000, jobs}));
    };
  });

  CLI::App* check_hopf = check_cmd->add_subcommand("hopf", "product/coproduct compatibility and (co)associativity");
  check_hopf->add_option("--decoration", decoration_spec, "instance")->default_val("words:ab");
  check_hopf->add_option("--max-size", max_size, "largest total degree")->default_val(4);
  check_hopf->add_option("--basis", basis, "F or P (P needs --map)");
  check_hopf->add_option("--map", map_spec, "conservative map for the P basis");
  check_hopf->add_option("--samples", samples, "decorations per size; all of them when there are at most this many")
      ->default_val(64);
  add_check_common(check_hopf);
  check_hopf->callback([&] {
    action = [&] {
      if (basis.empty()) basis = map_spec.empty() ? "F" : "P";
      if (basis != "F" && basis != "P") throw InvalidInput("--basis must be F or P");
      if (basis == "P" && map_spec.empty()) throw InvalidInput("the P basis needs --map");
      if (basis == "F" && !map_spec.empty()) throw InvalidInput("--map only applies to the P basis");
      DecorationInstance inst = instance_from_spec(decoration_spec);
      auto decorations = decorations_by_size(inst, max_size, samples, seed);
      HopfCheckOptions opts{max_size, jobs};
      CheckReport report;
      if (basis == "P") {
        ConservativeMap m = load_map(map_spec);
        auto keys = p_basis_by_size(decorations, m);
        auto ops = p_basis_ops();
        report = check_compatibility(keys, ops, opts);
        report.merge(check_associativity(keys, ops, opts));
        report.merge(check_coassociativity(keys, ops, opts));
        report.check = "hopf:P:" + m.tag() + ":" + inst.name;
      } else {
        auto keys = f_basis_by_size(decorations);
        auto ops = f_basis_ops();
        report = check_compatibility(keys, ops, opts);
        report.merge(check_associativity(keys, ops, opts));
        report.merge(check_coassociativity(keys, ops, opts));
        report.check = "hopf:F:" + inst.name;
      }
      return report_exit(report);
    };
  });

  CLI::App* check_family = check_cmd->add_subcommand("family", "Hopf family conditions on a family of ideals");
  auto* family_preset = check_family->add_option("--preset", preset, "walls preset family");
  check_family->add_option("--spec", family_spec, "family JSON or file")->excludes(family_preset);
  check_family->add_option("--max-n", max_n, "largest size")->default_val(5);
  check_family->callback([&] {
    action = [&] {
      IdealFamily family;
      if (!family_spec.empty()) {
        family = family_from_json(load_json(family_spec));
      } else {
        family = family_from_json(Json{{"type", "preset"}, {"preset", preset.empty() ? "full" : preset}});
      }
      if (max_n < 0) throw InvalidInput("--max-n must be nonnegative");
      CheckReport r = check_hopf_family(family, max_n);
      r.check = "family:" + (family_spec.empty() ? (preset.empty() ? std::string("full") : preset) : std::string("spec"));
      return report_exit(r);
    };
  });

  CLI::App* check_cong = check_cmd->add_subcommand("congruence", "lattice congruence test for an arc set");
  check_cong->add_option("--n", n, "size");
  auto* cong_preset = check_cong->add_option("--preset", preset, "walls preset");
  check_cong->add_option("--ideal", ideal_arg, "arc set JSON or file (need not be closed)")->excludes(cong_preset);
  check_cong->add_flag("--close", close, "apply the forcing closure first");
  check_cong->add_option("--limit", limit, "size cap")->default_val(8);
  check_cong->callback([&] {
    action = [&] {
      ArcSet arcs;
      int size = n;
      if (!ideal_arg.empty()) {
        arcs = arc_set_from_json(load_json(ideal_arg), size);
        if (n >= 0 && size != n) throw InvalidInput("arc set size differs from --n");
        if (close) arcs = forcing_closure(arcs);
      } else {
        arcs = resolve_ideal("", preset, n, false).arcs();
      }
      require_limit(size, limit, "n");
      for (const Arc& a : arcs) {
        if (!a.is_strict()) throw InvalidInput("congruence test needs strict arcs");
      }
      CongruenceReport r = is_lattice_congruence(arcs, size);
      print(to_json(r));
      return r.pass() ? 0 : kExitFail;
    };
  });

  // product and coproduct
  std::vector<std::string> operands;
  auto run_algebra = [&](bool product) {
    if (format.empty()) format = "json";
    check_format(format, {"json", "ascii"});
    if (basis != "F" && basis != "P") throw InvalidInput("--basis must be F or P");
    std::optional<ConservativeMap> m;
    if (!map_spec.empty()) m = load_map(map_spec);
    if (basis == "F") {
      if (m) throw InvalidInput("--map only applies to the P basis");
      if (product) {
        print_combination(product_F(f_operand(operands[0]), f_operand(operands[1])), "F", format);
      } else {
        print_tensor(coproduct_F(f_operand(operands[0])), "F", format);
      }
    } else if (product) {
      print_combination(product_P(p_operand(operands[0], m), p_operand(operands[1], m)), "P", format);
    } else {
      print_tensor(coproduct_P(p_operand(operands[0], m)), "P", format);
    }
    return 0;
  };

  CLI::App* product_cmd = app.add_subcommand("product", "product of two basis elements or combinations");
  product_cmd->add_option("--basis", basis, "F or P")->default_val("F");
  product_cmd->add_option("--map", map_spec, "map for compact P operands");
  product_cmd->add_option("operands", operands, "two operands: 231:ab, key JSON, or combination JSON")
      ->required()
      ->expected(2);
  add_common(product_cmd, "json");
  product_cmd->callback([&] { action = [&] { return run_algebra(true); }; });

  CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of a basis element or combination");
  coproduct_cmd->add_option("--basis", basis, "F or P")->default_val("F");
  coproduct_cmd->add_option("--map", map_spec, "map for compact P operands");
  coproduct_cmd->add_option("operands", operands, "one operand")->required()->expected(1);
  add_common(coproduct_cmd, "json");
  coproduct_cmd->callback([&] { action = [&] { return run_algebra(false); }; });

  // render
  CLI::App* render_cmd = app.add_subcommand("render", "draw a diagram, an ideal or a walls preset");
  std::string diagram_arg;
  auto* render_diagram = render_cmd->add_option("--diagram", diagram_arg, "diagram JSON or file");
  auto* render_ideal = render_cmd->add_option("--ideal", ideal_arg, "ideal JSON or file")->excludes(render_diagram);
  render_cmd->add_option("--preset", preset, "walls preset")->excludes(render_diagram)->excludes(render_ideal);
  render_cmd->add_option("--n", n, "size for --preset");
  render_cmd->add_flag("--close", close, "apply the forcing closure to --ideal");
  add_common(render_cmd, "ascii");
  render_cmd->callback([&] {
    action = [&] {
      if (format.empty()) format = "ascii";
      check_format(format, {"json", "ascii", "svg"});
      Picture picture;
      if (!diagram_arg.empty()) {
        picture = Picture::of(diagram_from_json(load_json(diagram_arg)));
      } else if (!ideal_arg.empty()) {
        Json j = load_json(ideal_arg);
        if (j.is_object() && j.contains("type")) {
          picture = Picture::of(walls_from_json(j));
        } else {
          picture = Picture::of(ideal_from_json(j, close));
        }
      } else if (!preset.empty()) {
        if (n < 0) throw InvalidInput("--preset needs --n");
        picture = Picture::of(preset_walls(preset, n));
      } else {
        throw InvalidInput("render needs --diagram, --ideal or --preset");
      }
      if (format == "svg") {
        std::cout << render_svg(picture);
      } else if (format == "ascii") {
        std::cout << render_ascii(picture);
      } else {
        Json arcs = Json::array();
        for (const Arc& a : picture.arcs) arcs.push_back(to_json(a));
        Json out{{"n", picture.n}, {"extended", picture.extended}, {"arcs", arcs}};
        if (picture.walls) out["walls"] = to_json(*picture.walls);
        print(out);
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    return action ? action() : kExitMalformed;
  } catch (const NotInSubspace& e) {
    std::cerr << "arcalg: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kExitSemantic;
  } catch (const SemanticError& e) {
    std::cerr << "arcalg: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const ResourceLimit& e) {
    std::cerr << "arcalg: " << e.what() << '\n';
    return kExitLimit;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "arcalg: malformed JSON: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "arcalg: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "arcalg: " << e.what() << '\n';
    return kExitMalformed;
  }
}
