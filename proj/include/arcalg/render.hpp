#pragma once

/// @file render.hpp
/// ASCII and SVG pictures of arc sets on a horizontal line of points, with
/// optional walls. Output is a pure function of the input.

#include <optional>
#include <string>

#include "arcalg/arc.hpp"

namespace arcalg {

struct Picture {
  int n = 0;
  /// Draws the phantom points 0 and n+1.
  bool extended = false;
  ArcSet arcs;
  std::optional<WallSpec> walls;

  static Picture of(const NoncrossingArcDiagram& d);
  static Picture of(const ArcIdeal& ideal);
  static Picture of(const WallSpec& walls);
};

/// One row per arc ('o' endpoints, '^' passes above, 'v' passes below),
/// then the point row with horizontal wall glyphs and the numbered axis.
std::string render_ascii(const Picture& picture);
std::string render_svg(const Picture& picture);

}  // namespace arcalg
