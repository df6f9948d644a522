#include "arcalg/render.hpp"

#include <algorithm>
#include <sstream>

namespace arcalg {

Picture Picture::of(const NoncrossingArcDiagram& d) { return Picture{d.n(), false, d.arcs(), std::nullopt}; }

Picture Picture::of(const ArcIdeal& ideal) {
  return Picture{ideal.n(), ideal.extended(), ideal.arcs(), std::nullopt};
}

Picture Picture::of(const WallSpec& walls) { return Picture{walls.n, false, ArcSet(), walls}; }

namespace {

constexpr int kCell = 4;
constexpr const char* kMargin = "   ";

int first_point(const Picture& p) { return p.extended ? 0 : 1; }
int last_point(const Picture& p) { return p.extended ? p.n + 1 : p.n; }

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

int horizontal_walls(const WallSpec& w, int c) { return std::min(w.east[c - 1], w.west[c]); }

std::string gap_glyph(int count) {
  if (count <= 0) return "   ";
  if (count == 1) return " = ";
  if (count == 2) return " ==";
  if (count == 3) return "===";
  std::string s = "=" + std::to_string(count);
  return s.size() >= 3 ? s : s + std::string(3 - s.size(), ' ');
}

}  // namespace

std::string render_ascii(const Picture& picture) {
  const int lo = first_point(picture);
  const int hi = last_point(picture);
  const int width = (hi - lo) * kCell + 1;
  auto col = [&](int point) { return (point - lo) * kCell; };
  std::ostringstream out;

  if (picture.walls) out << "k=" << picture.walls->k << '\n';
  for (const Arc& arc : picture.arcs) {
    std::string row(static_cast<std::size_t>(std::max(width, 0)), ' ');
    for (int x = col(arc.a); x <= col(arc.b); ++x) row[x] = '-';
    row[col(arc.a)] = 'o';
    row[col(arc.b)] = 'o';
    PointSet interior = arc.interior();
    for (int c : interior.elements()) row[col(c)] = arc.above.contains(c) ? '^' : 'v';
    out << kMargin << rstrip(row) << "  " << arc.to_string() << '\n';
  }

  auto counts_row = [&](const std::vector<int>& counts) {
    std::string row(static_cast<std::size_t>(std::max(width, 0)), ' ');
    for (int c = 1; c <= picture.n; ++c) {
      std::string v = std::to_string(counts[c - 1]);
      row.replace(col(c), v.size(), v);
    }
    return rstrip(row);
  };

  if (picture.walls) out << "N  " << counts_row(picture.walls->north) << '\n';
  std::string points;
  std::string axis;
  for (int c = lo; c <= hi; ++c) {
    bool phantom = c == 0 || c == picture.n + 1;
    points += phantom ? '.' : 'o';
    std::string label = std::to_string(c);
    axis += label;
    if (c < hi) {
      bool walled = picture.walls && c >= 1 && c + 1 <= picture.n;
      points += walled ? gap_glyph(horizontal_walls(*picture.walls, c)) : "   ";
      axis += std::string(static_cast<std::size_t>(std::max(1, kCell - static_cast<int>(label.size()))), ' ');
    }
  }
  out << kMargin << rstrip(points) << '\n';
  out << kMargin << rstrip(axis) << '\n';
  if (picture.walls) out << "S  " << counts_row(picture.walls->south) << '\n';
  return out.str();
}

namespace {

constexpr int kSpacing = 40;
constexpr int kLift = 12;

}  // namespace

std::string render_svg(const Picture& picture) {
  const int lo = first_point(picture);
  const int hi = last_point(picture);
  const int span = std::max(hi - lo, 1);
  const int width = (hi - lo + 2) * kSpacing;
  const int reach = kLift * (span + 1);
  const int height = 2 * reach + 2 * kSpacing;
  const int axis = height / 2;
  auto x_of = [&](int c) { return (c - lo + 1) * kSpacing; };
  std::ostringstream out;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <line x1=\"" << x_of(lo) << "\" y1=\"" << axis << "\" x2=\"" << x_of(hi) << "\" y2=\"" << axis
      << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";

  if (picture.walls) {
    const WallSpec& w = *picture.walls;
    for (int c = 1; c <= w.n; ++c) {
      for (int j = 0; j < w.north[c - 1]; ++j) {
        int x = x_of(c) + 3 * j - (w.north[c - 1] - 1);
        out << "  <line class=\"wall north\" x1=\"" << x << "\" y1=\"" << axis - 6 << "\" x2=\"" << x
            << "\" y2=\"" << axis - reach << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
      }
      for (int j = 0; j < w.south[c - 1]; ++j) {
        int x = x_of(c) + 3 * j - (w.south[c - 1] - 1);
        out << "  <line class=\"wall south\" x1=\"" << x << "\" y1=\"" << axis + 6 << "\" x2=\"" << x
            << "\" y2=\"" << axis + reach << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
      }
    }
    for (int c = 1; c + 1 <= w.n; ++c) {
      int count = horizontal_walls(w, c);
      for (int j = 0; j < count; ++j) {
        int y = axis + 3 * j - (count - 1);
        out << "  <line class=\"wall horizontal\" x1=\"" << x_of(c) + 8 << "\" y1=\"" << y << "\" x2=\""
            << x_of(c + 1) - 8 << "\" y2=\"" << y << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
      }
    }
  }

  for (const Arc& arc : picture.arcs) {
    int lift = kLift * (arc.b - arc.a);
    out << "  <path class=\"arc\" d=\"M " << x_of(arc.a) << ' ' << axis;
    for (int c : arc.interior().elements()) {
      out << " L " << x_of(c) << ' ' << (arc.above.contains(c) ? axis - lift : axis + lift);
    }
    out << " L " << x_of(arc.b) << ' ' << axis << "\" fill=\"none\" stroke=\"#226\" stroke-width=\"2\"/>\n";
  }

  for (int c = lo; c <= hi; ++c) {
    bool phantom = c == 0 || c == picture.n + 1;
    out << "  <circle cx=\"" << x_of(c) << "\" cy=\"" << axis << "\" r=\"4\" fill=\""
        << (phantom ? "#fff" : "#000") << "\" stroke=\"#000\"/>\n";
    out << "  <text x=\"" << x_of(c) << "\" y=\"" << height - 8
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << c << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace arcalg
