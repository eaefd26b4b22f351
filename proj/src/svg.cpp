#include "reebforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace reebforge {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// One drawing panel: maps model coordinates into its own svg rectangle,
// flipping y (svg grows downward).
struct Panel {
  double x0, y0, w, h;          // svg placement
  double mx0, my0, mx1, my1;    // model window
  double sx(double x) const { return x0 + (x - mx0) / (mx1 - mx0) * w; }
  double sy(double y) const { return y0 + (my1 - y) / (my1 - my0) * h; }
};

void line(std::ostringstream& os, double x1, double y1, double x2, double y2,
          const std::string& color, double width = 1.5) {
  os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
     << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

void dot(std::ostringstream& os, double x, double y, const std::string& fill, double r = 3) {
  os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" fill=\""
     << fill << "\"/>\n";
}

void text(std::ostringstream& os, double x, double y, const std::string& s, int size = 11) {
  os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" font-size=\""
     << size << "\">" << s << "</text>\n";
}

void draw_region(std::ostringstream& os, const Panel& p, const Arrangement& a) {
  for (const Curve& c : a.curves) {
    std::string color =
        c.group == 1 || c.group == 2 ? "blue" : (c.group == 3 ? "red" : "green");
    if (!c.is_circle()) {
      double v = rat_to_double(c.c0);
      if (c.shape == CurveShape::VLine)
        line(os, p.sx(v), p.sy(p.my0), p.sx(v), p.sy(p.my1), color);
      else
        line(os, p.sx(p.mx0), p.sy(v), p.sx(p.mx1), p.sy(v), color);
    } else {
      double r = std::sqrt(rat_to_double(c.r2));
      double scale = p.w / (p.mx1 - p.mx0);
      os << "<circle cx=\"" << num(p.sx(rat_to_double(c.cx))) << "\" cy=\""
         << num(p.sy(rat_to_double(c.cy))) << "\" r=\"" << num(r * scale) << "\" stroke=\"" << color
         << "\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    }
  }
}

// Deterministic Reeb layout: vertices share an x per level; vertices at one
// level spread vertically in id order; the k-th edge of a parallel bundle
// bows out by k.
void draw_reeb(std::ostringstream& os, const Panel& p, const ReebGraph& rg) {
  const Multigraph& g = rg.skeleton;
  std::map<std::string, std::pair<double, double>> pos;
  std::map<double, std::vector<std::string>> by_level;
  for (int v = 0; v < g.vertex_count(); ++v)
    by_level[rat_to_double(rg.vertex_level.at(g.vertex_id(v)))].push_back(g.vertex_id(v));
  for (auto& [lvl, ids] : by_level) {
    std::sort(ids.begin(), ids.end());
    for (size_t k = 0; k < ids.size(); ++k)
      pos[ids[k]] = {lvl, (p.my1 - p.my0) * double(k + 1) / double(ids.size() + 1) + p.my0};
  }
  std::map<std::pair<int, int>, int> bundle_seen;
  for (const auto& [u, v] : g.edges()) {
    auto [ux, uy] = pos[g.vertex_id(u)];
    auto [vx, vy] = pos[g.vertex_id(v)];
    int bow = bundle_seen[{std::min(u, v), std::max(u, v)}]++;
    double mx = (p.sx(ux) + p.sx(vx)) / 2, my = (p.sy(uy) + p.sy(vy)) / 2;
    double off = bow == 0 ? 0 : (bow % 2 ? 1 : -1) * 8.0 * ((bow + 1) / 2);
    os << "<path d=\"M " << num(p.sx(ux)) << " " << num(p.sy(uy)) << " Q " << num(mx) << " "
       << num(my + off) << " " << num(p.sx(vx)) << " " << num(p.sy(vy))
       << "\" stroke=\"black\" stroke-width=\"1.2\" fill=\"none\"/>\n";
  }
  for (const auto& [id, xy] : pos) {
    dot(os, p.sx(xy.first), p.sy(xy.second), "black");
    text(os, p.sx(xy.first) + 4, p.sy(xy.second) - 4, id, 9);
  }
}

void draw_tree(std::ostringstream& os, const Panel& p, const LeveledEmbedding& e) {
  auto vx = [&](const std::string& v) { return p.sx(double(e.level_of.at(v))); };
  auto vy = [&](const std::string& v) { return p.sy(rat_to_double(e.lane_of.at(v))); };
  for (const auto& [u, v] : e.tree.edges()) {
    const std::string &a = e.tree.vertex_id(u), &b = e.tree.vertex_id(v);
    line(os, vx(a), vy(a), vx(b), vy(b), "black", 1.2);
  }
  for (int v = 0; v < e.tree.vertex_count(); ++v) {
    const std::string& id = e.tree.vertex_id(v);
    dot(os, vx(id), vy(id), "black");
    text(os, vx(id) + 4, vy(id) - 4, id, 9);
  }
}

Panel region_panel(const Arrangement& a, double x0, double w, double h) {
  double pad_x = rat_to_double(a.X2 - a.X1) * 0.08 + 0.2;
  double pad_y = rat_to_double(a.Y2 - a.Y1) * 0.08 + 0.2;
  return Panel{x0,
               30,
               w,
               h,
               rat_to_double(a.X1) - pad_x,
               rat_to_double(a.Y1) - pad_y,
               rat_to_double(a.X2) + pad_x,
               rat_to_double(a.Y2) + pad_y};
}

std::string document(double w, double h, const std::string& body) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << body << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_region_svg(const Arrangement& a, const ReebGraph* reeb) {
  double pw = 420, ph = 360;
  std::ostringstream os;
  Panel rp = region_panel(a, 20, pw, ph);
  text(os, rp.x0, 20, "region");
  draw_region(os, rp, a);
  double total_w = pw + 40;
  if (reeb) {
    Panel qp{pw + 60, 30, pw, ph, rp.mx0, 0, rp.mx1, 1};
    text(os, qp.x0, 20, "reeb graph");
    draw_reeb(os, qp, *reeb);
    total_w += pw + 20;
  }
  return document(total_w, ph + 50, os.str());
}

std::string render_svg(const RealizationBundle& b) {
  double pw = 380, ph = 360;
  std::ostringstream os;
  const LeveledEmbedding& e = b.embedding;
  double lanes_hi = 0.5;
  for (const auto& [v, lane] : e.lane_of) lanes_hi = std::max(lanes_hi, rat_to_double(lane));
  Panel tp{20, 30, pw, ph, 0.5, -0.5, double(e.level_count) + 0.5, lanes_hi + 0.5};
  text(os, tp.x0, 20, "input tree");
  draw_tree(os, tp, e);
  Panel rp = region_panel(b.arrangement, pw + 60, pw, ph);
  text(os, rp.x0, 20, "region");
  draw_region(os, rp, b.arrangement);
  Panel qp{2 * pw + 100, 30, pw, ph, rp.mx0, 0, rp.mx1, 1};
  text(os, qp.x0, 20, "reeb graph");
  draw_reeb(os, qp, b.computed_reeb);
  return document(3 * pw + 140, ph + 50, os.str());
}

}  // namespace reebforge
