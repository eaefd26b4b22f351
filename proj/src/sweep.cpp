#include "reebforge/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "reebforge/quadext.hpp"

namespace reebforge {

namespace {

// --- shared exact pre-pass ------------------------------------------------
//
// Every singular column of the height function comes from a curve crossing or
// a circle extreme inside the closed region; both kinds are found exactly in
// QuadExt arithmetic regardless of which slab policy runs afterwards. The
// rational-event certificate holds when every such column is rational.

struct CrossEvent {
  QuadExt x, y;
  int i, j;  // curve indices, i < j
};

struct ExtremeEvent {
  QuadExt x;
  Rat cy;
  int curve;
};

struct PrePass {
  std::vector<CrossEvent> crossings;   // inside the closed region
  std::vector<ExtremeEvent> extremes;  // inside the closed region
  bool certificate = true;
};

PrePass exact_prepass(const Arrangement& a) {
  PrePass pp;
  int n = static_cast<int>(a.curves.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const CrossPoint& cp : curve_crossings(a.curves[i], a.curves[j])) {
        if (!in_closed_region(a, cp.x, cp.y)) continue;
        pp.crossings.push_back({cp.x, cp.y, i, j});
        if (!cp.x.is_rational()) pp.certificate = false;
      }
    }
    if (!a.curves[i].is_circle()) continue;
    auto [l, r] = circle_extreme_points(a.curves[i]);
    for (const CrossPoint& tip : {l, r}) {
      if (!in_closed_region(a, tip.x, tip.y)) continue;
      pp.extremes.push_back({tip.x, a.curves[i].cy, i});
      if (!tip.x.is_rational()) pp.certificate = false;
    }
  }
  return pp;
}

// --- arithmetic policies ----------------------------------------------------

struct ExactPolicy {
  using X = Rat;
  using Y = QuadExt;
  static constexpr bool exact = true;
  static int cmp(const Y& u, const Y& v) { return compare(u, v); }
  static Y of_rat(const Rat& r) { return QuadExt(r); }
  static std::optional<std::pair<Y, Y>> cut(const Curve& c, const X& x) {
    Rat d = c.r2 - (x - c.cx) * (x - c.cx);
    if (d <= 0) return std::nullopt;
    return std::make_pair(QuadExt(c.cy, Rat(-1), d), QuadExt(c.cy, Rat(1), d));
  }
  static Y arc(const Curve& c, int branch, const X& x) {
    Rat d = c.r2 - (x - c.cx) * (x - c.cx);
    if (d < 0) throw std::logic_error("boundary arc queried beyond its extreme");
    return QuadExt(c.cy, Rat(branch), d);
  }
  static X between(const X& lo, const X& hi) { return rat_between(lo, hi); }
  static X event_x(const CrossEvent& ce) { return ce.x.to_rational(); }
  static X extreme_x(const ExtremeEvent& ee) { return ee.x.to_rational(); }
  static bool same_x(const X& u, const X& v) { return u == v; }
  static Y event_y(const QuadExt& y) { return y; }
  static Rat to_level(const X& x) { return x; }
  static X x_of_rat(const Rat& r) { return r; }
  static std::string x_str(const X& x) { return x.get_str(); }
};

struct FloatPolicy {
  using X = double;
  using Y = double;
  static constexpr bool exact = false;
  static constexpr double tol = 1e-9;
  static int cmp(const Y& u, const Y& v) {
    if (u < v - tol) return -1;
    if (u > v + tol) return 1;
    return 0;
  }
  static Y of_rat(const Rat& r) { return r.get_d(); }
  static std::optional<std::pair<Y, Y>> cut(const Curve& c, const X& x) {
    double dx = x - c.cx.get_d();
    double d = c.r2.get_d() - dx * dx;
    if (d <= 1e-14) return std::nullopt;
    double s = std::sqrt(d);
    return std::make_pair(c.cy.get_d() - s, c.cy.get_d() + s);
  }
  static Y arc(const Curve& c, int branch, const X& x) {
    double dx = x - c.cx.get_d();
    double d = std::max(0.0, c.r2.get_d() - dx * dx);
    return c.cy.get_d() + branch * std::sqrt(d);
  }
  static X between(const X& lo, const X& hi) { return (lo + hi) / 2; }
  static X event_x(const CrossEvent& ce) { return ce.x.to_double(); }
  static X extreme_x(const ExtremeEvent& ee) { return ee.x.to_double(); }
  static bool same_x(const X& u, const X& v) { return std::abs(u - v) <= tol; }
  static Y event_y(const QuadExt& y) { return y.to_double(); }
  static Rat to_level(const X& x) { return Rat(x); }
  static X x_of_rat(const Rat& r) { return r.get_d(); }
  static std::string x_str(const X& x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }
};

struct Boundary {
  int curve = -1;
  int branch = 0;  // 0 for a line, else y = cy + branch * sqrt(d)
  bool operator==(const Boundary& o) const { return curve == o.curve && branch == o.branch; }
  bool operator!=(const Boundary& o) const { return !(*this == o); }
};

// --- the sweep core ---------------------------------------------------------
//
// Between consecutive singular columns the slice structure is constant, so
// one slab is one bundle of product cylinders. At each singular column the
// closed event slice is computed, both neighbor slabs are matched into its
// components by boundary limits, and a component carrying singular tags
// becomes one Reeb vertex per sheet class. Sheets exist for groups of
// exponent zero: an interval whose boundary touches such a group's curve has
// its two preimage points glued into one class, every other interval carries
// a separate class per sign. A tag or a contact at the event column glues the
// classes of that component; an untagged component whose neighbor structure
// changes is an undeclared topology change and aborts the sweep.

template <class P>
struct Core {
  using X = typename P::X;
  using Y = typename P::Y;
  using Label = std::vector<int>;

  struct Ival {
    Y lo, hi;
    Boundary blo, bhi;
    std::vector<bool> contact;  // per zero group: does a boundary arc belong to it?
  };

  struct EvComp {
    std::set<std::string> tags;
    std::set<int> tag_groups;  // groups of the curves named in tags
  };

  const Arrangement& a;
  const PrePass& pp;
  bool track_sheets;
  std::vector<int> zero_groups;  // exponent-zero groups that own curves
  ReebGraph rg;
  int next_vertex = 0;

  Core(const Arrangement& arr, const PrePass& pre, bool sheets)
      : a(arr), pp(pre), track_sheets(sheets) {
    std::set<int> groups_with_curves;
    for (const Curve& c : a.curves) groups_with_curves.insert(c.group);
    for (int g : groups_with_curves) {
      if (a.exponent_of_group(g) < 0)
        throw std::invalid_argument("negative exponent in group " + std::to_string(g));
      if (track_sheets && a.exponent_of_group(g) == 0) zero_groups.push_back(g);
    }
  }

  [[noreturn]] void abort_sweep(const std::string& why) const {
    throw std::runtime_error("sweep aborted: " + why);
  }

  // Closed slice of the region at column x: [Y1, Y2] minus the open cut of
  // every circle reaching past the column. A tangent column (d = 0) cuts
  // nothing, so a circle tip stays interior to its interval, and a cut whose
  // endpoint only touches an interval boundary removes nothing; both rules
  // keep the event slice closed, which the limit matching depends on.
  std::vector<Ival> slice(const X& x) const {
    std::vector<Ival> ivs;
    if (P::cmp(x, P::x_of_rat(a.X1)) < 0 || P::cmp(x, P::x_of_rat(a.X2)) > 0) return ivs;
    ivs.push_back({P::of_rat(a.Y1), P::of_rat(a.Y2), Boundary{2, 0}, Boundary{3, 0}, {}});
    for (int ci = 0; ci < static_cast<int>(a.curves.size()); ++ci) {
      const Curve& c = a.curves[ci];
      if (!c.is_circle()) continue;
      auto cut = P::cut(c, x);
      if (!cut) continue;
      const auto& [clo, chi] = *cut;
      std::vector<Ival> out;
      for (Ival& iv : ivs) {
        if (P::cmp(chi, iv.lo) <= 0 || P::cmp(clo, iv.hi) >= 0) {
          out.push_back(std::move(iv));
          continue;
        }
        if (P::cmp(iv.lo, clo) < 0) out.push_back({iv.lo, clo, iv.blo, Boundary{ci, -1}, {}});
        if (P::cmp(chi, iv.hi) < 0) out.push_back({chi, iv.hi, Boundary{ci, +1}, iv.bhi, {}});
      }
      ivs = std::move(out);
    }
    for (Ival& iv : ivs)
      for (int g : zero_groups)
        iv.contact.push_back(a.curves[iv.blo.curve].group == g ||
                             a.curves[iv.bhi.curve].group == g);
    return ivs;
  }

  Y boundary_at(const Boundary& b, const X& x) const {
    const Curve& c = a.curves[b.curve];
    if (b.branch == 0) return P::of_rat(c.c0);
    return P::arc(c, b.branch, x);
  }

  int locate(const std::vector<Ival>& E, const Y& v, const X& xe) const {
    for (int j = 0; j < static_cast<int>(E.size()); ++j)
      if (P::cmp(E[j].lo, v) <= 0 && P::cmp(v, E[j].hi) <= 0) return j;
    abort_sweep("component escaped the slice at column x = " + P::x_str(xe));
  }

  // Sheet labels of a slab interval: 0 where a contact glues the two
  // preimage points, otherwise both signs; the set is the product over the
  // exponent-zero groups.
  std::vector<Label> labels_of(const Ival& iv) const {
    std::vector<Label> out{{}};
    for (size_t gi = 0; gi < zero_groups.size(); ++gi) {
      std::vector<Label> next;
      for (const Label& base : out)
        for (int s : {-1, 0, +1}) {
          if (iv.contact[gi] != (s == 0)) continue;
          Label l = base;
          l.push_back(s);
          next.push_back(std::move(l));
        }
      out = std::move(next);
    }
    return out;
  }

  std::vector<X> collect_events() const {
    std::vector<X> xs{P::x_of_rat(a.X1), P::x_of_rat(a.X2)};
    for (const CrossEvent& ce : pp.crossings) xs.push_back(P::event_x(ce));
    for (const ExtremeEvent& ee : pp.extremes) xs.push_back(P::extreme_x(ee));
    std::sort(xs.begin(), xs.end());
    std::vector<X> uniq;
    for (const X& x : xs)
      if (uniq.empty() || !P::same_x(uniq.back(), x)) uniq.push_back(x);
    return uniq;
  }

  // Singular tags per event-slice component. Wall columns tag every
  // component; rectangle corners and splitter-wall crossings are subsumed by
  // the wall tag, while marker crossings always tag their component.
  std::vector<EvComp> singular_tags(const X& xe, const std::vector<Ival>& E) const {
    std::vector<EvComp> ev(E.size());
    bool left = P::same_x(xe, P::x_of_rat(a.X1));
    bool right = P::same_x(xe, P::x_of_rat(a.X2));
    for (EvComp& c : ev) {
      if (left) {
        c.tags.insert("LeftWallSegment");
        c.tag_groups.insert(a.curves[0].group);
      }
      if (right) {
        c.tags.insert("RightWallSegment");
        c.tag_groups.insert(a.curves[1].group);
      }
    }
    for (const ExtremeEvent& ee : pp.extremes) {
      if (!P::same_x(xe, P::extreme_x(ee))) continue;
      int j = locate(E, P::of_rat(ee.cy), xe);
      ev[j].tags.insert("Tangency(" + a.curves[ee.curve].name + ")");
      ev[j].tag_groups.insert(a.curves[ee.curve].group);
    }
    for (const CrossEvent& ce : pp.crossings) {
      if (!P::same_x(xe, P::event_x(ce))) continue;
      bool marker = a.curves[ce.i].group == 4 || a.curves[ce.j].group == 4;
      if (!marker && (left || right)) continue;
      int j = locate(E, P::event_y(ce.y), xe);
      ev[j].tags.insert("Corner(" + a.curves[ce.i].name + "," + a.curves[ce.j].name + ")");
      ev[j].tag_groups.insert(a.curves[ce.i].group);
      ev[j].tag_groups.insert(a.curves[ce.j].group);
    }
    return ev;
  }

  // The component is glued in an exponent-zero group when its own boundary
  // touches the group or the singular point itself lies on a group curve;
  // either way the two sheets meet over the component.
  std::vector<bool> glue_vector(const Ival& iv, const EvComp& ec) const {
    std::vector<bool> g(zero_groups.size(), false);
    for (size_t gi = 0; gi < zero_groups.size(); ++gi)
      g[gi] = iv.contact[gi] || ec.tag_groups.count(zero_groups[gi]) > 0;
    return g;
  }

  std::vector<Label> event_labels(const std::vector<bool>& glued) const {
    std::vector<Label> out{{}};
    for (size_t gi = 0; gi < zero_groups.size(); ++gi) {
      std::vector<Label> next;
      for (const Label& base : out)
        for (int s : {-1, 0, +1}) {
          if (glued[gi] != (s == 0)) continue;
          Label l = base;
          l.push_back(s);
          next.push_back(std::move(l));
        }
      out = std::move(next);
    }
    return out;
  }

  // Project a slab-interval sheet label onto the event component's classes.
  Label project(const Label& l, const std::vector<bool>& glued, const X& xe) const {
    Label out(l.size(), 0);
    for (size_t gi = 0; gi < l.size(); ++gi) {
      if (glued[gi]) {
        out[gi] = 0;
      } else {
        if (l[gi] == 0)
          abort_sweep("glued sheet meets a split component at x = " + P::x_str(xe));
        out[gi] = l[gi];
      }
    }
    return out;
  }

  std::string fiber_for(const X& xs, const Ival& iv) const {
    if constexpr (P::exact) {
      if (P::cmp(iv.lo, iv.hi) >= 0) abort_sweep("degenerate slab interval");
      Rat yt = rational_between(iv.lo, iv.hi);
      PointClassification pc = classify_point(a, xs, yt);
      if (pc.cls != PointClass::Interior)
        abort_sweep("slab sample is not interior at x = " + P::x_str(xs));
      return pc.fiber;
    } else {
      (void)xs;
      (void)iv;
      std::set<int> groups_with_curves;
      for (const Curve& c : a.curves) groups_with_curves.insert(c.group);
      std::string fib;
      for (int g : groups_with_curves) {
        if (!fib.empty()) fib += " x ";
        fib += "S^" + std::to_string(a.exponent_of_group(g));
      }
      return fib;
    }
  }

  bool same_structure(const std::vector<Ival>& u, const std::vector<Ival>& v) const {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i].blo != v[i].blo || u[i].bhi != v[i].bhi || u[i].contact != v[i].contact)
        return false;
    return true;
  }

  ReebGraph run() {
    std::vector<X> events = collect_events();

    struct Active {
      std::string start;
      std::string fiber;
    };
    std::map<std::pair<int, Label>, Active> act;  // keyed by slab interval, sheet label
    std::vector<Ival> prev;

    for (size_t k = 0; k < events.size(); ++k) {
      const X& xe = events[k];
      std::vector<Ival> E = slice(xe);
      if (E.empty()) abort_sweep("empty slice at an event column");
      std::vector<EvComp> ev = singular_tags(xe, E);

      // Two samples per open slab: the structure must match, otherwise a
      // topology change happened strictly inside the slab, undeclared.
      std::vector<Ival> nxt;
      X xs{};
      if (k + 1 < events.size()) {
        xs = P::between(xe, events[k + 1]);
        X xs2 = P::between(xs, events[k + 1]);
        nxt = slice(xs);
        if (!same_structure(nxt, slice(xs2)))
          abort_sweep("slice structure changed inside an open slab after x = " + P::x_str(xe));
      }

      std::vector<std::vector<int>> left_in(E.size()), right_in(E.size());
      for (int i = 0; i < static_cast<int>(prev.size()); ++i)
        left_in[locate(E, boundary_at(prev[i].blo, xe), xe)].push_back(i);
      for (int i = 0; i < static_cast<int>(nxt.size()); ++i)
        right_in[locate(E, boundary_at(nxt[i].blo, xe), xe)].push_back(i);

      std::map<std::pair<int, Label>, Active> nact;
      for (int j = 0; j < static_cast<int>(E.size()); ++j) {
        const std::vector<int>& L = left_in[j];
        const std::vector<int>& R = right_in[j];
        bool quiet = ev[j].tags.empty();
        bool structural = L.size() != 1 || R.size() != 1;
        if (!structural && prev[L[0]].contact != nxt[R[0]].contact) structural = true;

        if (quiet && !structural) {
          // A foreign component's event column: edges pass straight through.
          for (const Label& lab : labels_of(prev[L[0]]))
            nact[{R[0], lab}] = act.at({L[0], lab});
          continue;
        }
        if (quiet)
          abort_sweep("topology change with no singular point at x = " + P::x_str(xe));

        std::vector<bool> glued = glue_vector(E[j], ev[j]);
        std::vector<Label> classes = event_labels(glued);

        // One Reeb vertex per sheet class of the component.
        std::map<Label, std::string> vname;
        for (const Label& cl : classes) {
          std::string id = "r" + std::to_string(next_vertex++);
          rg.skeleton.ensure_vertex(id);
          rg.vertex_level[id] = P::to_level(xe);
          rg.vertex_provenance[id] = ev[j].tags;
          vname[cl] = id;
        }

        // Sheet bookkeeping for merge/split provenance.
        size_t ng = zero_groups.size();
        std::map<Label, std::vector<std::array<bool, 4>>> stats;  // l0,l1,r0,r1 per group
        for (const Label& cl : classes) stats[cl].assign(ng, {false, false, false, false});

        for (int i : L)
          for (const Label& lab : labels_of(prev[i])) {
            Label cl = project(lab, glued, xe);
            const Active& ae = act.at({i, lab});
            rg.skeleton.add_edge(ae.start, vname.at(cl));
            rg.edge_fiber.push_back(ae.fiber);
            for (size_t gi = 0; gi < ng; ++gi) stats[cl][gi][lab[gi] == 0 ? 0 : 1] = true;
          }
        for (int i : R) {
          std::string fib = fiber_for(xs, nxt[i]);
          for (const Label& lab : labels_of(nxt[i])) {
            Label cl = project(lab, glued, xe);
            nact[{i, lab}] = {vname.at(cl), fib};
            for (size_t gi = 0; gi < ng; ++gi) stats[cl][gi][lab[gi] == 0 ? 2 : 3] = true;
          }
        }
        for (const Label& cl : classes)
          for (size_t gi = 0; gi < ng; ++gi) {
            const auto& s = stats.at(cl)[gi];
            std::string g = std::to_string(zero_groups[gi]);
            if (s[1] && s[2]) rg.vertex_provenance[vname.at(cl)].insert("SheetMerge(" + g + ")");
            if (s[0] && s[3]) rg.vertex_provenance[vname.at(cl)].insert("SheetSplit(" + g + ")");
          }
      }
      act = std::move(nact);
      prev = std::move(nxt);
    }
    if (!act.empty()) abort_sweep("active edges survive past the right wall");
    return std::move(rg);
  }
};

ReebGraph run_generic(const Arrangement& a, bool track_sheets) {
  PrePass pp = exact_prepass(a);
  if (pp.certificate) {
    Core<ExactPolicy> core(a, pp, track_sheets);
    ReebGraph rg = core.run();
    rg.verified = true;
    return rg;
  }
  Core<FloatPolicy> core(a, pp, track_sheets);
  ReebGraph rg = core.run();
  rg.verified = false;
  return rg;
}

}  // namespace

bool rational_event_certificate(const Arrangement& a) { return exact_prepass(a).certificate; }

ReebGraph sweep_reeb(const Arrangement& a) { return run_generic(a, true); }

ReebGraph region_reeb(const Arrangement& a) { return run_generic(a, false); }

std::vector<SingularEvent> singular_event_census(const Arrangement& a) {
  PrePass pp = exact_prepass(a);
  if (!pp.certificate)
    throw std::invalid_argument("event census requires the rational-event certificate");
  std::vector<SingularEvent> evs;
  evs.push_back({"LeftWallSegment", a.X1, {a.curves[0].name}});
  evs.push_back({"RightWallSegment", a.X2, {a.curves[1].name}});
  for (const ExtremeEvent& ee : pp.extremes)
    evs.push_back({"Tangency", ee.x.to_rational(), {a.curves[ee.curve].name}});
  for (const CrossEvent& ce : pp.crossings) {
    bool marker = a.curves[ce.i].group == 4 || a.curves[ce.j].group == 4;
    Rat x = ce.x.to_rational();
    if (!marker && (x == a.X1 || x == a.X2)) continue;
    evs.push_back({"Corner", x, {a.curves[ce.i].name, a.curves[ce.j].name}});
  }
  std::sort(evs.begin(), evs.end(), [](const SingularEvent& u, const SingularEvent& v) {
    if (u.x != v.x) return u.x < v.x;
    if (u.kind != v.kind) return u.kind < v.kind;
    return u.curves < v.curves;
  });
  return evs;
}

}  // namespace reebforge
