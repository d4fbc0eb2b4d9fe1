#include "rab/building.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rab/error.hpp"

namespace rab {

namespace {

Word relative(const GraphProduct& G, const Word& c, const Word& e) { return G.multiply(G.invert(c), e); }

// Dependence predecessors of each position of a normal word, as bitmasks.
std::vector<std::uint64_t> predecessors(const GraphProduct& G, const Word& w) {
  if (w.size() > 64) fail("BallTooLarge", "word too long for gallery enumeration");
  std::vector<std::uint64_t> pred(w.size(), 0);
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t r = 0; r < p; ++r)
      if (has(G.diagram().blockers(w[r].type), w[p].type)) pred[p] |= std::uint64_t{1} << r;
  return pred;
}

}  // namespace

std::optional<Type> adjacency(const GraphProduct& G, const Word& c, const Word& e) {
  Word r = relative(G, c, e);
  if (r.size() == 1) return r[0].type;
  return std::nullopt;
}

ResidueKey residue_key(const GraphProduct& G, const Word& c, TypeSet J) {
  return {J, G.split(c, J, Side::Suffix).first};
}

ResidueKey panel_of(const GraphProduct& G, const Word& c, Type i) { return residue_key(G, c, bit(i)); }

std::vector<Word> panel_chambers(const GraphProduct& G, const ResidueKey& P) {
  if (__builtin_popcount(P.types) != 1) fail("NotAPanel", "residue type has more than one element");
  Type i = members(P.types)[0];
  std::vector<Word> out;
  for (int a = 0; a < G.q(i); ++a) out.push_back(G.times(P.rep, i, a));
  return out;
}

Word project_residue(const GraphProduct& G, const Word& c, const ResidueKey& R) {
  Word x = relative(G, R.rep, c);
  return G.multiply(R.rep, G.split(x, R.types, Side::Prefix).first);
}

std::vector<Word> interval(const GraphProduct& G, const Word& x, const Word& y) {
  Word w = relative(G, x, y);
  auto pred = predecessors(G, w);
  std::set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> stack{0};
  std::vector<Word> out;
  while (!stack.empty()) {
    std::uint64_t mask = stack.back();
    stack.pop_back();
    Word part;
    for (std::size_t p = 0; p < w.size(); ++p)
      if ((mask >> p) & 1U) part.push_back(w[p]);
    out.push_back(G.multiply(x, part));
    for (std::size_t p = 0; p < w.size(); ++p) {
      std::uint64_t b = std::uint64_t{1} << p;
      if (!(mask & b) && (pred[p] & ~mask) == 0 && seen.insert(mask | b).second) stack.push_back(mask | b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_panel_closed(const GraphProduct& G, const std::vector<Word>& chambers) {
  if (chambers.empty()) return false;
  ChamberSet set(chambers.begin(), chambers.end());
  for (const auto& x : chambers)
    for (Type i = 0; i < G.rank(); ++i) {
      int inside = 0;
      for (const auto& z : panel_chambers(G, panel_of(G, x, i))) inside += set.count(z) ? 1 : 0;
      if (inside != 1 && inside != G.q(i)) return false;
    }
  for (std::size_t a = 0; a < chambers.size(); ++a)
    for (std::size_t b = a + 1; b < chambers.size(); ++b)
      for (const auto& z : interval(G, chambers[a], chambers[b]))
        if (!set.count(z)) return false;
  return true;
}

PanelClosedSet PanelClosedSet::make(const GraphProduct& G, std::vector<Word> chambers) {
  for (auto& c : chambers) c = G.normalize(c);
  std::sort(chambers.begin(), chambers.end());
  chambers.erase(std::unique(chambers.begin(), chambers.end()), chambers.end());
  if (!is_panel_closed(G, chambers)) fail("InvalidPanelClosedSet", "set is empty, not convex or not panel-saturated");
  PanelClosedSet out;
  out.chambers_ = std::move(chambers);
  out.set_ = ChamberSet(out.chambers_.begin(), out.chambers_.end());
  return out;
}

int PanelClosedSet::distance(const GraphProduct& G, const Word& c) const {
  int best = -1;
  for (const auto& x : chambers_) {
    int d = G.dist(x, c);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Projection project_panel_closed(const GraphProduct& G, const PanelClosedSet& C, const Word& c) {
  if (C.size() == 0) fail("InvalidPanelClosedSet", "empty set");
  // Descent along panels inside the set; convexity makes a local minimum global.
  Word y = C.chambers().front();
  int d = G.dist(c, y);
  bool moved = true;
  while (moved) {
    moved = false;
    for (Type i = 0; i < G.rank() && !moved; ++i)
      for (const auto& z : panel_chambers(G, panel_of(G, y, i))) {
        if (z == y || !C.contains(z)) continue;
        int dz = G.dist(c, z);
        if (dz < d) {
          y = z;
          d = dz;
          moved = true;
          break;
        }
      }
  }
  return {y, d};
}

namespace {

std::vector<Word> bfs(const GraphProduct& G, std::vector<Word> start, int r, std::size_t limit) {
  if (r < 0) fail("SchemaError", "radius must be non-negative");
  ChamberSet seen(start.begin(), start.end());
  std::vector<Word> out = start;
  std::size_t lo = 0;
  for (int layer = 0; layer < r; ++layer) {
    std::size_t hi = out.size();
    for (std::size_t k = lo; k < hi; ++k)
      for (Type i = 0; i < G.rank(); ++i)
        for (int a = 1; a < G.q(i); ++a) {
          Word n = G.times(out[k], i, a);
          if (seen.insert(n).second) {
            if (out.size() >= limit) fail("BallTooLarge", "ball exceeds " + std::to_string(limit) + " chambers");
            out.push_back(std::move(n));
          }
        }
    lo = hi;
  }
  return out;
}

}  // namespace

std::vector<Word> ball(const GraphProduct& G, const Word& center, int r, std::size_t limit) {
  return bfs(G, {G.normalize(center)}, r, limit);
}

std::vector<Word> ball(const GraphProduct& G, const PanelClosedSet& C, int r, std::size_t limit) {
  return bfs(G, C.chambers(), r, limit);
}

Gallery minimal_gallery(const GraphProduct& G, const Word& c, const Word& e) {
  Gallery g;
  Word cur = G.normalize(c);
  g.chambers.push_back(cur);
  for (const auto& l : relative(G, c, e)) {
    cur = G.times(cur, l.type, l.color);
    g.chambers.push_back(cur);
    g.step_types.push_back(l.type);
  }
  return g;
}

ConcaveGallery concave_gallery(const GraphProduct& G, const Word& c1, const Word& c2, const PanelClosedSet& C) {
  if (C.size() == 0) fail("InvalidPanelClosedSet", "empty set");
  Word w = relative(G, c1, c2);
  auto pred = predecessors(G, w);
  const std::uint64_t full = w.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w.size()) - 1;
  std::unordered_map<Word, int, WordHash> dcache;
  auto dist = [&](const Word& x) {
    auto it = dcache.find(x);
    if (it != dcache.end()) return it->second;
    return dcache[x] = C.distance(G, x);
  };
  ConcaveGallery out;
  std::vector<Word> chambers{G.normalize(c1)};
  std::vector<Type> steps;
  // phase 0 descending, 1 flat, 2 ascending
  std::function<bool(std::uint64_t, int, int, int)> dfs = [&](std::uint64_t mask, int phase, int j, int k) {
    if (mask == full) {
      out.gallery = {chambers, steps};
      out.j = j;
      out.k = k;
      return true;
    }
    int pd = dist(chambers.back());
    for (std::size_t p = 0; p < w.size(); ++p) {
      std::uint64_t b = std::uint64_t{1} << p;
      if ((mask & b) || (pred[p] & ~mask)) continue;
      Word next = G.times(chambers.back(), w[p].type, w[p].color);
      int nd = dist(next);
      int nphase = nd < pd ? 0 : nd == pd ? 1 : 2;
      if (nphase < phase) continue;
      int s = static_cast<int>(steps.size()) + 1;
      chambers.push_back(next);
      steps.push_back(w[p].type);
      bool ok = dfs(mask | b, nphase, nphase == 0 ? s : j, nphase <= 1 ? s : k);
      chambers.pop_back();
      steps.pop_back();
      if (ok) return true;
    }
    return false;
  };
  if (!dfs(0, 0, 0, 0)) fail("PropertyViolation", "no concave minimal gallery exists");
  return out;
}

Square closing_square(const GraphProduct& G, const PanelClosedSet& C, const Word& c1, const Word& c2,
                      const Word& c3, int variant) {
  auto a = adjacency(G, c1, c2);
  auto b = adjacency(G, c2, c3);
  if (!a || !b || *a == *b) fail("PreconditionViolated", "chambers do not form an i-j path with i != j");
  int d1 = C.distance(G, c1), d2 = C.distance(G, c2), d3 = C.distance(G, c3);
  bool ok = variant == 1   ? (d1 == d3 && d2 == d1 + 1)
            : variant == 2 ? (d1 == d2 && d3 + 1 == d1)
                           : false;
  if (!ok) fail("PreconditionViolated", "distances do not match the requested variant");
  if (!G.diagram().commute(*a, *b)) fail("NonCommutingTypes", "closing square across an infinity edge");
  Square s;
  s.i = *a;
  s.j = *b;
  s.d = G.multiply(c1, relative(G, c2, c3));
  s.dist = C.distance(G, s.d);
  return s;
}

SphereCase sphere_case(const GraphProduct& G, const ResidueKey& P, const PanelClosedSet& C) {
  auto chambers = panel_chambers(G, P);
  std::vector<int> d;
  for (const auto& x : chambers) d.push_back(C.distance(G, x));
  int n = *std::min_element(d.begin(), d.end());
  int near = static_cast<int>(std::count(d.begin(), d.end(), n));
  SphereCase out;
  out.n = n;
  Type i = members(P.types)[0];
  if (near == static_cast<int>(chambers.size())) {
    std::set<Word> images;
    for (const auto& x : chambers) images.insert(project_panel_closed(G, C, x).proj);
    ResidueKey Pp = panel_of(G, *images.begin(), i);
    auto pc = panel_chambers(G, Pp);
    if (images != std::set<Word>(pc.begin(), pc.end()) || tree_wall_of(G, Pp) != tree_wall_of(G, P))
      fail("PropertyViolation", "projection of a near panel is not a parallel panel");
    out.kind = 'a';
    out.parallel = Pp;
    return out;
  }
  if (near != 1 || std::count(d.begin(), d.end(), n + 1) != static_cast<long>(chambers.size()) - 1)
    fail("PropertyViolation", "panel distances violate the sphere dichotomy");
  Word gate = project_panel_closed(G, C, chambers[std::min_element(d.begin(), d.end()) - d.begin()]).proj;
  for (const auto& x : chambers)
    if (project_panel_closed(G, C, x).proj != gate) fail("PropertyViolation", "panel has several projections");
  out.kind = 'b';
  out.gate = gate;
  return out;
}

TreeWall tree_wall_at(const GraphProduct& G, const Word& c, Type i) {
  TypeSet J = bit(i) | perp(G.diagram(), bit(i));
  return {i, residue_key(G, c, J).rep};
}

TreeWall tree_wall_of(const GraphProduct& G, const ResidueKey& P) {
  if (__builtin_popcount(P.types) != 1) fail("NotAPanel", "residue type has more than one element");
  return tree_wall_at(G, P.rep, members(P.types)[0]);
}

ResidueKey tree_wall_residue(const GraphProduct& G, const TreeWall& T) {
  return {bit(T.type) | perp(G.diagram(), bit(T.type)), T.rep};
}

bool tree_wall_finite(const GraphProduct& G, Type i) { return !has(rung_types(G.diagram()), i); }

std::vector<ResidueKey> tree_wall_panels(const GraphProduct& G, const TreeWall& T, std::size_t bound) {
  if (!tree_wall_finite(G, T.type))
    fail("InfiniteTreeWall", "type " + G.diagram().label(T.type) + " is a rung type");
  auto others = members(perp(G.diagram(), bit(T.type)));
  std::size_t total = 1;
  for (Type j : others) {
    total *= static_cast<std::size_t>(G.q(j));
    if (total > bound) fail("BallTooLarge", "tree-wall has more panels than the bound");
  }
  // The i-perp types commute pairwise, so every panel is rep * prod (j, a_j).
  std::vector<ResidueKey> out;
  std::vector<int> digits(others.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Word w = T.rep;
    for (std::size_t k = 0; k < others.size(); ++k) w = G.times(w, others[k], digits[k]);
    out.push_back(panel_of(G, w, T.type));
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (++digits[k] < G.q(others[k])) break;
      digits[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TreeWallTree::acyclic() const {
  const int n = static_cast<int>(walls.size() + cores.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) {
    int a = find(e.wall), b = find(static_cast<int>(walls.size()) + e.core);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

TreeWallTree tree_wall_tree(const GraphProduct& G, Type i, const std::vector<Word>& chambers) {
  TreeWallTree t;
  t.type = i;
  const TypeSet ip = perp(G.diagram(), bit(i));
  const TypeSet core_types = G.diagram().all() & ~bit(i);
  std::map<TreeWall, int> wall_ix;
  std::map<ResidueKey, int> core_ix;
  std::set<ResidueKey> edge_seen;
  for (const auto& c : chambers) {
    TreeWall w = tree_wall_at(G, c, i);
    ResidueKey k = residue_key(G, c, core_types);
    auto [wi, wnew] = wall_ix.emplace(w, static_cast<int>(t.walls.size()));
    if (wnew) t.walls.push_back(w);
    auto [ki, knew] = core_ix.emplace(k, static_cast<int>(t.cores.size()));
    if (knew) t.cores.push_back(k);
    ResidueKey e = residue_key(G, c, ip);
    if (edge_seen.insert(e).second) t.edges.push_back({e, wi->second, ki->second});
  }
  return t;
}

int tw_distance(const GraphProduct& G, Type i, const Word& c1, const Word& c2, const ChamberSet& ballset) {
  std::vector<Word> walk;
  Word a = G.normalize(c1), b = G.normalize(c2);
  for (std::size_t n = a.size() + 1; n-- > 0;) walk.push_back(G.shortlex(Word(a.begin(), a.begin() + n)));
  for (std::size_t n = 1; n <= b.size(); ++n) walk.push_back(G.shortlex(Word(b.begin(), b.begin() + n)));
  for (const auto& x : walk)
    if (!ballset.count(x)) fail("PathEscapesBall", "connecting gallery leaves the ball");
  const TypeSet ip = perp(G.diagram(), bit(i));
  const TypeSet core_types = G.diagram().all() & ~bit(i);
  struct Node {
    TreeWall wall;
    ResidueKey core;
  };
  std::map<ResidueKey, Node> nodes;
  for (const auto& x : walk) nodes.emplace(residue_key(G, x, ip), Node{tree_wall_at(G, x, i), residue_key(G, x, core_types)});
  ResidueKey from = residue_key(G, a, ip), to = residue_key(G, b, ip);
  std::map<ResidueKey, int> dist{{from, 0}};
  std::deque<ResidueKey> queue{from};
  while (!queue.empty()) {
    ResidueKey e = queue.front();
    queue.pop_front();
    if (e == to) return dist[e];
    const Node& ne = nodes.at(e);
    for (const auto& [f, nf] : nodes)
      if (!dist.count(f) && (nf.wall == ne.wall || nf.core == ne.core)) {
        dist[f] = dist[e] + 1;
        queue.push_back(f);
      }
  }
  fail("PathEscapesBall", "no path between the residues");
}

bool in_wing(const GraphProduct& G, const Word& dch, const Word& c, TypeSet J) {
  return project_residue(G, dch, residue_key(G, c, J)) == G.normalize(c);
}

PanelClosedSet panel_closed_closure(const GraphProduct& G, const std::vector<Word>& S, int bound) {
  if (S.empty()) fail("InvalidPanelClosedSet", "closure of an empty set");
  std::vector<Word> cur;
  ChamberSet set;
  auto add = [&](const Word& z) {
    if (set.insert(z).second) {
      if (length(z) > bound) fail("EscapesBound", "closure leaves the radius-" + std::to_string(bound) + " ball");
      cur.push_back(z);
      return true;
    }
    return false;
  };
  for (const auto& s : S) add(G.normalize(s));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b)
        for (const auto& z : interval(G, cur[a], cur[b])) changed |= add(z);
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (Type i = 0; i < G.rank(); ++i) {
        auto pc = panel_chambers(G, panel_of(G, cur[a], i));
        int inside = 0;
        for (const auto& z : pc) inside += set.count(z) ? 1 : 0;
        if (inside >= 2)
          for (const auto& z : pc) changed |= add(z);
      }
  }
  return PanelClosedSet::make(G, cur);
}

}  // namespace rab
