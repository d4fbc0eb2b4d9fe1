#include "rab/universal.hpp"

#include <set>

#include "rab/error.hpp"

namespace rab {

struct Portrait::Node {
  Kind kind = Kind::Leaf;
  Leaf leaf;
  Portrait a;  // outer operand
  Portrait b;  // inner operand of a product
  ResidueKey panel;
  Word chamber;
};

namespace {

int mod(int x, int q) { return ((x % q) + q) % q; }

Type panel_type(const ResidueKey& P) {
  if (__builtin_popcount(P.types) != 1) fail("NotAPanel", "residue type has more than one element");
  return members(P.types)[0];
}

Word walk_leaf(const GraphProduct& G, const Portrait::Leaf& L, const Word& expression) {
  Word p = L.anchor;
  Word z = L.anchor_image;
  for (const Letter& step : expression) {
    Type i = step.type;
    int q = G.q(i);
    int x = G.lambda(p)[i];
    int y = G.lambda(z)[i];
    const Perm* sigma = nullptr;
    auto it = L.assignments.empty() ? L.assignments.end() : L.assignments.find(tree_wall_at(G, p, i));
    if (it != L.assignments.end()) {
      sigma = &it->second;
      if ((*sigma)[x] != y)
        fail("InconsistentPortrait", "assigned permutation at " + to_string(it->first.rep, G.diagram()) +
                                         " disagrees with the incoming colour");
    } else {
      sigma = L.transport[i].first_mapping(x, y);
      if (!sigma)
        fail("InconsistentPortrait", "no transport of type " + G.diagram().label(i) + " maps colour " +
                                         std::to_string(x) + " to " + std::to_string(y));
    }
    int nc = (*sigma)[mod(x + step.color, q)];
    z = G.times(z, i, nc - y);
    p = G.times(p, i, step.color);
  }
  return z;
}

Word apply_inverse(const GraphProduct& G, const Portrait& g, const Word& c) {
  Word p = apply(G, g, Word{});
  Word z;
  Word v = G.multiply(G.invert(p), c);
  for (const Letter& step : v) {
    Type i = step.type;
    int q = G.q(i);
    Perm sigma = local_action(G, g, panel_of(G, z, i));
    int target = mod(G.lambda(p)[i] + step.color, q);
    int src = inverse(sigma)[target];
    z = G.times(z, i, src - G.lambda(z)[i]);
    p = G.times(p, i, step.color);
  }
  return z;
}

bool transports_within(const Portrait& g, const LocalData& H) {
  switch (g.kind()) {
    case Portrait::Kind::Leaf: {
      const auto& L = g.leaf_data();
      for (std::size_t i = 0; i < L.transport.size(); ++i)
        for (const Perm& p : L.transport[i].generators())
          if (!H[i].contains(p)) return false;
      return true;
    }
    case Portrait::Kind::Compose:
      return transports_within(g.outer(), H) && transports_within(g.inner(), H);
    default:
      return transports_within(g.outer(), H);
  }
}

// Tree-walls outside this set carry transport permutations only.
std::set<TreeWall> candidates(const GraphProduct& G, const Portrait& g) {
  switch (g.kind()) {
    case Portrait::Kind::Leaf: {
      std::set<TreeWall> out;
      for (const auto& [T, p] : g.leaf_data().assignments) out.insert(T);
      return out;
    }
    case Portrait::Kind::Compose: {
      auto out = candidates(G, g.inner());
      Portrait hinv = inverse(g.inner());
      for (const auto& T : candidates(G, g.outer())) out.insert(image_of(G, hinv, T));
      return out;
    }
    case Portrait::Kind::Inverse: {
      std::set<TreeWall> out;
      for (const auto& T : candidates(G, g.outer())) out.insert(image_of(G, g.outer(), T));
      return out;
    }
    case Portrait::Kind::Piecewise:
      return candidates(G, g.outer());
  }
  return {};
}

}  // namespace

Portrait Portrait::identity(const GraphProduct& G) {
  Leaf L;
  for (Type i = 0; i < G.rank(); ++i) L.transport.push_back(PermGroup::trivial(G.q(i)));
  return unchecked_leaf(std::move(L));
}

Portrait Portrait::unchecked_leaf(Leaf data) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->leaf = std::move(data);
  Portrait out;
  out.node_ = std::move(n);
  return out;
}

Portrait Portrait::leaf(const GraphProduct& G, Leaf data) {
  if (data.transport.size() != static_cast<std::size_t>(G.rank()))
    fail("DegreeMismatch", "one transport group per type is required");
  for (Type i = 0; i < G.rank(); ++i)
    if (data.transport[i].degree() != G.q(i))
      fail("DegreeMismatch", "transport group of type " + G.diagram().label(i) + " has the wrong degree");
  G.validate(data.anchor);
  G.validate(data.anchor_image);
  data.anchor = G.normalize(data.anchor);
  data.anchor_image = G.normalize(data.anchor_image);
  std::map<TreeWall, Perm> assigned;
  for (auto& [T, p] : data.assignments) {
    if (static_cast<int>(p.size()) != G.q(T.type) || !is_permutation(p))
      fail("DegreeMismatch", "assignment at a type-" + G.diagram().label(T.type) + " tree-wall");
    TreeWall key = tree_wall_at(G, T.rep, T.type);
    if (assigned.count(key) && assigned[key] != p)
      fail("InconsistentPortrait", "two permutations for one tree-wall");
    assigned[key] = p;
  }
  data.assignments = std::move(assigned);
  Portrait out = unchecked_leaf(std::move(data));
  const Leaf& L = out.leaf_data();
  for (const auto& [T, p] : L.assignments) {
    Word gate = project_residue(G, L.anchor, tree_wall_residue(G, T));
    Word image = apply(G, out, gate);
    if (p[G.lambda(gate)[T.type]] != G.lambda(image)[T.type])
      fail("InconsistentPortrait", "assignment at " + to_string(T.rep, G.diagram()) +
                                       " does not match the colour arriving at its gate");
  }
  return out;
}

Portrait::Kind Portrait::kind() const { return node_->kind; }
const Portrait::Leaf& Portrait::leaf_data() const { return node_->leaf; }
const Portrait& Portrait::outer() const { return node_->a; }
const Portrait& Portrait::inner() const { return node_->b; }
const ResidueKey& Portrait::wing_panel() const { return node_->panel; }
const Word& Portrait::wing_chamber() const { return node_->chamber; }

Portrait compose(const Portrait& g, const Portrait& h) {
  auto n = std::make_shared<Portrait::Node>();
  n->kind = Portrait::Kind::Compose;
  n->a = g;
  n->b = h;
  Portrait out;
  out.node_ = std::move(n);
  return out;
}

Portrait inverse(const Portrait& g) {
  if (g.kind() == Portrait::Kind::Inverse) return g.outer();
  auto n = std::make_shared<Portrait::Node>();
  n->kind = Portrait::Kind::Inverse;
  n->a = g;
  Portrait out;
  out.node_ = std::move(n);
  return out;
}

Portrait piecewise(const Portrait& g, const ResidueKey& P, const Word& c) {
  auto n = std::make_shared<Portrait::Node>();
  n->kind = Portrait::Kind::Piecewise;
  n->a = g;
  n->panel = P;
  n->chamber = c;
  Portrait out;
  out.node_ = std::move(n);
  return out;
}

Word apply(const GraphProduct& G, const Portrait& g, const Word& c) {
  switch (g.kind()) {
    case Portrait::Kind::Leaf: {
      const auto& L = g.leaf_data();
      return walk_leaf(G, L, G.multiply(G.invert(L.anchor), c));
    }
    case Portrait::Kind::Compose:
      return apply(G, g.outer(), apply(G, g.inner(), c));
    case Portrait::Kind::Inverse:
      return apply_inverse(G, g.outer(), c);
    case Portrait::Kind::Piecewise: {
      Word x = G.normalize(c);
      Type i = panel_type(g.wing_panel());
      return in_wing(G, x, g.wing_chamber(), bit(i)) ? apply(G, g.outer(), x) : x;
    }
  }
  return c;
}

Word apply_along(const GraphProduct& G, const Portrait& g, const Word& expression) {
  if (g.kind() != Portrait::Kind::Leaf) fail("PreconditionViolated", "apply_along needs a leaf portrait");
  return walk_leaf(G, g.leaf_data(), expression);
}

Perm local_action(const GraphProduct& G, const Portrait& g, const ResidueKey& P) {
  Type i = panel_type(P);
  Perm sigma(G.q(i), -1);
  std::optional<ResidueKey> target;
  for (const Word& x : panel_chambers(G, P)) {
    Word y = apply(G, g, x);
    ResidueKey Q = panel_of(G, y, i);
    if (!target) target = Q;
    else if (*target != Q) fail("InconsistentPortrait", "panel image is not a panel");
    sigma[G.lambda(x)[i]] = G.lambda(y)[i];
  }
  if (!is_permutation(sigma)) fail("InconsistentPortrait", "local action is not a bijection");
  return sigma;
}

TreeWall image_of(const GraphProduct& G, const Portrait& g, const TreeWall& T) {
  return tree_wall_at(G, apply(G, g, T.rep), T.type);
}

Membership classify_membership(const GraphProduct& G, const Portrait& g, const LocalData& F,
                               const LocalData& Facute) {
  if (F.size() != static_cast<std::size_t>(G.rank()) || Facute.size() != F.size())
    fail("DegreeMismatch", "local data must list one group per type");
  Membership m;
  bool regular = true;    // every local action in F
  bool acute = true;      // every local action in Facute
  bool rung_free = true;  // no singular tree-wall of rung type
  for (const TreeWall& T : candidates(G, g)) {
    Type i = T.type;
    bool finite = tree_wall_finite(G, i);
    std::vector<ResidueKey> panels = finite ? tree_wall_panels(G, T) : std::vector<ResidueKey>{panel_of(G, T.rep, i)};
    std::optional<Perm> first_singular;
    for (const auto& P : panels) {
      Perm sigma = local_action(G, g, P);
      if (!Facute[i].contains(sigma)) acute = false;
      if (F[i].contains(sigma)) continue;
      if (!first_singular) first_singular = sigma;
      if (finite) ++m.report.singular_panels;
      if (!young_overgroup(F[i]).contains(sigma)) m.report.young_ok = false;
    }
    if (first_singular) {
      regular = false;
      m.report.singular_tree_walls.emplace_back(T, *first_singular);
      if (!finite) rung_free = false;
    }
  }
  m.report.finite = rung_free;
  m.in_U_F = regular && transports_within(g, F);
  m.in_U_Facute = acute && transports_within(g, Facute);
  m.in_G_F_Facute = acute && rung_free && transports_within(g, F);
  return m;
}

bool harmonious(const GraphProduct& G, const ResidueKey& R1, const ResidueKey& R2, const LocalData& F) {
  if (R1.types != R2.types) fail("TypeMismatch", "residues of different types");
  auto l1 = G.lambda(R1.rep);
  auto l2 = G.lambda(R2.rep);
  for (Type k = 0; k < G.rank(); ++k) {
    if (has(R1.types, k)) continue;
    auto idx = orbit_index(F[k]);
    if (idx[l1[k]] != idx[l2[k]]) return false;
  }
  return true;
}

long long orbit_count(const GraphProduct& G, const LocalData& F) {
  TypeSet rungs = rung_types(G.diagram());
  long long count = 0;
  for (Type i = 0; i < G.rank(); ++i) {
    if (has(rungs, i)) continue;
    long long prod = 1;
    for (Type j = 0; j < G.rank(); ++j)
      if (j != i) prod *= static_cast<long long>(orbits(F[j]).size());
    count += prod;
  }
  return count;
}

OrbitCensus orbit_census(const GraphProduct& G, const LocalData& F, int radius) {
  TypeSet rungs = rung_types(G.diagram());
  std::vector<std::vector<int>> idx;
  for (Type j = 0; j < G.rank(); ++j) idx.push_back(orbit_index(F[j]));
  OrbitCensus out;
  out.count = orbit_count(G, F);
  if (radius < 0) radius = std::max(1, G.rank() - 1);
  std::set<std::vector<int>> seen;
  for (const Word& x : ball(G, Word{}, radius)) {
    auto l = G.lambda(x);
    for (Type i = 0; i < G.rank(); ++i) {
      if (has(rungs, i)) continue;
      std::vector<int> key{i};
      for (Type j = 0; j < G.rank(); ++j)
        if (j != i) key.push_back(idx[j][l[j]]);
      if (seen.insert(key).second) out.representatives.push_back(panel_of(G, x, i));
    }
  }
  return out;
}

Portrait kp_element(const GraphProduct& G, const ResidueKey& P, const Perm& f, const LocalData& F) {
  Type i = panel_type(P);
  if (static_cast<int>(f.size()) != G.q(i) || !is_permutation(f))
    fail("DegreeMismatch", "permutation degree differs from q of type " + G.diagram().label(i));
  Portrait::Leaf L;
  L.anchor = P.rep;
  int x0 = G.lambda(P.rep)[i];
  L.anchor_image = G.times(P.rep, i, f[x0] - x0);
  L.transport = F;
  if (!is_identity(f)) L.assignments[tree_wall_of(G, P)] = f;
  return Portrait::leaf(G, std::move(L));
}

Portrait extend_partial(const GraphProduct& G, const PanelClosedSet& C, const PartialMap& partial,
                        const LocalData& F, int depth) {
  const auto& chambers = C.chambers();
  if (partial.size() != chambers.size())
    fail("PreconditionViolated", "partial map must be defined exactly on the set");
  std::vector<Word> image;
  for (const Word& x : chambers) {
    auto it = partial.find(x);
    if (it == partial.end()) fail("PreconditionViolated", "partial map misses " + to_string(x, G.diagram()));
    image.push_back(G.normalize(it->second));
  }
  for (std::size_t a = 0; a < chambers.size(); ++a)
    for (std::size_t b = a + 1; b < chambers.size(); ++b) {
      auto w1 = weyl(G.multiply(G.invert(chambers[a]), chambers[b])).types;
      auto w2 = weyl(G.multiply(G.invert(image[a]), image[b])).types;
      if (w1 != w2) fail("NotDistancePreserving", "Weyl distance changes between " + to_string(chambers[a], G.diagram()) +
                                                      " and " + to_string(chambers[b], G.diagram()));
    }
  std::vector<std::vector<int>> idx;
  for (Type k = 0; k < G.rank(); ++k) idx.push_back(orbit_index(F[k]));
  for (std::size_t a = 0; a < chambers.size(); ++a) {
    auto l1 = G.lambda(chambers[a]);
    auto l2 = G.lambda(image[a]);
    for (Type k = 0; k < G.rank(); ++k)
      if (idx[k][l1[k]] != idx[k][l2[k]])
        fail("NotHarmonious", "colour of type " + G.diagram().label(k) + " changes orbit at " +
                                  to_string(chambers[a], G.diagram()));
  }

  Portrait::Leaf L;
  L.anchor = chambers.front();
  L.anchor_image = image.front();
  L.transport = F;
  for (std::size_t a = 0; a < chambers.size(); ++a)
    for (Type i = 0; i < G.rank(); ++i) {
      ResidueKey P = panel_of(G, chambers[a], i);
      auto cs = panel_chambers(G, P);
      bool inside = true;
      for (const auto& y : cs) inside = inside && C.contains(y);
      if (!inside) continue;
      Perm sigma(G.q(i), -1);
      for (const auto& y : cs) sigma[G.lambda(y)[i]] = G.lambda(G.normalize(partial.at(y)))[i];
      if (!is_permutation(sigma)) fail("InconsistentLocalActions", "panel is not mapped onto a panel");
      TreeWall T = tree_wall_of(G, P);
      auto [it, fresh] = L.assignments.emplace(T, sigma);
      if (!fresh && it->second != sigma)
        fail("InconsistentLocalActions", "two panels of the tree-wall at " + to_string(T.rep, G.diagram()) +
                                             " force different permutations");
    }
  Portrait g;
  try {
    g = Portrait::leaf(G, std::move(L));
  } catch (const Error& e) {
    if (e.kind() != "InconsistentPortrait") throw;
    fail("InconsistentLocalActions", e.what());
  }
  for (std::size_t a = 0; a < chambers.size(); ++a)
    if (apply(G, g, chambers[a]) != image[a])
      fail("InconsistentLocalActions", "extension disagrees with the map at " + to_string(chambers[a], G.diagram()));

  const auto& assigned = g.leaf_data().assignments;
  std::set<ResidueKey> checked;
  for (const Word& x : ball(G, C, depth)) {
    for (Type i = 0; i < G.rank(); ++i) {
      ResidueKey P = panel_of(G, x, i);
      if (assigned.count(tree_wall_of(G, P)) || !checked.insert(P).second) continue;
      Perm sigma;
      try {
        sigma = local_action(G, g, P);
      } catch (const Error& e) {
        if (e.kind() != "InconsistentPortrait") throw;
        fail("NoValidLocalAction", e.what());
      }
      if (!F[i].contains(sigma))
        fail("NoValidLocalAction", "local action " + cycle_string(sigma) + " at " + to_string(P.rep, G.diagram()) +
                                       " is not in the local group");
    }
  }
  return g;
}

Portrait wing_restrict(const GraphProduct& G, const Portrait& g, const ResidueKey& P, const Word& c,
                       int check_radius) {
  Type i = panel_type(P);
  Word cn = G.normalize(c);
  if (panel_of(G, cn, i) != P) fail("PreconditionViolated", "chamber does not lie in the panel");
  TreeWall T = tree_wall_of(G, P);
  auto check = [&](const Word& x) {
    if (apply(G, g, x) != x)
      fail("TreeWallNotFixed", "chamber " + to_string(x, G.diagram()) + " of the tree-wall is moved");
  };
  if (tree_wall_finite(G, i)) {
    for (const auto& Q : tree_wall_panels(G, T))
      for (const auto& x : panel_chambers(G, Q)) check(x);
  } else {
    for (const auto& x : ball(G, P.rep, check_radius))
      if (tree_wall_at(G, x, i) == T) check(x);
  }
  return piecewise(g, P, cn);
}

}  // namespace rab
