#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "rab/cli.hpp"
#include "rab/error.hpp"

namespace rab {

using nlohmann::ordered_json;

namespace {

// Each sample draws from its own generator so results do not depend on how
// samples are split between workers.
struct Rng {
  std::mt19937_64 gen;
  Rng(std::uint64_t seed, std::uint64_t sample) : gen(seed * 0x9E3779B97F4A7C15ULL + sample * 0xBF58476D1CE4E5B9ULL + 1) {}
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(gen() % n); }
  template <class T>
  const T& from(const std::vector<T>& xs) {
    return xs[pick(xs.size())];
  }
};

struct Ctx {
  const BuildingSpec& spec;
  const SuiteOptions& opt;
  GraphProduct G;
  std::vector<Word> ball;
  SuiteResult result;

  ordered_json w(const Word& x) const { return word_to_json(x, G.diagram()); }
  std::string label(Type i) const { return G.diagram().label(i); }

  void check(bool ok, const std::function<ordered_json()>& witness) {
    ++result.checks;
    if (ok) return;
    ++result.violations;
    if (!result.counterexample) result.counterexample = witness();
  }
};

PanelClosedSet random_closed(Ctx& cx, Rng& rng) {
  std::vector<Word> seeds{cx.ball[rng.pick(std::min<std::size_t>(cx.ball.size(), 1 + 4 * cx.G.rank()))]};
  if (rng.pick(2)) seeds.push_back(rng.from(cx.ball));
  try {
    return panel_closed_closure(cx.G, seeds, cx.opt.radius + 2);
  } catch (const Error& e) {
    if (e.kind() != "EscapesBound") throw;
    return PanelClosedSet::make(cx.G, {seeds[0]});
  }
}

ordered_json set_json(const Ctx& cx, const PanelClosedSet& C) {
  ordered_json out = ordered_json::array();
  for (const auto& c : C.chambers()) out.push_back(cx.w(c));
  return out;
}

// ---------------------------------------------------------------- coloring

void suite_coloring(Ctx& cx) {
  const auto& G = cx.G;
  std::set<ResidueKey> seen;
  for (const auto& x : cx.ball)
    for (Type i = 0; i < G.rank(); ++i) {
      ResidueKey P = panel_of(G, x, i);
      if (!seen.insert(P).second) continue;
      auto cs = panel_chambers(G, P);
      std::set<int> colours;
      bool constant = true;
      auto l0 = G.lambda(cs[0]);
      for (const auto& c : cs) {
        auto l = G.lambda(c);
        colours.insert(l[i]);
        for (Type j = 0; j < G.rank(); ++j)
          if (j != i && l[j] != l0[j]) constant = false;
      }
      bool bijective = static_cast<int>(colours.size()) == G.q(i) && static_cast<int>(cs.size()) == G.q(i);
      cx.check(bijective && constant, [&] {
        return ordered_json{{"panel_type", cx.label(i)}, {"panel_rep", cx.w(P.rep)}, {"bijective", bijective},
                            {"constant_off_type", constant}};
      });
    }
}

// ---------------------------------------------------------------- gate

void suite_gate(Ctx& cx) {
  const auto& G = cx.G;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    const Word& c = rng.from(cx.ball);
    const Word& x = rng.from(cx.ball);
    TypeSet J = static_cast<TypeSet>(rng.pick(std::size_t{1} << G.rank()));
    ResidueKey R = residue_key(G, x, J);
    Word p = project_residue(G, c, R);
    // Every chamber of R at most as far from c as R.rep lies within twice that distance of R.rep.
    int reach = 2 * G.dist(c, R.rep);
    std::vector<Word> cand{R.rep};
    ChamberSet seen{R.rep};
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (length(G.multiply(G.invert(R.rep), cand[k])) >= reach) continue;
      for (Type j : members(J))
        for (int a = 1; a < G.q(j); ++a) {
          Word y = G.times(cand[k], j, a);
          if (seen.insert(y).second) cand.push_back(y);
        }
    }
    int best = -1, ties = 0;
    Word arg;
    for (const auto& y : cand) {
      int d = G.dist(c, y);
      if (best < 0 || d < best) {
        best = d;
        ties = 1;
        arg = y;
      } else if (d == best) {
        ++ties;
      }
    }
    cx.check(ties == 1 && arg == p, [&] {
      return ordered_json{{"kind", "residue"}, {"chamber", cx.w(c)}, {"residue_rep", cx.w(R.rep)},
                          {"projection", cx.w(p)}, {"argmin", cx.w(arg)}, {"ties", ties}};
    });

    PanelClosedSet C = random_closed(cx, rng);
    Projection pr = project_panel_closed(G, C, c);
    int cbest = -1, cties = 0;
    Word carg;
    for (const auto& y : C.chambers()) {
      int d = G.dist(c, y);
      if (cbest < 0 || d < cbest) {
        cbest = d;
        cties = 1;
        carg = y;
      } else if (d == cbest) {
        ++cties;
      }
    }
    cx.check(cties == 1 && carg == pr.proj && cbest == pr.dist, [&] {
      return ordered_json{{"kind", "panel_closed"}, {"chamber", cx.w(c)}, {"set", set_json(cx, C)},
                          {"projection", cx.w(pr.proj)}, {"argmin", cx.w(carg)}, {"ties", cties}};
    });
  }
}

// ---------------------------------------------------------------- closing squares

std::vector<std::pair<Type, Word>> neighbours(const GraphProduct& G, const Word& c) {
  std::vector<std::pair<Type, Word>> out;
  for (Type i = 0; i < G.rank(); ++i)
    for (int a = 1; a < G.q(i); ++a) out.emplace_back(i, G.times(c, i, a));
  return out;
}

void suite_closing_squares(Ctx& cx) {
  const auto& G = cx.G;
  auto& tally = cx.result.tallies;
  tally["variant1"] = 0;
  tally["variant2"] = 0;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    PanelClosedSet C = s % 2 ? random_closed(cx, rng) : PanelClosedSet::make(G, {rng.from(cx.ball)});
    const Word& c2 = rng.from(cx.ball);
    int d2 = C.distance(G, c2);
    auto nb = neighbours(G, c2);
    std::vector<int> dn;
    for (const auto& [t, y] : nb) dn.push_back(C.distance(G, y));
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = 0; b < nb.size(); ++b) {
        const auto& [i, c1] = nb[a];
        const auto& [j, c3] = nb[b];
        if (i == j) continue;
        int variant = 0, expect = 0;
        if (dn[a] == dn[b] && d2 == dn[a] + 1) variant = 1, expect = dn[a] - 1;
        else if (dn[a] == d2 && dn[b] + 1 == d2) variant = 2, expect = dn[b];
        if (!variant) continue;
        ++tally[variant == 1 ? "variant1" : "variant2"];
        std::string problem;
        try {
          Square sq = closing_square(G, C, c1, c2, c3, variant);
          if (adjacency(G, c1, sq.d) != std::optional<Type>(j) || adjacency(G, sq.d, c3) != std::optional<Type>(i))
            problem = "completion is not adjacent as required";
          else if (sq.dist != expect || C.distance(G, sq.d) != expect)
            problem = "completion has distance " + std::to_string(sq.dist);
        } catch (const Error& e) {
          problem = e.what();
        }
        cx.check(problem.empty(), [&] {
          return ordered_json{{"variant", variant}, {"set", set_json(cx, C)}, {"c1", cx.w(c1)},
                              {"c2", cx.w(c2)},     {"c3", cx.w(c3)},        {"problem", problem}};
        });
      }
  }
}

// ---------------------------------------------------------------- concave galleries

void suite_concave(Ctx& cx) {
  const auto& G = cx.G;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    PanelClosedSet C = random_closed(cx, rng);
    const Word& c1 = rng.from(cx.ball);
    const Word& c2 = rng.from(cx.ball);
    std::string problem;
    try {
      ConcaveGallery cg = concave_gallery(G, c1, c2, C);
      const auto& ch = cg.gallery.chambers;
      int l = cg.gallery.length();
      if (l != G.dist(c1, c2) || ch.front() != c1 || ch.back() != c2) problem = "not a minimal gallery";
      for (int k = 0; problem.empty() && k < l; ++k)
        if (adjacency(G, ch[k], ch[k + 1]) != std::optional<Type>(cg.gallery.step_types[k])) problem = "broken step";
      if (problem.empty() && !(0 <= cg.j && cg.j <= cg.k && cg.k <= l)) problem = "indices out of order";
      for (int k = 1; problem.empty() && k <= l; ++k) {
        int delta = C.distance(G, ch[k]) - C.distance(G, ch[k - 1]);
        int want = k <= cg.j ? -1 : k <= cg.k ? 0 : 1;
        if (delta != want) problem = "distance profile is not concave at step " + std::to_string(k);
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    cx.check(problem.empty(), [&] {
      return ordered_json{{"set", set_json(cx, C)}, {"c1", cx.w(c1)}, {"c2", cx.w(c2)}, {"problem", problem}};
    });
  }
}

// ---------------------------------------------------------------- tree-walls

void suite_treewall(Ctx& cx) {
  const auto& G = cx.G;
  ChamberSet inside(cx.ball.begin(), cx.ball.end());
  for (Type i = 0; i < G.rank(); ++i) {
    bool acyclic = tree_wall_tree(G, i, cx.ball).acyclic();
    cx.check(acyclic, [&] { return ordered_json{{"type", cx.label(i)}, {"problem", "tree-wall tree has a cycle"}}; });
  }
  auto& tally = cx.result.tallies;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    Type i = static_cast<Type>(rng.pick(G.rank()));
    const Word& c1 = rng.from(cx.ball);
    const Word& c2 = rng.from(cx.ball);
    int tw = tw_distance(G, i, c1, c2, inside);
    int di = i_count(G.multiply(G.invert(c1), c2), i);
    int eps = tw - 2 * di;
    cx.check(eps >= -1 && eps <= 1 && tw <= G.dist(c1, c2), [&] {
      return ordered_json{{"type", cx.label(i)}, {"c1", cx.w(c1)}, {"c2", cx.w(c2)}, {"tw_distance", tw}, {"dist_i", di}};
    });

    TreeWall T = tree_wall_at(G, c1, i);
    if (tree_wall_finite(G, i)) {
      long long expect = 1;
      for (Type j : members(perp(G.diagram(), bit(i)))) expect *= G.q(j);
      long long got = static_cast<long long>(tree_wall_panels(G, T).size());
      ++tally["finite_tree_walls"];
      cx.check(got == expect, [&] {
        return ordered_json{{"type", cx.label(i)}, {"tree_wall", cx.w(T.rep)}, {"panels", got}, {"expected", expect}};
      });
    } else {
      bool raised = false;
      try {
        tree_wall_panels(G, T);
      } catch (const Error& e) {
        raised = e.kind() == "InfiniteTreeWall";
      }
      ++tally["rung_tree_walls"];
      cx.check(raised, [&] {
        return ordered_json{{"type", cx.label(i)}, {"problem", "rung tree-wall was enumerated"}};
      });
    }
  }
}

// ---------------------------------------------------------------- portraits

// An unchecked leaf whose assignment contradicts the colour arriving at its
// gate, together with a panel of that tree-wall.
std::pair<Portrait, ResidueKey> corrupted(const GraphProduct& G) {
  Portrait::Leaf L;
  for (Type t = 0; t < G.rank(); ++t) L.transport.push_back(PermGroup::symmetric(G.q(t)));
  Type i = 0;
  Word x;
  for (Type a = 0; a < G.rank() && x.empty(); ++a)
    for (Type b = 0; b < G.rank() && x.empty(); ++b)
      if (G.diagram().infinite(a, b)) i = a, x = G.times(Word{}, b, 1);
  Perm p = identity_perm(G.q(i));
  std::swap(p[0], p[1]);
  if (x.empty()) {
    L.anchor = G.times(Word{}, i, 1);
    L.anchor_image = L.anchor;
  }
  L.assignments[tree_wall_at(G, x, i)] = p;
  return {Portrait::unchecked_leaf(std::move(L)), panel_of(G, x, i)};
}

// Element of U(F) moving the base chamber to a harmonious chamber, or nullopt.
std::optional<Portrait> translation(const Ctx& cx, const Word& target) {
  const auto& G = cx.G;
  if (!harmonious(G, ResidueKey{0, {}}, ResidueKey{0, target}, cx.spec.F)) return std::nullopt;
  return extend_partial(G, PanelClosedSet::make(G, {Word{}}), {{Word{}, target}}, cx.spec.F, 0);
}

Portrait random_factor(const Ctx& cx, Rng& rng, const LocalData& groups) {
  const auto& G = cx.G;
  for (;;) {
    const Word& x = cx.ball[rng.pick(std::min<std::size_t>(cx.ball.size(), 1 + 4 * G.rank()))];
    if (rng.pick(2)) {
      if (auto t = translation(cx, x)) return *t;
      continue;
    }
    Type i = static_cast<Type>(rng.pick(G.rank()));
    const auto& elems = groups[i].elements();
    return kp_element(G, panel_of(G, x, i), rng.from(elems), cx.spec.F);
  }
}

Portrait random_portrait(const Ctx& cx, Rng& rng, const LocalData& groups) {
  Portrait g = random_factor(cx, rng, groups);
  int extra = static_cast<int>(rng.pick(3));
  for (int k = 0; k < extra; ++k) g = compose(g, random_factor(cx, rng, groups));
  return g;
}

ResidueKey random_panel(const Ctx& cx, Rng& rng) {
  return panel_of(cx.G, rng.from(cx.ball), static_cast<Type>(rng.pick(cx.G.rank())));
}

ResidueKey random_parallel(const GraphProduct& G, Rng& rng, const ResidueKey& P) {
  Type i = members(P.types)[0];
  Word x = P.rep;
  for (Type j : members(perp(G.diagram(), bit(i))))
    if (rng.pick(2)) x = G.times(x, j, static_cast<int>(rng.pick(G.q(j))));
  return panel_of(G, x, i);
}

void suite_portrait_algebra(Ctx& cx) {
  const auto& G = cx.G;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    Portrait g = random_portrait(cx, rng, cx.spec.Facute);
    Portrait h = random_portrait(cx, rng, cx.spec.Facute);
    std::optional<ResidueKey> planted;
    if (cx.opt.inject_corruption && s == 0) std::tie(g, planted) = corrupted(G);
    Portrait gh = compose(g, h);
    Portrait ginv = inverse(g);
    for (int k = 0; k < cx.opt.panels; ++k) {
      ResidueKey P = k == 0 && planted ? *planted : random_panel(cx, rng);
      Type i = members(P.types)[0];
      std::string problem;
      try {
        Perm sh = local_action(G, h, P);
        ResidueKey hP = panel_of(G, apply(G, h, P.rep), i);
        if (local_action(G, gh, P) != compose(local_action(G, g, hP), sh)) problem = "product law fails";
        Perm sg = local_action(G, g, P);
        ResidueKey gP = panel_of(G, apply(G, g, P.rep), i);
        if (problem.empty() && local_action(G, ginv, gP) != inverse(sg)) problem = "inverse law fails";
        ResidueKey Q = random_parallel(G, rng, P);
        if (problem.empty() && local_action(G, g, Q) != sg) problem = "parallel panels disagree";
      } catch (const Error& e) {
        problem = e.what();
      }
      cx.check(problem.empty(), [&] {
        return ordered_json{{"panel_type", cx.label(i)}, {"panel_rep", cx.w(P.rep)}, {"problem", problem},
                            {"g", portrait_to_json(G, g)}, {"h", portrait_to_json(G, h)}};
      });
    }
  }
}

// ---------------------------------------------------------------- orbits

void suite_orbits(Ctx& cx) {
  const auto& G = cx.G;
  const auto& F = cx.spec.F;
  OrbitCensus oc = orbit_census(G, F);
  cx.check(oc.count == static_cast<long long>(oc.representatives.size()), [&] {
    return ordered_json{{"formula", oc.count}, {"classes", oc.representatives.size()}};
  });
  for (std::size_t a = 0; a < oc.representatives.size(); ++a)
    for (std::size_t b = a + 1; b < oc.representatives.size(); ++b) {
      const auto& R1 = oc.representatives[a];
      const auto& R2 = oc.representatives[b];
      bool h = R1.types == R2.types && harmonious(G, R1, R2, F);
      cx.check(!h, [&] { return ordered_json{{"r1", cx.w(R1.rep)}, {"r2", cx.w(R2.rep)}, {"problem", "harmonious representatives"}}; });
    }
  TypeSet rungs = rung_types(G.diagram());
  std::set<ResidueKey> seen;
  for (const auto& x : cx.ball)
    for (Type i = 0; i < G.rank(); ++i) {
      if (has(rungs, i)) continue;
      ResidueKey P = panel_of(G, x, i);
      if (!seen.insert(P).second) continue;
      int matches = 0;
      for (const auto& R : oc.representatives)
        if (R.types == P.types && harmonious(G, P, R, F)) ++matches;
      cx.check(matches == 1, [&] { return ordered_json{{"panel_rep", cx.w(P.rep)}, {"type", cx.label(i)}, {"matches", matches}}; });
    }
  cx.result.tallies["classes"] = static_cast<long long>(oc.representatives.size());
  cx.result.tallies["formula"] = oc.count;

  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    const Word& x = rng.from(cx.ball);
    bool h = harmonious(G, ResidueKey{0, {}}, ResidueKey{0, x}, F);
    std::string problem;
    try {
      Portrait g = extend_partial(G, PanelClosedSet::make(G, {Word{}}), {{Word{}, x}}, F, 1);
      if (!h) problem = "extension built between non-harmonious chambers";
      else if (apply(G, g, Word{}) != x) problem = "extension misses the target";
      else if (!classify_membership(G, g, F, cx.spec.Facute).in_U_F) problem = "extension is not in U(F)";
      ++cx.result.tallies["connected"];
    } catch (const Error& e) {
      if (h || e.kind() != "NotHarmonious") problem = e.what();
      else ++cx.result.tallies["separated"];
    }
    cx.check(problem.empty(), [&] { return ordered_json{{"target", cx.w(x)}, {"harmonious", h}, {"problem", problem}}; });
  }
}

// ---------------------------------------------------------------- extension

void suite_extension(Ctx& cx) {
  const auto& G = cx.G;
  const auto& F = cx.spec.F;
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    PanelClosedSet C = PanelClosedSet::make(G, {Word{}});
    Portrait u;
    bool panel_case = s % 2 == 1;
    if (panel_case) {
      ResidueKey P = random_panel(cx, rng);
      Type i = members(P.types)[0];
      C = PanelClosedSet::make(G, panel_chambers(G, P));
      u = kp_element(G, P, rng.from(cx.spec.Facute[i].elements()), F);
    } else {
      C = random_closed(cx, rng);
      u = random_portrait(cx, rng, F);
    }
    PartialMap partial;
    for (const auto& c : C.chambers()) partial[c] = apply(G, u, c);
    std::set<TreeWall> forced;
    for (const auto& c : C.chambers())
      for (Type i = 0; i < G.rank(); ++i) {
        auto cs = panel_chambers(G, panel_of(G, c, i));
        if (std::all_of(cs.begin(), cs.end(), [&](const Word& y) { return C.contains(y); }))
          forced.insert(tree_wall_at(G, c, i));
      }
    std::string problem;
    try {
      Portrait g = extend_partial(G, C, partial, F, 1);
      for (const auto& c : C.chambers())
        if (problem.empty() && apply(G, g, c) != partial[c]) problem = "extension disagrees on the set";
      std::set<ResidueKey> seen;
      for (const auto& x : ball(G, C, 1))
        for (Type i = 0; problem.empty() && i < G.rank(); ++i) {
          ResidueKey P = panel_of(G, x, i);
          if (!seen.insert(P).second) continue;
          Perm sigma = local_action(G, g, P);
          bool parallel_to_set = forced.count(tree_wall_of(G, P)) > 0;
          if (parallel_to_set && sigma != local_action(G, u, P)) problem = "forced action not reproduced";
          if (!parallel_to_set && !F[i].contains(sigma)) problem = "local action outside F away from the set";
        }
    } catch (const Error& e) {
      problem = e.what();
    }
    cx.check(problem.empty(), [&] {
      return ordered_json{{"set", set_json(cx, C)}, {"model", portrait_to_json(G, u)}, {"problem", problem}};
    });
  }
}

// ---------------------------------------------------------------- independence

void suite_independence(Ctx& cx) {
  const auto& G = cx.G;
  auto& tally = cx.result.tallies;
  int radius = std::min(cx.opt.radius, 3);
  auto test_ball = ball(G, Word{}, radius);
  for (int s = 0; s < cx.opt.samples; ++s) {
    Rng rng(cx.opt.seed, s);
    Type i = static_cast<Type>(rng.pick(G.rank()));
    ResidueKey P = panel_of(G, Word{}, i);
    auto wings = panel_chambers(G, P);
    ResidueKey wall_residue = tree_wall_residue(G, tree_wall_of(G, P));
    Portrait::Leaf L;
    L.transport = cx.spec.F;
    std::set<Word> used_wings;
    int wanted = 1 + static_cast<int>(rng.pick(2));
    for (int attempt = 0; attempt < 40 && static_cast<int>(L.assignments.size()) < wanted; ++attempt) {
      const Word& y = rng.from(cx.ball);
      if (residue_key(G, y, wall_residue.types) == wall_residue) continue;
      Type k = static_cast<Type>(rng.pick(G.rank()));
      TreeWall T = tree_wall_at(G, y, k);
      int x0 = G.lambda(project_residue(G, Word{}, tree_wall_residue(G, T)))[k];
      std::vector<Perm> fixing;
      for (const auto& f : cx.spec.Facute[k].elements())
        if (f[x0] == x0 && !is_identity(f)) fixing.push_back(f);
      if (fixing.empty()) continue;
      L.assignments[T] = rng.from(fixing);
    }
    Portrait g;
    std::vector<Portrait> pieces;
    try {
      g = Portrait::leaf(G, L);
      for (const auto& c : wings) pieces.push_back(wing_restrict(G, g, P, c));
    } catch (const Error& e) {
      if (e.kind() != "TreeWallNotFixed" && e.kind() != "InconsistentPortrait") throw;
      ++tally["skipped"];
      continue;
    }
    ++tally["cases"];
    std::string problem;
    try {
      Portrait prod = pieces.front();
      for (std::size_t k = 1; k < pieces.size(); ++k) prod = compose(prod, pieces[k]);
      for (const auto& x : test_ball)
        if (problem.empty() && apply(G, prod, x) != apply(G, g, x)) problem = "wing restrictions do not multiply back";
      bool in_g = classify_membership(G, g, cx.spec.F, cx.spec.Facute).in_G_F_Facute;
      for (const auto& piece : pieces)
        if (problem.empty() && in_g && !classify_membership(G, piece, cx.spec.F, cx.spec.Facute).in_G_F_Facute)
          problem = "wing restriction leaves G(F,Facute)";
    } catch (const Error& e) {
      problem = e.what();
    }
    cx.check(problem.empty(), [&] {
      return ordered_json{{"panel_type", cx.label(i)}, {"portrait", portrait_to_json(G, g)}, {"problem", problem}};
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coloring",         "gate",   "closing-squares",
                                              "concave",          "treewall", "portrait-algebra",
                                              "orbits",           "extension", "independence"};
  return names;
}

SuiteResult run_suite(const BuildingSpec& spec, const SuiteOptions& opt) {
  static const std::map<std::string, void (*)(Ctx&)> table{
      {"coloring", suite_coloring},       {"gate", suite_gate},         {"closing-squares", suite_closing_squares},
      {"concave", suite_concave},         {"treewall", suite_treewall}, {"portrait-algebra", suite_portrait_algebra},
      {"orbits", suite_orbits},           {"extension", suite_extension}, {"independence", suite_independence}};
  auto it = table.find(opt.suite);
  if (it == table.end()) fail("UnknownSuite", opt.suite);
  if (opt.radius < 0 || opt.samples < 0) fail("SchemaError", "radius and samples must be nonnegative");
  Ctx cx{spec, opt, spec.product(), {}, {}};
  cx.ball = ball(cx.G, Word{}, opt.radius);
  cx.result.suite = opt.suite;
  it->second(cx);
  return cx.result;
}

}  // namespace rab
