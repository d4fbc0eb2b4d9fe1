#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "rab/building.hpp"
#include "rab/universal.hpp"

namespace fx {

using namespace rab;

inline Diagram tree() { return Diagram({"1", "2"}, {{"1", "2"}}); }
inline Diagram ladder() { return Diagram({"1", "2", "3"}, {{"2", "3"}}); }
inline Diagram pentagon() {
  return Diagram({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
}
// Edge {1,2}; types 3 and 4 are rungs, 1 and 2 are not.
inline Diagram four() { return Diagram({"1", "2", "3", "4"}, {{"1", "2"}}); }

inline Word W(std::initializer_list<std::pair<int, int>> letters) {
  Word w;
  for (auto [t, c] : letters) w.push_back({t - 1, c});  // 1-based type labels
  return w;
}

inline LocalData all_sym(const GraphProduct& G) {
  LocalData F;
  for (Type i = 0; i < G.rank(); ++i) F.push_back(PermGroup::symmetric(G.q(i)));
  return F;
}
inline LocalData all_cyclic(const GraphProduct& G) {
  LocalData F;
  for (Type i = 0; i < G.rank(); ++i) F.push_back(PermGroup::cyclic(G.q(i)));
  return F;
}
inline PermGroup swap01(int q) {
  Perm p = identity_perm(q);
  std::swap(p[0], p[1]);
  return PermGroup(q, {p});
}

// Breadth-first distances in the chamber graph, generated letter by letter
// without normal forms beyond hashing.
inline std::map<Word, int> bfs_distances(const GraphProduct& G, const Word& from, int radius) {
  std::map<Word, int> dist{{from, 0}};
  std::vector<Word> frontier{from};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& x : frontier)
      for (Type i = 0; i < G.rank(); ++i)
        for (int a = 1; a < G.q(i); ++a) {
          Word y = G.multiply(x, Word{{i, a}});
          if (dist.emplace(y, r).second) next.push_back(y);
        }
    frontier = std::move(next);
  }
  return dist;
}

// Every reduced expression of a reduced word: the linear extensions of its
// heap, built by repeatedly taking a letter that commutes past all earlier ones.
inline std::vector<Word> reduced_expressions(const GraphProduct& G, const Word& w) {
  std::vector<Word> out;
  Word cur;
  std::vector<bool> used(w.size(), false);
  std::function<void()> rec = [&] {
    if (cur.size() == w.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (used[k]) continue;
      bool free = true;
      for (std::size_t m = 0; m < k && free; ++m)
        if (!used[m] && !G.diagram().commute(w[m].type, w[k].type)) free = false;
      if (!free) continue;
      used[k] = true;
      cur.push_back(w[k]);
      rec();
      cur.pop_back();
      used[k] = false;
    }
  };
  rec();
  return out;
}

// Breadth-first search from x that stops once y is reached.
inline int brute_dist(const GraphProduct& G, const Word& x, const Word& y) {
  if (x == y) return 0;
  ChamberSet seen{x};
  std::vector<Word> frontier{x};
  for (int r = 1; !frontier.empty(); ++r) {
    std::vector<Word> next;
    for (const auto& a : frontier)
      for (Type i = 0; i < G.rank(); ++i)
        for (int c = 1; c < G.q(i); ++c) {
          Word b = G.multiply(a, Word{{i, c}});
          if (b == y) return r;
          if (seen.insert(b).second) next.push_back(b);
        }
    frontier = std::move(next);
  }
  return -1;
}

}  // namespace fx
