#pragma once

#include <compare>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rab/words.hpp"

namespace rab {

constexpr std::size_t kDefaultBallLimit = 200000;

struct ResidueKey {
  TypeSet types = 0;
  Word rep;  // shortest chamber of the residue
  auto operator<=>(const ResidueKey&) const = default;
};

// Parallel class of i-panels, keyed by the residue of type {i} u i-perp.
struct TreeWall {
  Type type = 0;
  Word rep;
  auto operator<=>(const TreeWall&) const = default;
};

struct Gallery {
  std::vector<Word> chambers;
  std::vector<Type> step_types;
  int length() const { return static_cast<int>(step_types.size()); }
};

using ChamberSet = std::unordered_set<Word, WordHash>;

std::optional<Type> adjacency(const GraphProduct& G, const Word& c, const Word& e);
ResidueKey residue_key(const GraphProduct& G, const Word& c, TypeSet J);
ResidueKey panel_of(const GraphProduct& G, const Word& c, Type i);
std::vector<Word> panel_chambers(const GraphProduct& G, const ResidueKey& P);
Word project_residue(const GraphProduct& G, const Word& c, const ResidueKey& R);

// Chambers lying on some minimal gallery from x to y.
std::vector<Word> interval(const GraphProduct& G, const Word& x, const Word& y);

bool is_panel_closed(const GraphProduct& G, const std::vector<Word>& chambers);

class PanelClosedSet {
 public:
  static PanelClosedSet make(const GraphProduct& G, std::vector<Word> chambers);
  const std::vector<Word>& chambers() const { return chambers_; }
  bool contains(const Word& c) const { return set_.count(c) > 0; }
  int distance(const GraphProduct& G, const Word& c) const;
  std::size_t size() const { return chambers_.size(); }

 private:
  std::vector<Word> chambers_;
  ChamberSet set_;
};

struct Projection {
  Word proj;
  int dist = 0;
};
Projection project_panel_closed(const GraphProduct& G, const PanelClosedSet& C, const Word& c);

std::vector<Word> ball(const GraphProduct& G, const Word& center, int r, std::size_t limit = kDefaultBallLimit);
std::vector<Word> ball(const GraphProduct& G, const PanelClosedSet& C, int r,
                       std::size_t limit = kDefaultBallLimit);

Gallery minimal_gallery(const GraphProduct& G, const Word& c, const Word& e);

struct ConcaveGallery {
  Gallery gallery;
  int j = 0;
  int k = 0;
};
ConcaveGallery concave_gallery(const GraphProduct& G, const Word& c1, const Word& c2, const PanelClosedSet& C);

struct Square {
  Word d;
  Type i = 0;
  Type j = 0;
  int dist = 0;  // distance from d to the set
};
Square closing_square(const GraphProduct& G, const PanelClosedSet& C, const Word& c1, const Word& c2,
                      const Word& c3, int variant);

struct SphereCase {
  char kind = 'b';        // 'a': parallel panel inside the set, 'b': single gate
  ResidueKey parallel;    // case a
  Word gate;              // case b
  int n = 0;              // distance of the near chambers
};
SphereCase sphere_case(const GraphProduct& G, const ResidueKey& P, const PanelClosedSet& C);

TreeWall tree_wall_of(const GraphProduct& G, const ResidueKey& P);
TreeWall tree_wall_at(const GraphProduct& G, const Word& c, Type i);
ResidueKey tree_wall_residue(const GraphProduct& G, const TreeWall& T);
bool tree_wall_finite(const GraphProduct& G, Type i);
std::vector<ResidueKey> tree_wall_panels(const GraphProduct& G, const TreeWall& T, std::size_t bound = 100000);

// Bipartite graph: walls (type-i tree-walls) and cores (residues of type
// I minus i); edges are the residues of type i-perp.
struct TreeWallTree {
  struct Edge {
    ResidueKey key;
    int wall = 0;
    int core = 0;
  };
  Type type = 0;
  std::vector<TreeWall> walls;
  std::vector<ResidueKey> cores;
  std::vector<Edge> edges;
  bool acyclic() const;
};
TreeWallTree tree_wall_tree(const GraphProduct& G, Type i, const std::vector<Word>& ball);

// Line-graph distance in the tree-wall tree between the i-perp residues of
// c1 and c2, traced along the gallery through the base chamber.
int tw_distance(const GraphProduct& G, Type i, const Word& c1, const Word& c2, const ChamberSet& ball);

bool in_wing(const GraphProduct& G, const Word& dch, const Word& c, TypeSet J);

PanelClosedSet panel_closed_closure(const GraphProduct& G, const std::vector<Word>& S, int bound);

}  // namespace rab
