#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rab/building.hpp"
#include "rab/permgrp.hpp"

namespace rab {

using LocalData = std::vector<PermGroup>;  // indexed by type

// Type-preserving automorphism given by local permutations on tree-walls.
//
// A leaf portrait fixes the image of an anchor chamber and assigns
// permutations to finitely many tree-walls. Every other tree-wall T gets the
// first element of the transport group of its type that carries the colour of
// the gate of T (seen from the anchor) to the colour of its image. Legal
// colourings force such transport actions downstream of any colour change, so
// a single default permutation per type cannot describe the same elements.
//
// Products, inverses and wing restrictions are kept as expression nodes and
// evaluated chamber by chamber.
class Portrait {
 public:
  enum class Kind { Leaf, Compose, Inverse, Piecewise };

  struct Leaf {
    Word anchor;
    Word anchor_image;
    std::vector<PermGroup> transport;
    std::map<TreeWall, Perm> assignments;
  };

  static Portrait identity(const GraphProduct& G);
  // Validates degrees and gate consistency; InconsistentPortrait otherwise.
  static Portrait leaf(const GraphProduct& G, Leaf data);
  // Test hook: skips validation so corrupted data reaches evaluation.
  static Portrait unchecked_leaf(Leaf data);

  Kind kind() const;
  const Leaf& leaf_data() const;
  const Portrait& outer() const;  // Compose: g in g*h; Inverse/Piecewise: operand
  const Portrait& inner() const;  // Compose: h in g*h
  const ResidueKey& wing_panel() const;
  const Word& wing_chamber() const;

  friend Portrait compose(const Portrait& g, const Portrait& h);
  friend Portrait inverse(const Portrait& g);
  friend Portrait piecewise(const Portrait& g, const ResidueKey& P, const Word& c);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Portrait compose(const Portrait& g, const Portrait& h);
Portrait inverse(const Portrait& g);
Portrait piecewise(const Portrait& g, const ResidueKey& P, const Word& c);

Word apply(const GraphProduct& G, const Portrait& g, const Word& c);
// Leaf evaluation along a given reduced expression of anchor^-1 * c.
Word apply_along(const GraphProduct& G, const Portrait& g, const Word& expression);
Perm local_action(const GraphProduct& G, const Portrait& g, const ResidueKey& P);
TreeWall image_of(const GraphProduct& G, const Portrait& g, const TreeWall& T);

struct SingularityReport {
  std::vector<std::pair<TreeWall, Perm>> singular_tree_walls;
  std::size_t singular_panels = 0;  // counted over finite tree-walls
  bool finite = true;
  bool young_ok = true;
};

struct Membership {
  bool in_U_F = false;
  bool in_U_Facute = false;
  bool in_G_F_Facute = false;
  SingularityReport report;
};
Membership classify_membership(const GraphProduct& G, const Portrait& g, const LocalData& F,
                               const LocalData& Facute);

bool harmonious(const GraphProduct& G, const ResidueKey& R1, const ResidueKey& R2, const LocalData& F);

struct OrbitCensus {
  long long count = 0;                    // closed formula
  std::vector<ResidueKey> representatives;  // one panel per class found in the ball
};
// Number of U(F)-orbits of non-rung panels: sum over non-rung types of the
// product of the orbit counts of the other local groups.
long long orbit_count(const GraphProduct& G, const LocalData& F);
// radius < 0 selects a ball large enough to realise every class.
OrbitCensus orbit_census(const GraphProduct& G, const LocalData& F, int radius = -1);

Portrait kp_element(const GraphProduct& G, const ResidueKey& P, const Perm& f, const LocalData& F);

using PartialMap = std::map<Word, Word>;
Portrait extend_partial(const GraphProduct& G, const PanelClosedSet& C, const PartialMap& partial,
                        const LocalData& F, int depth);

// Acts as g on the wing of c with respect to the panel P, identity elsewhere.
// The tree-wall of P must be fixed chamberwise; for infinite tree-walls this
// is checked inside the ball of the given radius around P.
Portrait wing_restrict(const GraphProduct& G, const Portrait& g, const ResidueKey& P, const Word& c,
                       int check_radius = 3);

}  // namespace rab
