#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rab {

using Type = int;
using TypeSet = std::uint32_t;  // bit i set <=> type index i is a member

constexpr int kMaxRank = 32;

inline TypeSet bit(Type i) { return TypeSet{1} << i; }
inline bool has(TypeSet s, Type i) { return (s >> i) & 1U; }
std::vector<Type> members(TypeSet s);

enum class MValue { One, Two, Infinity };

// Right-angled Coxeter diagram. Edges are the m = infinity pairs; every
// other pair of distinct types commutes.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& edges);
  static Diagram from_indices(int n, const std::vector<std::pair<Type, Type>>& edges);

  int rank() const { return static_cast<int>(labels_.size()); }
  TypeSet all() const { return rank() == 32 ? ~TypeSet{0} : (bit(rank()) - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Type i) const { return labels_.at(i); }
  Type index_of(const std::string& label) const;
  TypeSet to_set(const std::vector<std::string>& labels) const;

  bool infinite(Type i, Type j) const { return has(adj_[i], j); }
  bool commute(Type i, Type j) const { return i != j && !infinite(i, j); }
  TypeSet neighbors(Type i) const { return adj_[i]; }
  // Types that do not commute with i, including i itself.
  TypeSet blockers(Type i) const { return adj_[i] | bit(i); }
  std::vector<std::pair<Type, Type>> edges() const;

  bool operator==(const Diagram& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

 private:
  std::vector<std::string> labels_;
  std::vector<TypeSet> adj_;
};

MValue m_value(const Diagram& d, Type i, Type j);
TypeSet perp(const Diagram& d, TypeSet J);
TypeSet rung_types(const Diagram& d);
bool is_ladderful(const Diagram& d);

struct Decomposition {
  std::vector<TypeSet> components;  // connected pieces with at least two types
  std::vector<Type> isolated;
  bool irreducible = false;
};
Decomposition decompose(const Diagram& d);

bool vertex_cover_within(const Diagram& d, TypeSet S);

// Canonical adjacency code, invariant under relabeling.
std::uint64_t canonical_code(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

// Irreducible ladderful diagrams on n vertices up to isomorphism, 1 <= n <= 8.
std::vector<Diagram> enumerate_ladderful(int n);

std::string to_dot(const Diagram& d, const std::string& name);

}  // namespace rab
