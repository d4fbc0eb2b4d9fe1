#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rab/diagram.hpp"

namespace rab {

// images[x] is the image of point x; composition (a*b)(x) = a(b(x)).
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_permutation(const Perm& p);
bool is_identity(const Perm& p);
std::string cycle_string(const Perm& p);

constexpr std::size_t kDefaultGroupBound = 1000000;

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators, std::size_t bound = kDefaultGroupBound);
  static PermGroup symmetric(int n);
  static PermGroup cyclic(int n);
  static PermGroup trivial(int n);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // Breadth-first closure, identity first. GroupTooLarge past the bound.
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;
  bool subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& g) const;

  // First element in enumeration order mapping x to y, or nullptr.
  const Perm* first_mapping(int x, int y) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Perm> elements;
    std::map<Perm, std::size_t> index;
    std::vector<int> first;  // x * degree + y -> element index or -1
  };
  void build() const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::size_t bound_ = kDefaultGroupBound;
  std::shared_ptr<Cache> cache_;
};

using Partition = std::vector<std::vector<int>>;

Partition orbits(const PermGroup& g);
std::vector<int> orbit_index(const PermGroup& g);  // point -> block number
bool is_transitive(const PermGroup& g);
PermGroup young_overgroup(const PermGroup& g);

struct StabilizerAnalysis {
  bool gen_by_point_stabs = false;
  bool free = false;
};
StabilizerAnalysis stabilizer_analysis(const PermGroup& g);

std::size_t subgroup_index(const PermGroup& h, const PermGroup& g);

struct LocalDataReport {
  bool valid = true;
  std::vector<std::string> violations;
};
LocalDataReport validate_local_data(const std::vector<PermGroup>& F, const std::vector<PermGroup>& Facute,
                                    const std::vector<int>& q, const Diagram& d);

}  // namespace rab
