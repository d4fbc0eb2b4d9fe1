#include "rab/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "rab/error.hpp"

namespace rab {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    os << '(';
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      if (x != s) os << ' ';
      os << x;
      seen[x] = 1;
    }
    os << ')';
  }
  std::string out = os.str();
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t bound)
    : degree_(degree), gens_(std::move(generators)), bound_(bound), cache_(std::make_shared<Cache>()) {
  if (degree_ < 1) fail("SchemaError", "degree must be positive");
  for (const auto& g : gens_)
    if (static_cast<int>(g.size()) != degree_) fail("DegreeMismatch", "generator length differs from degree");
    else if (!is_permutation(g)) fail("SchemaError", "generator is not a bijection");
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Perm> gens;
  if (n > 1) {
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (n > 2) {
    Perm c(n);
    for (int x = 0; x < n; ++x) c[x] = (x + 1) % n;
    gens.push_back(c);
  }
  return PermGroup(n, gens);
}

PermGroup PermGroup::cyclic(int n) {
  Perm c(n);
  for (int x = 0; x < n; ++x) c[x] = (x + 1) % n;
  return PermGroup(n, {c});
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

void PermGroup::build() const {
  std::call_once(cache_->once, [this] {
    auto& els = cache_->elements;
    auto& idx = cache_->index;
    Perm id = identity_perm(degree_);
    els.push_back(id);
    idx.emplace(id, 0);
    for (std::size_t k = 0; k < els.size(); ++k) {
      for (const auto& g : gens_) {
        Perm p = compose(g, els[k]);
        if (idx.count(p)) continue;
        if (els.size() >= bound_) fail("GroupTooLarge", "group exceeds enumeration bound " + std::to_string(bound_));
        idx.emplace(p, els.size());
        els.push_back(std::move(p));
      }
    }
    cache_->first.assign(static_cast<std::size_t>(degree_) * degree_, -1);
    for (std::size_t k = els.size(); k-- > 0;)
      for (int x = 0; x < degree_; ++x) cache_->first[x * degree_ + els[k][x]] = static_cast<int>(k);
  });
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!cache_) fail("SchemaError", "empty permutation group");
  build();
  return cache_->elements;
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  elements();
  return cache_->index.count(p) > 0;
}

bool PermGroup::subgroup_of(const PermGroup& g) const {
  if (g.degree() != degree_) return false;
  for (const auto& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& g) const { return subgroup_of(g) && g.subgroup_of(*this); }

const Perm* PermGroup::first_mapping(int x, int y) const {
  const auto& els = elements();
  int k = cache_->first[x * degree_ + y];
  return k < 0 ? nullptr : &els[k];
}

Partition orbits(const PermGroup& g) {
  const int n = g.degree();
  std::vector<int> block(n, -1);
  Partition out;
  for (int s = 0; s < n; ++s) {
    if (block[s] >= 0) continue;
    std::vector<int> orb{s};
    block[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& p : g.generators())
        if (block[p[orb[k]]] < 0) {
          block[p[orb[k]]] = static_cast<int>(out.size());
          orb.push_back(p[orb[k]]);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

std::vector<int> orbit_index(const PermGroup& g) {
  std::vector<int> out(g.degree());
  auto parts = orbits(g);
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (int x : parts[b]) out[x] = static_cast<int>(b);
  return out;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

PermGroup young_overgroup(const PermGroup& g) {
  std::vector<Perm> gens;
  for (const auto& block : orbits(g))
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
      Perm t = identity_perm(g.degree());
      std::swap(t[block[k]], t[block[k + 1]]);
      gens.push_back(t);
    }
  return PermGroup(g.degree(), gens);
}

StabilizerAnalysis stabilizer_analysis(const PermGroup& g) {
  StabilizerAnalysis out;
  std::vector<Perm> stab_gens;
  out.free = true;
  for (const auto& p : g.elements()) {
    if (is_identity(p)) continue;
    bool fixes = false;
    for (int x = 0; x < g.degree() && !fixes; ++x) fixes = p[x] == x;
    if (fixes) {
      out.free = false;
      stab_gens.push_back(p);
    }
  }
  out.gen_by_point_stabs = PermGroup(g.degree(), stab_gens).order() == g.order();
  return out;
}

std::size_t subgroup_index(const PermGroup& h, const PermGroup& g) {
  if (!h.subgroup_of(g)) fail("NotASubgroup", "first group is not contained in the second");
  return g.order() / h.order();
}

LocalDataReport validate_local_data(const std::vector<PermGroup>& F, const std::vector<PermGroup>& Facute,
                                    const std::vector<int>& q, const Diagram& d) {
  LocalDataReport out;
  for (Type i = 0; i < d.rank(); ++i) {
    const std::string& l = d.label(i);
    if (F[i].degree() != q[i] || Facute[i].degree() != q[i])
      fail("DegreeMismatch", "local group of type " + l + " must have degree " + std::to_string(q[i]));
    auto bad = [&](const std::string& why) {
      out.valid = false;
      out.violations.push_back("type " + l + ": " + why);
    };
    if (!F[i].subgroup_of(Facute[i])) bad("F is not contained in Facute");
    if (!Facute[i].subgroup_of(young_overgroup(F[i]))) bad("Facute exceeds the Young overgroup of F");
    if (orbits(F[i]) != orbits(Facute[i])) bad("F and Facute have different orbits");
  }
  return out;
}

}  // namespace rab
