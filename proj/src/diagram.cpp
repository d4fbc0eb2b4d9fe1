#include "rab/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rab/error.hpp"

namespace rab {

std::vector<Type> members(TypeSet s) {
  std::vector<Type> out;
  for (Type i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

Diagram::Diagram(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.empty()) fail("SchemaError", "types: at least one type is required");
  if (labels_.size() > kMaxRank) fail("RankTooLarge", "at most 32 types are supported");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) fail("SchemaError", "types: duplicate label " + l);
  for (const auto& [a, b] : edges) {
    Type i = index_of(a), j = index_of(b);
    if (i == j) fail("SchemaError", "infinity_edges: self-loop at " + a);
    adj_[i] |= bit(j);
    adj_[j] |= bit(i);
  }
}

Diagram Diagram::from_indices(int n, const std::vector<std::pair<Type, Type>>& edges) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [a, b] : edges) named.emplace_back(labels.at(a), labels.at(b));
  return Diagram(labels, named);
}

Type Diagram::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail("UnknownType", "type '" + label + "' is not declared");
  return static_cast<Type>(it - labels_.begin());
}

TypeSet Diagram::to_set(const std::vector<std::string>& labels) const {
  TypeSet s = 0;
  for (const auto& l : labels) s |= bit(index_of(l));
  return s;
}

std::vector<std::pair<Type, Type>> Diagram::edges() const {
  std::vector<std::pair<Type, Type>> out;
  for (Type i = 0; i < rank(); ++i)
    for (Type j = i + 1; j < rank(); ++j)
      if (infinite(i, j)) out.emplace_back(i, j);
  return out;
}

MValue m_value(const Diagram& d, Type i, Type j) {
  if (i < 0 || j < 0 || i >= d.rank() || j >= d.rank()) fail("UnknownType", "type index out of range");
  if (i == j) return MValue::One;
  return d.infinite(i, j) ? MValue::Infinity : MValue::Two;
}

TypeSet perp(const Diagram& d, TypeSet J) {
  if (J & ~d.all()) fail("UnknownType", "set contains undeclared types");
  TypeSet out = 0;
  for (Type i = 0; i < d.rank(); ++i)
    if (!has(J, i) && (d.blockers(i) & J) == 0) out |= bit(i);
  return out;
}

TypeSet rung_types(const Diagram& d) {
  TypeSet out = 0;
  for (Type i = 0; i < d.rank(); ++i) {
    TypeSet p = perp(d, bit(i));
    for (Type j : members(p))
      if (d.neighbors(j) & p) {
        out |= bit(i);
        break;
      }
  }
  return out;
}

bool is_ladderful(const Diagram& d) { return rung_types(d) == d.all(); }

Decomposition decompose(const Diagram& d) {
  Decomposition out;
  TypeSet seen = 0;
  for (Type s = 0; s < d.rank(); ++s) {
    if (has(seen, s)) continue;
    TypeSet comp = bit(s), frontier = bit(s);
    while (frontier) {
      TypeSet next = 0;
      for (Type v : members(frontier)) next |= d.neighbors(v);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    if (comp == bit(s))
      out.isolated.push_back(s);
    else
      out.components.push_back(comp);
  }
  out.irreducible = d.rank() == 1 || (out.components.size() == 1 && out.components[0] == d.all());
  return out;
}

bool vertex_cover_within(const Diagram& d, TypeSet S) {
  for (auto [i, j] : d.edges())
    if (!has(S, i) && !has(S, j)) return false;
  return true;
}

namespace {

using Adj = std::vector<TypeSet>;

std::uint64_t code_for(const Adj& adj, const std::vector<int>& order) {
  // order[p] = vertex placed at position p
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) code = (code << 1) | (has(adj[order[a]], order[b]) ? 1U : 0U);
  return (static_cast<std::uint64_t>(n) << 56) | code;
}

// Colour refinement; cells come out in an isomorphism-invariant order.
std::vector<std::vector<int>> refined_cells(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(adj[v]);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      for (int u : members(adj[v])) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, v};
    }
    std::map<std::vector<int>, int> rank;
    for (auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, k] : rank) k = r++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = rank[sig[v].first];
    int before = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    colour = next;
    if (r == before) break;
  }
  int k = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> cells(k);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

std::uint64_t canonical_code(const Adj& adj, std::vector<int>* best_order) {
  auto cells = refined_cells(adj);
  std::vector<int> order;
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      std::uint64_t code = code_for(adj, order);
      if (code < best) {
        best = code;
        if (best_order) *best_order = order;
      }
      return;
    }
    auto cell = cells[c];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      rec(c + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(0);
  return best;
}

Adj adjacency_of(const Diagram& d) {
  Adj adj(d.rank());
  for (Type i = 0; i < d.rank(); ++i) adj[i] = d.neighbors(i);
  return adj;
}

Adj relabel(const Adj& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  Adj out(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : members(adj[v])) out[pos[v]] |= bit(pos[u]);
  return out;
}

Diagram diagram_of(const Adj& adj) {
  std::vector<std::pair<Type, Type>> edges;
  for (int i = 0; i < static_cast<int>(adj.size()); ++i)
    for (int j : members(adj[i]))
      if (i < j) edges.emplace_back(i, j);
  return Diagram::from_indices(static_cast<int>(adj.size()), edges);
}

}  // namespace

std::uint64_t canonical_code(const Diagram& d) { return canonical_code(adjacency_of(d), nullptr); }

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.rank() == b.rank() && canonical_code(a) == canonical_code(b);
}

std::vector<Diagram> enumerate_ladderful(int n) {
  if (n > 8) fail("RankTooLarge", "census is limited to rank 8");
  if (n < 1) fail("SchemaError", "rank must be at least 1");
  // All graphs up to isomorphism, grown one vertex at a time.
  std::map<std::uint64_t, Adj> level{{canonical_code(Adj{0}, nullptr), Adj{0}}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::uint64_t, Adj> next;
    for (const auto& [code, adj] : level) {
      for (TypeSet nb = 0; nb < bit(k - 1); ++nb) {
        Adj g = adj;
        g.push_back(nb);
        for (int u : members(nb)) g[u] |= bit(k - 1);
        std::vector<int> order;
        std::uint64_t c = canonical_code(g, &order);
        if (!next.count(c)) next.emplace(c, relabel(g, order));
      }
    }
    level = std::move(next);
  }
  std::vector<Diagram> out;
  for (const auto& [code, adj] : level) {
    Diagram d = diagram_of(adj);
    if (is_ladderful(d) && decompose(d).irreducible) out.push_back(d);
  }
  return out;
}

std::string to_dot(const Diagram& d, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Type i = 0; i < d.rank(); ++i) os << "  v" << i << ";\n";
  for (auto [i, j] : d.edges()) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rab
