#include "rab/cli.hpp"
#include "rab/error.hpp"

namespace rab {

using nlohmann::ordered_json;

CensusResult census(int max_rank) {
  if (max_rank > 8) fail("RankTooLarge", "census is limited to rank 8");
  if (max_rank < 1) fail("SchemaError", "max-rank must be at least 1");
  CensusResult out;
  out.max_rank = max_rank;
  for (int n = 1; n <= max_rank; ++n) out.by_rank.push_back(enumerate_ladderful(n));
  return out;
}

ordered_json census_to_json(const CensusResult& c) {
  ordered_json counts = ordered_json::array();
  ordered_json ranks = ordered_json::array();
  for (int n = 1; n <= c.max_rank; ++n) {
    const auto& ds = c.by_rank[n - 1];
    counts.push_back(ds.size());
    ordered_json list = ordered_json::array();
    for (const auto& d : ds) {
      ordered_json edges = ordered_json::array();
      for (auto [a, b] : d.edges()) edges.push_back({a, b});
      list.push_back({{"vertices", d.rank()}, {"infinity_edges", edges}});
    }
    ranks.push_back({{"rank", n}, {"count", ds.size()}, {"diagrams", list}});
  }
  return {{"counts", counts}, {"ranks", ranks}};
}

}  // namespace rab
