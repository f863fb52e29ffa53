// Exhaustive small families of objects for the law and acceptance tests.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hopfhg/errors.hpp"
#include "hopfhg/submonoids.hpp"
#include "oracles.hpp"

namespace families {

using hopfhg::VertexMask;

/// Every simple graph on m <= max vertices.
inline std::vector<hopfhg::SimpleGraph> all_graphs(unsigned max) {
  std::vector<hopfhg::SimpleGraph> out;
  for (unsigned m = 0; m <= max; ++m) {
    std::vector<VertexMask> pairs;
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = i + 1; j < m; ++j) pairs.push_back((VertexMask{1} << i) | (VertexMask{1} << j));
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
      std::vector<VertexMask> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pick >> k & 1U) edges.push_back(pairs[k]);
      }
      out.emplace_back(hopfhg::VertexSet(oracle::letters(m)), edges);
    }
  }
  return out;
}

/// Every building set on m <= max vertices.
inline std::vector<hopfhg::BuildingSet> all_building_sets(unsigned max) {
  std::vector<hopfhg::BuildingSet> out;
  for (unsigned m = 0; m <= max; ++m) {
    const hopfhg::VertexSet vs(oracle::letters(m));
    std::vector<VertexMask> big;
    for (VertexMask s = 1; s < (VertexMask{1} << m); ++s) {
      if (hopfhg::popcount(s) >= 2) big.push_back(s);
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << big.size()); ++pick) {
      std::vector<VertexMask> sets;
      for (unsigned v = 0; v < m; ++v) sets.push_back(VertexMask{1} << v);
      for (std::size_t k = 0; k < big.size(); ++k) {
        if (pick >> k & 1U) sets.push_back(big[k]);
      }
      try {
        out.push_back(hopfhg::validate_building_set(vs, sets));
      } catch (const hopfhg::InvalidInput&) {
      }
    }
  }
  return out;
}

/// Every simplicial complex on m <= max vertices (downward closures of all
/// facet families, deduplicated).
inline std::vector<hopfhg::SimplicialComplex> all_complexes(unsigned max) {
  std::vector<hopfhg::SimplicialComplex> out;
  for (unsigned m = 0; m <= max; ++m) {
    const hopfhg::VertexSet vs(oracle::letters(m));
    const VertexMask full = vs.full_mask();
    std::set<std::vector<VertexMask>> seen;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << full); ++pick) {
      std::vector<VertexMask> facets;
      for (VertexMask s = 1; s <= full; ++s) {
        if (pick >> (s - 1) & 1U) facets.push_back(s);
      }
      auto c = hopfhg::SimplicialComplex::closure(vs, facets);
      if (seen.insert(c.faces()).second) out.push_back(std::move(c));
    }
  }
  return out;
}

/// Every set partition of an m-set, m <= max.
inline std::vector<hopfhg::SetPartition> all_partitions(unsigned max) {
  std::vector<hopfhg::SetPartition> out;
  for (unsigned m = 0; m <= max; ++m) {
    const hopfhg::VertexSet vs(oracle::letters(m));
    // Restricted growth strings.
    std::vector<unsigned> rgs(m, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
      if (i == m) {
        std::vector<VertexMask> parts(blocks, 0);
        for (unsigned v = 0; v < m; ++v) parts[rgs[v]] |= VertexMask{1} << v;
        out.emplace_back(vs, parts);
        return;
      }
      for (unsigned b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    rec(0, 0);
  }
  return out;
}

/// Every acyclic relation on {0..m-1} as predecessor masks, m <= max.
inline std::vector<std::vector<VertexMask>> all_dags(unsigned m) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned u = 0; u < m; ++u) {
    for (unsigned v = 0; v < m; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  std::vector<std::vector<VertexMask>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
    std::vector<VertexMask> preds(m, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pick >> k & 1U) preds[pairs[k].second] |= VertexMask{1} << pairs[k].first;
    }
    // Peel sources until stuck.
    VertexMask left = m ? (VertexMask{1} << m) - 1 : 0;
    bool progress = true;
    while (left && progress) {
      progress = false;
      for (unsigned v = 0; v < m; ++v) {
        if ((left >> v & 1U) && (preds[v] & left) == 0) {
          left &= ~(VertexMask{1} << v);
          progress = true;
        }
      }
    }
    if (!left) out.push_back(std::move(preds));
  }
  return out;
}

}  // namespace families
