#pragma once

#include <vector>

#include <json.hpp>

#include "qct/bigint.hpp"
#include "qct/quiver.hpp"

namespace qct {

// Search budget in visited search-tree nodes.
inline constexpr long long kDefaultFlowBudget = 50'000'000;

// (m, n, p, a, b) with N = sum(a) = sum(b); a margin-sum mismatch is a
// construction error, not a zero count.
struct TableInstance {
  int m, n, p;
  std::vector<long long> a, b;
  long long N;

  TableInstance(int rows, int cols, int layers, std::vector<long long> row_margins,
                std::vector<long long> col_margins);
  bool operator==(const TableInstance&) const = default;
};

// Non-negative value per arrow, in the quiver's arrow order; at every vertex
// out-flow minus in-flow equals the weight there.
using FlowPoint = std::vector<long long>;

// Exact number of lattice points of the network flow polytope of (q, sigma).
// Zero immediately when sigma does not sum to zero.
BigInt count_integer_flows(const Quiver& q, const IntVector& sigma,
                           long long budget = kDefaultFlowBudget);

// Every lattice point exactly once, ordered lexicographically in the search
// ordering (arrows grouped by tail vertex in topological order, construction
// order within a group).
std::vector<FlowPoint> enumerate_integer_flows(const Quiver& q, const IntVector& sigma,
                                               long long budget = kDefaultFlowBudget);

// The p-complete bipartite quiver: sources x1..xm, sinks y1..yn, p parallel
// arrows per (source, sink).  Arrow order is (i, j, k) row-major, so arrow
// (x_i -> y_j, copy k) is table entry x_{ijk}.
Quiver complete_bipartite_quiver(int m, int n, int p);

// The weight that assigns +a_i at x_i and -b_j at y_j.
IntVector margin_weight(const Quiver& bipartite, const std::vector<long long>& a,
                        const std::vector<long long>& b);

// Number of m*n*p non-negative integer tables with both plane-sum margin
// families fixed, counted as lattice points of the bipartite flow polytope.
BigInt count_tables(const TableInstance& inst, long long budget = kDefaultFlowBudget);

nlohmann::json flow_point_to_json(const FlowPoint& point);

}  // namespace qct
