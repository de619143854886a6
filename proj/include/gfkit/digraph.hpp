#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gfkit/linalg.hpp"
#include "gfkit/mpoly.hpp"
#include "gfkit/ratfun.hpp"

namespace gfkit {

// Weighted digraph on vertices 1..p. Parallel edges merge by summing weights;
// edges whose weights sum to zero are dropped.
class WeightedDigraph {
public:
    explicit WeightedDigraph(int p);

    int num_vertices() const { return p_; }
    void add_edge(int from, int to, const MPoly& weight);
    const MPoly* edge(int from, int to) const;
    const std::map<std::pair<int, int>, MPoly>& edges() const { return edges_; }

    // weighted adjacency matrix (0-based storage of the 1-based graph)
    PolyMatrix adjacency() const;

private:
    void check_vertex(int v) const;
    int p_;
    std::map<std::pair<int, int>, MPoly> edges_;
};

// Sum over j in targets of [(I - tX)^{-1}]_{i,j}, via cofactors over
// det(I - tX) computed with fraction-free elimination.
RatFun transfer_gf(const WeightedDigraph& g, int i, const std::set<int>& targets);

// Same series by inclusion-exclusion over non-intersecting elementary cycle
// collections (denominator) and self-avoiding-walk/cycle pairs (numerator).
// Exhaustive enumeration, so the graph is limited to 12 vertices.
RatFun viennot_gf(const WeightedDigraph& g, int i, const std::set<int>& targets);

// Walk-length DP: coefficients of the walk series from i to targets,
// with all edge weights specialized as given (weights must be rational).
std::vector<Rat> brute_walk_counts(const WeightedDigraph& g, int i,
                                   const std::set<int>& targets, int upto);

}  // namespace gfkit
