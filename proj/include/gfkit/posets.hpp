#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gfkit/ratfun.hpp"
#include "gfkit/tseries.hpp"

namespace gfkit {

// Strict partial order on 1..k compatible with the integer order:
// i < j in P implies i < j as integers. The relation is transitively
// closed at construction.
class NaturalPoset {
public:
    NaturalPoset(int k, const std::vector<std::pair<int, int>>& covers);

    int size() const { return k_; }
    bool less(int i, int j) const;
    const std::set<std::pair<int, int>>& relation() const { return rel_; }

private:
    int k_;
    std::set<std::pair<int, int>> rel_;
};

// All linear extensions as words sigma(1)..sigma(k) (the element placed at
// each position), lexicographically sorted. Guarded at k <= 12.
std::vector<std::vector<int>> linear_extensions(const NaturalPoset& p);

// Descent statistic e(sigma) and the minimal partition compatible with
// sigma: lambda[sigma(j)] = number of descents before position j.
// Returns (e, lambda) with lambda indexed by element (0-based vector).
std::pair<int, std::vector<int>> sigma_data(const std::vector<int>& sigma);

// Chain condition "lambda_{sigma(i)} <= lambda_{sigma(i+1)}, strict at
// descents" deciding which extension's class a tuple belongs to.
bool compatible_with(const std::vector<int>& lambda,
                     const std::vector<int>& sigma);

// Sum over linear extensions of t^{e(sigma)} / prod_{i<=k} (1 - t^i).
RatFun p_partition_gf(const NaturalPoset& p);

// Exhaustive count of order-respecting tuples by weight <= n_max.
TSeries brute_p_partitions(const NaturalPoset& p, int n_max);

// Intersection of integer half-spaces c . alpha >= 0 in dimension m.
struct HalfspaceSystem {
    int m = 0;
    std::vector<std::vector<Int>> rows;
};

// Counts of non-negative integer points by |alpha| <= n_max
// (guards: m <= 4, n_max <= 40).
TSeries cone_points_bruteforce(const HalfspaceSystem& h, int n_max);

}  // namespace gfkit
