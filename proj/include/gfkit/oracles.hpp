#pragma once

#include <vector>

#include "gfkit/mpoly.hpp"
#include "gfkit/rat.hpp"
#include "gfkit/tseries.hpp"

namespace gfkit {

// Brute-force enumerators and DPs, written independently of the engines they
// validate. Everything here counts by direct construction.

// counts[n] = column-convex polyominoes with n cells; a polyomino is a
// sequence of columns (height, offset) where adjacent columns overlap in at
// least one row, so heights h_1..h_m contribute prod (h_i + h_{i+1} - 1)
std::vector<Int> cc_polyomino_counts(int n_max);

// counts[w] = partitions (l_1..l_k) of weight w with 0 <= l_1/1 <= ... <= l_k/k
std::vector<Int> lecture_hall_counts(int k, int max_weight);

// counts[n] = directed animals with n points on Z^2 whose source points are
// exactly (-i, i) for i < source_size, every other point reachable from a
// source by North/East steps inside the animal
std::vector<Int> directed_animal_counts(int source_size, int n_max);

// counts[n] = directed animals with n points, summed over all source sizes
std::vector<Int> compact_source_animal_counts(int n_max);

// sums[n] = total number of lattice points lying weakly below a Dyck path of
// length 2n (and above the x-axis), summed over all such paths
std::vector<Int> dyck_area_sums(int n_max);

// polys[n] = sum of u^i v^j over quarter-plane walks of length n from the
// origin with steps (1,1), (-1,0), (0,-1) ending at (i, j)
std::vector<MPoly> kreweras_walk_polys(int n_max, int uvar, int vvar);

// counts[len] = quarter-plane walks (same step set) of each length ending
// at (i, 0)
std::vector<Int> kreweras_axis_counts(int i, int len_max);

// counts[n] = square-lattice walks of length 2n from and to the origin that
// stay in the quarter plane x, y >= 0
std::vector<Int> quarter_plane_loop_counts(int n_max);

// polys[n] = sum of u^i v^j over n-step square-lattice walks from the origin
// that never touch {(-k, 0), k >= 0} again after the start
std::vector<MPoly> slit_walk_polys(int n_max, int uvar, int vvar);

// out[j] for j in 0..j_max: series whose t^n coefficient is the sum over all
// binary trees with n inner nodes of u^(number of nodes at abscissa j),
// where a node's abscissa counts right steps minus left steps from the root
// (exhaustive enumeration of all trees)
std::vector<TSeries> embedded_tree_histograms(int j_max, int n_max, int uvar);

// prod_i (a_i n)! / prod_j (b_j n)!
Rat hypergeometric_term(const std::vector<int>& a, const std::vector<int>& b,
                        int n);

}  // namespace gfkit
