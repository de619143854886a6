#include "gfkit/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gfkit {

std::vector<Int> cc_polyomino_counts(int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative bound");
    std::vector<Int> counts(n_max + 1, Int(0));
    // f[h][n]: polyominoes with n cells whose last column has height h
    std::vector<std::vector<Int>> f(n_max + 1, std::vector<Int>(n_max + 1, Int(0)));
    for (int h = 1; h <= n_max; ++h) f[h][h] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int h = 1; h <= n; ++h) {
            if (f[h][n] == 0) continue;
            counts[n] += f[h][n];
            for (int hn = 1; n + hn <= n_max; ++hn)
                f[hn][n + hn] += f[h][n] * (h + hn - 1);
        }
    return counts;
}

std::vector<Int> lecture_hall_counts(int k, int max_weight) {
    if (k < 1 || max_weight < 0) throw std::invalid_argument("bad bounds");
    std::vector<Int> counts(max_weight + 1, Int(0));
    // parts grow as l_{i+1} >= ceil((i+1) l_i / i)
    std::function<void(int, int, int)> rec = [&](int i, int prev, int used) {
        if (i > k) {
            counts[used] += 1;
            return;
        }
        int lo = i == 1 ? 0 : (i * prev + i - 2) / (i - 1);
        for (int li = lo; used + li <= max_weight; ++li)
            rec(i + 1, li, used + li);
    };
    rec(1, 0, 0);
    return counts;
}

namespace {

using Pt = std::pair<int, int>;

// include/exclude recursion over a growing frontier of reachable points;
// every set containing the sources with all other points justified by a
// North/East predecessor is visited exactly once
struct AnimalCounter {
    int n_max;
    std::vector<Int>& counts;
    std::vector<Pt> frontier;
    std::set<Pt> seen;

    void push_children(const Pt& p) {
        for (Pt c : {Pt{p.first + 1, p.second}, Pt{p.first, p.second + 1}})
            if (seen.insert(c).second) frontier.push_back(c);
    }

    void rec(size_t idx, int size) {
        if (size == n_max || idx == frontier.size()) return;
        rec(idx + 1, size);
        Pt p = frontier[idx];
        counts[size + 1] += 1;
        size_t base = frontier.size();
        push_children(p);
        rec(idx + 1, size + 1);
        while (frontier.size() > base) {
            seen.erase(frontier.back());
            frontier.pop_back();
        }
    }
};

} // namespace

std::vector<Int> directed_animal_counts(int source_size, int n_max) {
    if (source_size < 1) throw std::invalid_argument("source size must be >= 1");
    std::vector<Int> counts(std::max(n_max, 0) + 1, Int(0));
    if (source_size > n_max) return counts;
    AnimalCounter ac{n_max, counts, {}, {}};
    for (int i = 0; i < source_size; ++i) ac.seen.insert({-i, i});
    for (int i = 0; i < source_size; ++i) ac.push_children({-i, i});
    counts[source_size] += 1;
    ac.rec(0, source_size);
    return counts;
}

std::vector<Int> compact_source_animal_counts(int n_max) {
    std::vector<Int> total(std::max(n_max, 0) + 1, Int(0));
    for (int k = 1; k <= n_max; ++k) {
        std::vector<Int> part = directed_animal_counts(k, n_max);
        for (int n = 0; n <= n_max; ++n) total[n] += part[n];
    }
    return total;
}

std::vector<Int> dyck_area_sums(int n_max) {
    std::vector<Int> sums(n_max + 1, Int(0));
    for (int n = 0; n <= n_max; ++n) {
        int len = 2 * n;
        Int total(0);
        // acc counts the points (i', j), 0 <= j <= y_{i'}, for i' <= current i
        std::function<void(int, int, Int)> walk = [&](int i, int y, Int acc) {
            if (i == len) {
                if (y == 0) total += acc;
                return;
            }
            if (y + 1 <= len - i - 1) walk(i + 1, y + 1, acc + (y + 2));
            if (y >= 1) walk(i + 1, y - 1, acc + y);
        };
        walk(0, 0, Int(1));
        sums[n] = total;
    }
    return sums;
}

namespace {

// quarter-plane DP for steps (1,1), (-1,0), (0,-1)
std::vector<std::vector<std::vector<Int>>> kreweras_table(int len_max) {
    int m = len_max + 1;
    std::vector<std::vector<std::vector<Int>>> at(
        len_max + 1, std::vector<std::vector<Int>>(m, std::vector<Int>(m, Int(0))));
    at[0][0][0] = 1;
    for (int n = 0; n < len_max; ++n)
        for (int x = 0; x <= len_max; ++x)
            for (int y = 0; y <= len_max; ++y) {
                const Int& c = at[n][x][y];
                if (c == 0) continue;
                if (x + 1 <= len_max && y + 1 <= len_max)
                    at[n + 1][x + 1][y + 1] += c;
                if (x >= 1) at[n + 1][x - 1][y] += c;
                if (y >= 1) at[n + 1][x][y - 1] += c;
            }
    return at;
}

} // namespace

std::vector<MPoly> kreweras_walk_polys(int n_max, int uvar, int vvar) {
    auto at = kreweras_table(n_max);
    std::vector<MPoly> polys(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        MPoly p;
        for (int x = 0; x <= n_max; ++x)
            for (int y = 0; y <= n_max; ++y)
                if (at[n][x][y] != 0)
                    p = p + MPoly::variable(uvar, x) * MPoly::variable(vvar, y) *
                            MPoly(Rat(at[n][x][y]));
        polys[n] = p;
    }
    return polys;
}

std::vector<Int> kreweras_axis_counts(int i, int len_max) {
    auto at = kreweras_table(len_max);
    std::vector<Int> counts(len_max + 1, Int(0));
    for (int n = 0; n <= len_max; ++n)
        if (i <= len_max) counts[n] = at[n][i][0];
    return counts;
}

std::vector<Int> quarter_plane_loop_counts(int n_max) {
    int len_max = 2 * n_max;
    int m = len_max + 1;
    std::vector<std::vector<Int>> cur(m, std::vector<Int>(m, Int(0))), nxt;
    cur[0][0] = 1;
    std::vector<Int> counts(n_max + 1, Int(0));
    counts[0] = 1;
    for (int n = 1; n <= len_max; ++n) {
        nxt.assign(m, std::vector<Int>(m, Int(0)));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                const Int& c = cur[x][y];
                if (c == 0) continue;
                if (x + 1 < m) nxt[x + 1][y] += c;
                if (x >= 1) nxt[x - 1][y] += c;
                if (y + 1 < m) nxt[x][y + 1] += c;
                if (y >= 1) nxt[x][y - 1] += c;
            }
        cur.swap(nxt);
        if (n % 2 == 0) counts[n / 2] = cur[0][0];
    }
    return counts;
}

std::vector<MPoly> slit_walk_polys(int n_max, int uvar, int vvar) {
    int off = n_max, m = 2 * n_max + 1;
    auto forbidden = [&](int x, int y) { return y == off && x <= off; };
    std::vector<std::vector<Int>> cur(m, std::vector<Int>(m, Int(0))), nxt;
    cur[off][off] = 1;
    std::vector<MPoly> polys(n_max + 1);
    polys[0] = MPoly(Rat(1));
    for (int n = 1; n <= n_max; ++n) {
        nxt.assign(m, std::vector<Int>(m, Int(0)));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                const Int& c = cur[x][y];
                if (c == 0) continue;
                int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
                for (int s = 0; s < 4; ++s) {
                    int xn = x + dx[s], yn = y + dy[s];
                    if (xn < 0 || xn >= m || yn < 0 || yn >= m) continue;
                    if (forbidden(xn, yn)) continue;
                    nxt[xn][yn] += c;
                }
            }
        cur.swap(nxt);
        MPoly p;
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                if (cur[x][y] != 0)
                    p = p + MPoly::variable(uvar, x - off) *
                            MPoly::variable(vvar, y - off) * MPoly(Rat(cur[x][y]));
        polys[n] = p;
    }
    return polys;
}

namespace {

struct TreeNode {
    const TreeNode* l;
    const TreeNode* r;
};

void abscissa_histogram(const TreeNode* nd, int x, int j_max,
                        std::vector<int>& hist) {
    if (!nd) return;
    if (x >= 0 && x <= j_max) hist[x] += 1;
    abscissa_histogram(nd->l, x - 1, j_max, hist);
    abscissa_histogram(nd->r, x + 1, j_max, hist);
}

} // namespace

std::vector<TSeries> embedded_tree_histograms(int j_max, int n_max, int uvar) {
    std::deque<TreeNode> arena;
    std::vector<std::vector<const TreeNode*>> trees(n_max + 1);
    trees[0] = {nullptr};
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l)
            for (const TreeNode* left : trees[l])
                for (const TreeNode* right : trees[n - 1 - l]) {
                    arena.push_back({left, right});
                    trees[n].push_back(&arena.back());
                }

    std::vector<TSeries> out(j_max + 1, TSeries::zero(n_max));
    for (int n = 0; n <= n_max; ++n) {
        // tally[j][m]: trees with exactly m nodes at abscissa j
        std::vector<std::map<int, Int>> tally(j_max + 1);
        std::vector<int> hist(j_max + 1);
        for (const TreeNode* tr : trees[n]) {
            std::fill(hist.begin(), hist.end(), 0);
            abscissa_histogram(tr, 0, j_max, hist);
            for (int j = 0; j <= j_max; ++j) tally[j][hist[j]] += 1;
        }
        for (int j = 0; j <= j_max; ++j) {
            MPoly c;
            for (const auto& [m, cnt] : tally[j])
                c = c + MPoly::variable(uvar, m) * MPoly(Rat(cnt));
            out[j].set_coeff(n, c);
        }
    }
    return out;
}

Rat hypergeometric_term(const std::vector<int>& a, const std::vector<int>& b,
                        int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    Int num(1), den(1), f;
    for (int ai : a) {
        mpz_fac_ui(f.get_mpz_t(), (unsigned long)(ai * n));
        num *= f;
    }
    for (int bj : b) {
        mpz_fac_ui(f.get_mpz_t(), (unsigned long)(bj * n));
        den *= f;
    }
    Rat r(num);
    r /= Rat(den);
    return r;
}

}  // namespace gfkit
