#include "gfkit/digraph.hpp"

#include <algorithm>

#include "gfkit/linalg.hpp"
#include "gfkit/upoly.hpp"

namespace gfkit {

WeightedDigraph::WeightedDigraph(int p) : p_(p) {
    if (p < 1) throw domain_error("digraph needs at least one vertex");
}

void WeightedDigraph::check_vertex(int v) const {
    if (v < 1 || v > p_)
        throw domain_error("vertex " + std::to_string(v) + " out of range 1.." +
                           std::to_string(p_));
}

void WeightedDigraph::add_edge(int from, int to, const MPoly& weight) {
    check_vertex(from);
    check_vertex(to);
    auto key = std::make_pair(from, to);
    auto it = edges_.find(key);
    if (it == edges_.end()) {
        if (!weight.is_zero()) edges_.emplace(key, weight);
        return;
    }
    it->second += weight;
    if (it->second.is_zero()) edges_.erase(it);
}

const MPoly* WeightedDigraph::edge(int from, int to) const {
    auto it = edges_.find({from, to});
    return it == edges_.end() ? nullptr : &it->second;
}

PolyMatrix WeightedDigraph::adjacency() const {
    PolyMatrix x(p_, std::vector<MPoly>(p_));
    for (auto& [key, w] : edges_) x[key.first - 1][key.second - 1] = w;
    return x;
}

namespace {

// I - tX
PolyMatrix walk_matrix(const WeightedDigraph& g) {
    MPoly t = MPoly::variable(VAR_T);
    PolyMatrix m = g.adjacency();
    int p = g.num_vertices();
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) {
            m[r][c] = m[r][c] * t * Rat(-1);
            if (r == c) m[r][c] += MPoly(1);
        }
    return m;
}

PolyMatrix delete_row_col(const PolyMatrix& m, int row, int col) {
    PolyMatrix out;
    for (int r = 0; r < (int)m.size(); ++r) {
        if (r == row) continue;
        std::vector<MPoly> line;
        for (int c = 0; c < (int)m.size(); ++c) {
            if (c == col) continue;
            line.push_back(m[r][c]);
        }
        out.push_back(std::move(line));
    }
    return out;
}

void check_endpoints(const WeightedDigraph& g, int i,
                     const std::set<int>& targets) {
    if (i < 1 || i > g.num_vertices())
        throw domain_error("start vertex out of range");
    if (targets.empty())
        throw domain_error("empty target set");
    for (int j : targets)
        if (j < 1 || j > g.num_vertices())
            throw domain_error("target vertex out of range");
}

struct CycleData {
    unsigned mask;
    MPoly weight;  // edge-weight product times t^length
};

// elementary cycles up to rotation: each is rooted at its minimal vertex
void find_cycles(const WeightedDigraph& g, std::vector<CycleData>& out) {
    int p = g.num_vertices();
    MPoly t = MPoly::variable(VAR_T);
    for (int s = 1; s <= p; ++s) {
        // DFS over vertices >= s, distinct, looking to return to s
        struct Frame { int v; unsigned mask; MPoly w; int len; };
        std::vector<Frame> stack;
        stack.push_back({s, 1u << (s - 1), MPoly(1), 0});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            for (auto& [key, w] : g.edges()) {
                if (key.first != f.v) continue;
                int to = key.second;
                if (to == s) {
                    out.push_back({f.mask, f.w * w * t.pow(f.len + 1)});
                    continue;
                }
                if (to < s) continue;
                unsigned bit = 1u << (to - 1);
                if (f.mask & bit) continue;
                stack.push_back({to, f.mask | bit, f.w * w, f.len + 1});
            }
        }
    }
}

// table of alternating sums over vertex-disjoint cycle subsets confined to
// each vertex subset: D[S] = sum over collections with all vertices inside S
// of (-1)^r * weight. Recurrence on the lowest vertex of S: either no cycle
// uses it, or exactly one does.
std::vector<MPoly> cycle_sum_table(const std::vector<CycleData>& cycles,
                                   int p) {
    std::vector<MPoly> d(1u << p);
    d[0] = MPoly(1);
    for (unsigned s = 1; s < (1u << p); ++s) {
        unsigned vbit = s & (~s + 1);
        MPoly acc = d[s & ~vbit];
        for (const auto& c : cycles)
            if ((c.mask & vbit) && (c.mask & ~s) == 0)
                acc -= c.weight * d[s & ~c.mask];
        d[s] = std::move(acc);
    }
    return d;
}

}  // namespace

RatFun transfer_gf(const WeightedDigraph& g, int i, const std::set<int>& targets) {
    check_endpoints(g, i, targets);
    PolyMatrix m = walk_matrix(g);
    MPoly den = det_bareiss(m);
    MPoly num;
    for (int j : targets) {
        // [(I-tX)^{-1}]_{i,j} = (-1)^{i+j} det(M minus row j, col i) / det M
        MPoly cof = det_bareiss(delete_row_col(m, j - 1, i - 1));
        if ((i + j) % 2 != 0) cof = -cof;
        num += cof;
    }
    return RatFun(UPolyT::from_mpoly(num), UPolyT::from_mpoly(den));
}

RatFun viennot_gf(const WeightedDigraph& g, int i, const std::set<int>& targets) {
    check_endpoints(g, i, targets);
    if (g.num_vertices() > 12)
        throw domain_error("exhaustive cycle enumeration limited to 12 vertices");

    int p = g.num_vertices();
    std::vector<CycleData> cycles;
    find_cycles(g, cycles);
    std::vector<MPoly> dtab = cycle_sum_table(cycles, p);
    unsigned full = (1u << p) - 1;
    MPoly den = dtab[full];

    // numerator: self-avoiding walks i -> j paired with cycle collections on
    // the vertices the walk does not touch
    MPoly t = MPoly::variable(VAR_T);
    MPoly num;
    struct Frame { int v; unsigned mask; MPoly w; int len; };
    std::vector<Frame> stack;
    stack.push_back({i, 1u << (i - 1), MPoly(1), 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (targets.count(f.v))
            num += f.w * t.pow(f.len) * dtab[full & ~f.mask];
        for (auto& [key, w] : g.edges()) {
            if (key.first != f.v) continue;
            int to = key.second;
            unsigned bit = 1u << (to - 1);
            if (f.mask & bit) continue;
            stack.push_back({to, f.mask | bit, f.w * w, f.len + 1});
        }
    }
    return RatFun(UPolyT::from_mpoly(num), UPolyT::from_mpoly(den));
}

std::vector<Rat> brute_walk_counts(const WeightedDigraph& g, int i,
                                   const std::set<int>& targets, int upto) {
    check_endpoints(g, i, targets);
    int p = g.num_vertices();
    std::vector<std::vector<Rat>> w(2, std::vector<Rat>(p + 1, Rat(0)));
    w[0][i] = 1;
    std::vector<Rat> out;
    for (int n = 0; n <= upto; ++n) {
        int cur = n % 2, nxt = 1 - cur;
        Rat total(0);
        for (int j : targets) total += w[cur][j];
        out.push_back(total);
        std::fill(w[nxt].begin(), w[nxt].end(), Rat(0));
        for (auto& [key, wt] : g.edges()) {
            if (!wt.is_constant())
                throw domain_error("walk DP needs rational edge weights");
            if (w[cur][key.first] != 0)
                w[nxt][key.second] += w[cur][key.first] * wt.as_constant();
        }
    }
    return out;
}

}  // namespace gfkit
