#include "gfkit/posets.hpp"

#include <algorithm>

namespace gfkit {

NaturalPoset::NaturalPoset(int k, const std::vector<std::pair<int, int>>& covers)
    : k_(k) {
    if (k < 0) throw domain_error("poset size must be non-negative");
    for (auto& [i, j] : covers) {
        if (i < 1 || j < 1 || i > k || j > k)
            throw domain_error("poset relation element out of range");
        if (i >= j)
            throw domain_error("relation " + std::to_string(i) + " < " +
                               std::to_string(j) +
                               " violates naturality (need i < j as integers)");
        rel_.emplace(i, j);
    }
    // transitive closure
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, int>> add;
        for (auto& [i, j] : rel_)
            for (auto& [a, b] : rel_)
                if (j == a && !rel_.count({i, b})) add.emplace_back(i, b);
        for (auto& pr : add) grew |= rel_.insert(pr).second;
    }
}

bool NaturalPoset::less(int i, int j) const { return rel_.count({i, j}) > 0; }

namespace {

void extend(const NaturalPoset& p, std::vector<int>& word,
            std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    int k = p.size();
    if ((int)word.size() == k) {
        out.push_back(word);
        return;
    }
    for (int e = 1; e <= k; ++e) {
        if (used[e]) continue;
        bool ready = true;
        for (int q = 1; q <= k && ready; ++q)
            if (!used[q] && p.less(q, e)) ready = false;
        if (!ready) continue;
        used[e] = true;
        word.push_back(e);
        extend(p, word, used, out);
        word.pop_back();
        used[e] = false;
    }
}

void check_permutation(const std::vector<int>& sigma) {
    int k = (int)sigma.size();
    std::vector<bool> seen(k + 1, false);
    for (int e : sigma) {
        if (e < 1 || e > k || seen[e])
            throw domain_error("not a permutation of 1..k");
        seen[e] = true;
    }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const NaturalPoset& p) {
    if (p.size() > 12)
        throw domain_error("linear extension listing limited to 12 elements");
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    std::vector<bool> used(p.size() + 1, false);
    extend(p, word, used, out);
    // candidates are tried in ascending order, so out is already sorted
    return out;
}

std::pair<int, std::vector<int>> sigma_data(const std::vector<int>& sigma) {
    check_permutation(sigma);
    int k = (int)sigma.size();
    int e = 0;
    std::vector<int> lambda(k, 0);
    int descents_before = 0;
    for (int j = 0; j < k; ++j) {
        lambda[sigma[j] - 1] = descents_before;
        if (j + 1 < k && sigma[j] > sigma[j + 1]) {
            ++descents_before;
            e += k - (j + 1);  // positions are 1-based in the statistic
        }
    }
    return {e, lambda};
}

bool compatible_with(const std::vector<int>& lambda,
                     const std::vector<int>& sigma) {
    int k = (int)sigma.size();
    for (int i = 0; i + 1 < k; ++i) {
        int a = lambda[sigma[i] - 1], b = lambda[sigma[i + 1] - 1];
        if (sigma[i] > sigma[i + 1] ? a >= b : a > b) return false;
    }
    return true;
}

RatFun p_partition_gf(const NaturalPoset& p) {
    MPoly t = MPoly::variable(VAR_T);
    MPoly num;
    for (auto& sigma : linear_extensions(p))
        num += t.pow(sigma_data(sigma).first);
    MPoly den(1);
    for (int i = 1; i <= p.size(); ++i) den *= MPoly(1) - t.pow(i);
    return RatFun(UPolyT::from_mpoly(num), UPolyT::from_mpoly(den));
}

namespace {

void count_tuples(const NaturalPoset& p, std::vector<int>& lambda, int elem,
                  int weight, int n_max, std::vector<Rat>& counts) {
    int k = p.size();
    if (elem > k) {
        counts[weight] += 1;
        return;
    }
    for (int v = 0; v + weight <= n_max; ++v) {
        bool ok = true;
        // naturality: only smaller elements can be below elem, and they are
        // already assigned
        for (int q = 1; q < elem && ok; ++q)
            if (p.less(q, elem) && lambda[q - 1] > v) ok = false;
        if (!ok) continue;
        lambda[elem - 1] = v;
        count_tuples(p, lambda, elem + 1, weight + v, n_max, counts);
    }
    lambda[elem - 1] = 0;
}

}  // namespace

TSeries brute_p_partitions(const NaturalPoset& p, int n_max) {
    if (n_max < 0) throw domain_error("negative weight bound");
    if (p.size() > 6 || (long)p.size() * n_max > 150)
        throw domain_error("exhaustive tuple enumeration bound exceeded");
    std::vector<Rat> counts(n_max + 1, Rat(0));
    std::vector<int> lambda(p.size(), 0);
    count_tuples(p, lambda, 1, 0, n_max, counts);
    return TSeries::from_rational(counts);
}

TSeries cone_points_bruteforce(const HalfspaceSystem& h, int n_max) {
    if (h.m < 1 || h.m > 4)
        throw domain_error("cone enumeration limited to dimensions 1..4");
    if (n_max < 0 || n_max > 40)
        throw domain_error("cone enumeration limited to weight 40");
    for (auto& row : h.rows)
        if ((int)row.size() != h.m)
            throw domain_error("half-space row has wrong dimension");

    std::vector<Rat> counts(n_max + 1, Rat(0));
    std::vector<int> alpha(h.m, 0);
    // odometer over all tuples with |alpha| <= n_max
    while (true) {
        int weight = 0;
        for (int v : alpha) weight += v;
        if (weight <= n_max) {
            bool ok = true;
            for (auto& row : h.rows) {
                Int dot(0);
                for (int i = 0; i < h.m; ++i) dot += row[i] * alpha[i];
                if (dot < 0) { ok = false; break; }
            }
            if (ok) counts[weight] += 1;
        }
        // advance
        int pos = 0;
        while (pos < h.m) {
            ++alpha[pos];
            int w = 0;
            for (int v : alpha) w += v;
            if (w <= n_max) break;
            alpha[pos] = 0;
            ++pos;
        }
        if (pos == h.m) break;
    }
    return TSeries::from_rational(counts);
}

}  // namespace gfkit
