#include "gfkit/linalg.hpp"

namespace gfkit {

MPoly det_bareiss(PolyMatrix m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n)
            throw domain_error("determinant of a non-square matrix");
    if (n == 0) return MPoly(Rat(1));

    int sign = 1;
    MPoly prev(Rat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t.exact_div(prev);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

std::vector<MPoly> coeffs_in_var(const MPoly& p, int var) {
    if (p.min_exponent(var) < 0)
        throw domain_error("negative power of " + var_name(var));
    std::vector<MPoly> out(p.degree(var) + 1);
    for (auto& [m, c] : p.terms()) {
        Monomial r = m;
        int e = m.exponent(var);
        r.set(var, 0);
        out[e].add_term(r, c);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

namespace {

int poly_deg(const std::vector<MPoly>& p) {
    int d = (int)p.size() - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
}

} // namespace

MPoly resultant(const std::vector<MPoly>& p, const std::vector<MPoly>& q) {
    int m = poly_deg(p), n = poly_deg(q);
    if (m < 0 || n < 0)
        throw domain_error("resultant of the zero polynomial");
    if (m == 0 && n == 0) return MPoly(Rat(1));
    if (m == 0) return p[0].pow(n);
    if (n == 0) return q[0].pow(m);

    size_t size = (size_t)(m + n);
    PolyMatrix s(size, std::vector<MPoly>(size));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            s[row][row + j] = p[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            s[n + row][row + j] = q[n - j];
    return det_bareiss(std::move(s));
}

MPoly discriminant(const std::vector<MPoly>& p) {
    int m = poly_deg(p);
    if (m < 1)
        throw domain_error("discriminant needs degree >= 1");
    std::vector<MPoly> dp(m);
    for (int i = 1; i <= m; ++i) dp[i - 1] = p[i] * Rat(i);
    MPoly res = resultant(p, dp);
    MPoly d = res.exact_div(p[m]);
    bool flip = (m % 4 == 2) || (m % 4 == 3); // (-1)^(m(m-1)/2)
    return flip ? -d : d;
}

std::vector<int> qmatrix_rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> qmatrix_nullspace(QMatrix m, int ncols) {
    for (auto& row : m) row.resize(ncols, Rat(0));
    std::vector<int> pivots = qmatrix_rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gfkit
