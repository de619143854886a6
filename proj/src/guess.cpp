#include "gfkit/guess.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gfkit/linalg.hpp"
#include "gfkit/tseries.hpp"
#include "gfkit/upoly.hpp"

namespace gfkit {

namespace {

// sum_j q_j a_{i-j} for every i past the numerator degree must vanish
bool denominator_annihilates(const std::vector<Rat>& a,
                             const std::vector<Rat>& q, int num_deg) {
    for (size_t i = num_deg + 1; i < a.size(); ++i) {
        Rat s(0);
        for (size_t j = 0; j < q.size() && j <= i; ++j)
            s += q[j] * a[i - j];
        if (s != 0) return false;
    }
    return true;
}

std::optional<GuessResult> try_window(const std::vector<Rat>& a,
                                      int dn, int dd) {
    int len = (int)a.size();
    QMatrix rows;
    for (int i = dn + 1; i < len; ++i) {
        std::vector<Rat> row(dd + 1, Rat(0));
        for (int j = 0; j <= dd && j <= i; ++j) row[j] = a[i - j];
        rows.push_back(std::move(row));
    }
    auto basis = qmatrix_nullspace(std::move(rows), dd + 1);
    for (const auto& q : basis) {
        if (q[0] == 0) continue;
        if (!denominator_annihilates(a, q, dn)) continue;
        UPolyQ num(dn + 1, Rat(0));
        for (int i = 0; i <= dn; ++i)
            for (int j = 0; j <= dd && j <= i; ++j)
                num[i] += q[j] * a[i - j];
        GuessResult r;
        r.kind = GuessResult::Kind::rational;
        r.fun = RatFun(upolyt_from_rational(upq_trim(num)),
                       upolyt_from_rational(upq_trim(q)));
        r.used = dn + dd + 1;
        r.validated = len - r.used;
        return r;
    }
    return std::nullopt;
}

} // namespace

std::optional<GuessResult> guess_rational(const std::vector<Rat>& coeffs,
                                          int max_num_deg, int max_den_deg) {
    if (max_num_deg < 0 || max_den_deg < 0)
        throw std::invalid_argument("degree bounds must be nonnegative");
    int len = (int)coeffs.size();
    if (len < 4)
        throw std::domain_error("not enough coefficients to fit and validate");

    // smallest window first; a window needs dn+dd+1 coefficients to fit and
    // at least 3 more to confirm, so oversized windows are skipped
    for (int total = 0; total <= max_num_deg + max_den_deg; ++total) {
        for (int dn = std::max(0, total - max_den_deg);
             dn <= std::min(total, max_num_deg); ++dn) {
            int dd = total - dn;
            if (len < dn + dd + 4) continue;
            if (auto r = try_window(coeffs, dn, dd)) return r;
        }
    }
    return std::nullopt;
}

std::optional<GuessResult> guess_algebraic(const std::vector<Rat>& coeffs,
                                           int d, int e) {
    if (d < 0 || e < 1)
        throw std::invalid_argument("need t-degree >= 0 and series degree >= 1");
    int n_unknowns = (d + 1) * (e + 1);
    int len = (int)coeffs.size();
    if (len < n_unknowns + 2)
        throw std::domain_error("not enough coefficients to fit and validate");

    int order = len - 1;
    TSeries a = TSeries::from_rational(coeffs);
    std::vector<TSeries> apow;
    apow.push_back(TSeries::constant(Rat(1), order));
    for (int j = 1; j <= e; ++j)
        apow.push_back((apow.back() * a).truncate(order));

    // columns are the monomials t^i a^j in graded order, t-degree breaking
    // ties, so the nullspace basis leads with the smallest relation
    std::vector<std::pair<int, int>> cols;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= e; ++j) cols.push_back({i, j});
    std::sort(cols.begin(), cols.end(),
              [](const std::pair<int, int>& l, const std::pair<int, int>& r) {
                  int lt = l.first + l.second, rt = r.first + r.second;
                  if (lt != rt) return lt < rt;
                  return l.first < r.first;
              });

    QMatrix rows(len, std::vector<Rat>(n_unknowns, Rat(0)));
    for (int m = 0; m < len; ++m)
        for (int k = 0; k < n_unknowns; ++k) {
            auto [i, j] = cols[k];
            if (m >= i) rows[m][k] = apow[j].coeff_rat(m - i);
        }

    auto basis = qmatrix_nullspace(std::move(rows), n_unknowns);
    if (basis.empty()) return std::nullopt;
    std::vector<Rat> v = basis.front();

    // clear denominators, strip content, make the graded-leading term positive
    Int scale(1);
    for (const Rat& c : v) {
        Int den = c.get_den();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
    Int content(0);
    for (Rat& c : v) {
        c *= Rat(scale);
        Int num = c.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    for (Rat& c : v) c /= Rat(content);
    int lead = n_unknowns - 1;
    while (v[lead] == 0) --lead;
    if (v[lead] < 0)
        for (Rat& c : v) c = -c;

    int avar = var_id("a");
    MPoly p;
    for (int k = 0; k < n_unknowns; ++k) {
        if (v[k] == 0) continue;
        p = p + MPoly::variable(VAR_T, cols[k].first) *
                    MPoly::variable(avar, cols[k].second) * MPoly(v[k]);
    }

    GuessResult r;
    r.kind = GuessResult::Kind::algebraic;
    r.equation = std::move(p);
    r.used = n_unknowns - 1;
    r.validated = len - r.used;
    return r;
}

} // namespace gfkit
