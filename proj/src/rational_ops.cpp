#include "gfkit/rational_ops.hpp"

#include <algorithm>
#include <cmath>

#include "gfkit/linalg.hpp"

namespace gfkit {

namespace {

std::vector<Rat> expand_rational(const RatFun& f, int order) {
    if (!f.num.rational_coeffs() || !f.den.rational_coeffs())
        throw domain_error("operation needs a univariate rational function");
    return ratfun_expand(f, order).rational_coeffs();
}

}  // namespace

RatFun section(const RatFun& f, int r, int p) {
    if (p < 1 || r < 0 || r >= p)
        throw domain_error("section needs 0 <= r < p");
    int dn = std::max(f.num.degree(), 0);
    int dd = std::max(f.den.degree(), 0);
    int fit = 2 * dd + dn + 2;         // section coefficients used for the fit
    int total = fit + dd;              // plus validation tail
    std::vector<Rat> a = expand_rational(f, total * p + r);

    std::vector<Rat> b(total);
    for (int k = 0; k < total; ++k) b[k] = a[(size_t)k * p + r];

    // q(t) * B(t) = n(t) mod t^fit, deg q <= dd, deg n <= fit - dd - 2
    int m = dd;
    int nn = fit - m - 1;  // number of numerator unknowns n_0..n_{nn-1}
    int cols = (m + 1) + nn;
    QMatrix sys((size_t)fit, std::vector<Rat>((size_t)cols, Rat(0)));
    for (int k = 0; k < fit; ++k) {
        for (int i = 0; i <= m && i <= k; ++i) sys[k][i] = b[k - i];
        if (k < nn) sys[k][m + 1 + k] = Rat(-1);
    }
    auto basis = qmatrix_nullspace(sys, cols);
    if (basis.empty())
        throw domain_error("section reconstruction found no candidate");

    const auto& v = basis.front();
    UPolyQ q(v.begin(), v.begin() + m + 1);
    UPolyQ n(v.begin() + m + 1, v.end());
    upq_trim(q);
    upq_trim(n);
    if (q.empty())
        throw domain_error("section reconstruction degenerated");

    RatFun g(upolyt_from_rational(n), upolyt_from_rational(q));
    if (g.den.coeff(0).is_zero())
        throw domain_error("section denominator vanishes at zero");

    // validation against the tail coefficients
    TSeries check = ratfun_expand(g, total - 1);
    for (int k = 0; k < total; ++k)
        if (check.coeff_rat(k) != b[(size_t)k])
            throw domain_error("section validation failed (internal bound bug)");
    return g;
}

SoittolaReport soittola_check(const RatFun& f, int p_max, double precision) {
    if (p_max < 1) throw domain_error("p_max must be positive");
    std::vector<Rat> a = expand_rational(f, 200);
    for (int i = 0; i <= 200; ++i) {
        if (!rat_is_int(a[(size_t)i]) || a[(size_t)i] < 0)
            throw domain_error("series has a negative or non-integer "
                               "coefficient at order " + std::to_string(i));
    }

    SoittolaReport report;
    report.p_max = p_max;
    report.precision = precision;
    for (int p = 1; p <= p_max; ++p) {
        for (int r = 0; r < p; ++r) {
            SectionPoles sp;
            sp.p = p;
            sp.r = r;
            RatFun g = section(f, r, p);
            if (g.is_polynomial() || g.num.is_zero()) {
                sp.polynomial = true;
                report.sections.push_back(std::move(sp));
                continue;
            }
            UPolyQ den = g.den.to_rational();
            // roots of the reversed polynomial are the reciprocals of the
            // poles; large roots are the well-conditioned ones there
            UPolyQ rev(den.rbegin(), den.rend());
            upq_trim(rev);
            auto recs = complex_roots(rev);
            if (max_residual(rev, recs) > 1e-12)
                throw domain_error("pole finding residual too large");
            for (const auto& rt : recs) {
                if (std::abs(rt.z) == 0.0) continue;  // deg-drop artifacts
                for (int k = 0; k < rt.multiplicity; ++k)
                    sp.poles.push_back(1.0 / rt.z);
            }
            std::sort(sp.poles.begin(), sp.poles.end(),
                      [](const std::complex<double>& u,
                         const std::complex<double>& v) {
                          return std::abs(u) < std::abs(v);
                      });
            double m0 = std::abs(sp.poles.front());
            int count = 0;
            bool gap_ok = true;
            for (const auto& z : sp.poles) {
                double mz = std::abs(z);
                if (mz <= m0 * (1 + precision)) ++count;
                else if (mz <= m0 * (1 + 3 * precision)) gap_ok = false;
            }
            if (!gap_ok)
                throw domain_error("dominant pole cluster unresolved at the "
                                   "requested precision");
            sp.dominant = count;
            report.sections.push_back(std::move(sp));
        }
    }
    return report;
}

AsymptoticEstimate rational_asymptotics(const RatFun& f) {
    if (!f.num.rational_coeffs() || !f.den.rational_coeffs())
        throw domain_error("asymptotics needs a univariate rational function");
    UPolyQ den = f.den.to_rational();
    UPolyQ num = f.num.to_rational();
    if (den.empty() || den[0] == 0)
        throw domain_error("denominator vanishes at zero");
    if (upq_degree(den) == 0)
        throw domain_error("polynomial series has no pole");

    auto roots = complex_roots(den);
    double m0 = std::abs(roots.front().z);
    int dominant = 0;
    for (const auto& r : roots)
        if (std::abs(r.z) <= m0 * (1 + 1e-9)) dominant += r.multiplicity;
    if (dominant > roots.front().multiplicity)
        throw domain_error("multiple dominant poles");

    // certify: the unique dominant root is real, and positive by the growth
    // convention
    Rat w = Rat(1, 1);
    for (int i = 0; i < 18; ++i) w /= 10;  // 1e-18
    auto enclosures = isolate_real_roots(den, w);
    const RootEnclosure* hit = nullptr;
    for (const auto& e : enclosures) {
        double mid = e.approx();
        if (std::fabs(mid - roots.front().z.real()) <= 1e-6 * (1 + m0) &&
            std::fabs(roots.front().z.imag()) <= 1e-9 * (1 + m0)) {
            hit = &e;
            break;
        }
    }
    if (!hit)
        throw domain_error("dominant pole is not real");
    // enclosures never straddle the origin, so positivity is hi > 0
    if (!(hit->hi > 0))
        throw domain_error("dominant pole is not positive");

    AsymptoticEstimate est;
    est.rho = *hit;
    est.multiplicity = hit->multiplicity;
    est.d = hit->multiplicity - 1;

    // record the squarefree factor that vanishes at rho
    auto factors = upq_squarefree(den);
    if (hit->multiplicity <= (int)factors.size())
        est.factor = factors[(size_t)hit->multiplicity - 1];

    // kappa = (-1)^m P(rho) / (rho^m S(rho) (m-1)!) with S = Q^{(m)}/m!
    int m = hit->multiplicity;
    UPolyQ qm = den;
    Rat mfact(1);
    for (int i = 1; i <= m; ++i) {
        qm = upq_derivative(qm);
        mfact *= i;
    }
    Rat m1fact = mfact / m;  // (m-1)!
    auto kappa_at = [&](const Rat& x) {
        Rat s = upq_eval(qm, x) / mfact;
        if (s == 0) throw domain_error("degenerate pole data");
        Rat xm(1);
        for (int i = 0; i < m; ++i) xm *= x;
        Rat k = upq_eval(num, x) / (xm * s * m1fact);
        if (m % 2 != 0) k = -k;
        return rat_to_double(k);
    };
    double k1 = kappa_at(est.rho.lo), k2 = kappa_at(est.rho.hi);
    est.kappa_lo = std::min(k1, k2);
    est.kappa_hi = std::max(k1, k2);
    return est;
}

}  // namespace gfkit
