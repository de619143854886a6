#include "gfkit/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace gfkit {

namespace {

int sign_at(const UPolyQ& p, const Rat& x) { return rat_sign(upq_eval(p, x)); }

// Cauchy bound: every root has |z| < 1 + max |a_i| / |a_n|.
Rat cauchy_bound(const UPolyQ& p) {
    Rat lead = p.back();
    Rat m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rat a = abs(p[i] / lead);
        if (a > m) m = a;
    }
    return 1 + m;
}

// exactly-one-root bisection down to the requested width
RootEnclosure refine(const UPolyQ& p, Rat lo, Rat hi, const Rat& max_width) {
    int slo = sign_at(p, lo);
    while (hi - lo > max_width) {
        Rat mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) return {mid, mid, 1};
        if (sm == slo) lo = mid; else hi = mid;
    }
    return {lo, hi, 1};
}

void isolate_squarefree(const UPolyQ& p, const std::vector<UPolyQ>& chain,
                        Rat lo, Rat hi, const Rat& max_width,
                        std::vector<RootEnclosure>& out) {
    int n = sturm_count(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        // sturm counts (lo, hi], so hi may be the root itself
        if (sign_at(p, hi) == 0) {
            out.push_back({hi, hi, 1});
            return;
        }
        if (sign_at(p, lo) != 0) {
            out.push_back(refine(p, lo, hi, max_width));
            return;
        }
        // lo is a different root of p; split until it is separated
    }
    Rat mid = (lo + hi) / 2;
    isolate_squarefree(p, chain, lo, mid, max_width, out);
    isolate_squarefree(p, chain, mid, hi, max_width, out);
}

}  // namespace

std::vector<UPolyQ> sturm_chain(const UPolyQ& p) {
    std::vector<UPolyQ> chain;
    UPolyQ a = upq_monic(p);
    if (a.empty()) return chain;
    chain.push_back(a);
    UPolyQ b = upq_derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        UPolyQ r = upq_rem(a, b);
        for (auto& c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

namespace {

int sign_changes(const std::vector<UPolyQ>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const std::vector<UPolyQ>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RootEnclosure> isolate_real_roots(const UPolyQ& p,
                                              const Rat& max_width) {
    std::vector<RootEnclosure> out;
    UPolyQ q = p;
    upq_trim(q);
    if (upq_degree(q) <= 0) return out;

    auto factors = upq_squarefree(q);
    for (size_t i = 0; i < factors.size(); ++i) {
        UPolyQ f = factors[i];
        if (upq_degree(f) <= 0) continue;
        std::vector<RootEnclosure> roots;
        if (f[0] == 0) {
            // squarefree, so at most one root at zero; divide it out
            f.erase(f.begin());
            roots.push_back({Rat(0), Rat(0), 1});
        }
        if (upq_degree(f) >= 1) {
            auto chain = sturm_chain(f);
            Rat bound = cauchy_bound(f);
            // isolate the two sides of zero separately so that no enclosure
            // straddles the origin
            isolate_squarefree(f, chain, -bound, Rat(0), max_width, roots);
            isolate_squarefree(f, chain, Rat(0), bound, max_width, roots);
        }
        for (auto& r : roots) {
            r.multiplicity = (int)i + 1;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& a, const RootEnclosure& b) {
                  return a.lo + a.hi < b.lo + b.hi;
              });
    return out;
}

std::vector<RootEnclosure> positive_real_roots(const UPolyQ& p,
                                               const Rat& max_width) {
    std::vector<RootEnclosure> out;
    for (auto& r : isolate_real_roots(p, max_width))
        if (r.hi > 0) out.push_back(r);
    return out;
}

namespace {

using Cplx = std::complex<double>;
using CplxL = std::complex<long double>;

std::vector<double> to_doubles(const UPolyQ& p) {
    std::vector<double> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = rat_to_double(p[i]);
    // scale so the largest magnitude is 1 to dodge overflow
    double m = 0;
    for (double x : c) m = std::max(m, std::fabs(x));
    if (m > 0)
        for (double& x : c) x /= m;
    return c;
}

template <typename C>
C horner(const std::vector<double>& c, C z) {
    C acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + C(c[i]);
    return acc;
}

template <typename C>
C horner_d(const std::vector<double>& c, C z) {
    C acc(0);
    for (size_t i = c.size(); i-- > 1;) acc = acc * z + C((double)i * c[i]);
    return acc;
}

std::vector<Cplx> aberth(const std::vector<double>& c) {
    size_t n = c.size() - 1;
    std::vector<Cplx> z(n);
    double lead = std::fabs(c[n]);
    double maxr = 0;
    for (size_t i = 0; i < n; ++i) maxr = std::max(maxr, std::fabs(c[i]));
    double radius = 1.0 + maxr / lead;
    for (size_t i = 0; i < n; ++i) {
        double a = 2 * M_PI * (double)i / (double)n + 0.4;
        z[i] = std::polar(std::pow(radius, 0.7), a);
    }
    for (int iter = 0; iter < 200; ++iter) {
        double moved = 0;
        for (size_t i = 0; i < n; ++i) {
            Cplx pz = horner(c, z[i]);
            Cplx dz = horner_d(c, z[i]);
            if (std::abs(dz) == 0) { z[i] += Cplx(1e-8, 1e-8); continue; }
            Cplx ratio = pz / dz;
            Cplx sum(0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) sum += Cplx(1) / (z[i] - z[j]);
            Cplx w = ratio / (Cplx(1) - ratio * sum);
            z[i] -= w;
            moved = std::max(moved, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (moved < 1e-15) break;
    }
    // Newton polish in long double
    std::vector<CplxL> cl(c.size());
    for (size_t i = 0; i < c.size(); ++i) cl[i] = CplxL((long double)c[i]);
    for (auto& zi : z) {
        CplxL w((long double)zi.real(), (long double)zi.imag());
        for (int k = 0; k < 6; ++k) {
            CplxL pz(0), dz(0);
            for (size_t i = c.size(); i-- > 0;) {
                if (i >= 1) dz = dz * w + CplxL((long double)i * c[i]);
                pz = pz * w + CplxL((long double)c[i]);
            }
            if (std::abs(dz) == 0.0L) break;
            w -= pz / dz;
        }
        zi = Cplx((double)w.real(), (double)w.imag());
    }
    return z;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const UPolyQ& p) {
    std::vector<ComplexRoot> out;
    UPolyQ q = p;
    upq_trim(q);
    if (upq_degree(q) <= 0) return out;

    // roots at zero
    size_t val = 0;
    while (val < q.size() && q[val] == 0) ++val;
    if (val > 0) {
        out.push_back({Cplx(0, 0), (int)val});
        q.erase(q.begin(), q.begin() + (long)val);
    }

    auto factors = upq_squarefree(q);
    for (size_t i = 0; i < factors.size(); ++i) {
        const UPolyQ& f = factors[i];
        if (upq_degree(f) <= 0) continue;
        for (Cplx z : aberth(to_doubles(f)))
            out.push_back({z, (int)i + 1});
    }
    std::sort(out.begin(), out.end(),
              [](const ComplexRoot& a, const ComplexRoot& b) {
                  return std::abs(a.z) < std::abs(b.z);
              });
    return out;
}

int dominant_count(const std::vector<ComplexRoot>& roots, double rel_sep) {
    if (roots.empty()) return 0;
    double m = std::abs(roots[0].z);
    int count = 0;
    for (const auto& r : roots)
        if (std::abs(r.z) <= m * (1.0 + rel_sep)) count += r.multiplicity;
    return count;
}

double max_residual(const UPolyQ& p, const std::vector<ComplexRoot>& roots) {
    auto c = to_doubles(p);
    double worst = 0;
    for (const auto& r : roots)
        worst = std::max(worst, std::abs(horner(c, r.z)));
    return worst;
}

}  // namespace gfkit
