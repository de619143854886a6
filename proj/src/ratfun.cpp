#include "gfkit/ratfun.hpp"
#include "gfkit/parse.hpp"

namespace gfkit {

namespace {

// scale so the polynomial has integer coefficients, content 1 and positive
// lowest-order nonzero coefficient; returns the applied factor
Rat primitive_factor(const UPolyQ& p) {
    Int num_gcd(0), den_lcm(1);
    for (const Rat& c : p) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rat(1);
    Rat f(den_lcm, num_gcd);
    f.canonicalize();
    for (const Rat& c : p) {
        if (c != 0) {
            if (c * f < 0) f = -f;
            break;
        }
    }
    return f;
}

} // namespace

RatFun::RatFun(UPolyT n, UPolyT d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
        throw domain_error("rational function with zero denominator");
    if (num.rational_coeffs() && den.rational_coeffs()) {
        UPolyQ nq = num.to_rational(), dq = den.to_rational();
        UPolyQ g = upq_gcd(nq, dq);
        if (upq_degree(g) > 0) {
            nq = nq.empty() ? nq : upq_div_exact(nq, g);
            dq = upq_div_exact(dq, g);
        }
        Rat f = primitive_factor(dq);
        num = upolyt_from_rational(upq_scale(nq, f));
        den = upolyt_from_rational(upq_scale(dq, f));
    }
}

bool RatFun::equals(const RatFun& o) const {
    return num * o.den == o.num * den;
}

bool RatFun::is_polynomial() const {
    try {
        num.to_mpoly().exact_div(den.to_mpoly());
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

std::string RatFun::str() const {
    if (den == UPolyT::constant(Rat(1))) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

RatFun ratfun_parse(const std::string& num_expr, const std::string& den_expr) {
    return RatFun(UPolyT::from_mpoly(parse_poly(num_expr)),
                  UPolyT::from_mpoly(parse_poly(den_expr)));
}

TSeries ratfun_expand(const RatFun& f, int n) {
    const MPoly& d0 = f.den.coeff(0);
    if (!d0.is_constant() || d0.is_zero())
        throw domain_error("denominator is not invertible at t = 0: constant term " +
                           d0.str());
    Rat q0 = d0.as_constant();
    TSeries s(n);
    int dq = f.den.degree();
    for (int k = 0; k <= n; ++k) {
        MPoly acc = f.num.coeff(k);
        for (int i = 1; i <= std::min(k, dq); ++i)
            acc -= f.den.coeff(i) * s.coeff(k - i);
        s.set_coeff(k, acc * (1 / q0));
    }
    return s;
}

BiRatFun::BiRatFun(MPoly n, MPoly d, int laurent_var)
    : num(std::move(n)), den(std::move(d)), svar(laurent_var) {
    if (den.is_zero())
        throw domain_error("rational function with zero denominator");
    if (num.min_exponent(VAR_T) < 0 || den.min_exponent(VAR_T) < 0)
        throw domain_error("negative power of t in rational function");
}

std::string BiRatFun::str() const {
    return "(" + num.str() + ") / (" + den.str() + ")";
}

} // namespace gfkit
