#include "gfkit/tseries.hpp"

#include <sstream>

namespace gfkit {

TSeries TSeries::one(int order) { return constant(Rat(1), order); }

TSeries TSeries::t(int order) {
    TSeries s(order);
    if (order >= 1) s.c_[1] = MPoly(Rat(1));
    return s;
}

TSeries TSeries::constant(const Rat& c, int order) {
    TSeries s(order);
    if (order >= 0) s.c_[0] = MPoly(c);
    return s;
}

TSeries TSeries::from_mpoly(const MPoly& p, int order) {
    if (p.min_exponent(VAR_T) < 0)
        throw domain_error("negative power of t in series: " + p.str());
    TSeries s(order);
    for (auto& [m, c] : p.terms()) {
        int e = m.exponent(VAR_T);
        if (e > order) continue;
        Monomial r = m;
        r.set(VAR_T, 0);
        s.c_[e].add_term(r, c);
    }
    return s;
}

TSeries TSeries::from_rational(const std::vector<Rat>& coeffs) {
    TSeries s((int)coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) s.c_[i] = MPoly(coeffs[i]);
    return s;
}

const MPoly& TSeries::coeff(int i) const {
    static const MPoly zero;
    if (i < 0 || i > order_)
        throw domain_error("series coefficient " + std::to_string(i) +
                           " beyond truncation order " + std::to_string(order_));
    (void)zero;
    return c_[i];
}

void TSeries::set_coeff(int i, MPoly c) {
    if (i < 0 || i > order_)
        throw domain_error("series coefficient out of range");
    if (c.contains_var(VAR_T))
        throw domain_error("series coefficient contains t: " + c.str());
    c_[i] = std::move(c);
}

std::vector<Rat> TSeries::rational_coeffs() const {
    std::vector<Rat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].as_constant();
    return out;
}

int TSeries::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (!c_[i].is_zero()) return i;
    return order_ + 1;
}

bool TSeries::all_rational() const {
    for (auto& c : c_)
        if (!c.is_constant()) return false;
    return true;
}

TSeries TSeries::truncate(int order) const {
    if (order > order_)
        throw domain_error("cannot extend series truncation order");
    TSeries s(order);
    for (int i = 0; i <= order; ++i) s.c_[i] = c_[i];
    return s;
}

TSeries TSeries::operator+(const TSeries& o) const {
    int n = std::min(order_, o.order_);
    TSeries s(n);
    for (int i = 0; i <= n; ++i) s.c_[i] = c_[i] + o.c_[i];
    return s;
}

TSeries TSeries::operator-(const TSeries& o) const {
    int n = std::min(order_, o.order_);
    TSeries s(n);
    for (int i = 0; i <= n; ++i) s.c_[i] = c_[i] - o.c_[i];
    return s;
}

TSeries TSeries::operator-() const {
    TSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = -c_[i];
    return s;
}

TSeries TSeries::operator*(const TSeries& o) const {
    int va = valuation(), vb = o.valuation();
    int n = std::min(order_ + vb, o.order_ + va);
    n = std::min(n, order_ + o.order_);
    TSeries s(n);
    if (all_rational() && o.all_rational()) {
        std::vector<Rat> a(order_ + 1), b(o.order_ + 1), out(n + 1, Rat(0));
        for (int i = 0; i <= order_; ++i) a[i] = c_[i].constant_value();
        for (int i = 0; i <= o.order_; ++i) b[i] = o.c_[i].constant_value();
        for (int i = va; i <= order_ && i <= n; ++i) {
            if (a[i] == 0) continue;
            int jmax = std::min(n - i, o.order_);
            for (int j = vb; j <= jmax; ++j)
                out[i + j] += a[i] * b[j];
        }
        for (int i = 0; i <= n; ++i)
            if (out[i] != 0) s.c_[i] = MPoly(out[i]);
        return s;
    }
    for (int i = va; i <= order_ && i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        int jmax = std::min(n - i, o.order_);
        for (int j = vb; j <= jmax; ++j) {
            if (o.c_[j].is_zero()) continue;
            s.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return s;
}

TSeries TSeries::operator*(const Rat& k) const {
    TSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = c_[i] * k;
    return s;
}

TSeries TSeries::operator*(const MPoly& k) const {
    if (k.contains_var(VAR_T))
        throw domain_error("scalar for series multiplication contains t");
    TSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = c_[i] * k;
    return s;
}

TSeries TSeries::invert() const {
    if (order_ < 0 || !c_[0].is_constant() || c_[0].is_zero())
        throw domain_error("series inverse requires a nonzero rational constant term");
    Rat a0 = c_[0].as_constant();
    TSeries s(order_);
    if (all_rational()) {
        std::vector<Rat> a(order_ + 1), b(order_ + 1, Rat(0));
        for (int i = 0; i <= order_; ++i) a[i] = c_[i].constant_value();
        b[0] = 1 / a0;
        for (int n = 1; n <= order_; ++n) {
            Rat acc(0);
            for (int i = 1; i <= n; ++i)
                if (a[i] != 0) acc += a[i] * b[n - i];
            b[n] = -acc / a0;
        }
        for (int i = 0; i <= order_; ++i)
            if (b[i] != 0) s.c_[i] = MPoly(b[i]);
        return s;
    }
    Rat inv0 = 1 / a0;
    s.c_[0] = MPoly(inv0);
    for (int n = 1; n <= order_; ++n) {
        MPoly acc;
        for (int i = 1; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            acc += c_[i] * s.c_[n - i];
        }
        s.c_[n] = acc * -inv0;
    }
    return s;
}

TSeries TSeries::sqrt() const {
    if (order_ < 0 || !c_[0].is_constant())
        throw domain_error("series sqrt requires a rational constant term");
    Rat a0 = c_[0].as_constant();
    if (a0 <= 0)
        throw domain_error("series sqrt requires a positive constant term");
    // exact rational square root of a0
    Int num = a0.get_num(), den = a0.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        throw domain_error("constant term " + rat_str(a0) +
                           " is not the square of a rational");
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat s0(rn, rd);

    TSeries s(order_);
    Rat half_inv = 1 / (2 * s0);
    s.c_[0] = MPoly(s0);
    // s_n = (a_n - sum_{0<i<n} s_i s_{n-i}) / (2 s_0)
    for (int n = 1; n <= order_; ++n) {
        MPoly acc = c_[n];
        for (int i = 1; i < n; ++i)
            acc -= s.c_[i] * s.c_[n - i];
        s.c_[n] = acc * half_inv;
    }
    return s;
}

TSeries TSeries::derive() const {
    if (order_ < 0)
        throw domain_error("cannot differentiate an empty series");
    TSeries s(order_ - 1);
    for (int i = 1; i <= order_; ++i) s.c_[i - 1] = c_[i] * Rat(i);
    return s;
}

TSeries TSeries::compose(const TSeries& o) const {
    if (o.order_ < 0 || !o.c_[0].is_zero())
        throw domain_error("series composition requires inner constant term 0");
    int vo = std::max(1, o.valuation());
    long cap = (long)(order_ + 1) * vo - 1;
    int n = (int)std::min((long)o.order_, cap);
    // Horner from the top coefficient down
    int kmax = std::min(order_, vo == 1 ? n : n / vo);
    TSeries acc = TSeries::zero(n);
    TSeries inner = o.truncate(n);
    for (int k = kmax; k >= 0; --k) {
        acc = acc * inner;
        acc = acc.truncate(n);
        TSeries ck = TSeries::zero(n);
        ck.c_[0] = c_[k];
        acc = acc + ck;
    }
    return acc;
}

TSeries TSeries::pow(int n) const {
    if (n < 0) throw domain_error("negative series power");
    TSeries out = TSeries::one(order_);
    TSeries base = *this;
    while (n > 0) {
        if (n & 1) out = (out * base).truncate(std::min(out.order(), order_));
        if (n > 1) base = (base * base).truncate(std::min(base.order(), order_));
        n >>= 1;
    }
    return out.truncate(std::min(out.order(), order_));
}

TSeries TSeries::shift_up(int k) const {
    if (k < 0) throw domain_error("negative shift");
    TSeries s(order_ + k);
    for (int i = 0; i <= order_; ++i) s.c_[i + k] = c_[i];
    return s;
}

TSeries TSeries::shift_down(int k) const {
    if (k < 0) throw domain_error("negative shift");
    if (valuation() < k)
        throw domain_error("series valuation below requested shift");
    TSeries s(order_ - k);
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = c_[i + k];
    return s;
}

bool TSeries::matches(const TSeries& o, int upto) const {
    if (upto > order_ || upto > o.order_)
        throw domain_error("comparison beyond truncation order");
    for (int i = 0; i <= upto; ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

bool TSeries::operator==(const TSeries& o) const {
    if (order_ != o.order_) return false;
    return order_ < 0 || matches(o, order_);
}

std::string TSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (!first) os << " + ";
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") os << "";
            else if (c_[i].is_constant() || c_[i].num_terms() == 1) os << cs << "*";
            else os << "(" << cs << ")*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << order_ + 1 << ")";
    return os.str();
}

} // namespace gfkit
