#include "gfkit/upoly.hpp"

namespace gfkit {

UPolyT::UPolyT(std::vector<MPoly> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c.contains_var(VAR_T))
            throw domain_error("UPolyT coefficient contains t: " + c.str());
    trim();
}

void UPolyT::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPolyT UPolyT::from_mpoly(const MPoly& p) {
    if (p.min_exponent(VAR_T) < 0)
        throw domain_error("negative power of t in polynomial: " + p.str());
    UPolyT out;
    out.c_.resize(p.degree(VAR_T) + 1);
    for (auto& [m, c] : p.terms()) {
        Monomial r = m;
        int e = m.exponent(VAR_T);
        r.set(VAR_T, 0);
        out.c_[e].add_term(r, c);
    }
    out.trim();
    return out;
}

UPolyT UPolyT::constant(const Rat& c) {
    UPolyT out;
    if (c != 0) out.c_.push_back(MPoly(c));
    return out;
}

MPoly UPolyT::to_mpoly() const {
    MPoly out;
    for (size_t i = 0; i < c_.size(); ++i)
        out += c_[i] * MPoly::variable(VAR_T, (int)i);
    return out;
}

const MPoly& UPolyT::coeff(int i) const {
    static const MPoly zero;
    if (i < 0 || i >= (int)c_.size()) return zero;
    return c_[i];
}

UPolyT UPolyT::operator+(const UPolyT& o) const {
    UPolyT out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < o.c_.size()) out.c_[i] += o.c_[i];
    }
    out.trim();
    return out;
}

UPolyT UPolyT::operator-(const UPolyT& o) const {
    UPolyT out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < o.c_.size()) out.c_[i] -= o.c_[i];
    }
    out.trim();
    return out;
}

UPolyT UPolyT::operator*(const UPolyT& o) const {
    UPolyT out;
    if (c_.empty() || o.c_.empty()) return out;
    out.c_.resize(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] += c_[i] * o.c_[j];
    out.trim();
    return out;
}

UPolyT UPolyT::operator*(const Rat& k) const {
    UPolyT out;
    if (k == 0) return out;
    out.c_ = c_;
    for (auto& c : out.c_) c = c * k;
    return out;
}

UPolyT UPolyT::derivative() const {
    UPolyT out;
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        out.c_[i - 1] = c_[i] * Rat((long)i);
    out.trim();
    return out;
}

MPoly UPolyT::eval(const Rat& t0) const {
    MPoly out;
    for (size_t i = c_.size(); i-- > 0;)
        out = out * MPoly(t0) + c_[i];
    return out;
}

bool UPolyT::rational_coeffs() const {
    for (auto& c : c_)
        if (!c.is_constant()) return false;
    return true;
}

std::vector<Rat> UPolyT::to_rational() const {
    std::vector<Rat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].as_constant();
    return out;
}

UPolyT upolyt_from_rational(const UPolyQ& p) {
    std::vector<MPoly> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = MPoly(p[i]);
    return UPolyT(std::move(c));
}

UPolyQ upq_trim(UPolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int upq_degree(const UPolyQ& p) { return (int)p.size() - 1; }

Rat upq_eval(const UPolyQ& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UPolyQ upq_derivative(const UPolyQ& p) {
    UPolyQ out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat((long)i));
    return upq_trim(out);
}

UPolyQ upq_add(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return upq_trim(out);
}

UPolyQ upq_sub(const UPolyQ& a, const UPolyQ& b) {
    UPolyQ out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return upq_trim(out);
}

UPolyQ upq_mul(const UPolyQ& a, const UPolyQ& b) {
    if (a.empty() || b.empty()) return {};
    UPolyQ out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return upq_trim(out);
}

UPolyQ upq_scale(const UPolyQ& a, const Rat& k) {
    if (k == 0) return {};
    UPolyQ out = a;
    for (auto& c : out) c *= k;
    return out;
}

UPolyQ upq_rem(const UPolyQ& a, const UPolyQ& b) {
    if (b.empty()) throw domain_error("polynomial remainder by zero");
    UPolyQ r = a;
    while ((int)r.size() >= (int)b.size() && !r.empty()) {
        Rat q = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
        r = upq_trim(r);
    }
    return r;
}

UPolyQ upq_div_exact(const UPolyQ& a, const UPolyQ& b) {
    if (b.empty()) throw domain_error("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw domain_error("inexact polynomial division");
    UPolyQ r = a, q(a.size() - b.size() + 1, Rat(0));
    for (size_t k = q.size(); k-- > 0;) {
        if (r.size() == b.size() + k) {
            q[k] = r.back() / b.back();
            for (size_t i = 0; i < b.size(); ++i) r[k + i] -= q[k] * b[i];
            r = upq_trim(r);
        }
    }
    if (!r.empty()) throw domain_error("inexact polynomial division");
    return upq_trim(q);
}

UPolyQ upq_monic(UPolyQ p) {
    p = upq_trim(std::move(p));
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

UPolyQ upq_gcd(UPolyQ a, UPolyQ b) {
    a = upq_trim(std::move(a));
    b = upq_trim(std::move(b));
    while (!b.empty()) {
        UPolyQ r = upq_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upq_monic(std::move(a));
}

std::vector<UPolyQ> upq_squarefree(const UPolyQ& p0) {
    UPolyQ p = upq_monic(upq_trim(p0));
    std::vector<UPolyQ> out;
    if (upq_degree(p) <= 0) return out;
    UPolyQ dp = upq_derivative(p);
    UPolyQ g = upq_gcd(p, dp);
    if (upq_degree(g) == 0) {
        out.push_back(p);
        return out;
    }
    UPolyQ w = upq_div_exact(p, g);
    UPolyQ z = upq_div_exact(dp, g);
    for (;;) {
        UPolyQ h = upq_sub(z, upq_derivative(w));
        if (h.empty()) {
            out.push_back(upq_monic(w));
            break;
        }
        UPolyQ a = upq_gcd(w, h);
        out.push_back(a);
        w = upq_div_exact(w, a);
        z = upq_div_exact(h, a);
    }
    return out;
}

} // namespace gfkit
