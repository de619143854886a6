#pragma once

#include "gfkit/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace gfkit {

// Interned variable ids. t is always id 0; the common variables of the
// library (t, x, y, u, v, s) are pre-registered in that order so term
// ordering and printed output are reproducible across runs.
int var_id(const std::string& name);
bool var_exists(const std::string& name);
std::string var_name(int id);

inline constexpr int VAR_T = 0;

// Exponent vector with trailing zeros trimmed. Exponents may be negative
// (Laurent monomials in the slice/diagonal computations).
struct Monomial {
    std::vector<int> e;

    int exponent(int var) const {
        return var < (int)e.size() ? e[var] : 0;
    }
    int total_degree() const {
        int d = 0;
        for (int k : e) d += k;
        return d;
    }
    void set(int var, int exp);
    void trim();
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded lexicographic: lower total degree first, ties broken by the
// exponent of the earliest variable (larger exponent = later monomial)
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate Laurent polynomial over Rat. Terms are kept in a map
// ordered by GrlexLess with no zero coefficients, so iteration order,
// equality and printing are all deterministic.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(const Rat& c);
    explicit MPoly(long c);
    static MPoly variable(int var, int exp = 1);
    static MPoly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (coefficient of the empty monomial)
    Rat constant_value() const;
    // requires is_constant()
    Rat as_constant() const;

    int num_terms() const { return (int)terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool contains_var(int var) const;
    // largest exponent of var (0 for the zero polynomial)
    int degree(int var) const;
    // smallest exponent of var appearing in any term (0 if absent or zero poly)
    int min_exponent(int var) const;
    int total_degree() const;

    Rat coeff(const Monomial& m) const;
    // polynomial multiplying var^power when the poly is read as univariate in var
    MPoly coeff_of(int var, int power) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly operator*(const Rat& c) const;
    MPoly pow(int n) const; // n >= 0, or n < 0 for a single-term monomial

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly derivative(int var) const;
    // substitute value for var; value may be any polynomial unless var has
    // negative exponents, in which case value must be a single term
    MPoly subst(int var, const MPoly& value) const;
    MPoly subst(int var, const Rat& value) const;

    // exact division; throws domain_error when the division leaves a remainder
    MPoly exact_div(const MPoly& d) const;

    void add_term(const Monomial& m, const Rat& c);

    std::string str() const;

private:
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

std::string monomial_str(const Monomial& m);

} // namespace gfkit
