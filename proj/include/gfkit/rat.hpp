#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace gfkit {

// Exact rational scalar. mpq_class keeps values canonical (gcd(num, den) = 1,
// den > 0) as long as values are built through arithmetic; raw string input
// goes through rat_parse which canonicalizes explicitly.
using Rat = mpq_class;
using Int = mpz_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

// sign as -1/0/+1
inline int rat_sign(const Rat& q) { return sgn(q); }

} // namespace gfkit
