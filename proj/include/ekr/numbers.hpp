#pragma once

// Exact arithmetic types. All lemma and spectral computations run on these;
// no floating point anywhere in the library.

#include <gmpxx.h>

#include <string>

namespace ekr {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact ratio num/den in lowest terms, denominator > 0.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// "p" for integers, "p/q" otherwise (canonical GMP form).
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace ekr
