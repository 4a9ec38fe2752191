#ifndef RELMAG_BIGINT_HPP
#define RELMAG_BIGINT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace relmag {

using BigInt = mpz_class;
using BigRational = mpq_class; // always kept canonical: den > 0, gcd(num, den) = 1

using IntegerVector = std::vector<BigInt>;
using RationalVector = std::vector<BigRational>;

inline BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// "p/q" with q > 0, or "p" when q == 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

} // namespace relmag

#endif // RELMAG_BIGINT_HPP
