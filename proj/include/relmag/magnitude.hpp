#ifndef RELMAG_MAGNITUDE_HPP
#define RELMAG_MAGNITUDE_HPP

#include <relmag/circuits.hpp>

#include <optional>
#include <string>
#include <vector>

namespace relmag {

/// Relative magnitude value: a rational >= 1, or the conventional ZERO
/// reported when the null space is trivial.
class Magnitude {
public:
    static Magnitude zero() { return Magnitude(); }
    static Magnitude of(BigRational value);

    bool is_zero() const noexcept { return !m_value.has_value(); }
    /// 0 for ZERO.
    BigRational value() const { return m_value.value_or(BigRational(0)); }

    friend bool operator==(const Magnitude&, const Magnitude&) = default;

private:
    Magnitude() = default;
    std::optional<BigRational> m_value;
};

enum class Exactness { exact, upper_bound };

struct ClauseVerdict {
    std::string clause;
    bool passed;
    std::string detail;
};

struct MagnitudeCertificate {
    Magnitude omega_upper = Magnitude::zero();
    std::optional<Circuit> witness;          // absent iff omega_upper is ZERO
    BigInt norm;                             // ||A||_inf
    std::size_t rank = 0;
    std::size_t columns = 0;
    std::optional<std::size_t> min_support;  // t
    std::optional<BigInt> theorem_bound;     // (norm-1)^rank, for norm >= 3
    std::optional<BigInt> support_bound;     // (norm-1)^(t-1), for norm >= 2
    Exactness exactness = Exactness::exact;  // exact iff nullity <= 1
    bool sharp = false;                      // omega_upper == theorem_bound
    std::vector<ClauseVerdict> verdicts;

    bool passed() const;
};

/// max_i |x_i| / min_{x_i != 0} |x_i|. Throws InputError on the zero vector.
BigRational omega_vector(std::span<const BigRational> x);
BigRational omega_vector(std::span<const BigInt> x);

/// Minimum of omega over all circuits of A, with the lexicographically first
/// minimizing circuit as witness; exact when nullity <= 1, otherwise an upper
/// bound. Also evaluates the norm/rank and least-support bounds and records a
/// verdict per clause.
MagnitudeCertificate omega_matrix_upper(const IntegerMatrix& a, const EnumerationOptions& options = {});

struct SmallNormVerdict {
    BigInt norm;
    Magnitude omega = Magnitude::zero();
    std::size_t circuits_checked = 0;
};

/// For ||A||_inf <= 2: checks that every circuit has omega exactly 1 and
/// reports omega(A) in {0, 1}. Throws InputError when the norm is 3 or more,
/// CertificationFailure if some circuit violates the dichotomy.
SmallNormVerdict classify_small_norm(const IntegerMatrix& a, const EnumerationOptions& options = {});

std::string to_string(Exactness e);

/// key=value lines followed by "omega=<w> bound=<b> SHARP|NOT-SHARP".
std::string format_certificate(const MagnitudeCertificate& cert);

} // namespace relmag

#endif // RELMAG_MAGNITUDE_HPP
