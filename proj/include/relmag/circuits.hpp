#ifndef RELMAG_CIRCUITS_HPP
#define RELMAG_CIRCUITS_HPP

#include <relmag/matrix.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace relmag {

/// Sorted, 0-based column indices.
using Support = std::vector<std::size_t>;

/// A minimal-support null vector of A (a circuit of the column matroid),
/// stored in primitive integer form. Its support determines it up to scale.
struct Circuit {
    Support support;
    IntegerVector vector;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct EnumerationOptions {
    bool allow_large = false; // lift the column-count guard
    unsigned jobs = 1;
};

inline constexpr std::size_t kMaxEnumerationColumns = 24;

Support support_of(std::span<const BigRational> x);
Support support_of(std::span<const BigInt> x);

/// True iff x is a nonzero null vector of A whose support is minimal.
/// Throws InputError if x is zero or not in the null space.
bool is_elementary(const IntegerMatrix& a, std::span<const BigRational> x);

/// All circuits, sorted lexicographically by support. Candidate supports are
/// scanned by increasing size so supersets of found circuits can be skipped.
/// Refuses more than kMaxEnumerationColumns columns unless allow_large is set.
std::vector<Circuit> enumerate_circuits(const IntegerMatrix& a, const EnumerationOptions& options = {});

/// Linearly independent circuits spanning N(A); size n - rank A.
std::vector<Circuit> elementary_basis(const IntegerMatrix& a, const EnumerationOptions& options = {});

/// Fewest nonzero coordinates in a nonzero null vector. Throws InputError
/// when the null space is trivial.
std::size_t min_support_size(const IntegerMatrix& a, const EnumerationOptions& options = {});

/// "I = {i1,...}; v = (a1,...,an)" with 1-based indices.
std::string format_circuit(const Circuit& c);

} // namespace relmag

#endif // RELMAG_CIRCUITS_HPP
