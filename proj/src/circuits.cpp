#include <relmag/circuits.hpp>

#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>

namespace relmag {

namespace {

using Mask = std::uint64_t;

Support to_support(Mask mask)
{
    Support s;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1)
            s.push_back(i);
    return s;
}

// Next subset of the same cardinality in colexicographic order (Gosper's hack).
Mask next_same_size(Mask x)
{
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

// Returns the circuit supported on `columns` if there is one: the column
// submatrix must have a one-dimensional null space spanned by a vector with
// no zero coordinate.
std::optional<Circuit> circuit_on(const IntegerMatrix& a, const Support& columns)
{
    const IntegerMatrix b = a.select_columns(columns);
    if (rank(b) + 1 != columns.size())
        return std::nullopt;
    const auto basis = nullspace_basis(b);
    const auto& y = basis.front();
    if (std::any_of(y.begin(), y.end(), [](const BigRational& q) { return q == 0; }))
        return std::nullopt;

    RationalVector x(a.cols());
    for (std::size_t i = 0; i < columns.size(); ++i)
        x[columns[i]] = y[i];
    return Circuit{columns, primitive(x)};
}

} // namespace

Support support_of(std::span<const BigRational> x)
{
    Support s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            s.push_back(i);
    return s;
}

Support support_of(std::span<const BigInt> x)
{
    Support s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            s.push_back(i);
    return s;
}

bool is_elementary(const IntegerMatrix& a, std::span<const BigRational> x)
{
    if (x.size() != a.cols())
        throw InputError("vector length does not match matrix column count");
    if (is_zero(x))
        throw InputError("the zero vector is never elementary");
    if (!is_null_vector(a, x))
        throw InputError("vector is not in the null space");

    // With x in N(A) supported on I, the columns on I are dependent; the
    // support is minimal exactly when they have a one-dimensional null space.
    const Support s = support_of(x);
    return rank(a.select_columns(s)) + 1 == s.size();
}

std::vector<Circuit> enumerate_circuits(const IntegerMatrix& a, const EnumerationOptions& options)
{
    const std::size_t n = a.cols();
    if (n > kMaxEnumerationColumns && !options.allow_large)
        throw InputError("circuit enumeration over " + std::to_string(n) + " columns refused; limit is " +
                         std::to_string(kMaxEnumerationColumns) + " without --allow-large");
    if (n > 63)
        throw InputError("circuit enumeration supports at most 63 columns");

    const std::size_t r = rank(a);
    std::vector<Circuit> found;
    std::vector<Mask> found_masks;
    if (r == n)
        return found;

    const Mask full = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
    const unsigned jobs = std::max(1u, options.jobs);

    // A circuit support I satisfies |I| - 1 <= rank A.
    for (std::size_t size = 1; size <= std::min(n, r + 1); ++size) {
        std::vector<Mask> candidates;
        for (Mask m = (Mask{1} << size) - 1; m <= full && m != 0; m = next_same_size(m)) {
            const bool contains_circuit = std::any_of(found_masks.begin(), found_masks.end(),
                                                      [m](Mask f) { return (m & f) == f; });
            if (!contains_circuit)
                candidates.push_back(m);
            if (m == full)
                break;
        }

        // Same-size candidates cannot contain one another, so they are
        // independent and can be checked in parallel.
        std::vector<std::optional<Circuit>> results(candidates.size());
        auto work = [&](std::size_t begin, std::size_t stride) {
            for (std::size_t i = begin; i < candidates.size(); i += stride)
                results[i] = circuit_on(a, to_support(candidates[i]));
        };
        if (jobs == 1 || candidates.size() < 64) {
            work(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned j = 0; j < jobs; ++j)
                pool.emplace_back(work, j, jobs);
        }

        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (results[i]) {
                found_masks.push_back(candidates[i]);
                found.push_back(std::move(*results[i]));
            }
    }

    std::sort(found.begin(), found.end(),
              [](const Circuit& x, const Circuit& y) { return x.support < y.support; });
    return found;
}

std::vector<Circuit> elementary_basis(const IntegerMatrix& a, const EnumerationOptions& options)
{
    const std::size_t nullity = a.cols() - rank(a);
    std::vector<Circuit> basis;
    std::vector<IntegerVector> chosen;
    for (auto& c : enumerate_circuits(a, options)) {
        if (basis.size() == nullity)
            break;
        chosen.push_back(c.vector);
        if (rank_of_vectors(chosen) == chosen.size())
            basis.push_back(std::move(c));
        else
            chosen.pop_back();
    }
    return basis;
}

std::size_t min_support_size(const IntegerMatrix& a, const EnumerationOptions& options)
{
    const auto circuits = enumerate_circuits(a, options);
    if (circuits.empty())
        throw InputError("null space is trivial; no nonzero null vector exists");
    std::size_t best = circuits.front().support.size();
    for (const auto& c : circuits)
        best = std::min(best, c.support.size());
    return best;
}

std::string format_circuit(const Circuit& c)
{
    std::string out = "I = {";
    for (std::size_t i = 0; i < c.support.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c.support[i] + 1);
    }
    return out + "}; v = " + format_vector(std::span<const BigInt>(c.vector));
}

} // namespace relmag
