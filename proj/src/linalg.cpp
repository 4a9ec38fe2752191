#include <relmag/linalg.hpp>

#include <relmag/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>

namespace relmag {

namespace {

using Grid = std::vector<IntegerVector>;

struct Echelon {
    Grid rows;                        // fraction-free row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each leading row
    int sign = 1;                     // parity of row swaps
};

// One-step Bareiss elimination. Every entry below the processed pivots stays
// an integer minor of the input, so each division is exact.
Echelon bareiss(Grid rows, std::size_t cols)
{
    Echelon e;
    const std::size_t m = rows.size();
    BigInt previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        std::size_t p = r;
        while (p < m && rows[p][c] == 0)
            ++p;
        if (p == m)
            continue;
        if (p != r) {
            std::swap(rows[p], rows[r]);
            e.sign = -e.sign;
        }
        const BigInt pivot = rows[r][c];
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = pivot * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                rows[i][j] = std::move(v);
            }
            rows[i][c] = 0;
        }
        previous = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

Echelon bareiss(const IntegerMatrix& a) { return bareiss(a.to_rows(), a.cols()); }

void require_square(const IntegerMatrix& m)
{
    if (!m.is_square())
        throw NonSquareMatrix("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected square");
}

// Solve the upper-triangular part of a fraction-free echelon form for the
// given assignment of free variables; free entries of x must already be set.
void back_substitute(const Echelon& e, std::size_t cols, RationalVector& x, std::span<const BigRational> rhs)
{
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        const std::size_t p = e.pivots[r];
        BigRational s = rhs.empty() ? BigRational(0) : rhs[r];
        for (std::size_t j = p + 1; j < cols; ++j)
            if (e.rows[r][j] != 0 && x[j] != 0)
                s -= BigRational(e.rows[r][j]) * x[j];
        x[p] = s / BigRational(e.rows[r][p]);
    }
}

BigInt common_denominator(std::span<const BigRational> v)
{
    BigInt l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

} // namespace

BigInt infinity_norm(const IntegerMatrix& a)
{
    BigInt best = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BigInt s = 0;
        for (const auto& v : a.row(r))
            s += abs(v);
        if (s > best)
            best = s;
    }
    return best;
}

std::size_t rank(const IntegerMatrix& a) { return bareiss(a).pivots.size(); }

std::vector<std::size_t> pivot_columns(const IntegerMatrix& a) { return bareiss(a).pivots; }

std::vector<RationalVector> nullspace_basis(const IntegerMatrix& a)
{
    const Echelon e = bareiss(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector x(n);
        x[f] = 1;
        back_substitute(e, n, x, {});
        basis.push_back(to_rational(primitive(x)));
    }
    return basis;
}

BigInt determinant(const IntegerMatrix& m)
{
    require_square(m);
    const Echelon e = bareiss(m);
    if (e.pivots.size() < m.rows())
        return 0;
    return e.sign * e.rows.back().back();
}

BigInt laplace_determinant(const IntegerMatrix& m)
{
    require_square(m);
    const std::size_t n = m.rows();
    if (n > 62)
        throw InputError("laplace_determinant supports at most 62 columns");

    std::unordered_map<std::uint64_t, BigInt> memo;
    // minor(used): determinant of rows [popcount(used), n) restricted to the
    // columns not in `used`.
    auto minor = [&](auto&& self, std::uint64_t used) -> BigInt {
        const auto row = static_cast<std::size_t>(__builtin_popcountll(used));
        if (row == n)
            return 1;
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        BigInt total = 0;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (std::uint64_t{1} << c))
                continue;
            if (m(row, c) != 0) {
                BigInt term = m(row, c) * self(self, used | (std::uint64_t{1} << c));
                if (position % 2)
                    total -= term;
                else
                    total += term;
            }
            ++position;
        }
        memo.emplace(used, total);
        return total;
    };
    return minor(minor, 0);
}

RationalVector cramer_solve(const IntegerMatrix& a, std::span<const BigRational> b)
{
    require_square(a);
    if (b.size() != a.rows())
        throw InputError("right-hand side length does not match matrix");
    const BigInt det = determinant(a);
    if (det == 0)
        throw SingularMatrix("Cramer's rule needs a nonsingular matrix");

    const BigInt scale = common_denominator(b);
    IntegerVector column;
    column.reserve(b.size());
    for (const auto& q : b)
        column.push_back(BigInt(q * scale));

    RationalVector x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        x[i] = make_rational(determinant(a.with_column(i, column)), det * scale);
    return x;
}

RationalVector elimination_solve(const IntegerMatrix& a, std::span<const BigRational> b)
{
    require_square(a);
    if (b.size() != a.rows())
        throw InputError("right-hand side length does not match matrix");
    const std::size_t n = a.cols();
    const BigInt scale = common_denominator(b);

    Grid rows = a.to_rows();
    for (std::size_t r = 0; r < n; ++r)
        rows[r].push_back(BigInt(b[r] * scale));
    const Echelon e = bareiss(std::move(rows), n + 1);
    if (e.pivots.size() < n || e.pivots.back() != n - 1)
        throw SingularMatrix("elimination found a zero pivot");

    RationalVector rhs(n);
    for (std::size_t r = 0; r < n; ++r)
        rhs[r] = make_rational(e.rows[r][n], scale);
    RationalVector x(n);
    back_substitute(e, n, x, rhs);
    return x;
}

IntegerVector primitive(std::span<const BigRational> v)
{
    if (is_zero(v))
        throw InputError("cannot normalize the zero vector");
    const BigInt scale = common_denominator(v);
    IntegerVector out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const auto& q : v) {
        out.emplace_back(q * scale);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    const auto first = std::find_if(out.begin(), out.end(), [](const BigInt& z) { return z != 0; });
    if (*first < 0)
        g = -g;
    for (auto& z : out)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

bool is_zero(std::span<const BigRational> v)
{
    return std::all_of(v.begin(), v.end(), [](const BigRational& q) { return q == 0; });
}

std::size_t rank_of_vectors(const std::vector<IntegerVector>& vectors)
{
    if (vectors.empty())
        return 0;
    return bareiss(vectors, vectors.front().size()).pivots.size();
}

} // namespace relmag
