#ifndef RELMAG_MATRIX_HPP
#define RELMAG_MATRIX_HPP

#include <relmag/bigint.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace relmag {

/// Dense m x n matrix of arbitrary-precision integers, row-major.
///
/// Immutable once built; every transformation returns a new matrix, so a
/// matrix can be shared between threads without synchronization. Empty
/// shapes (0 x n, m x 0) are rejected with InputError.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows);
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }
    bool is_square() const noexcept { return m_rows == m_cols; }

    const BigInt& operator()(std::size_t r, std::size_t c) const { return m_entries[r * m_cols + c]; }
    std::span<const BigInt> row(std::size_t r) const { return {m_entries.data() + r * m_cols, m_cols}; }
    IntegerVector column(std::size_t c) const;

    IntegerMatrix transpose() const;
    IntegerMatrix select_columns(std::span<const std::size_t> columns) const;
    IntegerMatrix select_rows(std::span<const std::size_t> rows) const;
    IntegerMatrix without(std::size_t row, std::size_t col) const;
    IntegerMatrix with_column(std::size_t col, std::span<const BigInt> values) const;

    std::vector<IntegerVector> to_rows() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<BigInt> m_entries;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// U * U^T
IntegerMatrix gram(const IntegerMatrix& u);

RationalVector multiply(const IntegerMatrix& a, std::span<const BigRational> x);
bool is_null_vector(const IntegerMatrix& a, std::span<const BigRational> x);

RationalVector to_rational(std::span<const BigInt> v);

// Matrix text format: "m n" on the first line, then m rows of n integers.
IntegerMatrix parse_matrix(std::istream& in);
IntegerMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntegerMatrix& a);

// "(a1,a2,...)" with rationals printed as p/q or p.
std::string format_vector(std::span<const BigRational> v);
std::string format_vector(std::span<const BigInt> v);

} // namespace relmag

#endif // RELMAG_MATRIX_HPP
