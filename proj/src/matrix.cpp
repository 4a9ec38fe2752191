#include <relmag/matrix.hpp>

#include <relmag/errors.hpp>

#include <cctype>
#include <istream>
#include <sstream>

namespace relmag {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : m_rows(rows), m_cols(cols), m_entries(std::move(entries))
{
    if (rows == 0 || cols == 0)
        throw InputError("matrix must have at least one row and one column");
    if (m_entries.size() != rows * cols)
        throw InputError("matrix entry count does not match its shape");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : m_rows(rows.size()), m_cols(rows.size() ? rows.begin()->size() : 0)
{
    if (m_rows == 0 || m_cols == 0)
        throw InputError("matrix must have at least one row and one column");
    m_entries.reserve(m_rows * m_cols);
    for (const auto& r : rows) {
        if (r.size() != m_cols)
            throw InputError("ragged matrix literal");
        for (long v : r)
            m_entries.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows)
{
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows.front().size() : 0;
    std::vector<BigInt> entries;
    entries.reserve(m * n);
    for (const auto& r : rows) {
        if (r.size() != n)
            throw InputError("ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return IntegerMatrix(m, n, std::move(entries));
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    std::vector<BigInt> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        entries[i * n + i] = 1;
    return IntegerMatrix(n, n, std::move(entries));
}

IntegerMatrix IntegerMatrix::zero(std::size_t rows, std::size_t cols)
{
    return IntegerMatrix(rows, cols, std::vector<BigInt>(rows * cols));
}

IntegerVector IntegerMatrix::column(std::size_t c) const
{
    IntegerVector out;
    out.reserve(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        out.push_back((*this)(r, c));
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    std::vector<BigInt> entries(m_rows * m_cols);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0; c < m_cols; ++c)
            entries[c * m_rows + r] = (*this)(r, c);
    return IntegerMatrix(m_cols, m_rows, std::move(entries));
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> columns) const
{
    std::vector<BigInt> entries;
    entries.reserve(m_rows * columns.size());
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c : columns)
            entries.push_back((*this)(r, c));
    return IntegerMatrix(m_rows, columns.size(), std::move(entries));
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> rows) const
{
    std::vector<BigInt> entries;
    entries.reserve(rows.size() * m_cols);
    for (std::size_t r : rows)
        for (std::size_t c = 0; c < m_cols; ++c)
            entries.push_back((*this)(r, c));
    return IntegerMatrix(rows.size(), m_cols, std::move(entries));
}

IntegerMatrix IntegerMatrix::without(std::size_t row, std::size_t col) const
{
    std::vector<BigInt> entries;
    entries.reserve((m_rows - 1) * (m_cols - 1));
    for (std::size_t r = 0; r < m_rows; ++r) {
        if (r == row)
            continue;
        for (std::size_t c = 0; c < m_cols; ++c)
            if (c != col)
                entries.push_back((*this)(r, c));
    }
    return IntegerMatrix(m_rows - 1, m_cols - 1, std::move(entries));
}

IntegerMatrix IntegerMatrix::with_column(std::size_t col, std::span<const BigInt> values) const
{
    if (values.size() != m_rows)
        throw InputError("replacement column has wrong length");
    auto entries = m_entries;
    for (std::size_t r = 0; r < m_rows; ++r)
        entries[r * m_cols + col] = values[r];
    return IntegerMatrix(m_rows, m_cols, std::move(entries));
}

std::vector<IntegerVector> IntegerMatrix::to_rows() const
{
    std::vector<IntegerVector> out(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        out[r].assign(row(r).begin(), row(r).end());
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw InputError("matrix product shape mismatch");
    std::vector<BigInt> entries(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                entries[i * b.cols() + j] += a(i, k) * b(k, j);
        }
    return IntegerMatrix(a.rows(), b.cols(), std::move(entries));
}

IntegerMatrix gram(const IntegerMatrix& u)
{
    const std::size_t m = u.rows();
    std::vector<BigInt> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            BigInt s = 0;
            for (std::size_t c = 0; c < u.cols(); ++c)
                s += u(i, c) * u(j, c);
            entries[i * m + j] = s;
            entries[j * m + i] = s;
        }
    return IntegerMatrix(m, m, std::move(entries));
}

RationalVector multiply(const IntegerMatrix& a, std::span<const BigRational> x)
{
    if (x.size() != a.cols())
        throw InputError("vector length does not match matrix column count");
    RationalVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BigRational s = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0 && x[c] != 0)
                s += BigRational(a(r, c)) * x[c];
        out[r] = s;
    }
    return out;
}

bool is_null_vector(const IntegerMatrix& a, std::span<const BigRational> x)
{
    for (const auto& v : multiply(a, x))
        if (v != 0)
            return false;
    return true;
}

RationalVector to_rational(std::span<const BigInt> v)
{
    return RationalVector(v.begin(), v.end());
}

namespace {

BigInt parse_integer_token(const std::string& token)
{
    std::size_t i = 0;
    if (!token.empty() && (token[0] == '-' || token[0] == '+'))
        i = 1;
    if (i == token.size())
        throw InputError("expected an integer, got '" + token + "'");
    for (std::size_t j = i; j < token.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(token[j])))
            throw InputError("expected an integer, got '" + token + "'");
    return BigInt(token[0] == '+' ? token.substr(1) : token);
}

} // namespace

IntegerMatrix parse_matrix(std::istream& in)
{
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    if (tokens.size() < 2)
        throw InputError("matrix text must start with \"m n\"");

    const BigInt m = parse_integer_token(tokens[0]);
    const BigInt n = parse_integer_token(tokens[1]);
    if (m < 1 || n < 1 || m > 100000 || n > 100000)
        throw InputError("matrix dimensions must be positive");
    const auto rows = static_cast<std::size_t>(m.get_ui());
    const auto cols = static_cast<std::size_t>(n.get_ui());
    if (tokens.size() - 2 != rows * cols)
        throw InputError("expected " + std::to_string(rows * cols) + " entries, found " +
                         std::to_string(tokens.size() - 2));

    std::vector<BigInt> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 2; i < tokens.size(); ++i)
        entries.push_back(parse_integer_token(tokens[i]));
    return IntegerMatrix(rows, cols, std::move(entries));
}

IntegerMatrix parse_matrix(const std::string& text)
{
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string format_matrix(const IntegerMatrix& a)
{
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out << (c ? " " : "") << a(r, c).get_str();
        out << '\n';
    }
    return out.str();
}

std::string format_vector(std::span<const BigRational> v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string format_vector(std::span<const BigInt> v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += v[i].get_str();
    }
    return out + ")";
}

} // namespace relmag
