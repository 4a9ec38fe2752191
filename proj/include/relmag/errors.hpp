#ifndef RELMAG_ERRORS_HPP
#define RELMAG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relmag {

// Malformed or out-of-range input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          m_line(line), m_column(column) {}

    std::size_t line() const noexcept { return m_line; }
    std::size_t column() const noexcept { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

class NonSquareMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnsolvableSystem : public InputError {
public:
    using InputError::InputError;
};

// A proven inequality or identity failed on a concrete instance. Exit code 1.
class CertificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relmag

#endif // RELMAG_ERRORS_HPP
