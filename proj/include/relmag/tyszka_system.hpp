#ifndef RELMAG_TYSZKA_SYSTEM_HPP
#define RELMAG_TYSZKA_SYSTEM_HPP

#include <relmag/matrix.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace relmag {

/// One signed term c * x_v. Parsed systems use c = 1 with repeats allowed;
/// reduced systems carry combined coefficients, one term per variable.
struct Term {
    long coefficient = 1;
    int sign = 1;
    std::size_t variable = 0; // 0-based

    friend bool operator==(const Term&, const Term&) = default;
};

enum class EquationKind { unit, homogeneous };

/// Either x_v = +-1, or sum of signed terms = 0.
struct TyszkaEquation {
    EquationKind kind = EquationKind::homogeneous;
    std::size_t unit_variable = 0;
    int unit_sign = 1;
    std::vector<Term> terms;

    static TyszkaEquation unit(std::size_t variable, int sign);
    static TyszkaEquation homogeneous(std::vector<Term> terms);

    bool is_unit() const noexcept { return kind == EquationKind::unit; }

    /// Sum of coefficients, i.e. the number of unit terms l + 1.
    long coefficient_sum() const;

    /// Net integer coefficient per variable (zeros dropped).
    std::map<std::size_t, long> combined() const;
};

/// Equality up to term order and merging of repeated terms.
bool equivalent(const TyszkaEquation& a, const TyszkaEquation& b);

struct TyszkaSystem {
    long k = 2;
    std::size_t variables = 0;
    std::vector<TyszkaEquation> equations;

    /// Throws InputError on k < 2, an out-of-range variable, or an equation
    /// with more than k + 1 unit terms.
    void validate() const;

    /// Coefficient rows and right-hand side (unit equations give +-1, others 0).
    IntegerMatrix coefficient_matrix() const;
    IntegerVector rhs() const;
};

bool equivalent(const TyszkaSystem& a, const TyszkaSystem& b);

/// Grammar (one statement per ';' or newline, '#' starts a comment):
///   k=<int>                      optional header, first statement, default 2
///   xI = 1 | xI = -1             unit equation
///   [+-][c]xI [+-][c]xJ ... = 0  homogeneous sum; a coefficient c expands
///                                into c unit terms
///   <sum> = <sum>                sugar for <lhs> - <rhs> = 0
/// Variables are 1-based; the variable count is the largest index seen.
TyszkaSystem parse_system(const std::string& text);

/// One statement per line, unit-coefficient form, "k=<k>" first.
std::string format_system(const TyszkaSystem& system);
std::string format_equation(const TyszkaEquation& equation);

} // namespace relmag

#endif // RELMAG_TYSZKA_SYSTEM_HPP
