#ifndef RELMAG_TYSZKA_HPP
#define RELMAG_TYSZKA_HPP

#include <relmag/detbounds.hpp>
#include <relmag/tyszka_system.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace relmag {

/// Image of a variable under one reduction step: zero, or sign * target.
struct VariableImage {
    bool zero = false;
    int sign = 1;
    std::size_t target = 0;

    friend bool operator==(const VariableImage&, const VariableImage&) = default;
};

struct MergeRecord {
    std::size_t eliminated; // j, pre-step numbering
    std::size_t kept;       // i < j
    int sign;               // x_j = sign * x_i
};

/// One applied simplification. Steps that would not change the system are
/// not recorded.
///   1  collapse unit equations onto one representative
///   2  fix free variables to zero, keep an independent square subsystem
///   3  drop variables that vanish in the unique solution
///   4  merge variables equal up to sign (larger index into smaller)
///   5  cancel opposite terms of the same variable
///   6  flip x_1 so the unit equation reads x_1 = 1
struct ReductionStep {
    int id = 0;
    std::string note;

    std::optional<std::size_t> unit_representative;   // step 1, equation index
    std::vector<std::size_t> converted_equations;     // step 1
    std::vector<VariableImage> variable_map;          // steps 2, 3, 4, 6
    std::vector<std::size_t> zeroed_variables;        // steps 2 (S) and 3 (T)
    std::vector<MergeRecord> merges;                  // step 4
    std::vector<std::size_t> kept_equations;          // steps 2, 3, 4, 6
    std::size_t cancelled_pairs = 0;                  // step 5
    std::size_t variables_after = 0;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    /// Composite map from each original variable to the reduced system.
    std::vector<VariableImage> original_images;
    std::size_t original_rank = 0;

    /// Lift a reduced solution back to the original variables.
    RationalVector reconstruct(std::span<const BigRational> reduced_solution) const;
};

struct Reduction {
    TyszkaSystem system;
    ReductionTrace trace;
    RationalVector solution;      // unique solution of the reduced system
    bool zero_solution = false;   // no unit equation: x = 0 solves the input
};

/// Solvability is checked first (UnsolvableSystem). The result has x_1 = 1 as
/// its first equation, a unique solution with nonzero coordinates of pairwise
/// distinct absolute value, and homogeneous equations in combined form with
/// at least two variables each. Postconditions are verified; a violation
/// throws CertificationFailure.
Reduction reduce(const TyszkaSystem& system);

/// Re-applies the recorded steps to `original`.
TyszkaSystem replay(const TyszkaSystem& original, const ReductionTrace& trace);

/// Chain i_1 -> ... -> i_{t+1}: k x_{i_{j+1}} = signs[j] * x_{i_j}.
struct Chain {
    std::vector<std::size_t> variables;
    std::vector<int> signs;
    std::vector<std::size_t> equations;
};

struct ChainDecomposition {
    std::vector<Chain> chains;
    std::vector<std::size_t> type3_equations;
    std::size_t unit_equation = 0;
    std::size_t unit_variable = 0;
    /// Variables in assembled column order: each chain tail-first so its rows
    /// read [k +-1], then variables outside chains.
    std::vector<std::size_t> column_order;
};

/// Splits the homogeneous equations of a reduced system into maximal chains
/// of k x_b = +-x_a links and type-3 leftovers. Throws CertificationFailure
/// if two chains share a variable.
ChainDecomposition chain_decompose(const TyszkaSystem& reduced);

struct AssembledSystem {
    IntegerMatrix matrix;
    BlockLayout layout;
    std::vector<std::size_t> column_order;
};

/// Unit row first, chain blocks (t x (t+1) bidiagonal), then type-3 rows.
AssembledSystem assemble(const TyszkaSystem& reduced, const ChainDecomposition& chains);

struct TyszkaSolution {
    RationalVector solution;         // original variables
    Reduction reduction;
    std::optional<ChainDecomposition> chains;
    std::optional<AssembledSystem> assembled;
    std::optional<SolutionBoundReport> report;
    std::size_t reduced_rank = 0;    // n in k^(n-1)
    BigInt bound;                    // k^(n-1)
    BigRational max_abs;
    bool sharp = false;
};

/// reduce -> chain_decompose -> assemble -> Cramer, lifted back through the
/// trace. Certifies |x_j| <= k^(n-1) with n the reduced rank and the
/// determinant chain per column. Throws UnsolvableSystem, or
/// CertificationFailure if any check fails.
TyszkaSolution solve_and_certify(const TyszkaSystem& system, unsigned jobs = 1);

std::string format_trace(const ReductionTrace& trace);

} // namespace relmag

#endif // RELMAG_TYSZKA_HPP
