#ifndef RELMAG_DETBOUNDS_HPP
#define RELMAG_DETBOUNDS_HPP

#include <relmag/tyszka_system.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace relmag {

// Chain blocks -------------------------------------------------------------

/// Tridiagonal symmetric blocks that appear as principal submatrices of
/// U U^T for a chain of equations k*x_a = +-x_b:
///   B: diagonal k^2+1 throughout
///   C: as B but the last diagonal entry is k^2
///   D: as B but the first diagonal entry is 1
/// Off-diagonal entries are signs[i] * k.
enum class BlockFamily { B, C, D };

struct ChainBlockSpec {
    BlockFamily family = BlockFamily::B;
    std::size_t size = 0;
    long k = 2;
    std::vector<int> signs; // size - 1 entries, each +1 or -1; empty means all +1
};

char to_char(BlockFamily f);

/// Explicit size x size matrix. Throws InputError for size 0 or a bad sign list.
IntegerMatrix build_chain_block(const ChainBlockSpec& spec);

/// det B_t = ((k^2)^(t+1) - 1) / (k^2 - 1)   (t + 1 when k^2 = 1)
/// det C_t = k^(2t)
/// det D_t = 1
/// with det of the empty (t = 0) block equal to 1. Independent of signs.
BigRational det_closed_form(const ChainBlockSpec& spec);

struct LemmaCheckReport {
    std::size_t matrices = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void merge(const LemmaCheckReport& other);
};

/// For every t <= t_max, family and sign pattern: closed form == Bareiss
/// determinant == Laplace expansion, plus the three first/last-row
/// expansion recurrences for t >= 3.
LemmaCheckReport verify_recurrences(std::size_t t_max, long k);

/// det C_p det D_q <= k^(2t) for p + q = t <= t_max, and the scalar facts
/// (k-1)^2 + 1 <= k^2 - 2 and (k^2-1)^2 > k^2 (k^2-2) for 2 <= k <= k_max.
LemmaCheckReport verify_scalar_inequalities(std::size_t t_max, long k_max);

// Hadamard-Fischer -----------------------------------------------------------

struct GramPartition {
    IntegerMatrix w;
    std::vector<std::vector<std::size_t>> blocks;

    /// W = U U^T, positive semidefinite by construction.
    static GramPartition from_factor(const IntegerMatrix& u, std::vector<std::vector<std::size_t>> blocks);
};

struct HadamardFischerResult {
    bool holds = false;
    BigInt lhs;                        // det W
    BigInt rhs;                        // product of the block principal minors
    std::vector<BigInt> block_minors;
};

/// Exact LDL^T test.
bool is_positive_semidefinite(const IntegerMatrix& w);

/// det W <= prod det W[block]. Throws InputError when W is not symmetric
/// PSD or the blocks do not partition the index set.
HadamardFischerResult hadamard_fischer_check(const GramPartition& g);

// Type-3 coefficient norms -----------------------------------------------------

struct NormBound {
    BigInt norm_sq;
    BigInt bound;
    bool holds() const { return norm_sq <= bound; }
};

/// Squared l2 norm of a reduced type-3 coefficient vector and its bound:
///   min(k^2 - 1, (k-1)^2 + 4)   with all variables present,
///   (k-1)^2 + 1                 with one variable deleted.
/// Throws InputError if the coefficients do not form a type-3 equation
/// (fewer than two variables, sum above k+1, or the pair {k, 1}).
NormBound type3_norm_bound(std::span<const long> coefficients, long k,
                           std::optional<std::size_t> deleted_position = std::nullopt);

/// Same, for an equation in reduced form; `deleted_variable` names a
/// variable (0-based) that must occur in the equation.
NormBound type3_norm_bound(const TyszkaEquation& equation, long k,
                           std::optional<std::size_t> deleted_variable = std::nullopt);

struct Type3Survey {
    long k = 0;
    std::size_t multisets = 0;
    BigInt max_norm_sq;
    BigInt bound;
    BigInt max_deleted_norm_sq;
    BigInt deleted_bound;
    bool two_term_equality_attained = false; // {k-1, 2} reaches (k-1)^2 + 4
    bool deleted_equality_attained = false;  // {k-1, 1, 1} minus a 1 reaches (k-1)^2 + 1
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Exhaustive over coefficient multisets with 2..k+1 parts, parts >= 1,
/// sum <= k+1, excluding {k, 1}.
Type3Survey verify_type3_bounds(long k);

// Solution-bound certification -------------------------------------------------

/// Row p of a chain block has k in columns[p] and +-1 in columns[p+1].
struct ChainBlockLayout {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> columns; // rows.size() + 1 entries
};

/// Row structure of an assembled square system A x = e_1: the unit row
/// first, then chain rows, then type-3 rows.
struct BlockLayout {
    std::size_t unit_row = 0;
    std::vector<ChainBlockLayout> chains;
    std::vector<std::size_t> type3_rows;
};

/// Recovers the chain structure from the matrix: rows 1.. with exactly the
/// two nonzero magnitudes {k, 1} are chain links. Throws CertificationFailure
/// if two chains would share a variable.
BlockLayout infer_layout(const IntegerMatrix& a, long k);

enum class CutCase { chain, type3, none };
std::string to_string(CutCase c);

struct ColumnCertificate {
    std::size_t column = 0;
    CutCase cut = CutCase::none;
    std::optional<std::size_t> chain;  // chain index for CutCase::chain
    std::size_t cut_p = 0;             // C_p (+) D_q split
    std::size_t cut_q = 0;
    BigRational x;
    BigInt det_a_i;
    BigInt det_u_i;
    BigInt det_w;
    HadamardFischerResult fischer;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

struct SolutionBoundReport {
    long k = 2;
    std::size_t n = 0;
    BigInt det_a;
    BigInt bound;    // k^(n-1)
    BigInt bound_sq; // k^(2(n-1))
    RationalVector x;
    std::vector<ColumnCertificate> columns;
    BigRational max_abs;
    bool sharp = false;

    bool passed() const;
};

/// For each column i: U_i = A minus row 0 and column i, W_i = U_i U_i^T, and
/// checks x_i^2 <= det W_i <= k^(2(n-1)) together with |det A_i| = |det U_i|,
/// the Hadamard-Fischer product over the layout blocks, the closed-form chain
/// minors and the type-3 diagonal bounds. Columns are processed on `jobs`
/// threads; report order is by column.
SolutionBoundReport certify_solution_bound(const IntegerMatrix& a, long k, const BlockLayout& layout,
                                           unsigned jobs = 1);
SolutionBoundReport certify_solution_bound(const IntegerMatrix& a, long k, unsigned jobs = 1);

/// "i, case, x_i, det W_i, bound, OK|FAIL" per column and a summary line.
std::string format_bound_report(const SolutionBoundReport& report);

} // namespace relmag

#endif // RELMAG_DETBOUNDS_HPP
