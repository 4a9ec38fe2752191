#include <relmag/detbounds.hpp>

#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace relmag {

namespace {

BigInt k_squared(long k) { return BigInt(k) * BigInt(k); }

std::vector<int> sign_pattern(std::size_t length, std::uint64_t bits)
{
    std::vector<int> s(length);
    for (std::size_t i = 0; i < length; ++i)
        s[i] = (bits >> i) & 1 ? -1 : 1;
    return s;
}

std::string describe(const ChainBlockSpec& spec)
{
    std::string s = std::string(1, to_char(spec.family)) + "_" + std::to_string(spec.size) +
                     " (k=" + std::to_string(spec.k) + ", signs=";
    for (int v : spec.signs)
        s += v < 0 ? '-' : '+';
    return s + ")";
}

// Determinant of a block that may be empty.
BigInt block_det(const ChainBlockSpec& spec)
{
    return spec.size == 0 ? BigInt(1) : determinant(build_chain_block(spec));
}

} // namespace

char to_char(BlockFamily f)
{
    switch (f) {
    case BlockFamily::B: return 'B';
    case BlockFamily::C: return 'C';
    case BlockFamily::D: return 'D';
    }
    return '?';
}

IntegerMatrix build_chain_block(const ChainBlockSpec& spec)
{
    const std::size_t t = spec.size;
    if (t == 0)
        throw InputError("chain blocks have size at least 1");
    if (!spec.signs.empty() && spec.signs.size() != t - 1)
        throw InputError("a chain block of size " + std::to_string(t) + " needs " + std::to_string(t - 1) +
                         " off-diagonal signs");
    for (int s : spec.signs)
        if (s != 1 && s != -1)
            throw InputError("off-diagonal signs must be +1 or -1");

    const BigInt kk = k_squared(spec.k);
    std::vector<BigInt> entries(t * t);
    for (std::size_t i = 0; i < t; ++i)
        entries[i * t + i] = kk + 1;
    if (spec.family == BlockFamily::C)
        entries[(t - 1) * t + (t - 1)] = kk;
    if (spec.family == BlockFamily::D)
        entries[0] = 1;
    for (std::size_t i = 0; i + 1 < t; ++i) {
        const long s = spec.signs.empty() ? 1 : spec.signs[i];
        entries[i * t + i + 1] = BigInt(s * spec.k);
        entries[(i + 1) * t + i] = BigInt(s * spec.k);
    }
    return IntegerMatrix(t, t, std::move(entries));
}

BigRational det_closed_form(const ChainBlockSpec& spec)
{
    const BigInt kk = k_squared(spec.k);
    const auto t = static_cast<unsigned long>(spec.size);
    switch (spec.family) {
    case BlockFamily::B:
        if (kk == 1)
            return BigRational(BigInt(t + 1));
        return make_rational(ipow(kk, t + 1) - 1, kk - 1);
    case BlockFamily::C:
        return BigRational(ipow(kk, t));
    case BlockFamily::D:
        return BigRational(1);
    }
    return BigRational(0);
}

void LemmaCheckReport::merge(const LemmaCheckReport& other)
{
    matrices += other.matrices;
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

LemmaCheckReport verify_recurrences(std::size_t t_max, long k)
{
    if (t_max < 3)
        throw InputError("verify_recurrences needs t_max >= 3");
    if (t_max > 20)
        throw InputError("verify_recurrences enumerates 2^(t-1) sign patterns; t_max is capped at 20");

    LemmaCheckReport report;
    const BigInt kk = k_squared(k);
    auto expect = [&report](bool ok, const std::string& what) {
        ++report.checks;
        if (!ok)
            report.failures.push_back(what);
    };

    for (std::size_t t = 1; t <= t_max; ++t) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (t - 1)); ++bits) {
            const auto signs = sign_pattern(t - 1, bits);
            std::map<BlockFamily, BigInt> dets;
            for (auto family : {BlockFamily::B, BlockFamily::C, BlockFamily::D}) {
                const ChainBlockSpec spec{family, t, k, signs};
                const IntegerMatrix m = build_chain_block(spec);
                const BigInt bareiss = determinant(m);
                const BigInt laplace = laplace_determinant(m);
                const BigRational closed = det_closed_form(spec);
                ++report.matrices;
                expect(bareiss == laplace, describe(spec) + ": elimination " + bareiss.get_str() +
                                               " != Laplace " + laplace.get_str());
                expect(BigRational(laplace) == closed,
                       describe(spec) + ": Laplace " + laplace.get_str() + " != closed form " + to_string(closed));
                dets[family] = laplace;
            }
            if (t < 3)
                continue;

            // Expansion by the first row (B, D) or the last row (C).
            const std::vector<int> tail1(signs.begin() + 1, signs.end());
            const std::vector<int> tail2(signs.begin() + 2, signs.end());
            const std::vector<int> head1(signs.begin(), signs.end() - 1);
            const std::vector<int> head2(signs.begin(), signs.end() - 2);
            const BigInt b1_tail = block_det({BlockFamily::B, t - 1, k, tail1});
            const BigInt b2_tail = block_det({BlockFamily::B, t - 2, k, tail2});
            const BigInt b1_head = block_det({BlockFamily::B, t - 1, k, head1});
            const BigInt b2_head = block_det({BlockFamily::B, t - 2, k, head2});
            const std::string where = " (t=" + std::to_string(t) + ", k=" + std::to_string(k) + ")";
            expect(dets[BlockFamily::B] == (kk + 1) * b1_tail - kk * b2_tail, "B recurrence" + where);
            expect(dets[BlockFamily::C] == kk * b1_head - kk * b2_head, "C recurrence" + where);
            expect(dets[BlockFamily::D] == b1_tail - kk * b2_tail, "D recurrence" + where);
        }
    }
    return report;
}

LemmaCheckReport verify_scalar_inequalities(std::size_t t_max, long k_max)
{
    LemmaCheckReport report;
    auto expect = [&report](bool ok, const std::string& what) {
        ++report.checks;
        if (!ok)
            report.failures.push_back(what);
    };
    for (long k = 2; k <= k_max; ++k) {
        const BigInt kk = k_squared(k);
        const std::string where = " (k=" + std::to_string(k) + ")";
        expect(BigInt(k - 1) * (k - 1) + 1 <= kk - 2, "(k-1)^2+1 <= k^2-2" + where);
        expect((kk - 1) * (kk - 1) > kk * (kk - 2), "(k^2-1)^2 > k^2(k^2-2)" + where);
        for (std::size_t t = 0; t <= t_max; ++t) {
            const BigInt full = ipow(kk, t);
            for (std::size_t p = 0; p <= t; ++p) {
                const BigInt split = block_det({BlockFamily::C, p, k, {}}) * block_det({BlockFamily::D, t - p, k, {}});
                expect(split <= full, "det C_" + std::to_string(p) + " det D_" + std::to_string(t - p) +
                                          " <= k^(2t)" + where);
            }
        }
    }
    return report;
}

GramPartition GramPartition::from_factor(const IntegerMatrix& u, std::vector<std::vector<std::size_t>> blocks)
{
    return GramPartition{gram(u), std::move(blocks)};
}

bool is_positive_semidefinite(const IntegerMatrix& w)
{
    if (!w.is_square())
        return false;
    const std::size_t n = w.rows();
    std::vector<RationalVector> d(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (w(i, j) != w(j, i))
                return false;
            d[i][j] = w(i, j);
        }
    // Symmetric Gaussian elimination (LDL^T); a zero pivot must have a zero row.
    for (std::size_t j = 0; j < n; ++j) {
        const BigRational pivot = d[j][j];
        if (pivot < 0)
            return false;
        if (pivot == 0) {
            for (std::size_t i = j + 1; i < n; ++i)
                if (d[i][j] != 0)
                    return false;
            continue;
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            if (d[i][j] == 0)
                continue;
            const BigRational f = d[i][j] / pivot;
            for (std::size_t l = j; l < n; ++l)
                d[i][l] -= f * d[j][l];
        }
    }
    return true;
}

HadamardFischerResult hadamard_fischer_check(const GramPartition& g)
{
    const std::size_t n = g.w.rows();
    std::vector<int> seen(n, 0);
    for (const auto& block : g.blocks) {
        if (block.empty())
            throw InputError("partition contains an empty block");
        for (auto i : block) {
            if (i >= n)
                throw InputError("partition index out of range");
            ++seen[i];
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw InputError("blocks must be disjoint and cover every index");
    if (!is_positive_semidefinite(g.w))
        throw InputError("Hadamard-Fischer needs a symmetric positive semidefinite matrix");

    HadamardFischerResult r;
    r.lhs = determinant(g.w);
    r.rhs = 1;
    for (const auto& block : g.blocks) {
        r.block_minors.push_back(determinant(g.w.select_rows(block).select_columns(block)));
        r.rhs *= r.block_minors.back();
    }
    r.holds = r.lhs <= r.rhs;
    return r;
}

NormBound type3_norm_bound(std::span<const long> coefficients, long k, std::optional<std::size_t> deleted_position)
{
    if (k < 2)
        throw InputError("k must be at least 2");
    if (coefficients.size() < 2)
        throw InputError("a type-3 equation has at least two variables");
    long sum = 0;
    for (long c : coefficients) {
        if (c < 1)
            throw InputError("type-3 coefficients are positive integers");
        sum += c;
    }
    if (sum > k + 1)
        throw InputError("coefficient sum " + std::to_string(sum) + " exceeds k+1");
    if (coefficients.size() == 2 && std::min(coefficients[0], coefficients[1]) == 1 && std::max(coefficients[0], coefficients[1]) == k)
        throw InputError("k x_i +- x_j = 0 is a chain (type-2) equation");
    if (deleted_position && *deleted_position >= coefficients.size())
        throw InputError("deleted position out of range");

    NormBound nb;
    nb.norm_sq = 0;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (!deleted_position || *deleted_position != i)
            nb.norm_sq += BigInt(coefficients[i]) * coefficients[i];
    const BigInt km1 = BigInt(k - 1) * (k - 1);
    if (deleted_position)
        nb.bound = km1 + 1;
    else
        nb.bound = std::min(BigInt(k_squared(k) - 1), BigInt(km1 + 4));
    return nb;
}

NormBound type3_norm_bound(const TyszkaEquation& equation, long k, std::optional<std::size_t> deleted_variable)
{
    if (equation.is_unit())
        throw InputError("unit equations are not type 3");
    std::vector<long> coefficients;
    std::optional<std::size_t> position;
    for (const auto& [variable, c] : equation.combined()) {
        if (deleted_variable && *deleted_variable == variable)
            position = coefficients.size();
        coefficients.push_back(c < 0 ? -c : c);
    }
    if (deleted_variable && !position)
        throw InputError("deleted variable x" + std::to_string(*deleted_variable + 1) + " is not in the equation");
    return type3_norm_bound(coefficients, k, position);
}

Type3Survey verify_type3_bounds(long k)
{
    if (k < 2)
        throw InputError("k must be at least 2");
    Type3Survey s;
    s.k = k;
    const BigInt km1 = BigInt(k - 1) * (k - 1);
    s.bound = std::min(BigInt(k_squared(k) - 1), BigInt(km1 + 4));
    s.deleted_bound = km1 + 1;
    s.max_norm_sq = 0;
    s.max_deleted_norm_sq = 0;

    std::vector<long> parts;
    auto visit = [&](const std::vector<long>& ms) {
        ++s.multisets;
        const NormBound full = type3_norm_bound(ms, k);
        if (!full.holds())
            s.failures.push_back("norm bound exceeded");
        s.max_norm_sq = std::max(s.max_norm_sq, full.norm_sq);
        const bool is_k1_2 = ms.size() == 2 && ((ms[0] == k - 1 && ms[1] == 2) || (ms[0] == 2 && ms[1] == k - 1));
        if (is_k1_2 && full.norm_sq == km1 + 4)
            s.two_term_equality_attained = true;
        if (k >= 3 && full.norm_sq == km1 + 4 && !is_k1_2)
            s.failures.push_back("(k-1)^2+4 reached by a multiset other than {k-1, 2}");

        const bool is_k1_1_1 = ms.size() == 3 && ms[0] == k - 1 && ms[1] == 1 && ms[2] == 1;
        for (std::size_t d = 0; d < ms.size(); ++d) {
            if (d > 0 && ms[d] == ms[d - 1])
                continue;
            const NormBound del = type3_norm_bound(ms, k, d);
            if (!del.holds())
                s.failures.push_back("deleted-variable bound exceeded");
            s.max_deleted_norm_sq = std::max(s.max_deleted_norm_sq, del.norm_sq);
            if (del.norm_sq == s.deleted_bound) {
                if (is_k1_1_1 && ms[d] == 1)
                    s.deleted_equality_attained = true;
                else
                    s.failures.push_back("(k-1)^2+1 reached by a deletion other than {k-1,1,1} minus 1");
            }
        }
    };
    // Nonincreasing part sequences with sum <= k+1 and at least two parts.
    auto rec = [&](auto&& self, long max_part, long remaining) -> void {
        if (parts.size() >= 2) {
            const bool chain_pair = parts.size() == 2 && parts[0] == k && parts[1] == 1;
            if (!chain_pair)
                visit(parts);
        }
        for (long c = std::min(max_part, remaining); c >= 1; --c) {
            parts.push_back(c);
            self(self, c, remaining - c);
            parts.pop_back();
        }
    };
    rec(rec, k + 1, k + 1);

    if (s.max_norm_sq != s.bound)
        s.failures.push_back("norm bound " + s.bound.get_str() + " not attained");
    if (k >= 3 && !s.two_term_equality_attained)
        s.failures.push_back("{k-1, 2} equality case not attained");
    if (!s.deleted_equality_attained)
        s.failures.push_back("{k-1, 1, 1} deletion equality case not attained");
    return s;
}

BlockLayout infer_layout(const IntegerMatrix& a, long k)
{
    if (!a.is_square())
        throw NonSquareMatrix("assembled system must be square");
    const std::size_t n = a.rows();
    BlockLayout layout;
    layout.unit_row = 0;

    struct Link {
        std::size_t row, k_col, one_col;
    };
    std::vector<Link> links;
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c < n; ++c)
            if (a(r, c) != 0)
                nz.push_back(c);
        if (nz.size() == 2) {
            const BigInt x = abs(a(r, nz[0]));
            const BigInt y = abs(a(r, nz[1]));
            if (x == k && y == 1) {
                links.push_back({r, nz[0], nz[1]});
                continue;
            }
            if (x == 1 && y == k) {
                links.push_back({r, nz[1], nz[0]});
                continue;
            }
        }
        layout.type3_rows.push_back(r);
    }

    // k x_b = +-x_a is the link a -> b; a maximal chain walks these links.
    std::map<std::size_t, std::size_t> by_one, by_k; // column -> link index
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (!by_one.emplace(links[i].one_col, i).second || !by_k.emplace(links[i].k_col, i).second)
            throw CertificationFailure("two chains share variable x" +
                                       std::to_string((by_k.count(links[i].k_col) ? links[i].k_col
                                                                                  : links[i].one_col) + 1));
    }
    std::vector<bool> used(links.size(), false);
    for (std::size_t i = 0; i < links.size(); ++i) {
        const std::size_t head = links[i].one_col;
        if (by_k.count(head))
            continue; // not the start of a maximal chain
        std::vector<std::size_t> vars{head};
        std::vector<std::size_t> rows;
        for (auto it = by_one.find(head); it != by_one.end(); it = by_one.find(vars.back())) {
            used[it->second] = true;
            rows.push_back(links[it->second].row);
            vars.push_back(links[it->second].k_col);
        }
        ChainBlockLayout chain;
        chain.columns.assign(vars.rbegin(), vars.rend());
        chain.rows.assign(rows.rbegin(), rows.rend());
        layout.chains.push_back(std::move(chain));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw CertificationFailure("chain links form a cycle");
    std::sort(layout.chains.begin(), layout.chains.end(),
              [](const ChainBlockLayout& x, const ChainBlockLayout& y) {
                  return *std::min_element(x.rows.begin(), x.rows.end()) <
                         *std::min_element(y.rows.begin(), y.rows.end());
              });
    return layout;
}

std::string to_string(CutCase c)
{
    switch (c) {
    case CutCase::chain: return "case1";
    case CutCase::type3: return "case2";
    case CutCase::none: return "uncut";
    }
    return "?";
}

bool SolutionBoundReport::passed() const
{
    return !columns.empty() && std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.ok(); }) &&
           abs(max_abs) <= BigRational(bound);
}

namespace {

ColumnCertificate certify_column(const IntegerMatrix& a, long k, const BlockLayout& layout, const BigInt& det_a,
                                 const BigInt& bound_sq, std::size_t i)
{
    const std::size_t n = a.rows();
    ColumnCertificate cc;
    cc.column = i;
    auto expect = [&cc](bool ok, const std::string& what) {
        if (!ok)
            cc.failures.push_back(what);
    };

    IntegerVector e(n);
    e[layout.unit_row] = 1;
    cc.det_a_i = determinant(a.with_column(i, e));
    cc.x = make_rational(cc.det_a_i, det_a);

    if (n == 1) {
        cc.det_u_i = 1;
        cc.det_w = 1;
        cc.fischer = {true, 1, 1, {}};
        expect(cc.x * cc.x <= BigRational(cc.det_w), "x_i^2 <= det W_i");
        expect(cc.det_w <= bound_sq, "det W_i <= k^(2(n-1))");
        return cc;
    }

    const IntegerMatrix u = a.without(layout.unit_row, i);
    cc.det_u_i = determinant(u);
    const IntegerMatrix w = gram(u);
    cc.det_w = determinant(w);

    expect(abs(cc.det_a_i) == abs(cc.det_u_i), "|det A_i| = |det U_i|");
    expect(cc.det_w == cc.det_u_i * cc.det_u_i, "det W_i = (det U_i)^2");
    expect(cc.x * cc.x <= BigRational(cc.det_w), "x_i^2 <= det W_i");
    expect(cc.det_w <= bound_sq, "det W_i <= k^(2(n-1))");

    auto u_row = [&](std::size_t r) { return r - (r > layout.unit_row ? 1 : 0); };

    struct Expected {
        std::size_t block;
        BigRational value;
        std::string name;
    };
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Expected> expected;

    for (std::size_t c = 0; c < layout.chains.size(); ++c) {
        const auto& chain = layout.chains[c];
        const std::size_t t = chain.rows.size();
        std::vector<std::size_t> rows;
        for (auto r : chain.rows)
            rows.push_back(u_row(r));
        const auto pos = std::find(chain.columns.begin(), chain.columns.end(), i);
        if (pos == chain.columns.end()) {
            blocks.push_back(rows);
            expected.push_back({blocks.size() - 1, det_closed_form({BlockFamily::B, t, k, {}}),
                                "B_" + std::to_string(t)});
            continue;
        }
        cc.cut = CutCase::chain;
        cc.chain = c;
        cc.cut_p = static_cast<std::size_t>(pos - chain.columns.begin());
        cc.cut_q = t - cc.cut_p;
        if (cc.cut_p > 0) {
            blocks.emplace_back(rows.begin(), rows.begin() + static_cast<long>(cc.cut_p));
            expected.push_back({blocks.size() - 1, det_closed_form({BlockFamily::C, cc.cut_p, k, {}}),
                                "C_" + std::to_string(cc.cut_p)});
        }
        if (cc.cut_q > 0) {
            blocks.emplace_back(rows.begin() + static_cast<long>(cc.cut_p), rows.end());
            expected.push_back({blocks.size() - 1, det_closed_form({BlockFamily::D, cc.cut_q, k, {}}),
                                "D_" + std::to_string(cc.cut_q)});
        }
    }

    std::vector<std::size_t> type3_blocks;
    bool touches_type3 = false;
    for (auto r : layout.type3_rows) {
        blocks.push_back({u_row(r)});
        type3_blocks.push_back(blocks.size() - 1);

        std::vector<long> coefficients;
        std::optional<std::size_t> deleted;
        for (std::size_t col = 0; col < n; ++col) {
            if (a(r, col) == 0)
                continue;
            if (col == i)
                deleted = coefficients.size();
            coefficients.push_back(BigInt(abs(a(r, col))).get_si());
        }
        touches_type3 = touches_type3 || deleted.has_value();
        try {
            const NormBound nb = type3_norm_bound(coefficients, k, deleted);
            expect(nb.holds(), "type-3 row " + std::to_string(r + 1) + ": squared norm " + nb.norm_sq.get_str() +
                                   " exceeds " + nb.bound.get_str());
            expect(nb.norm_sq == w(u_row(r), u_row(r)), "type-3 row diagonal mismatch");
        } catch (const InputError& ex) {
            cc.failures.push_back("row " + std::to_string(r + 1) + " is not a type-3 equation: " + ex.what());
        }
    }
    if (cc.cut != CutCase::chain && touches_type3)
        cc.cut = CutCase::type3;

    cc.fischer = hadamard_fischer_check(GramPartition{w, blocks});
    expect(cc.fischer.holds, "Hadamard-Fischer det W_i <= product of block minors");
    expect(cc.fischer.rhs <= bound_sq, "product of block minors <= k^(2(n-1))");
    for (const auto& ex : expected)
        expect(BigRational(cc.fischer.block_minors[ex.block]) == ex.value,
               "chain minor " + ex.name + " = " + cc.fischer.block_minors[ex.block].get_str() +
                   ", closed form " + to_string(ex.value));
    return cc;
}

} // namespace

SolutionBoundReport certify_solution_bound(const IntegerMatrix& a, long k, const BlockLayout& layout, unsigned jobs)
{
    if (!a.is_square())
        throw NonSquareMatrix("assembled system must be square");
    if (k < 2)
        throw InputError("k must be at least 2");

    SolutionBoundReport report;
    report.k = k;
    report.n = a.rows();
    report.det_a = determinant(a);
    if (report.det_a == 0)
        throw SingularMatrix("assembled system is singular");
    report.bound = ipow(BigInt(k), report.n - 1);
    report.bound_sq = report.bound * report.bound;

    report.columns.resize(report.n);
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < report.n; i += stride)
            report.columns[i] = certify_column(a, k, layout, report.det_a, report.bound_sq, i);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(report.n)));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < threads; ++j)
            pool.emplace_back(work, j, threads);
    }

    report.max_abs = 0;
    for (const auto& c : report.columns) {
        report.x.push_back(c.x);
        report.max_abs = std::max(report.max_abs, BigRational(abs(c.x)));
    }
    report.sharp = report.max_abs == BigRational(report.bound);
    return report;
}

SolutionBoundReport certify_solution_bound(const IntegerMatrix& a, long k, unsigned jobs)
{
    return certify_solution_bound(a, k, infer_layout(a, k), jobs);
}

std::string format_bound_report(const SolutionBoundReport& report)
{
    std::ostringstream out;
    out << "# i, case, x_i, det W_i, bound k^(2(n-1)), status\n";
    for (const auto& c : report.columns) {
        std::string cut = to_string(c.cut);
        if (c.cut == CutCase::chain)
            cut += "(C_" + std::to_string(c.cut_p) + "+D_" + std::to_string(c.cut_q) + ")";
        out << c.column + 1 << ", " << cut << ", " << to_string(c.x) << ", " << c.det_w.get_str() << ", "
            << report.bound_sq.get_str() << ", " << (c.ok() ? "OK" : "FAIL") << '\n';
        for (const auto& f : c.failures)
            out << "#   failed: " << f << '\n';
    }
    out << "max|x|=" << to_string(report.max_abs) << " bound=k^(n-1)=" << report.bound.get_str() << " n="
        << report.n << ' ' << (report.sharp ? "SHARP" : "NOT-SHARP") << ' ' << (report.passed() ? "OK" : "FAIL")
        << '\n';
    return out.str();
}

} // namespace relmag
