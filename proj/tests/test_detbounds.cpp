#include "oracle.hpp"

#include <relmag/detbounds.hpp>
#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>
#include <relmag/tyszka.hpp>

#include <doctest.h>

#include <random>

using namespace relmag;

namespace {

std::vector<int> signs_from_mask(std::size_t t, unsigned mask)
{
    std::vector<int> s;
    for (std::size_t i = 0; i + 1 < t; ++i)
        s.push_back(mask >> i & 1 ? -1 : 1);
    return s;
}

} // namespace

TEST_CASE("chain block construction")
{
    CHECK(build_chain_block({BlockFamily::B, 1, 2, {}}) == IntegerMatrix{{5}});
    CHECK(build_chain_block({BlockFamily::C, 1, 3, {}}) == IntegerMatrix{{9}});
    CHECK(build_chain_block({BlockFamily::D, 1, 3, {}}) == IntegerMatrix{{1}});
    CHECK(build_chain_block({BlockFamily::D, 2, 2, {1}}) == IntegerMatrix{{1, 2}, {2, 5}});
    CHECK(build_chain_block({BlockFamily::B, 3, 2, {1, -1}}) == IntegerMatrix{{5, 2, 0}, {2, 5, -2}, {0, -2, 5}});
    CHECK_THROWS_AS(build_chain_block({BlockFamily::B, 0, 2, {}}), InputError);
    CHECK_THROWS_AS(build_chain_block({BlockFamily::B, 3, 2, {1}}), InputError);
    CHECK_THROWS_AS(build_chain_block({BlockFamily::B, 2, 2, {2}}), InputError);
}

TEST_CASE("closed forms")
{
    CHECK(det_closed_form({BlockFamily::B, 2, 2, {}}) == 21);
    CHECK(det_closed_form({BlockFamily::C, 3, 2, {}}) == 64);
    CHECK(det_closed_form({BlockFamily::D, 5, 4, {}}) == 1);
    CHECK(det_closed_form({BlockFamily::B, 4, 1, {}}) == 5);
    CHECK(det_closed_form({BlockFamily::C, 0, 3, {}}) == 1);
    CHECK(det_closed_form({BlockFamily::D, 0, 3, {}}) == 1);
}

TEST_CASE("closed forms match the Leibniz oracle for small blocks")
{
    for (long k = 1; k <= 4; ++k)
        for (std::size_t t = 1; t <= 6; ++t)
            for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask)
                for (auto f : {BlockFamily::B, BlockFamily::C, BlockFamily::D}) {
                    const ChainBlockSpec spec{f, t, k, signs_from_mask(t, mask)};
                    CHECK(BigRational(oracle::leibniz_det(build_chain_block(spec))) == det_closed_form(spec));
                }
}

TEST_CASE("recurrences and scalar inequalities")
{
    CHECK(verify_recurrences(6, 2).passed());
    CHECK(verify_recurrences(6, 1).passed());
    const auto r = verify_recurrences(3, 5);
    CHECK(r.passed());
    CHECK(r.matrices == 3 * (1 + 2 + 4));
    CHECK_THROWS_AS(verify_recurrences(2, 2), InputError);
    CHECK(verify_scalar_inequalities(10, 50).passed());
}

TEST_CASE("Hadamard-Fischer")
{
    const auto id = hadamard_fischer_check(GramPartition{IntegerMatrix::identity(2), {{0}, {1}}});
    CHECK(id.holds);
    CHECK(id.lhs == 1);
    CHECK(id.rhs == 1);
    const auto two = hadamard_fischer_check(GramPartition{IntegerMatrix{{2, 1}, {1, 2}}, {{0}, {1}}});
    CHECK(two.holds);
    CHECK(two.lhs == 3);
    CHECK(two.rhs == 4);

    // U_3 of the k=2, n=3 chain system: rows 2x1 - x2, 2x2 - x3 without column 3.
    const IntegerMatrix u{{2, -1}, {0, 2}};
    const auto g = hadamard_fischer_check(GramPartition::from_factor(u, {{0, 1}}));
    CHECK(g.holds);
    CHECK(g.lhs == 16);

    CHECK_THROWS_AS(hadamard_fischer_check(GramPartition{IntegerMatrix::identity(2), {{0}}}), InputError);
    CHECK_THROWS_AS(hadamard_fischer_check(GramPartition{IntegerMatrix::identity(2), {{0, 1}, {1}}}), InputError);
    CHECK_THROWS_AS(hadamard_fischer_check(GramPartition{IntegerMatrix{{1, 2}, {2, 1}}, {{0}, {1}}}), InputError);
    CHECK_THROWS_AS(hadamard_fischer_check(GramPartition{IntegerMatrix{{1, 2}, {0, 1}}, {{0}, {1}}}), InputError);
}

TEST_CASE("Hadamard-Fischer on random Gram matrices")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const IntegerMatrix u = oracle::random_matrix(rng, n, 1 + rng() % 5, -3, 3);
        CHECK(is_positive_semidefinite(gram(u)));
        std::vector<std::vector<std::size_t>> blocks(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && rng() % 2)
                blocks.emplace_back();
            blocks.back().push_back(i);
        }
        const auto r = hadamard_fischer_check(GramPartition::from_factor(u, blocks));
        CHECK(r.holds);
        CHECK(r.lhs == oracle::leibniz_det(gram(u)));
    }
    CHECK_FALSE(is_positive_semidefinite(IntegerMatrix{{1, 2}, {2, 1}}));
    CHECK(is_positive_semidefinite(IntegerMatrix{{0, 0}, {0, 0}}));
}

TEST_CASE("type-3 norm bounds")
{
    const std::vector<long> a{4, 2};
    const auto na = type3_norm_bound(a, 5);
    CHECK(na.norm_sq == 20);
    CHECK(na.bound == 20);
    const std::vector<long> b{1, 1, 1};
    const auto nb = type3_norm_bound(b, 2);
    CHECK(nb.norm_sq == 3);
    CHECK(nb.bound == 3);
    const std::vector<long> c{3, 1, 1};
    const auto nc = type3_norm_bound(c, 4, 1);
    CHECK(nc.norm_sq == 10);
    CHECK(nc.bound == 10);

    const std::vector<long> pair{4, 1};
    CHECK_THROWS_AS(type3_norm_bound(pair, 4), InputError);
    const std::vector<long> heavy{3, 3};
    CHECK_THROWS_AS(type3_norm_bound(heavy, 4), InputError);
    const std::vector<long> single{2};
    CHECK_THROWS_AS(type3_norm_bound(single, 4), InputError);

    const auto eq = TyszkaEquation::homogeneous({Term{3, 1, 0}, Term{1, -1, 4}, Term{1, 1, 7}});
    CHECK(type3_norm_bound(eq, 4).norm_sq == 11);
    CHECK(type3_norm_bound(eq, 4, std::size_t{4}).norm_sq == 10);
    CHECK_THROWS_AS(type3_norm_bound(eq, 4, std::size_t{2}), InputError);

    for (long k = 2; k <= 8; ++k) {
        const auto s = verify_type3_bounds(k);
        CHECK(s.passed());
        // At k = 2 the pair {k-1, 2} is the chain pair {1, k}, so only k >= 3 has it.
        CHECK(s.two_term_equality_attained == (k >= 3));
        CHECK(s.deleted_equality_attained);
    }
}

TEST_CASE("solution-bound certification examples")
{
    // k=2, n=3 chain: x = (1,2,4), column 3 gives 16 <= det W_3 <= 16.
    const IntegerMatrix chain{{1, 0, 0}, {2, -1, 0}, {0, 2, -1}};
    const auto rep = certify_solution_bound(chain, 2);
    CHECK(rep.passed());
    REQUIRE(rep.columns.size() == 3);
    CHECK(rep.columns[2].x == 4);
    CHECK(rep.columns[2].det_w == 16);
    CHECK(rep.bound_sq == 16);
    CHECK(rep.sharp);

    const auto small = certify_solution_bound(IntegerMatrix{{1, 0}, {2, -1}}, 2);
    CHECK(small.passed());
    CHECK(small.columns[0].det_w >= 1);
    CHECK(small.columns[0].det_w <= 4);

    const auto one = certify_solution_bound(IntegerMatrix{{1}}, 2);
    CHECK(one.passed());
    CHECK(one.bound == 1);

    const std::string text = format_bound_report(rep);
    CHECK(text.find("3, case1(C_2+D_0), 4, 16, 16, OK") != std::string::npos);
}

TEST_CASE("certification never fails on reduced planted systems")
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const long k = 2 + trial % 3;
        const auto planted = oracle::planted_system(rng, k, 2 + rng() % 8);
        const auto r = reduce(planted.system);
        const auto as = assemble(r.system, chain_decompose(r.system));
        const auto rep = certify_solution_bound(as.matrix, k, as.layout, 2);
        CHECK(rep.passed());
        for (const auto& c : rep.columns) {
            CHECK(c.x * c.x <= BigRational(c.det_w));
            CHECK(c.det_w <= rep.bound_sq);
            CHECK(abs(c.det_a_i) == abs(c.det_u_i));
        }
        // The inferred layout agrees with the assembled one.
        CHECK(certify_solution_bound(as.matrix, k).passed());
    }
}
