#include "oracle.hpp"

#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>
#include <relmag/magnitude.hpp>

#include <doctest.h>

#include <random>

using namespace relmag;

namespace {

bool clause_passed(const MagnitudeCertificate& c, const std::string& name)
{
    for (const auto& v : c.verdicts)
        if (v.clause == name)
            return v.passed;
    FAIL("missing clause " << name);
    return false;
}

MagnitudeCertificate classify_small_norm_cert() { return omega_matrix_upper(IntegerMatrix{{1, -1, 0}, {0, 1, -1}}); }

IntegerMatrix permuted(const IntegerMatrix& a, std::mt19937_64& rng)
{
    std::vector<std::size_t> cols(a.cols()), rows(a.rows());
    std::iota(cols.begin(), cols.end(), 0);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::shuffle(rows.begin(), rows.end(), rng);
    IntegerMatrix b = a.select_columns(cols).select_rows(rows);
    const std::size_t flip = rng() % b.cols();
    IntegerVector negated = b.column(flip);
    for (auto& z : negated)
        z = -z;
    return b.with_column(flip, negated);
}

} // namespace

TEST_CASE("omega of a vector")
{
    const RationalVector a{1, 2, 4};
    CHECK(omega_vector(a) == 4);
    const RationalVector b{5, -5, 0};
    CHECK(omega_vector(b) == 1);
    const RationalVector c{BigRational(1, 2), 3, -6};
    CHECK(omega_vector(c) == 12);
    const RationalVector zero{0, 0};
    CHECK_THROWS_AS(omega_vector(zero), InputError);
    const IntegerVector d{0, -3, 7};
    CHECK(omega_vector(d) == BigRational(7, 3));
}

TEST_CASE("omega is scale and permutation invariant")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        RationalVector x;
        for (int i = 0; i < 5; ++i)
            x.push_back(make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 6));
        if (is_zero(x))
            continue;
        const BigRational w = omega_vector(x);
        CHECK(w >= 1);
        long num = static_cast<long>(rng() % 2001) - 1000;
        if (num == 0)
            num = 1;
        const BigRational c = make_rational(num, 1 + rng() % 97);
        RationalVector scaled;
        for (const auto& q : x)
            scaled.push_back(q * c);
        CHECK(omega_vector(scaled) == w);
        std::shuffle(x.begin(), x.end(), rng);
        CHECK(omega_vector(x) == w);
    }
}

TEST_CASE("certificate on the chain matrix")
{
    const auto cert = omega_matrix_upper(IntegerMatrix{{2, -1, 0}, {0, 2, -1}});
    CHECK(cert.omega_upper == Magnitude::of(4));
    REQUIRE(cert.theorem_bound);
    CHECK(*cert.theorem_bound == 4);
    CHECK(cert.norm == 3);
    CHECK(cert.rank == 2);
    CHECK(cert.min_support == 3u);
    CHECK(cert.exactness == Exactness::exact);
    CHECK(cert.sharp);
    CHECK(cert.passed());
    REQUIRE(cert.witness);
    CHECK(cert.witness->vector == IntegerVector{1, 2, 4});
    const std::string text = format_certificate(cert);
    CHECK(text.substr(text.rfind("omega=")) == "omega=4 bound=4 SHARP\n");
}

TEST_CASE("certificate edge cases")
{
    const auto trivial = omega_matrix_upper(IntegerMatrix::identity(3));
    CHECK(trivial.omega_upper.is_zero());
    CHECK_FALSE(trivial.witness);
    CHECK(trivial.passed());

    const auto ones = omega_matrix_upper(IntegerMatrix{{1, 1, 1}});
    CHECK(ones.omega_upper == Magnitude::of(1));
    CHECK(ones.exactness == Exactness::upper_bound);
    CHECK(clause_passed(ones, "circuit-bound"));
    CHECK(clause_passed(classify_small_norm_cert(), "small-norm-unit-magnitude"));
    REQUIRE(ones.witness);
    CHECK(ones.witness->support == Support{0, 1});

    const auto zero = omega_matrix_upper(IntegerMatrix::zero(2, 2));
    CHECK(zero.omega_upper == Magnitude::of(1));
    CHECK(zero.passed());

    CHECK_THROWS_AS(Magnitude::of(BigRational(1, 2)), InputError);
}

TEST_CASE("small-norm dichotomy")
{
    const auto e = classify_small_norm(IntegerMatrix{{1, 0, 0}});
    CHECK(e.omega == Magnitude::of(1));
    const auto path = classify_small_norm(IntegerMatrix{{1, -1, 0}, {0, 1, -1}});
    CHECK(path.omega == Magnitude::of(1));
    CHECK(path.circuits_checked == 1);
    CHECK(classify_small_norm(IntegerMatrix::identity(2)).omega.is_zero());
    CHECK_THROWS_AS(classify_small_norm(IntegerMatrix{{2, -1}}), InputError);
}

TEST_CASE("bound chain on random matrices")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const IntegerMatrix a = oracle::random_matrix(rng, 1 + rng() % 3, 2 + rng() % 5, -3, 3);
        const auto cert = omega_matrix_upper(a);
        CHECK(cert.passed());
        if (cert.omega_upper.is_zero()) {
            CHECK(oracle::rank(a) == a.cols());
            continue;
        }
        // omega_upper is the least circuit omega, found independently.
        BigRational best = 0;
        for (const auto& c : oracle::circuits(a)) {
            const BigRational w = oracle::omega(c.vector);
            if (best == 0 || w < best)
                best = w;
        }
        CHECK(cert.omega_upper.value() == best);
        CHECK(cert.exactness == (a.cols() - oracle::rank(a) <= 1 ? Exactness::exact : Exactness::upper_bound));
        if (cert.norm >= 3) {
            REQUIRE(cert.support_bound);
            REQUIRE(cert.theorem_bound);
            CHECK(cert.omega_upper.value() <= *cert.support_bound);
            CHECK(*cert.support_bound <= *cert.theorem_bound);
        }
    }
}

TEST_CASE("certificate value is invariant under row/column permutation and sign flips")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const IntegerMatrix a = oracle::random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, -3, 3);
        const auto w = omega_matrix_upper(a).omega_upper;
        CHECK(omega_matrix_upper(permuted(a, rng)).omega_upper == w);
    }
}
