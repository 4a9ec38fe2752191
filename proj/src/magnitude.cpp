#include <relmag/magnitude.hpp>

#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>

#include <algorithm>
#include <sstream>

namespace relmag {

Magnitude Magnitude::of(BigRational value)
{
    if (value < 1)
        throw InputError("a relative magnitude is at least 1");
    Magnitude m;
    m.m_value = std::move(value);
    return m;
}

bool MagnitudeCertificate::passed() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const ClauseVerdict& v) { return v.passed; });
}

BigRational omega_vector(std::span<const BigRational> x)
{
    BigRational largest = 0;
    std::optional<BigRational> smallest;
    for (const auto& v : x) {
        const BigRational a = abs(v);
        if (a > largest)
            largest = a;
        if (a != 0 && (!smallest || a < *smallest))
            smallest = a;
    }
    if (!smallest)
        throw InputError("relative magnitude of the zero vector is undefined");
    return largest / *smallest;
}

BigRational omega_vector(std::span<const BigInt> x)
{
    return omega_vector(std::span<const BigRational>(to_rational(x)));
}

MagnitudeCertificate omega_matrix_upper(const IntegerMatrix& a, const EnumerationOptions& options)
{
    MagnitudeCertificate cert;
    cert.norm = infinity_norm(a);
    cert.rank = rank(a);
    cert.columns = a.cols();
    const std::size_t nullity = a.cols() - cert.rank;
    cert.exactness = nullity <= 1 ? Exactness::exact : Exactness::upper_bound;
    if (cert.norm >= 3)
        cert.theorem_bound = ipow(cert.norm - 1, cert.rank);

    if (nullity == 0) {
        cert.verdicts.push_back({"trivial-null-space", true, "rank = n, omega(A) = 0"});
        return cert;
    }

    const auto circuits = enumerate_circuits(a, options);
    if (circuits.empty())
        throw CertificationFailure("nonzero null space but no circuit found");

    bool every_circuit_bounded = true;
    bool small_norm_holds = true;
    std::size_t t = circuits.front().support.size();
    const Circuit* best = nullptr;
    BigRational best_omega;
    for (const auto& c : circuits) {
        // Coordinates outside the support are zero, so this equals omega of
        // the support-restricted vector.
        const BigRational w = omega_vector(std::span<const BigInt>(c.vector));
        if (!best || w < best_omega) {
            best = &c;
            best_omega = w;
        }
        t = std::min(t, c.support.size());
        if (cert.norm >= 3 && w > BigRational(ipow(cert.norm - 1, c.support.size() - 1)))
            every_circuit_bounded = false;
        if (cert.norm <= 2 && w != 1)
            small_norm_holds = false;
    }

    cert.omega_upper = Magnitude::of(best_omega);
    cert.witness = *best;
    cert.min_support = t;

    cert.verdicts.push_back({"omega-at-least-one", best_omega >= 1, "omega_upper = " + to_string(best_omega)});
    cert.verdicts.push_back({"support-size-vs-rank", t - 1 <= cert.rank,
                             "t - 1 = " + std::to_string(t - 1) + ", rank = " + std::to_string(cert.rank)});

    if (cert.norm >= 2)
        cert.support_bound = ipow(cert.norm - 1, t - 1);

    if (cert.norm <= 2) {
        cert.verdicts.push_back({"small-norm-unit-magnitude", small_norm_holds,
                                 "every circuit has omega = 1 when ||A|| <= 2"});
    } else {
        cert.verdicts.push_back({"circuit-bound", every_circuit_bounded,
                                 "omega(x) <= (||A||-1)^(|I|-1) for every circuit"});
        cert.verdicts.push_back({"support-bound", best_omega <= BigRational(*cert.support_bound),
                                 "omega_upper <= (||A||-1)^(t-1) = " + cert.support_bound->get_str()});
        cert.verdicts.push_back({"theorem-bound", *cert.support_bound <= *cert.theorem_bound,
                                 "(||A||-1)^(t-1) <= (||A||-1)^rank = " + cert.theorem_bound->get_str()});
        cert.sharp = best_omega == BigRational(*cert.theorem_bound);
    }
    return cert;
}

SmallNormVerdict classify_small_norm(const IntegerMatrix& a, const EnumerationOptions& options)
{
    SmallNormVerdict out;
    out.norm = infinity_norm(a);
    if (out.norm > 2)
        throw InputError("classify_small_norm needs ||A||_inf <= 2, got " + out.norm.get_str());

    const auto circuits = enumerate_circuits(a, options);
    for (const auto& c : circuits) {
        const BigRational w = omega_vector(std::span<const BigInt>(c.vector));
        if (w != 1)
            throw CertificationFailure("circuit " + format_circuit(c) + " has omega " + to_string(w) +
                                       " although ||A||_inf <= 2");
    }
    out.circuits_checked = circuits.size();
    out.omega = circuits.empty() ? Magnitude::zero() : Magnitude::of(1);
    return out;
}

std::string to_string(Exactness e) { return e == Exactness::exact ? "EXACT" : "UPPER_BOUND"; }

std::string format_certificate(const MagnitudeCertificate& cert)
{
    std::ostringstream out;
    const std::string omega = cert.omega_upper.is_zero() ? "0" : to_string(cert.omega_upper.value());
    out << "norm=" << cert.norm.get_str() << '\n';
    out << "rank=" << cert.rank << '\n';
    out << "t=" << (cert.min_support ? std::to_string(*cert.min_support) : "none") << '\n';
    out << "omega_upper=" << omega << '\n';
    out << "status=" << to_string(cert.exactness) << '\n';
    out << "theorem_bound=" << (cert.theorem_bound ? cert.theorem_bound->get_str() : "n/a") << '\n';
    out << "support_bound=" << (cert.support_bound ? cert.support_bound->get_str() : "n/a") << '\n';
    out << "witness=" << (cert.witness ? format_circuit(*cert.witness) : "none") << '\n';
    for (const auto& v : cert.verdicts)
        out << "clause." << v.clause << '=' << (v.passed ? "PASS" : "FAIL") << '\n';
    out << "verdict=" << (cert.passed() ? "PASS" : "FAIL") << '\n';
    out << "omega=" << omega << " bound=" << (cert.theorem_bound ? cert.theorem_bound->get_str() : "n/a") << ' '
        << (cert.sharp ? "SHARP" : "NOT-SHARP") << '\n';
    return out.str();
}

} // namespace relmag
