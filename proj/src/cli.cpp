#include <relmag/cli.hpp>

#include <relmag/circuits.hpp>
#include <relmag/detbounds.hpp>
#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>
#include <relmag/magnitude.hpp>
#include <relmag/tyszka.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace relmag::cli {

using nlohmann::json;

IntegerMatrix gen_extremal_matrix(long k, std::size_t n)
{
    if (k < 2 || n < 2)
        throw InputError("gen-extremal needs k >= 2 and n >= 2");
    std::vector<BigInt> entries((n - 1) * n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        entries[i * n + i] = k;
        entries[i * n + i + 1] = -1;
    }
    return IntegerMatrix(n - 1, n, std::move(entries));
}

TyszkaSystem gen_extremal_system(long k, std::size_t n)
{
    if (k < 2 || n < 2)
        throw InputError("gen-extremal needs k >= 2 and n >= 2");
    TyszkaSystem s;
    s.k = k;
    s.variables = n;
    s.equations.push_back(TyszkaEquation::unit(0, 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Term> terms(static_cast<std::size_t>(k), Term{1, 1, i});
        terms.push_back(Term{1, -1, i + 1});
        s.equations.push_back(TyszkaEquation::homogeneous(std::move(terms)));
    }
    return s;
}

namespace {

struct Options {
    std::string matrix_path;
    std::string system_path;
    long k = 2;
    std::size_t n = 2;
    std::size_t tmax = 8;
    long kmax = 5;
    std::string format = "text";
    std::string mode = "homogeneous";
    unsigned jobs = 1;
    bool allow_large = false;
};

std::string read_source(const std::string& path, std::istream& in)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot read " + path);
    buffer << file.rdbuf();
    return buffer.str();
}

std::string rational_json(const BigRational& q) { return to_string(q); }

json vector_json(std::span<const BigRational> v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rational_json(q));
    return out;
}

json vector_json(std::span<const BigInt> v)
{
    json out = json::array();
    for (const auto& z : v)
        out.push_back(z.get_str());
    return out;
}

json circuit_json(const Circuit& c)
{
    json support = json::array();
    for (auto i : c.support)
        support.push_back(i + 1);
    return json{{"support", support}, {"vector", vector_json(std::span<const BigInt>(c.vector))}};
}

json certificate_json(const MagnitudeCertificate& cert)
{
    json verdicts = json::object();
    for (const auto& v : cert.verdicts)
        verdicts[v.clause] = v.passed ? "PASS" : "FAIL";
    json j{
        {"norm", cert.norm.get_str()},
        {"rank", cert.rank},
        {"t", cert.min_support ? json(*cert.min_support) : json(nullptr)},
        {"omega_upper", cert.omega_upper.is_zero() ? "0" : to_string(cert.omega_upper.value())},
        {"status", to_string(cert.exactness)},
        {"theorem_bound", cert.theorem_bound ? json(cert.theorem_bound->get_str()) : json(nullptr)},
        {"support_bound", cert.support_bound ? json(cert.support_bound->get_str()) : json(nullptr)},
        {"sharp", cert.sharp},
        {"witness", cert.witness ? circuit_json(*cert.witness) : json(nullptr)},
        {"clauses", verdicts},
        {"verdict", cert.passed() ? "PASS" : "FAIL"},
    };
    return j;
}

json bound_report_json(const SolutionBoundReport& r)
{
    json cols = json::array();
    for (const auto& c : r.columns) {
        cols.push_back(json{{"i", c.column + 1},
                            {"case", to_string(c.cut)},
                            {"x", rational_json(c.x)},
                            {"det_A_i", c.det_a_i.get_str()},
                            {"det_U_i", c.det_u_i.get_str()},
                            {"det_W_i", c.det_w.get_str()},
                            {"fischer_product", c.fischer.rhs.get_str()},
                            {"status", c.ok() ? "OK" : "FAIL"},
                            {"failures", c.failures}});
    }
    return json{{"k", r.k},
                {"n", r.n},
                {"det_A", r.det_a.get_str()},
                {"bound", r.bound.get_str()},
                {"bound_squared", r.bound_sq.get_str()},
                {"max_abs", rational_json(r.max_abs)},
                {"sharp", r.sharp},
                {"columns", cols},
                {"status", r.passed() ? "OK" : "FAIL"}};
}

int cmd_omega(const Options& o, std::istream& in, std::ostream& out, bool summary_only)
{
    const IntegerMatrix a = parse_matrix(read_source(o.matrix_path, in));
    const auto cert = omega_matrix_upper(a, EnumerationOptions{o.allow_large, o.jobs});
    if (o.format == "json") {
        out << certificate_json(cert).dump(2) << '\n';
    } else if (summary_only) {
        for (const auto& v : cert.verdicts)
            out << "clause." << v.clause << '=' << (v.passed ? "PASS" : "FAIL") << '\n';
        out << "verdict=" << (cert.passed() ? "PASS" : "FAIL") << '\n';
        const std::string omega = cert.omega_upper.is_zero() ? "0" : to_string(cert.omega_upper.value());
        out << "omega=" << omega << " bound=" << (cert.theorem_bound ? cert.theorem_bound->get_str() : "n/a")
            << ' ' << (cert.sharp ? "SHARP" : "NOT-SHARP") << '\n';
    } else {
        out << format_certificate(cert);
    }
    return cert.passed() ? kExitOk : kExitViolation;
}

int cmd_circuits(const Options& o, std::istream& in, std::ostream& out)
{
    const IntegerMatrix a = parse_matrix(read_source(o.matrix_path, in));
    const auto circuits = enumerate_circuits(a, EnumerationOptions{o.allow_large, o.jobs});
    if (o.format == "json") {
        json list = json::array();
        for (const auto& c : circuits)
            list.push_back(circuit_json(c));
        out << json{{"count", circuits.size()}, {"circuits", list}}.dump(2) << '\n';
        return kExitOk;
    }
    out << "count=" << circuits.size() << '\n';
    for (const auto& c : circuits)
        out << format_circuit(c) << '\n';
    return kExitOk;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    const TyszkaSystem system = parse_system(read_source(o.system_path, in));
    TyszkaSolution sol;
    try {
        sol = solve_and_certify(system, o.jobs);
    } catch (const CertificationFailure& e) {
        err << "certification failed: " << e.what() << '\n';
        return kExitViolation;
    }

    const std::string summary = "x=" + format_vector(std::span<const BigRational>(sol.solution)) +
                                " max=" + to_string(sol.max_abs) + " <= " + std::to_string(system.k) +
                                "^(n-1)=" + sol.bound.get_str() + " n=" + std::to_string(sol.reduced_rank) +
                                (sol.sharp ? " SHARP" : "");
    if (o.format == "json") {
        json j{{"k", system.k},
               {"solution", vector_json(std::span<const BigRational>(sol.solution))},
               {"zero_solution", sol.reduction.zero_solution},
               {"original_rank", sol.reduction.trace.original_rank},
               {"reduced_rank", sol.reduced_rank},
               {"bound", sol.bound.get_str()},
               {"max_abs", rational_json(sol.max_abs)},
               {"sharp", sol.sharp},
               {"reduced_system", format_system(sol.reduction.system)},
               {"trace", format_trace(sol.reduction.trace)},
               {"report", sol.report ? bound_report_json(*sol.report) : json(nullptr)}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    if (sol.reduction.zero_solution) {
        out << "zero_solution=true\n" << summary << '\n';
        return kExitOk;
    }
    out << "# reduced system\n" << format_system(sol.reduction.system);
    out << "# trace\n" << format_trace(sol.reduction.trace);
    out << "# certification\n" << format_bound_report(*sol.report);
    out << summary << '\n';
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    if (o.mode == "homogeneous")
        out << format_matrix(gen_extremal_matrix(o.k, o.n));
    else
        out << format_system(gen_extremal_system(o.k, o.n));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.kmax < 1)
        throw InputError("--kmax must be at least 1");
    LemmaCheckReport determinants;
    for (long k = 1; k <= o.kmax; ++k)
        determinants.merge(verify_recurrences(o.tmax, k));
    const LemmaCheckReport scalars = verify_scalar_inequalities(o.tmax, o.kmax);

    std::vector<Type3Survey> surveys;
    bool norms_ok = true;
    for (long k = 2; k <= o.kmax; ++k) {
        surveys.push_back(verify_type3_bounds(k));
        norms_ok = norms_ok && surveys.back().passed();
    }
    const bool ok = determinants.passed() && scalars.passed() && norms_ok;

    if (o.format == "json") {
        json norms = json::array();
        for (const auto& s : surveys)
            norms.push_back(json{{"k", s.k},
                                 {"multisets", s.multisets},
                                 {"max_norm_sq", s.max_norm_sq.get_str()},
                                 {"bound", s.bound.get_str()},
                                 {"max_deleted_norm_sq", s.max_deleted_norm_sq.get_str()},
                                 {"deleted_bound", s.deleted_bound.get_str()},
                                 {"failures", s.failures}});
        out << json{{"chain_determinants",
                     {{"matrices", determinants.matrices},
                      {"checks", determinants.checks},
                      {"failures", determinants.failures}}},
                    {"scalar_inequalities", {{"checks", scalars.checks}, {"failures", scalars.failures}}},
                    {"type3_norms", norms},
                    {"verdict", ok ? "PASS" : "FAIL"}}
                   .dump(2)
            << '\n';
        return ok ? kExitOk : kExitViolation;
    }

    out << "chain_determinants.matrices=" << determinants.matrices << '\n';
    out << "chain_determinants.checks=" << determinants.checks << '\n';
    out << "chain_determinants=" << (determinants.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : determinants.failures)
        out << "#   " << f << '\n';
    out << "scalar_inequalities.checks=" << scalars.checks << '\n';
    out << "scalar_inequalities=" << (scalars.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& s : surveys) {
        out << "type3_norms.k" << s.k << "=" << (s.passed() ? "PASS" : "FAIL") << " multisets=" << s.multisets
            << " max=" << s.max_norm_sq.get_str() << "/" << s.bound.get_str()
            << " deleted_max=" << s.max_deleted_norm_sq.get_str() << "/" << s.deleted_bound.get_str() << '\n';
        for (const auto& f : s.failures)
            out << "#   " << f << '\n';
    }
    out << "verdict=" << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitViolation;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solution relative magnitudes of integer linear systems"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* omega = app.add_subcommand("omega", "Solution relative magnitude certificate for a matrix");
    auto* circuits = app.add_subcommand("circuits", "List the circuits (elementary null vectors) of a matrix");
    auto* certify = app.add_subcommand("certify", "Check the norm/rank bound on a matrix");
    for (auto* sub : {omega, circuits, certify}) {
        sub->add_option("--matrix", o.matrix_path, "Matrix file ('-' for stdin)")->required();
        sub->add_flag("--allow-large", o.allow_large, "Allow circuit enumeration beyond 24 columns");
        add_common(sub);
    }

    auto* solve = app.add_subcommand("solve", "Solve and certify a system of unit and signed-sum equations");
    solve->add_option("--system", o.system_path, "System file ('-' for stdin)")->required();
    add_common(solve);

    auto* gen = app.add_subcommand("gen-extremal", "Emit the sharp chain instance");
    gen->add_option("--k", o.k, "Chain multiplier")->required();
    gen->add_option("--n", o.n, "Number of variables")->required();
    gen->add_option("--mode", o.mode, "homogeneous or tyszka")->check(CLI::IsMember({"homogeneous", "tyszka"}));

    auto* verify = app.add_subcommand("verify-lemmas", "Self-test the chain determinant and norm identities");
    verify->add_option("--tmax", o.tmax, "Largest chain block size")->check(CLI::Range(3, 20));
    verify->add_option("--kmax", o.kmax, "Largest k")->check(CLI::Range(1, 64));
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (omega->parsed())
            return cmd_omega(o, in, out, false);
        if (certify->parsed())
            return cmd_omega(o, in, out, true);
        if (circuits->parsed())
            return cmd_circuits(o, in, out);
        if (solve->parsed())
            return cmd_solve(o, in, out, err);
        if (gen->parsed())
            return cmd_gen(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
    } catch (const CertificationFailure& e) {
        err << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

} // namespace relmag::cli
