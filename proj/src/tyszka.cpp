#include <relmag/tyszka.hpp>

#include <relmag/errors.hpp>
#include <relmag/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace relmag {

namespace {

using VariableMap = std::vector<VariableImage>;

bool is_identity(const VariableMap& map, std::size_t variables_after)
{
    if (map.size() != variables_after)
        return false;
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v].zero || map[v].sign != 1 || map[v].target != v)
            return false;
    return true;
}

std::vector<std::size_t> all_indices(std::size_t n)
{
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

// Substitutes every variable by its image; terms on zeroed variables vanish.
TyszkaSystem apply_map(const TyszkaSystem& s, const VariableMap& map, std::size_t variables_after)
{
    TyszkaSystem out;
    out.k = s.k;
    out.variables = variables_after;
    for (const auto& e : s.equations) {
        if (e.is_unit()) {
            const auto& img = map[e.unit_variable];
            if (img.zero)
                throw CertificationFailure("reduction zeroed the variable of a unit equation");
            out.equations.push_back(TyszkaEquation::unit(img.target, e.unit_sign * img.sign));
            continue;
        }
        std::vector<Term> terms;
        for (const auto& t : e.terms) {
            const auto& img = map[t.variable];
            if (!img.zero)
                terms.push_back(Term{t.coefficient, t.sign * img.sign, img.target});
        }
        out.equations.push_back(TyszkaEquation::homogeneous(std::move(terms)));
    }
    return out;
}

TyszkaSystem select(const TyszkaSystem& s, const std::vector<std::size_t>& kept)
{
    TyszkaSystem out;
    out.k = s.k;
    out.variables = s.variables;
    for (auto i : kept)
        out.equations.push_back(s.equations[i]);
    return out;
}

// Greedy independent subset: the unit equation first, then the rest in order.
std::vector<std::size_t> independent_rows(const TyszkaSystem& s)
{
    const IntegerMatrix a = s.coefficient_matrix();
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < s.equations.size(); ++i)
        if (s.equations[i].is_unit())
            order.push_back(i);
    for (std::size_t i = 0; i < s.equations.size(); ++i)
        if (!s.equations[i].is_unit())
            order.push_back(i);

    std::vector<std::size_t> kept;
    std::vector<IntegerVector> rows;
    for (auto i : order) {
        if (rows.size() == s.variables)
            break;
        rows.emplace_back(a.row(i).begin(), a.row(i).end());
        if (rank_of_vectors(rows) == rows.size())
            kept.push_back(i);
        else
            rows.pop_back();
    }
    return kept;
}

RationalVector unique_solution(const TyszkaSystem& s)
{
    if (s.equations.size() != s.variables)
        throw CertificationFailure("reduced system is not square");
    const IntegerVector b = s.rhs();
    try {
        return elimination_solve(s.coefficient_matrix(), to_rational(b));
    } catch (const SingularMatrix&) {
        throw CertificationFailure("reduced system does not have a unique solution");
    }
}

TyszkaEquation normalized(const TyszkaEquation& e, std::size_t& cancelled)
{
    if (e.is_unit())
        return e;
    std::map<std::size_t, long> positive, negative;
    for (const auto& t : e.terms)
        (t.sign > 0 ? positive : negative)[t.variable] += t.coefficient;
    for (const auto& [v, c] : positive)
        if (auto it = negative.find(v); it != negative.end())
            cancelled += static_cast<std::size_t>(std::min(c, it->second));

    std::vector<Term> terms;
    for (const auto& [v, c] : e.combined())
        terms.push_back(Term{c < 0 ? -c : c, c < 0 ? -1 : 1, v});
    return TyszkaEquation::homogeneous(std::move(terms));
}

TyszkaSystem normalized(const TyszkaSystem& s, std::size_t& cancelled)
{
    TyszkaSystem out = s;
    for (auto& e : out.equations)
        e = normalized(e, cancelled);
    return out;
}

TyszkaEquation unit_to_link(const TyszkaEquation& rep, const TyszkaEquation& other)
{
    // x_j = s_j and x_i = s_i give x_j - s_j s_i x_i = 0.
    return TyszkaEquation::homogeneous(
        {Term{1, 1, other.unit_variable}, Term{1, -other.unit_sign * rep.unit_sign, rep.unit_variable}});
}

void compose(std::vector<VariableImage>& images, const VariableMap& step)
{
    for (auto& img : images) {
        if (img.zero)
            continue;
        const auto& next = step[img.target];
        if (next.zero)
            img = VariableImage{true, 1, 0};
        else
            img = VariableImage{false, img.sign * next.sign, next.target};
    }
}

int sign_of(const BigRational& q) { return sgn(q) < 0 ? -1 : 1; }

// Applies a map/selection step to the working state and records it if it
// changed anything.
struct Reducer {
    TyszkaSystem current;
    RationalVector solution;
    ReductionTrace trace;

    void map_step(ReductionStep step, const VariableMap& map, std::size_t variables_after, bool reselect)
    {
        TyszkaSystem mapped = apply_map(current, map, variables_after);
        const auto kept = reselect ? independent_rows(mapped) : all_indices(mapped.equations.size());
        const bool changed = !is_identity(map, variables_after) || kept != all_indices(mapped.equations.size());
        current = select(mapped, kept);

        if (!solution.empty()) {
            RationalVector next(variables_after);
            for (std::size_t v = 0; v < map.size(); ++v)
                if (!map[v].zero)
                    next[map[v].target] = map[v].sign * solution[v];
            solution = std::move(next);
        }
        compose(trace.original_images, map);
        if (changed) {
            step.variable_map = map;
            step.kept_equations = kept;
            step.variables_after = variables_after;
            trace.steps.push_back(std::move(step));
        }
    }
};

void check_postconditions(const TyszkaSystem& s, const RationalVector& y)
{
    auto fail = [](const std::string& what) { throw CertificationFailure("reduced system: " + what); };
    if (s.equations.size() != s.variables)
        fail("not square");
    if (!s.equations.front().is_unit() || s.equations.front().unit_variable != 0 ||
        s.equations.front().unit_sign != 1)
        fail("first equation is not x1 = 1");
    for (std::size_t i = 1; i < s.equations.size(); ++i) {
        const auto& e = s.equations[i];
        if (e.is_unit())
            fail("more than one unit equation");
        if (e.terms.size() < 2)
            fail("homogeneous equation with fewer than two variables");
        if (e.coefficient_sum() > s.k + 1)
            fail("coefficient sum exceeds k+1");
    }
    if (determinant(s.coefficient_matrix()) == 0)
        fail("solution is not unique");
    if (multiply(s.coefficient_matrix(), y) != to_rational(s.rhs()))
        fail("stored solution does not satisfy the system");
    std::vector<BigRational> mags;
    for (const auto& v : y) {
        if (v == 0)
            fail("zero coordinate");
        mags.push_back(abs(v));
    }
    std::sort(mags.begin(), mags.end());
    if (std::adjacent_find(mags.begin(), mags.end()) != mags.end())
        fail("two coordinates share an absolute value");
}

} // namespace

RationalVector ReductionTrace::reconstruct(std::span<const BigRational> reduced_solution) const
{
    RationalVector x(original_images.size());
    for (std::size_t v = 0; v < original_images.size(); ++v) {
        const auto& img = original_images[v];
        if (!img.zero)
            x[v] = img.sign * reduced_solution[img.target];
    }
    return x;
}

Reduction reduce(const TyszkaSystem& system)
{
    system.validate();
    const IntegerMatrix a = system.coefficient_matrix();
    const IntegerVector b = system.rhs();
    std::vector<IntegerVector> augmented = a.to_rows();
    for (std::size_t r = 0; r < augmented.size(); ++r)
        augmented[r].push_back(b[r]);

    Reducer red;
    red.trace.original_rank = rank(a);
    if (rank_of_vectors(augmented) != red.trace.original_rank)
        throw UnsolvableSystem("the system has no solution");

    red.trace.original_images.resize(system.variables);
    for (std::size_t v = 0; v < system.variables; ++v)
        red.trace.original_images[v] = VariableImage{false, 1, v};

    const bool has_unit = std::any_of(system.equations.begin(), system.equations.end(),
                                      [](const TyszkaEquation& e) { return e.is_unit(); });
    if (!has_unit) {
        Reduction out;
        out.system = system;
        out.zero_solution = true;
        for (auto& img : red.trace.original_images)
            img = VariableImage{true, 1, 0};
        out.trace = std::move(red.trace);
        out.solution = RationalVector(system.variables);
        return out;
    }

    red.current = system;

    // Step 1
    {
        std::vector<std::size_t> units;
        for (std::size_t i = 0; i < red.current.equations.size(); ++i)
            if (red.current.equations[i].is_unit())
                units.push_back(i);
        if (units.size() >= 2) {
            ReductionStep step;
            step.id = 1;
            step.note = "kept one unit equation, rewrote " + std::to_string(units.size() - 1) + " as x_j -+ x_i = 0";
            step.unit_representative = units.front();
            const TyszkaEquation rep = red.current.equations[units.front()];
            for (std::size_t u = 1; u < units.size(); ++u) {
                auto& e = red.current.equations[units[u]];
                e = unit_to_link(rep, e);
                step.converted_equations.push_back(units[u]);
            }
            step.variables_after = red.current.variables;
            red.trace.steps.push_back(std::move(step));
        }
    }

    // Step 2
    {
        const IntegerMatrix m = red.current.coefficient_matrix();
        const auto pivots = pivot_columns(m);
        std::size_t unit_var = 0;
        for (const auto& e : red.current.equations)
            if (e.is_unit())
                unit_var = e.unit_variable;
        if (std::find(pivots.begin(), pivots.end(), unit_var) == pivots.end())
            throw CertificationFailure("unit variable is not a pivot of the echelon form");

        VariableMap map(red.current.variables, VariableImage{true, 1, 0});
        map[unit_var] = VariableImage{false, 1, 0};
        std::size_t next = 1;
        for (auto p : pivots)
            if (p != unit_var)
                map[p] = VariableImage{false, 1, next++};

        ReductionStep step;
        step.id = 2;
        for (std::size_t v = 0; v < map.size(); ++v)
            if (map[v].zero)
                step.zeroed_variables.push_back(v);
        step.note = "fixed " + std::to_string(step.zeroed_variables.size()) +
                    " free variable(s) to 0 and kept an independent square subsystem";
        red.map_step(std::move(step), map, pivots.size(), true);
        red.solution = unique_solution(red.current);
    }

    // Step 3
    {
        VariableMap map(red.current.variables);
        std::size_t next = 0;
        ReductionStep step;
        step.id = 3;
        for (std::size_t v = 0; v < map.size(); ++v) {
            if (red.solution[v] == 0) {
                map[v] = VariableImage{true, 1, 0};
                step.zeroed_variables.push_back(v);
            } else {
                map[v] = VariableImage{false, 1, next++};
            }
        }
        if (!step.zeroed_variables.empty()) {
            step.note = "removed " + std::to_string(step.zeroed_variables.size()) + " variable(s) equal to 0";
            red.map_step(std::move(step), map, next, true);
        }
    }

    // Step 4
    {
        const std::size_t n = red.current.variables;
        VariableMap map(n);
        std::vector<std::size_t> representative(n);
        ReductionStep step;
        step.id = 4;
        std::size_t next = 0;
        for (std::size_t j = 0; j < n; ++j) {
            representative[j] = j;
            for (std::size_t i = 0; i < j; ++i)
                if (representative[i] == i && abs(red.solution[i]) == abs(red.solution[j])) {
                    representative[j] = i;
                    break;
                }
            if (representative[j] == j) {
                map[j] = VariableImage{false, 1, next++};
            } else {
                const std::size_t i = representative[j];
                const int s = sign_of(red.solution[j]) * sign_of(red.solution[i]);
                map[j] = VariableImage{false, s, map[i].target};
                step.merges.push_back(MergeRecord{j, i, s});
            }
        }
        if (!step.merges.empty()) {
            step.note = "merged " + std::to_string(step.merges.size()) + " variable(s) equal up to sign";
            red.map_step(std::move(step), map, next, true);
        }
    }

    // Step 5
    {
        std::size_t cancelled = 0;
        red.current = normalized(red.current, cancelled);
        if (cancelled > 0) {
            ReductionStep step;
            step.id = 5;
            step.cancelled_pairs = cancelled;
            step.note = "cancelled " + std::to_string(cancelled) + " pair(s) of opposite terms";
            step.variables_after = red.current.variables;
            red.trace.steps.push_back(std::move(step));
        }
    }

    // Step 6
    if (red.current.equations.front().unit_sign < 0) {
        VariableMap map(red.current.variables);
        for (std::size_t v = 0; v < map.size(); ++v)
            map[v] = VariableImage{false, v == 0 ? -1 : 1, v};
        ReductionStep step;
        step.id = 6;
        step.note = "replaced x1 by -x1 so the unit equation reads x1 = 1";
        red.map_step(std::move(step), map, red.current.variables, false);
    }

    check_postconditions(red.current, red.solution);

    Reduction out;
    out.system = std::move(red.current);
    out.trace = std::move(red.trace);
    out.solution = std::move(red.solution);
    return out;
}

TyszkaSystem replay(const TyszkaSystem& original, const ReductionTrace& trace)
{
    TyszkaSystem cur = original;
    std::size_t cancelled = 0;
    for (const auto& step : trace.steps) {
        switch (step.id) {
        case 1: {
            const TyszkaEquation rep = cur.equations.at(step.unit_representative.value());
            for (auto i : step.converted_equations)
                cur.equations.at(i) = unit_to_link(rep, cur.equations.at(i));
            break;
        }
        case 5:
            cur = normalized(cur, cancelled);
            break;
        default:
            cur = select(apply_map(cur, step.variable_map, step.variables_after), step.kept_equations);
            break;
        }
    }
    return normalized(cur, cancelled);
}

ChainDecomposition chain_decompose(const TyszkaSystem& reduced)
{
    ChainDecomposition out;
    const long k = reduced.k;

    struct Link {
        std::size_t equation, from, to;
        int sign;
    };
    std::vector<Link> links;
    bool unit_seen = false;
    for (std::size_t i = 0; i < reduced.equations.size(); ++i) {
        const auto& e = reduced.equations[i];
        if (e.is_unit()) {
            if (unit_seen)
                throw InputError("chain decomposition expects a single unit equation");
            unit_seen = true;
            out.unit_equation = i;
            out.unit_variable = e.unit_variable;
            continue;
        }
        const auto c = e.combined();
        if (c.size() == 2) {
            const auto [va, ca] = *c.begin();
            const auto [vb, cb] = *std::next(c.begin());
            const long aa = ca < 0 ? -ca : ca;
            const long ab = cb < 0 ? -cb : cb;
            // ca x_a + cb x_b = 0 with |c| = {1, k}: k x_to = sign x_from
            if (aa == 1 && ab == k) {
                links.push_back({i, va, vb, (ca > 0) == (cb > 0) ? -1 : 1});
                continue;
            }
            if (aa == k && ab == 1) {
                links.push_back({i, vb, va, (ca > 0) == (cb > 0) ? -1 : 1});
                continue;
            }
        }
        out.type3_equations.push_back(i);
    }
    if (!unit_seen)
        throw InputError("chain decomposition expects a unit equation");

    std::map<std::size_t, std::size_t> by_from, by_to;
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (!by_from.emplace(links[i].from, i).second)
            throw CertificationFailure("chains intersect: x" + std::to_string(links[i].from + 1) +
                                       " has coefficient 1 in two chain equations");
        if (!by_to.emplace(links[i].to, i).second)
            throw CertificationFailure("chains intersect: x" + std::to_string(links[i].to + 1) +
                                       " carries coefficient k in two chain equations");
    }

    std::vector<bool> used(links.size(), false);
    std::vector<std::size_t> heads;
    for (const auto& l : links)
        if (!by_to.count(l.from))
            heads.push_back(l.from);
    std::sort(heads.begin(), heads.end());
    for (auto head : heads) {
        Chain chain;
        chain.variables.push_back(head);
        for (auto it = by_from.find(head); it != by_from.end(); it = by_from.find(chain.variables.back())) {
            const Link& l = links[it->second];
            used[it->second] = true;
            chain.variables.push_back(l.to);
            chain.signs.push_back(l.sign);
            chain.equations.push_back(l.equation);
        }
        out.chains.push_back(std::move(chain));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw CertificationFailure("chain equations form a cycle");

    if (out.chains.size() > 0 && out.type3_equations.size() + 1 < out.chains.size())
        throw CertificationFailure("fewer than r-1 type-3 equations for r chains");

    std::vector<bool> placed(reduced.variables, false);
    for (const auto& chain : out.chains)
        for (auto it = chain.variables.rbegin(); it != chain.variables.rend(); ++it) {
            out.column_order.push_back(*it);
            placed[*it] = true;
        }
    for (std::size_t v = 0; v < reduced.variables; ++v)
        if (!placed[v])
            out.column_order.push_back(v);
    return out;
}

AssembledSystem assemble(const TyszkaSystem& reduced, const ChainDecomposition& cd)
{
    const std::size_t n = reduced.variables;
    if (reduced.equations.size() != n)
        throw InputError("assembly needs a square reduced system");
    std::vector<std::size_t> position(n);
    for (std::size_t c = 0; c < n; ++c)
        position[cd.column_order[c]] = c;

    std::vector<IntegerVector> rows;
    BlockLayout layout;
    layout.unit_row = 0;

    IntegerVector unit_row(n);
    unit_row[position[cd.unit_variable]] = reduced.equations[cd.unit_equation].unit_sign;
    rows.push_back(std::move(unit_row));

    auto row_of = [&](std::size_t equation, bool k_positive) {
        IntegerVector row(n);
        const auto c = reduced.equations[equation].combined();
        long flip = 1;
        if (k_positive)
            for (const auto& [v, coef] : c)
                if ((coef < 0 ? -coef : coef) == reduced.k && coef < 0)
                    flip = -1;
        for (const auto& [v, coef] : c)
            row[position[v]] = flip * coef;
        return row;
    };

    for (const auto& chain : cd.chains) {
        ChainBlockLayout block;
        const std::size_t t = chain.equations.size();
        for (std::size_t p = 0; p <= t; ++p)
            block.columns.push_back(position[chain.variables[t - p]]);
        for (std::size_t p = 0; p < t; ++p) {
            block.rows.push_back(rows.size());
            rows.push_back(row_of(chain.equations[t - 1 - p], true));
        }
        layout.chains.push_back(std::move(block));
    }
    for (auto e : cd.type3_equations) {
        layout.type3_rows.push_back(rows.size());
        rows.push_back(row_of(e, false));
    }
    if (rows.size() != n)
        throw CertificationFailure("assembled matrix is not square");
    return AssembledSystem{IntegerMatrix::from_rows(rows), std::move(layout), cd.column_order};
}

TyszkaSolution solve_and_certify(const TyszkaSystem& system, unsigned jobs)
{
    TyszkaSolution out;
    out.reduction = reduce(system);
    const long k = system.k;

    if (out.reduction.zero_solution) {
        out.solution = RationalVector(system.variables);
        out.reduced_rank = 0;
        out.bound = 1;
        out.max_abs = 0;
        return out;
    }

    const TyszkaSystem& reduced = out.reduction.system;
    out.chains = chain_decompose(reduced);
    out.assembled = assemble(reduced, *out.chains);
    const IntegerMatrix& a = out.assembled->matrix;
    const std::size_t n = a.rows();

    RationalVector e1(n);
    e1[0] = 1;
    const RationalVector by_cramer = cramer_solve(a, e1);
    if (by_cramer != elimination_solve(a, e1))
        throw CertificationFailure("Cramer and elimination solutions differ");

    RationalVector y(n);
    for (std::size_t c = 0; c < n; ++c)
        y[out.assembled->column_order[c]] = by_cramer[c];
    if (y != out.reduction.solution)
        throw CertificationFailure("assembled solution differs from the reduction's solution");

    out.report = certify_solution_bound(a, k, out.assembled->layout, jobs);
    if (!out.report->passed())
        throw CertificationFailure("determinant certification failed:\n" + format_bound_report(*out.report));

    out.solution = out.reduction.trace.reconstruct(y);
    if (multiply(system.coefficient_matrix(), out.solution) != to_rational(system.rhs()))
        throw CertificationFailure("reconstructed solution does not satisfy the original system");

    out.reduced_rank = n;
    if (n > out.reduction.trace.original_rank)
        throw CertificationFailure("reduction increased the rank");
    out.bound = ipow(BigInt(k), n - 1);
    out.max_abs = 0;
    for (const auto& v : out.solution)
        out.max_abs = std::max(out.max_abs, BigRational(abs(v)));
    BigRational reduced_max = 0;
    for (const auto& v : y)
        reduced_max = std::max(reduced_max, BigRational(abs(v)));
    if (reduced_max != out.max_abs)
        throw CertificationFailure("reconstruction changed max |x|");
    if (out.max_abs > BigRational(out.bound))
        throw CertificationFailure("max |x| = " + to_string(out.max_abs) + " exceeds k^(n-1) = " +
                                   out.bound.get_str());
    out.sharp = out.max_abs == BigRational(out.bound);
    return out;
}

std::string format_trace(const ReductionTrace& trace)
{
    std::ostringstream out;
    out << "original_rank=" << trace.original_rank << '\n';
    for (const auto& s : trace.steps) {
        out << "step " << s.id << ": " << s.note;
        if (!s.zeroed_variables.empty()) {
            out << " [";
            for (std::size_t i = 0; i < s.zeroed_variables.size(); ++i)
                out << (i ? "," : "") << 'x' << s.zeroed_variables[i] + 1;
            out << ']';
        }
        for (const auto& m : s.merges)
            out << " x" << m.eliminated + 1 << "->" << (m.sign < 0 ? "-" : "+") << 'x' << m.kept + 1;
        out << '\n';
    }
    out << "map:";
    for (std::size_t v = 0; v < trace.original_images.size(); ++v) {
        const auto& img = trace.original_images[v];
        out << " x" << v + 1 << "=";
        if (img.zero)
            out << '0';
        else
            out << (img.sign < 0 ? "-" : "") << 'y' << img.target + 1;
    }
    out << '\n';
    return out.str();
}

} // namespace relmag
