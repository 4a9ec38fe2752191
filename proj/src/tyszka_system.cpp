#include <relmag/tyszka_system.hpp>

#include <relmag/errors.hpp>

#include <cctype>
#include <limits>
#include <optional>

namespace relmag {

TyszkaEquation TyszkaEquation::unit(std::size_t variable, int sign)
{
    TyszkaEquation e;
    e.kind = EquationKind::unit;
    e.unit_variable = variable;
    e.unit_sign = sign;
    return e;
}

TyszkaEquation TyszkaEquation::homogeneous(std::vector<Term> terms)
{
    TyszkaEquation e;
    e.kind = EquationKind::homogeneous;
    e.terms = std::move(terms);
    return e;
}

long TyszkaEquation::coefficient_sum() const
{
    long s = 0;
    for (const auto& t : terms)
        s += t.coefficient;
    return s;
}

std::map<std::size_t, long> TyszkaEquation::combined() const
{
    std::map<std::size_t, long> out;
    for (const auto& t : terms)
        out[t.variable] += t.sign * t.coefficient;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool equivalent(const TyszkaEquation& a, const TyszkaEquation& b)
{
    if (a.kind != b.kind)
        return false;
    if (a.is_unit())
        return a.unit_variable == b.unit_variable && a.unit_sign == b.unit_sign;
    return a.combined() == b.combined();
}

bool equivalent(const TyszkaSystem& a, const TyszkaSystem& b)
{
    if (a.k != b.k || a.variables != b.variables || a.equations.size() != b.equations.size())
        return false;
    for (std::size_t i = 0; i < a.equations.size(); ++i)
        if (!equivalent(a.equations[i], b.equations[i]))
            return false;
    return true;
}

void TyszkaSystem::validate() const
{
    if (k < 2)
        throw InputError("k must be at least 2, got " + std::to_string(k));
    if (variables == 0)
        throw InputError("system has no variables");
    if (equations.empty())
        throw InputError("system has no equations");
    for (const auto& e : equations) {
        if (e.is_unit()) {
            if (e.unit_variable >= variables)
                throw InputError("variable x" + std::to_string(e.unit_variable + 1) + " out of range");
            if (e.unit_sign != 1 && e.unit_sign != -1)
                throw InputError("unit equation must be x = 1 or x = -1");
            continue;
        }
        if (e.terms.empty())
            throw InputError("homogeneous equation without terms");
        for (const auto& t : e.terms) {
            if (t.variable >= variables)
                throw InputError("variable x" + std::to_string(t.variable + 1) + " out of range");
            if (t.coefficient < 1 || (t.sign != 1 && t.sign != -1))
                throw InputError("terms carry a positive coefficient and a sign");
        }
        if (e.coefficient_sum() > k + 1)
            throw InputError("equation " + format_equation(e) + " has " + std::to_string(e.coefficient_sum()) +
                             " unit terms; at most k+1 = " + std::to_string(k + 1) + " allowed");
    }
}

IntegerMatrix TyszkaSystem::coefficient_matrix() const
{
    std::vector<BigInt> entries(equations.size() * variables);
    for (std::size_t r = 0; r < equations.size(); ++r) {
        const auto& e = equations[r];
        if (e.is_unit()) {
            entries[r * variables + e.unit_variable] = 1;
            continue;
        }
        for (const auto& t : e.terms)
            entries[r * variables + t.variable] += t.sign * t.coefficient;
    }
    return IntegerMatrix(equations.size(), variables, std::move(entries));
}

IntegerVector TyszkaSystem::rhs() const
{
    IntegerVector b;
    b.reserve(equations.size());
    for (const auto& e : equations)
        b.emplace_back(e.is_unit() ? e.unit_sign : 0);
    return b;
}

namespace {

struct Token {
    enum Kind { var, number, plus, minus, equals, end } kind;
    unsigned long value = 0; // variable index or number
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Statement {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
};

unsigned long read_number(const std::string& s, std::size_t& i, std::size_t line, std::size_t column)
{
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        const unsigned long digit = static_cast<unsigned long>(s[i] - '0');
        if (v > (std::numeric_limits<unsigned long>::max() - digit) / 10)
            throw ParseError("number too large", line, column);
        v = v * 10 + digit;
        ++i;
    }
    return v;
}

// Splits the text into statements. The optional "k=<int>" header is consumed
// here and must be the first statement.
std::vector<Statement> lex(const std::string& text, std::optional<long>& header, std::size_t& header_line)
{
    std::vector<Statement> out;
    Statement current;
    std::size_t line = 1;
    std::size_t line_start = 0;
    bool seen_statement = false;

    auto column_of = [&](std::size_t pos) { return pos - line_start + 1; };
    auto skip_blanks = [&](std::size_t j) {
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r'))
            ++j;
        return j;
    };
    auto finish = [&] {
        if (!current.tokens.empty()) {
            out.push_back(std::move(current));
            seen_statement = true;
        }
        current = Statement{};
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t col = column_of(i);
        if (c == '\n' || c == ';') {
            finish();
            ++i;
            if (c == '\n') {
                ++line;
                line_start = i;
            }
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (current.tokens.empty()) {
            current.line = line;
            current.column = col;
        }
        if (c == 'k' || c == 'K') {
            if (!current.tokens.empty() || seen_statement || header)
                throw ParseError("the k=<int> header must be the first statement", line, col);
            std::size_t j = skip_blanks(i + 1);
            if (j >= text.size() || text[j] != '=')
                throw ParseError("expected '=' after k", line, column_of(j));
            j = skip_blanks(j + 1);
            bool negative = false;
            if (j < text.size() && (text[j] == '-' || text[j] == '+')) {
                negative = text[j] == '-';
                ++j;
            }
            if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
                throw ParseError("expected an integer value for k", line, column_of(j));
            const unsigned long v = read_number(text, j, line, column_of(j));
            if (v > 1000000)
                throw ParseError("k too large", line, col);
            header = negative ? -static_cast<long>(v) : static_cast<long>(v);
            header_line = line;
            j = skip_blanks(j);
            if (j < text.size() && text[j] != ';' && text[j] != '\n' && text[j] != '#')
                throw ParseError("unexpected text after k header", line, column_of(j));
            i = j;
            seen_statement = true;
            continue;
        }
        Token t{Token::end, 0, line, col};
        if (c == '+') {
            t.kind = Token::plus;
            ++i;
        } else if (c == '-') {
            t.kind = Token::minus;
            ++i;
        } else if (c == '=') {
            t.kind = Token::equals;
            ++i;
        } else if (c == 'x' || c == 'X') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected a variable index after 'x'", line, col);
            t.kind = Token::var;
            t.value = read_number(text, i, line, col);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::number;
            t.value = read_number(text, i, line, col);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        current.tokens.push_back(t);
    }
    finish();
    return out;
}

constexpr unsigned long kMaxVariableIndex = 4096;

struct SignedSum {
    std::vector<Term> terms;
    long constant = 0;
    bool has_constant = false;
};

// <sum> := [sign] atom { sign atom } ; atom := [number] xI | number
SignedSum parse_sum(const std::vector<Token>& toks, std::size_t& i, std::size_t end)
{
    SignedSum out;
    bool first = true;
    if (i == end)
        throw ParseError("expected a term", toks[i < toks.size() ? i : toks.size() - 1].line,
                         toks[i < toks.size() ? i : toks.size() - 1].column);
    while (i < end) {
        int sign = 1;
        const Token& lead = toks[i];
        if (lead.kind == Token::plus || lead.kind == Token::minus) {
            sign = lead.kind == Token::minus ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lead.line, lead.column);
        }
        if (i == end)
            throw ParseError("expected a term after sign", lead.line, lead.column);
        const Token& a = toks[i];
        if (a.kind == Token::number) {
            ++i;
            if (i < end && toks[i].kind == Token::var) {
                if (a.value == 0 || a.value > 1000000)
                    throw ParseError("coefficient out of range", a.line, a.column);
                const Token& v = toks[i++];
                if (v.value == 0 || v.value > kMaxVariableIndex)
                    throw ParseError("variable index out of range (x1 .. x4096)", v.line, v.column);
                out.terms.push_back(Term{static_cast<long>(a.value), sign, v.value - 1});
            } else {
                if (out.has_constant || a.value > 1000000)
                    throw ParseError("unsupported constant term", a.line, a.column);
                out.has_constant = true;
                out.constant = sign * static_cast<long>(a.value);
            }
        } else if (a.kind == Token::var) {
            if (a.value == 0 || a.value > kMaxVariableIndex)
                throw ParseError("variable index out of range (x1 .. x4096)", a.line, a.column);
            out.terms.push_back(Term{1, sign, a.value - 1});
            ++i;
        } else {
            throw ParseError("expected a term", a.line, a.column);
        }
        first = false;
    }
    return out;
}

std::vector<Term> expand_unit_terms(const std::vector<Term>& terms, int flip)
{
    std::vector<Term> out;
    for (const auto& t : terms)
        for (long c = 0; c < t.coefficient; ++c)
            out.push_back(Term{1, t.sign * flip, t.variable});
    return out;
}

} // namespace

TyszkaSystem parse_system(const std::string& text)
{
    std::optional<long> header;
    std::size_t header_line = 0;
    const auto statements = lex(text, header, header_line);

    TyszkaSystem system;
    system.k = header.value_or(2);
    if (system.k < 2)
        throw ParseError("k must be at least 2", header_line, 1);

    for (const auto& st : statements) {
        const auto& toks = st.tokens;
        std::size_t eq = toks.size();
        for (std::size_t j = 0; j < toks.size(); ++j)
            if (toks[j].kind == Token::equals) {
                if (eq != toks.size())
                    throw ParseError("more than one '='", toks[j].line, toks[j].column);
                eq = j;
            }
        if (eq == toks.size())
            throw ParseError("expected '='", st.line, st.column);
        if (eq == 0)
            throw ParseError("missing left-hand side", toks[0].line, toks[0].column);
        if (eq + 1 == toks.size())
            throw ParseError("missing right-hand side", toks[eq].line, toks[eq].column);

        std::size_t i = 0;
        SignedSum lhs = parse_sum(toks, i, eq);
        i = eq + 1;
        SignedSum rhs = parse_sum(toks, i, toks.size());
        if (lhs.has_constant)
            throw ParseError("constants belong on the right-hand side", st.line, st.column);

        if (rhs.has_constant && rhs.constant != 0) {
            if (!rhs.terms.empty() || lhs.terms.size() != 1 || lhs.terms[0].coefficient != 1 ||
                (rhs.constant != 1 && rhs.constant != -1))
                throw ParseError("only equations of the form xI = 1 or xI = -1 may have a constant",
                                 st.line, st.column);
            const Term& t = lhs.terms[0];
            system.equations.push_back(TyszkaEquation::unit(t.variable, t.sign * static_cast<int>(rhs.constant)));
            continue;
        }
        long unit_terms = 0;
        for (const auto* side : {&lhs, &rhs})
            for (const auto& t : side->terms)
                unit_terms += t.coefficient;
        if (unit_terms > system.k + 1)
            throw ParseError("equation has " + std::to_string(unit_terms) + " unit terms; at most k+1 = " +
                                 std::to_string(system.k + 1) + " allowed",
                             st.line, st.column);
        auto terms = expand_unit_terms(lhs.terms, 1);
        auto moved = expand_unit_terms(rhs.terms, -1);
        terms.insert(terms.end(), moved.begin(), moved.end());
        if (terms.empty())
            throw ParseError("equation has no variables", st.line, st.column);
        system.equations.push_back(TyszkaEquation::homogeneous(std::move(terms)));
    }

    if (system.equations.empty())
        throw ParseError("no equations", 1, 1);
    for (const auto& e : system.equations) {
        if (e.is_unit())
            system.variables = std::max(system.variables, e.unit_variable + 1);
        for (const auto& t : e.terms)
            system.variables = std::max(system.variables, t.variable + 1);
    }
    system.validate();
    return system;
}

std::string format_equation(const TyszkaEquation& e)
{
    if (e.is_unit())
        return "x" + std::to_string(e.unit_variable + 1) + "=" + (e.unit_sign < 0 ? "-1" : "1");
    std::string out;
    bool first = true;
    for (const auto& t : e.terms)
        for (long c = 0; c < t.coefficient; ++c) {
            if (t.sign < 0)
                out += '-';
            else if (!first)
                out += '+';
            out += "x" + std::to_string(t.variable + 1);
            first = false;
        }
    return out + "=0";
}

std::string format_system(const TyszkaSystem& system)
{
    std::string out = "k=" + std::to_string(system.k) + "\n";
    for (const auto& e : system.equations)
        out += format_equation(e) + "\n";
    return out;
}

} // namespace relmag
