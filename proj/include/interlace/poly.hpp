#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace interlace {

using BigInt = boost::multiprecision::cpp_int;

enum class VarKind { Ordinary, VertexIndexed };

/// An indeterminate: either an ordinary one ("u", "v'", ...) or one indexed by
/// a vertex name ("x_a"). Ordered ordinary-first, then by tag, then by vertex.
struct Indeterminate {
    VarKind kind = VarKind::Ordinary;
    std::string tag;
    std::string vertex;  // empty iff ordinary

    static Indeterminate ordinary(std::string tag) {
        return {VarKind::Ordinary, std::move(tag), {}};
    }
    static Indeterminate indexed(std::string tag, std::string vertex) {
        return {VarKind::VertexIndexed, std::move(tag), std::move(vertex)};
    }

    /// Text form: "u" for ordinary, "x_a" for vertex-indexed.
    std::string text() const;

    auto operator<=>(const Indeterminate&) const = default;
};

/// Indeterminates are interned process-wide so monomial keys compare as
/// integers. Interning is thread-safe; ids are stable for the process
/// lifetime and carry no semantic meaning.
using VarId = std::uint32_t;
VarId intern(const Indeterminate& v);
const Indeterminate& var_info(VarId id);

/// A power product: (variable, exponent) pairs sorted by id, exponents > 0.
using PowerProduct = std::vector<std::pair<VarId, int>>;

/// Total exponent of the vertex-indexed indeterminates.
int quasi_degree(const PowerProduct& pp);

struct Monomial {
    BigInt coeff;
    PowerProduct powers;
};

int quasi_degree(const Monomial& m);

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in a canonical map (no zero coefficients, no zero exponents), so
/// structural equality is polynomial equality.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long v) { *this = constant(BigInt(v)); }  // implicit: 0, 1 literals

    static MultiPoly constant(BigInt c);
    static MultiPoly variable(const Indeterminate& v, int exp = 1);
    static MultiPoly monomial(BigInt coeff, const std::vector<std::pair<Indeterminate, int>>& ps);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<PowerProduct, BigInt>& terms() const { return terms_; }

    /// Coefficient of an exact power product (0 if absent).
    BigInt coefficient(const std::vector<std::pair<Indeterminate, int>>& ps) const;

    /// Indeterminates occurring in the polynomial, in canonical order.
    std::set<Indeterminate> indeterminates() const;

    void add_term(const PowerProduct& pp, const BigInt& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    MultiPoly pow(int e) const;

    bool operator==(const MultiPoly&) const = default;

private:
    std::map<PowerProduct, BigInt> terms_;
};

/// A specializing substitution: exact rules for single indeterminates plus
/// family rules that apply uniformly to every x_a of a given tag (optionally
/// restricted to a vertex set). In a family replacement template, kSelf names
/// the vertex being substituted, e.g. x_@ := v * y_@.
class Substitution {
public:
    static const std::string kSelf;

    Substitution& set(const Indeterminate& v, MultiPoly replacement);
    Substitution& set_family(const std::string& tag, MultiPoly replacement_template);
    Substitution& set_family(const std::string& tag, MultiPoly replacement_template,
                             std::set<std::string> vertices);

    /// Replacement for v, if any rule matches (family template instantiated).
    std::optional<MultiPoly> rule_for(const Indeterminate& v) const;

private:
    struct FamilyRule {
        MultiPoly tmpl;
        std::optional<std::set<std::string>> vertices;
    };
    std::map<Indeterminate, MultiPoly> exact_;
    std::map<std::string, FamilyRule> families_;
};

/// Homomorphic image: every matched indeterminate replaced per rule,
/// unmentioned indeterminates unchanged.
MultiPoly substitute(const MultiPoly& p, const Substitution& s);

/// Monomials of quasi-degree at most d.
MultiPoly truncate(const MultiPoly& p, int d);

/// Product with truncation at d applied while multiplying (pairs whose
/// quasi-degrees already exceed d are skipped); equals truncate(p*q, d).
MultiPoly mul_truncated(const MultiPoly& p, const MultiPoly& q, int d);

/// Every indeterminate x (of any kind) replaced by x-1 / x+1.
MultiPoly shift_minus(const MultiPoly& p);
MultiPoly shift_plus(const MultiPoly& p);

/// True iff every stored coefficient is positive (vacuously true for 0).
bool is_positive(const MultiPoly& p);

/// Deterministic canonical rendering: terms sorted by ascending quasi-degree,
/// ties by the lexicographic canonical monomial string; within a monomial,
/// vertex-indexed factors come first. parse_poly(canonical_text(p)) == p.
std::string canonical_text(const MultiPoly& p);

/// Canonical string of a monomial's power product ("" for the constant term).
std::string monomial_text(const PowerProduct& pp);

/// Parses the polynomial text grammar:
///   poly := term (' + ' term | ' - ' term)* ; term := integer ('*' factor)* | factor ('*' factor)*
///   factor := name ('^' integer)? ; name := tag | tag '_' vertexname
MultiPoly parse_poly(const std::string& text);

}  // namespace interlace
