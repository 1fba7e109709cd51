#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

using Element = std::string;
using ElementSet = std::set<Element>;

/// An ordered matroid given by its ground sequence (the order of which is the
/// activity order) and its basis family, either explicit or derived as the
/// cycle matroid of a graph. Validated on construction: bases nonempty and
/// equicardinal, and the exchange axiom holds.
class Matroid {
public:
    static Matroid from_bases(std::vector<Element> ground, std::vector<ElementSet> bases);

    /// Cycle matroid: elements are the given edges in order, named "1".."m";
    /// bases are the maximal spanning forests.
    static Matroid graphic(const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& edges);

    const std::vector<Element>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    std::size_t rank() const { return basis_size_; }
    std::vector<ElementSet> bases() const;
    bool is_basis(const ElementSet& b) const;

    /// Rank of a subset: size of a maximal independent subset of it.
    std::size_t rank_subset(const ElementSet& a) const;
    std::size_t nullity_subset(const ElementSet& a) const;

    /// {e} plus every f in the basis whose exchange (b-f)+e is again a basis
    /// (the unique cycle inside b+e). Requires e outside the basis.
    ElementSet fundamental_cycle(const ElementSet& basis, const Element& e) const;

    /// {x} plus every e outside the basis with (b-x)+e a basis. Requires x in
    /// the basis.
    ElementSet fundamental_cocycle(const ElementSet& basis, const Element& x) const;

    struct Activities {
        ElementSet internal;  // basis elements least in their fundamental cocycle
        ElementSet external;  // non-basis elements least in their fundamental cycle
    };
    Activities activities(const ElementSet& basis) const;

    /// The unique basis whose activity interval [B-IA(B), B+EA(B)] contains a,
    /// with C = B-a and D = a-B. Throws a matroid-integrity error if the
    /// intervals fail to partition around a.
    struct Decomposition {
        ElementSet basis, c, d;
    };
    Decomposition activity_interval_decompose(const ElementSet& a) const;

private:
    Matroid() = default;
    std::uint32_t to_mask(const ElementSet& s) const;
    ElementSet to_set(std::uint32_t mask) const;
    std::size_t element_index(const Element& e) const;
    void validate() const;
    void cache_activities();
    std::size_t basis_index(std::uint32_t mask) const;

    std::vector<Element> ground_;
    std::vector<std::uint32_t> bases_;  // sorted; bit i = ground_[i]
    std::size_t basis_size_ = 0;
    std::vector<std::uint32_t> internal_active_;  // per basis, same indexing
    std::vector<std::uint32_t> external_active_;
};

/// R(M) = sum over subsets A of x^(r(M)-r(A)) y^(n(A)).
MultiPoly rank_polynomial(const Matroid& m);

/// T(M): either R(M) with both variables shifted by -1, or the basis-activity
/// sum x^|IA(B)| y^|EA(B)|. The two agree and the result is positive.
enum class TutteMethod { RankShift, Activities };
MultiPoly tutte_polynomial(const Matroid& m, TutteMethod method);

/// Ttilde(M) = sum over bases of x_IA(B) y_EA(B) (one monomial per basis).
MultiPoly multivariate_tutte(const Matroid& m);

/// Rtilde(M) = sum over bases of Enum_x(Sub(IA(B))) Enum_y(Sub(EA(B))).
MultiPoly multivariate_rank_tilde(const Matroid& m);

/// Rhat(M) = sum over subsets A of x_C y_D, with Z the greedy (ground-order)
/// maximal independent subset of A, C the greedy completion of Z to a basis
/// inside E-A, and D = A-Z.
MultiPoly rhat_polynomial(const Matroid& m);

/// Collapses every x_e to x and y_e to y.
Substitution subst_collapse_xy();

/// A family of subsets of a fixed universe (duplicates collapse).
struct SetFamily {
    std::vector<Element> universe;
    std::set<ElementSet> members;
};

/// Enum(S) = sum over members A of x_A.
MultiPoly enum_poly(const SetFamily& s);

/// The set B with S = Sub(B), if S is the full downset of a single set
/// (equivalently, iff shift_minus(enum_poly(s)) equals x_B); absent otherwise.
std::optional<ElementSet> check_sub_form(const SetFamily& s);

/// Matroid text format:
///   groundset: 1 2 3
///   bases: {1 2} {1 3} {2 3}
/// or
///   groundset-from-graph: <path>   # elements = edges, file order
/// The groundset line order defines the activity order. load_file resolves
/// the graph path for the second form.
Matroid parse_matroid(const std::string& text,
                      const std::function<std::string(const std::string&)>& load_file);

}  // namespace interlace
