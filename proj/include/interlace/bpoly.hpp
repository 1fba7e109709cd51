#pragma once

#include "interlace/graph.hpp"
#include "interlace/poly.hpp"

namespace interlace {

/// The multivariate interlace polynomial
///   B(G) = sum over disjoint A,B of x_A y_B u^rk(GnabB[AuB]) v^n(GnabB[AuB])
/// computed from the static definition by enumerating all 3^|V| configuration
/// pairs. brute_force_B partitions the configuration space across OpenMP
/// threads with a commutative merge; brute_force_B_serial is the reference
/// enumeration (A ascending in binary order, then B over the complement) kept
/// for testing. Both produce identical polynomials.
MultiPoly brute_force_B(const Graph& g);
MultiPoly brute_force_B_serial(const Graph& g);

/// The monomial m(G,A,B) for one configuration.
MultiPoly configuration_monomial(const Graph& g, const VertexSet& a, const VertexSet& b);

/// B(G) by the reduction rules:
///   B(empty) = 1
///   B(G) = (1 + z_a v + w_a u) B(G-a)                      if a isolated
///   B(G) = z_b u^2 { z_a B(G^ab-a-b) + w_a B((G^a)^b-a-b) }
///        + w_b u { B(G^b-b) - B(G^b-a-b) }
///        + B(G-a) + B(G-b) - B(G-a-b)                      if b in N(G,a)
/// with metavariables z_c = x_c, w_c = y_c for unlooped c and swapped for
/// looped c, resolved against the current graph of each call. Pivot vertex
/// a = name-least vertex with a neighbour, b = its name-least neighbour;
/// results are memoized on the exact labelled graph.
MultiPoly recursive_B(const Graph& g);

/// Same recursion, but the top-level step applies the adjacent-pair rule at
/// the given pair (which must satisfy b in N(G,a)); used to verify that the
/// result does not depend on the pair choice.
MultiPoly recursive_B_with_pair(const Graph& g, const VertexId& a, const VertexId& b);

/// Partial sum B_ij: configurations where place i holds a and place j holds b
/// (0 = outside A and B, 1 = in A, 2 = in B).
MultiPoly intermediate_Bij(const Graph& g, const VertexId& a, const VertexId& b, int i, int j);

/// B1 = B with v := 1.
MultiPoly specialize_B1(const MultiPoly& b);

/// theta, the inverse of the v := 1 specialization: multiplies each monomial
/// by v^(quasi-degree - u-exponent), using rank + corank = |A u B|. Rejects
/// monomials whose u-exponent exceeds the quasi-degree.
MultiPoly theta_expand(const MultiPoly& b1);

enum class By0Method { Substitution, RecursionProp16, RecursionCor18 };
MultiPoly b_y0(const Graph& g, By0Method m);

enum class BxyMethod { Substitution, Recursion };
MultiPoly b_xy(const Graph& g, BxyMethod m);

enum class QMethod { Substitution, RecursionQ123, RecursionQ3Prime };
MultiPoly q_poly(const Graph& g, QMethod m);

/// Q(G, v'). The recursive method implements the loop-free rules
/// (Q1)-(Q3) and throws on a looped graph; the substitution method accepts
/// any graph.
enum class BigQMethod { Substitution, Recursion };
MultiPoly big_q_poly(const Graph& g, BigQMethod m);

/// Multivariate independence polynomial B_I(G): one monomial
/// x_(S-Loops) y_(S&Loops) v^|S| per stable set S. Direct enumerates stable
/// sets; Substitution takes u := 0 in B(G); the recursion variants use rules
/// (I1)-(I4) respectively (I1),(I5),(I6).
enum class BIMethod { Substitution, Direct, RecursionI14, RecursionI56 };
MultiPoly b_independence(const Graph& g, BIMethod m);

/// One application of rule (I7) at the unlooped edge a-b:
///   B_I(G) = B_I(G-e) - x_a x_b v^2 B_I(G - N(G,a) - N(G,b)),
/// recursing with (I1)-(I4) below. Throws if a-b is not such an edge.
MultiPoly b_independence_via_I7(const Graph& g, const VertexId& a, const VertexId& b);

/// Classical I(G,v) = sum_k s_k v^k (s_k = number of stable sets of size k).
MultiPoly independence_classical(const Graph& g);

/// The named specializing substitutions of the polynomial family.
Substitution subst_sigma0();                  // y_a := 0
Substitution subst_sigma_eq();                // y_a := x_a
Substitution subst_q();                       // u := u'-1, v := v'-1, x_a := 1, y_a := 0
Substitution subst_big_q();                   // u := 1, v := v'-2, x_a := y_a := 1
Substitution subst_rho();                     // v := 1, y_a := 0
Substitution subst_rho_xy();                  // v := 1 (for B_xy reconstruction)
Substitution subst_eta();                     // u := 0, x_a := 1
Substitution subst_eta_prime();               // u := 0
Substitution subst_v1();                      // v := 1
Substitution subst_mu(const VertexSet& t);    // swap x_a <-> y_a for a in t
Substitution subst_ones();                    // x_a := 1, y_a := 1

/// Rebuilds G from rho(B(G)) (rho = [v:=1, y_a:=0]) using the rank decision
/// table on singleton and pair monomials; monomials of quasi-degree > 2 are
/// ignored. Throws if the input is not consistent with any graph.
Graph reconstruct_graph(const MultiPoly& rho_b);

/// Rebuilds a loop-free G from rho(B_xy(G)) via the pair monomial signatures
/// (x_a x_b u and 3 x_a x_b u^2 for an edge; x_a x_b, 2 x_a x_b u and
/// x_a x_b u^2 for a non-edge).
Graph reconstruct_loopfree(const MultiPoly& rho_bxy);

}  // namespace interlace
