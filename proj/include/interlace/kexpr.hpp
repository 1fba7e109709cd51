#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "interlace/graph.hpp"

namespace interlace {

/// Abstract syntax of a k-expression. Constants are labelled isolated
/// vertices (optionally looped); add_{i,j} joins every i-labelled vertex to
/// every j-labelled one; ren_{i->j} relabels; union is disjoint.
struct KExpr {
    enum class Kind { Const, Add, Ren, Union };

    Kind kind = Kind::Const;
    int label = 0;   // Const: the label; Add/Ren: i
    int label2 = 0;  // Add: j; Ren: target j
    bool looped = false;
    std::shared_ptr<const KExpr> child;  // Add/Ren child, Union left
    std::shared_ptr<const KExpr> right;  // Union right
};

using KExprPtr = std::shared_ptr<const KExpr>;

/// Grammar (whitespace insignificant, '#' comments to end of line):
///   expr  := const | 'add(' int ',' int ',' expr ')'
///          | 'ren(' int ',' int ',' expr ')' | '(' expr '+' expr ')'
///   const := int | int 'l'
/// Rejects label 0 and i = j in add nodes, with the offending position.
KExprPtr parse_kexpr(const std::string& src);

std::string format_kexpr(const KExpr& e);

/// Maximum label occurring anywhere in the expression (the width it uses,
/// not the clique-width of the value).
int used_width(const KExpr& e);

/// Number of constant occurrences (= vertex count of the value).
std::size_t constant_count(const KExpr& e);

struct LabelledGraph {
    Graph graph;
    std::map<VertexId, int> labels;
    /// Present under ordered evaluation: vertices by left-to-right constant
    /// occurrence (the order the directed union variant induces).
    std::optional<std::vector<VertexId>> order;
};

/// Evaluates the expression into its k-graph. Vertices are named "v1","v2",
/// ... by left-to-right constant occurrence. Throws std::invalid_argument if
/// a label exceeds k.
LabelledGraph eval_kexpr(const KExpr& e, int k, bool ordered = false);

}  // namespace interlace
