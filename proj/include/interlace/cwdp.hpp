#pragma once

#include <cstdint>
#include <map>

#include "interlace/kexpr.hpp"
#include "interlace/poly.hpp"

namespace interlace {

/// A DP table over a k-expression: label subsets (bit i-1 = label i) mapped
/// to the d-truncated polynomial of the configurations whose selected
/// vertices carry exactly those labels. Never more than 2^k entries.
using DpTable = std::map<std::uint32_t, MultiPoly>;

struct DpStats {
    std::size_t max_table_entries = 0;
};

/// Bottom-up table for the subexpression rooted at e (exposed for the
/// semantic soundness checks). Transfer rules:
///   const i      -> { {} -> 1, {i} -> x_a v }   (y_a v when looped)
///   add_{i,j}    -> drop every entry whose label set contains both i and j
///   ren_{i->j}   -> reindex label sets, summing collisions
///   union        -> table[L] = sum over L1 u L2 = L of trunc(left[L1] right[L2], d)
DpTable dp_bi_table(const KExpr& e, int k, int d, DpStats* stats = nullptr);

/// truncate(B_I(val(e)), d), computed without materializing the untruncated
/// polynomial: truncation is applied after every product, which is what keeps
/// the table polynomial for fixed k and d.
MultiPoly dp_bi_truncated(const KExpr& e, int k, int d, DpStats* stats = nullptr);

}  // namespace interlace
