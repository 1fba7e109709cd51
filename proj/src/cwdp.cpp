#include "interlace/cwdp.hpp"

#include <stdexcept>

namespace interlace {

namespace {

struct DpContext {
    int k;
    int d;
    std::size_t next_vertex = 1;
    DpStats* stats;

    void record(const DpTable& t) {
        if (stats && t.size() > stats->max_table_entries) stats->max_table_entries = t.size();
    }
};

void check_label(int label, int k) {
    if (label > k)
        throw std::invalid_argument("dp_bi_truncated: label " + std::to_string(label) +
                                    " exceeds width " + std::to_string(k));
}

DpTable dp_rec(const KExpr& e, DpContext& cx) {
    switch (e.kind) {
        case KExpr::Kind::Const: {
            check_label(e.label, cx.k);
            VertexId name = "v" + std::to_string(cx.next_vertex++);
            DpTable t;
            t[0] = 1;
            if (cx.d >= 1) {
                Indeterminate var = e.looped ? Indeterminate::indexed("y", name)
                                             : Indeterminate::indexed("x", name);
                t[std::uint32_t{1} << (e.label - 1)] = MultiPoly::monomial(
                    1, {{var, 1}, {Indeterminate::ordinary("v"), 1}});
            }
            cx.record(t);
            return t;
        }
        case KExpr::Kind::Add: {
            check_label(e.label, cx.k);
            check_label(e.label2, cx.k);
            DpTable t = dp_rec(*e.child, cx);
            // Configurations holding both an i- and a j-labelled vertex gain
            // an internal edge and stop being stable.
            std::uint32_t both = (std::uint32_t{1} << (e.label - 1)) |
                                 (std::uint32_t{1} << (e.label2 - 1));
            for (auto it = t.begin(); it != t.end();) {
                if ((it->first & both) == both)
                    it = t.erase(it);
                else
                    ++it;
            }
            cx.record(t);
            return t;
        }
        case KExpr::Kind::Ren: {
            check_label(e.label, cx.k);
            check_label(e.label2, cx.k);
            DpTable t = dp_rec(*e.child, cx);
            std::uint32_t from = std::uint32_t{1} << (e.label - 1);
            std::uint32_t to = std::uint32_t{1} << (e.label2 - 1);
            DpTable out;
            for (auto& [mask, poly] : t) {
                std::uint32_t m = (mask & from) ? ((mask & ~from) | to) : mask;
                out.try_emplace(m).first->second += poly;
            }
            cx.record(out);
            return out;
        }
        case KExpr::Kind::Union: {
            DpTable left = dp_rec(*e.child, cx);
            DpTable right = dp_rec(*e.right, cx);
            DpTable out;
            for (const auto& [ml, pl] : left) {
                for (const auto& [mr, pr] : right) {
                    MultiPoly prod = mul_truncated(pl, pr, cx.d);
                    if (prod.is_zero()) continue;
                    out.try_emplace(ml | mr).first->second += prod;
                }
            }
            cx.record(out);
            return out;
        }
    }
    throw std::logic_error("dp_bi_table: unreachable");
}

}  // namespace

DpTable dp_bi_table(const KExpr& e, int k, int d, DpStats* stats) {
    if (d < 0) throw std::invalid_argument("dp_bi_table: negative truncation degree");
    DpContext cx{k, d, 1, stats};
    return dp_rec(e, cx);
}

MultiPoly dp_bi_truncated(const KExpr& e, int k, int d, DpStats* stats) {
    DpTable t = dp_bi_table(e, k, d, stats);
    MultiPoly out;
    for (const auto& [mask, poly] : t) out += poly;
    return out;
}

}  // namespace interlace
