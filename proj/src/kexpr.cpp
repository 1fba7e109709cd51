#include "interlace/kexpr.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

namespace {

struct KParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit KParser(const std::string& src) : s(src) {}

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            } else if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool try_keyword(const char* kw) {
        skip_ws();
        std::size_t len = std::strlen(kw);
        if (s.compare(pos, len, kw) == 0) {
            pos += len;
            return true;
        }
        return false;
    }

    int parse_label() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected label");
        int v = std::stoi(s.substr(start, pos - start));
        if (v == 0) fail("label 0 is not allowed");
        return v;
    }

    KExprPtr parse_expr() {
        skip_ws();
        if (try_keyword("add(")) {
            auto node = std::make_shared<KExpr>();
            node->kind = KExpr::Kind::Add;
            node->label = parse_label();
            expect(',');
            node->label2 = parse_label();
            if (node->label == node->label2) fail("add requires two distinct labels");
            expect(',');
            node->child = parse_expr();
            expect(')');
            return node;
        }
        if (try_keyword("ren(")) {
            auto node = std::make_shared<KExpr>();
            node->kind = KExpr::Kind::Ren;
            node->label = parse_label();
            expect(',');
            node->label2 = parse_label();
            expect(',');
            node->child = parse_expr();
            expect(')');
            return node;
        }
        if (try_consume('(')) {
            auto node = std::make_shared<KExpr>();
            node->kind = KExpr::Kind::Union;
            node->child = parse_expr();
            expect('+');
            node->right = parse_expr();
            expect(')');
            return node;
        }
        auto node = std::make_shared<KExpr>();
        node->kind = KExpr::Kind::Const;
        node->label = parse_label();
        if (pos < s.size() && s[pos] == 'l') {
            ++pos;
            node->looped = true;
        }
        return node;
    }

    KExprPtr parse() {
        KExprPtr e = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input after expression");
        return e;
    }
};

}  // namespace

KExprPtr parse_kexpr(const std::string& src) {
    KParser p(src);
    return p.parse();
}

std::string format_kexpr(const KExpr& e) {
    switch (e.kind) {
        case KExpr::Kind::Const:
            return std::to_string(e.label) + (e.looped ? "l" : "");
        case KExpr::Kind::Add:
            return "add(" + std::to_string(e.label) + "," + std::to_string(e.label2) + "," +
                   format_kexpr(*e.child) + ")";
        case KExpr::Kind::Ren:
            return "ren(" + std::to_string(e.label) + "," + std::to_string(e.label2) + "," +
                   format_kexpr(*e.child) + ")";
        case KExpr::Kind::Union:
            return "(" + format_kexpr(*e.child) + " + " + format_kexpr(*e.right) + ")";
    }
    return {};
}

int used_width(const KExpr& e) {
    int w = 0;
    switch (e.kind) {
        case KExpr::Kind::Const: return e.label;
        case KExpr::Kind::Add:
        case KExpr::Kind::Ren:
            w = std::max(e.label, e.label2);
            return std::max(w, used_width(*e.child));
        case KExpr::Kind::Union:
            return std::max(used_width(*e.child), used_width(*e.right));
    }
    return 0;
}

std::size_t constant_count(const KExpr& e) {
    switch (e.kind) {
        case KExpr::Kind::Const: return 1;
        case KExpr::Kind::Add:
        case KExpr::Kind::Ren: return constant_count(*e.child);
        case KExpr::Kind::Union: return constant_count(*e.child) + constant_count(*e.right);
    }
    return 0;
}

namespace {

struct EvalState {
    std::size_t next_vertex = 1;
};

/// Returns the k-graph of the subexpression; labels by vertex name.
LabelledGraph eval_rec(const KExpr& e, int k, EvalState& st) {
    switch (e.kind) {
        case KExpr::Kind::Const: {
            if (e.label > k)
                throw std::invalid_argument("eval_kexpr: label " + std::to_string(e.label) +
                                            " exceeds width " + std::to_string(k));
            VertexId name = "v" + std::to_string(st.next_vertex++);
            SymBitMatrix m(1);
            if (e.looped) m.set(0, 0, true);
            LabelledGraph lg;
            lg.graph = Graph({name}, std::move(m));
            lg.labels[name] = e.label;
            return lg;
        }
        case KExpr::Kind::Add: {
            if (e.label > k || e.label2 > k)
                throw std::invalid_argument("eval_kexpr: label exceeds width");
            LabelledGraph lg = eval_rec(*e.child, k, st);
            SymBitMatrix m = lg.graph.adjacency();
            const auto& names = lg.graph.vertices();
            for (std::size_t i = 0; i < names.size(); ++i) {
                for (std::size_t j = i + 1; j < names.size(); ++j) {
                    int li = lg.labels.at(names[i]), lj = lg.labels.at(names[j]);
                    if ((li == e.label && lj == e.label2) || (li == e.label2 && lj == e.label))
                        m.set(i, j, true);
                }
            }
            lg.graph = Graph(names, std::move(m));
            return lg;
        }
        case KExpr::Kind::Ren: {
            if (e.label > k || e.label2 > k)
                throw std::invalid_argument("eval_kexpr: label exceeds width");
            LabelledGraph lg = eval_rec(*e.child, k, st);
            for (auto& [v, l] : lg.labels)
                if (l == e.label) l = e.label2;
            return lg;
        }
        case KExpr::Kind::Union: {
            LabelledGraph left = eval_rec(*e.child, k, st);
            LabelledGraph right = eval_rec(*e.right, k, st);
            LabelledGraph lg;
            lg.graph = disjoint_union(left.graph, right.graph);
            lg.labels = std::move(left.labels);
            lg.labels.merge(right.labels);
            return lg;
        }
    }
    throw std::logic_error("eval_kexpr: unreachable");
}

}  // namespace

LabelledGraph eval_kexpr(const KExpr& e, int k, bool ordered) {
    EvalState st;
    LabelledGraph lg = eval_rec(e, k, st);
    if (ordered) {
        // Constant occurrences were numbered left to right, and the union
        // keeps left operands first, so graph order == occurrence order.
        lg.order = lg.graph.vertices();
    }
    return lg;
}

}  // namespace interlace
