#include "interlace/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

std::string Indeterminate::text() const {
    if (kind == VarKind::Ordinary) return tag;
    return tag + "_" + vertex;
}

namespace {

struct Interner {
    std::mutex mu;
    std::map<Indeterminate, VarId> ids;
    std::deque<Indeterminate> vars;
};

Interner& interner() {
    static Interner it;
    return it;
}

}  // namespace

VarId intern(const Indeterminate& v) {
    Interner& it = interner();
    std::lock_guard<std::mutex> lock(it.mu);
    auto [pos, inserted] = it.ids.emplace(v, static_cast<VarId>(it.vars.size()));
    if (inserted) it.vars.push_back(v);
    return pos->second;
}

const Indeterminate& var_info(VarId id) {
    Interner& it = interner();
    std::lock_guard<std::mutex> lock(it.mu);
    return it.vars.at(id);
}

int quasi_degree(const PowerProduct& pp) {
    int d = 0;
    for (const auto& [id, e] : pp)
        if (var_info(id).kind == VarKind::VertexIndexed) d += e;
    return d;
}

int quasi_degree(const Monomial& m) { return quasi_degree(m.powers); }

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(PowerProduct{}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const Indeterminate& v, int exp) {
    if (exp < 0) throw std::invalid_argument("MultiPoly::variable: negative exponent");
    if (exp == 0) return constant(1);
    MultiPoly p;
    p.terms_.emplace(PowerProduct{{intern(v), exp}}, BigInt(1));
    return p;
}

MultiPoly MultiPoly::monomial(BigInt coeff,
                              const std::vector<std::pair<Indeterminate, int>>& ps) {
    if (coeff == 0) return {};
    std::map<VarId, int> exps;
    for (const auto& [v, e] : ps) {
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
        if (e > 0) exps[intern(v)] += e;
    }
    PowerProduct pp(exps.begin(), exps.end());
    MultiPoly p;
    p.terms_.emplace(std::move(pp), std::move(coeff));
    return p;
}

BigInt MultiPoly::coefficient(const std::vector<std::pair<Indeterminate, int>>& ps) const {
    std::map<VarId, int> exps;
    for (const auto& [v, e] : ps)
        if (e > 0) exps[intern(v)] += e;
    PowerProduct pp(exps.begin(), exps.end());
    auto it = terms_.find(pp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::set<Indeterminate> MultiPoly::indeterminates() const {
    std::set<Indeterminate> out;
    for (const auto& [pp, c] : terms_)
        for (const auto& [id, e] : pp) out.insert(var_info(id));
    return out;
}

void MultiPoly::add_term(const PowerProduct& pp, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(pp);
    if (it == terms_.end()) {
        terms_.emplace(pp, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [pp, c] : o.terms_) add_term(pp, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [pp, c] : o.terms_) add_term(pp, -c);
    return *this;
}

namespace {

PowerProduct merge_powers(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) out.add_term(merge_powers(pa, pb), ca * cb);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [pp, c] : terms_) out.terms_.emplace(pp, -c);
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly out = constant(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

const std::string Substitution::kSelf = "@";

Substitution& Substitution::set(const Indeterminate& v, MultiPoly replacement) {
    exact_[v] = std::move(replacement);
    return *this;
}

Substitution& Substitution::set_family(const std::string& tag, MultiPoly tmpl) {
    families_[tag] = {std::move(tmpl), std::nullopt};
    return *this;
}

Substitution& Substitution::set_family(const std::string& tag, MultiPoly tmpl,
                                       std::set<std::string> vertices) {
    families_[tag] = {std::move(tmpl), std::move(vertices)};
    return *this;
}

namespace {

/// Instantiates a family template: every vertex-indexed indeterminate whose
/// vertex is the kSelf placeholder is re-indexed to the given vertex.
MultiPoly rebind_self(const MultiPoly& tmpl, const std::string& vertex) {
    MultiPoly out;
    for (const auto& [pp, c] : tmpl.terms()) {
        std::map<VarId, int> exps;
        for (const auto& [id, e] : pp) {
            const Indeterminate& v = var_info(id);
            if (v.kind == VarKind::VertexIndexed && v.vertex == Substitution::kSelf)
                exps[intern(Indeterminate::indexed(v.tag, vertex))] += e;
            else
                exps[id] += e;
        }
        out.add_term(PowerProduct(exps.begin(), exps.end()), c);
    }
    return out;
}

}  // namespace

std::optional<MultiPoly> Substitution::rule_for(const Indeterminate& v) const {
    if (auto it = exact_.find(v); it != exact_.end()) return it->second;
    if (v.kind == VarKind::VertexIndexed) {
        if (auto it = families_.find(v.tag); it != families_.end()) {
            const FamilyRule& fr = it->second;
            if (!fr.vertices || fr.vertices->count(v.vertex)) return rebind_self(fr.tmpl, v.vertex);
        }
    }
    return std::nullopt;
}

MultiPoly substitute(const MultiPoly& p, const Substitution& s) {
    MultiPoly out;
    for (const auto& [pp, c] : p.terms()) {
        PowerProduct kept;
        std::vector<MultiPoly> parts;
        for (const auto& [id, e] : pp) {
            if (auto r = s.rule_for(var_info(id)))
                parts.push_back(r->pow(e));
            else
                kept.emplace_back(id, e);
        }
        MultiPoly acc;
        acc.add_term(kept, c);
        for (const auto& q : parts) acc *= q;
        out += acc;
    }
    return out;
}

MultiPoly truncate(const MultiPoly& p, int d) {
    MultiPoly out;
    for (const auto& [pp, c] : p.terms())
        if (quasi_degree(pp) <= d) out.add_term(pp, c);
    return out;
}

MultiPoly mul_truncated(const MultiPoly& p, const MultiPoly& q, int d) {
    MultiPoly out;
    std::vector<std::pair<const PowerProduct*, int>> qd_q;
    qd_q.reserve(q.terms().size());
    for (const auto& [pp, c] : q.terms()) qd_q.emplace_back(&pp, quasi_degree(pp));
    for (const auto& [pa, ca] : p.terms()) {
        int da = quasi_degree(pa);
        if (da > d) continue;
        std::size_t i = 0;
        for (const auto& [pb, cb] : q.terms()) {
            if (da + qd_q[i++].second <= d) out.add_term(merge_powers(pa, pb), ca * cb);
        }
    }
    return out;
}

namespace {

MultiPoly shift_all(const MultiPoly& p, int delta) {
    MultiPoly out;
    for (const auto& [pp, c] : p.terms()) {
        MultiPoly acc = MultiPoly::constant(c);
        for (const auto& [id, e] : pp) {
            MultiPoly f = MultiPoly::variable(var_info(id)) + MultiPoly::constant(delta);
            acc *= f.pow(e);
        }
        out += acc;
    }
    return out;
}

}  // namespace

MultiPoly shift_minus(const MultiPoly& p) { return shift_all(p, -1); }
MultiPoly shift_plus(const MultiPoly& p) { return shift_all(p, +1); }

bool is_positive(const MultiPoly& p) {
    for (const auto& [pp, c] : p.terms())
        if (c <= 0) return false;
    return true;
}

std::string monomial_text(const PowerProduct& pp) {
    // Vertex-indexed factors first (matching the x_A y_B u^p v^q shape of the
    // polynomials), each group in ascending (tag, vertex) order.
    std::vector<std::pair<Indeterminate, int>> factors;
    for (const auto& [id, e] : pp) factors.emplace_back(var_info(id), e);
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.kind != b.first.kind) return a.first.kind == VarKind::VertexIndexed;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [v, e] : factors) {
        if (!out.empty()) out += '*';
        out += v.text();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string canonical_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    struct Entry {
        int qd;
        std::string mon;
        const BigInt* coeff;
    };
    std::vector<Entry> entries;
    entries.reserve(p.term_count());
    for (const auto& [pp, c] : p.terms()) entries.push_back({quasi_degree(pp), monomial_text(pp), &c});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.qd != b.qd) return a.qd < b.qd;
        return a.mon < b.mon;
    });
    std::ostringstream out;
    bool first = true;
    for (const Entry& e : entries) {
        BigInt c = *e.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        BigInt a = neg ? BigInt(-c) : c;
        if (e.mon.empty())
            out << a;
        else if (a == 1)
            out << e.mon;
        else
            out << a << '*' << e.mon;
    }
    return out.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos + 1); }

    bool starts_with(const char* lit) const { return s.compare(pos, strlen(lit), lit) == 0; }

    static bool name_char(char c) {
        return c != '\0' && !std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '^' &&
               c != '+' && c != '-';
    }

    BigInt parse_integer(bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return BigInt(s.substr(start, pos - start));
    }

    bool at_integer() const {
        std::size_t p = pos;
        if (p < s.size() && s[p] == '-') ++p;
        if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) return false;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        // An integer piece ends at '*', separator, or end of input.
        return p >= s.size() || s[p] == '*' || s[p] == ' ';
    }

    std::pair<Indeterminate, int> parse_factor() {
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        if (pos == start) fail("expected indeterminate name");
        std::string name = s.substr(start, pos - start);
        int exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            BigInt e = parse_integer(false);
            if (e <= 0 || e > 1'000'000) fail("exponent out of range");
            exp = static_cast<int>(e);
        }
        auto underscore = name.find('_');
        if (underscore == std::string::npos) return {Indeterminate::ordinary(name), exp};
        if (underscore == 0 || underscore + 1 == name.size()) fail("malformed indeterminate name");
        return {Indeterminate::indexed(name.substr(0, underscore), name.substr(underscore + 1)),
                exp};
    }

    MultiPoly parse_term(bool leading) {
        BigInt coeff = 1;
        std::vector<std::pair<Indeterminate, int>> factors;
        if (at_integer()) {
            coeff = parse_integer(leading);
        } else {
            if (!leading && pos < s.size() && s[pos] == '-') fail("unexpected '-'");
            factors.push_back(parse_factor());
        }
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            factors.push_back(parse_factor());
        }
        return MultiPoly::monomial(coeff, factors);
    }

    MultiPoly parse() {
        bool negate_lead = false;
        if (pos < s.size() && s[pos] == '-' && !at_integer()) {
            ++pos;  // leading '-' in front of a coefficientless factor
            negate_lead = true;
        }
        MultiPoly out = parse_term(!negate_lead);
        if (negate_lead) out = -out;
        while (pos < s.size()) {
            if (starts_with(" + ")) {
                pos += 3;
                out += parse_term(false);
            } else if (starts_with(" - ")) {
                pos += 3;
                out -= parse_term(false);
            } else {
                fail("expected ' + ' or ' - '");
            }
        }
        return out;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    std::size_t lead = 0;
    while (lead < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[lead]))) ++lead;
    trimmed.erase(0, lead);
    if (trimmed.empty()) throw ParseError("empty polynomial", 1, 1);
    if (trimmed == "0") return {};
    PolyParser parser(trimmed);
    return parser.parse();
}

}  // namespace interlace
