#include "cjs/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cjs/clans.hpp"

namespace cjs {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int FiniteJoinStructure::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int FiniteJoinStructure::join_all(std::span<const int> elems) const {
    int acc = zero_;
    for (int e : elems) acc = join(acc, e);
    return acc;
}

int FiniteJoinStructure::join_mask(Mask m) const {
    int acc = zero_;
    for (int e = 0; e < size(); ++e)
        if (m >> e & 1) acc = join(acc, e);
    return acc;
}

bool FiniteJoinStructure::same_tables(const FiniteJoinStructure& other) const {
    return size() == other.size() && zero_ == other.zero_ && one_ == other.one_ &&
           join_ == other.join_ && contact_ == other.contact_;
}

void FiniteJoinStructure::finish() {
    const int n = size();
    upset_.assign(n, 0);
    downset_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq(a, b)) {
                upset_[a] |= Mask{1} << b;
                downset_[b] |= Mask{1} << a;
            }
}

FiniteJoinStructure FiniteJoinStructure::from_tables(std::vector<std::string> names, int zero,
                                                     int one, std::vector<int> join_table,
                                                     std::vector<char> contact_matrix) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw StructureError("structure has no elements");
    if (n > kMaxCarrier) throw StructureError("carrier too large (limit " +
                                              std::to_string(kMaxCarrier) + " elements)");
    FiniteJoinStructure s;
    s.names_ = std::move(names);
    s.zero_ = zero;
    s.one_ = one;
    s.join_ = std::move(join_table);
    s.contact_ = std::move(contact_matrix);

    auto nm = [&](int e) { return quote(s.names_[e]); };

    // Idempotence: the derived order is reflexive iff join(a,a)=a.
    for (int a = 0; a < n; ++a)
        if (s.join(a, a) != a)
            throw StructureError("join not idempotent: " + nm(a) + " + " + nm(a) + " = " +
                                 nm(s.join(a, a)) + ", so the derived order is not reflexive");
    // Antisymmetry of a<=b iff a+b=b.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if (s.leq(a, b) && s.leq(b, a))
                throw StructureError("derived order not antisymmetric: witness (" +
                                     s.names_[a] + ", " + s.names_[b] + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.leq(a, b) && s.leq(b, c) && !s.leq(a, c))
                    throw StructureError("derived order not transitive: witness (" + s.names_[a] +
                                         ", " + s.names_[b] + ", " + s.names_[c] + ")");
    // join(a,b) must be the least upper bound of {a,b}.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int j = s.join(a, b);
            if (!s.leq(a, j) || !s.leq(b, j))
                throw StructureError("join not an upper bound: " + nm(a) + " + " + nm(b) +
                                     " = " + nm(j));
            for (int c = 0; c < n; ++c)
                if (s.leq(a, c) && s.leq(b, c) && !s.leq(j, c))
                    throw StructureError("join not a least upper bound: " + nm(a) + " + " +
                                         nm(b) + " = " + nm(j) + " but " + nm(c) +
                                         " is a smaller upper bound");
        }
    for (int a = 0; a < n; ++a) {
        if (!s.leq(s.zero_, a))
            throw StructureError("zero is not the bottom: " + nm(s.zero_) + " is not below " +
                                 nm(a));
        if (!s.leq(a, s.one_))
            throw StructureError("one is not the top: " + nm(a) + " is not below " +
                                 nm(s.one_));
    }
    // Contact must be stored symmetric.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.contact(a, b) != s.contact(b, a))
                throw StructureError("contact matrix not symmetric: witness (" + s.names_[a] +
                                     ", " + s.names_[b] + ")");
    s.finish();
    return s;
}

FiniteJoinStructure FiniteJoinStructure::validate(const StructureDescription& desc) {
    const int n = static_cast<int>(desc.elements.size());
    if (n == 0) throw StructureError("structure has no elements");
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(desc.elements[i], i).second)
            throw StructureError("duplicate element name " + quote(desc.elements[i]));
    }
    auto lookup = [&](const std::string& name, const char* where) {
        auto it = index.find(name);
        if (it == index.end())
            throw StructureError(std::string(where) + " references unknown element " +
                                 quote(name));
        return it->second;
    };
    const int zero = lookup(desc.zero, "zero");
    const int one = lookup(desc.one, "one");

    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) table[a * n + a] = a;  // idempotent entries may be omitted
    for (const auto& entry : desc.join) {
        const int a = lookup(entry[0], "join table");
        const int b = lookup(entry[1], "join table");
        const int r = lookup(entry[2], "join table");
        if (table[a * n + b] != -1 && table[a * n + b] != r)
            throw StructureError("conflicting join entries for (" + entry[0] + ", " + entry[1] +
                                 ")");
        table[a * n + b] = r;
        if (table[b * n + a] == -1) table[b * n + a] = r;  // symmetric duplicate may be omitted
        if (table[b * n + a] != r)
            throw StructureError("join table not commutative: witness (" + entry[0] + ", " +
                                 entry[1] + ")");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a * n + b] == -1)
                throw StructureError("missing join entry for (" + desc.elements[a] + ", " +
                                     desc.elements[b] + ")");

    std::vector<char> contact(static_cast<size_t>(n) * n, 0);
    for (const auto& pair : desc.contact) {
        const int a = lookup(pair[0], "contact");
        const int b = lookup(pair[1], "contact");
        contact[a * n + b] = 1;
        contact[b * n + a] = 1;
    }
    return from_tables(desc.elements, zero, one, std::move(table), std::move(contact));
}

AxiomReport check_contact_axioms(const FiniteJoinStructure& s) {
    const int n = s.size();
    AxiomReport r;
    for (int x = 0; x < n && r.no_contact_with_zero.pass; ++x)
        for (int y = 0; y < n; ++y)
            if (s.contact(x, y) && x == s.zero()) {
                r.no_contact_with_zero = {false, {x, y}};
                break;
            }
    for (int x = 0; x < n && r.symmetry.pass; ++x)
        for (int y = 0; y < n; ++y)
            if (s.contact(x, y) && !s.contact(y, x)) {
                r.symmetry = {false, {x, y}};
                break;
            }
    for (int x = 0; x < n && r.join_distribution.pass; ++x)
        for (int y = 0; y < n && r.join_distribution.pass; ++y)
            for (int z = 0; z < n; ++z)
                if (s.contact(x, s.join(y, z)) && !s.contact(x, y) && !s.contact(x, z)) {
                    r.join_distribution = {false, {x, y, z}};
                    break;
                }
    for (int x = 0; x < n && r.monotonicity.pass; ++x)
        for (int y = 0; y < n && r.monotonicity.pass; ++y)
            for (int y2 = 0; y2 < n; ++y2)
                if (s.contact(x, y) && s.leq(y, y2) && !s.contact(x, y2)) {
                    r.monotonicity = {false, {x, y, y2}};
                    break;
                }
    for (int x = 0; x < n; ++x)
        if (x != s.zero() && !s.contact(x, x)) {
            r.reflexivity = {false, {x}};
            break;
        }
    return r;
}

AdResult check_ad(const FiniteJoinStructure& s) {
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!s.leq(x, s.join(a, b))) continue;
                bool found = false;
                for (int ap = 0; ap < n && !found; ++ap) {
                    if (!s.leq(ap, a)) continue;
                    for (int bp = 0; bp < n; ++bp)
                        if (s.leq(bp, b) && s.join(ap, bp) == x) {
                            found = true;
                            break;
                        }
                }
                if (!found) return {false, x, a, b};
            }
    return {};
}

namespace {

bool ad_decompose_rec(const FiniteJoinStructure& s, int x, std::span<const int> parts,
                      size_t k, int acc, std::vector<int>& out) {
    if (k == parts.size()) return acc == x;
    for (int c = 0; c < s.size(); ++c) {
        if (!s.leq(c, parts[k])) continue;
        const int next = s.join(acc, c);
        if (!s.leq(next, x)) continue;
        out[k] = c;
        if (ad_decompose_rec(s, x, parts, k + 1, next, out)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> ad_decompose(const FiniteJoinStructure& s, int x,
                                             std::span<const int> parts) {
    if (!s.leq(x, s.join_all(parts)))
        throw std::invalid_argument("ad_decompose: x is not below the join of the parts");
    std::vector<int> out(parts.size(), s.zero());
    if (ad_decompose_rec(s, x, parts, 0, s.zero(), out)) return out;
    return std::nullopt;
}

std::optional<std::vector<int>> refine_presentations(
    const FiniteJoinStructure& s, int x, const std::vector<std::vector<int>>& presentations) {
    if (presentations.empty())
        throw std::invalid_argument("refine_presentations: no presentations given");
    for (const auto& p : presentations)
        if (s.join_all(p) != x)
            throw std::invalid_argument("refine_presentations: presentation does not join to x");
    if (x == s.zero()) return std::vector<int>{s.zero()};

    std::vector<int> ts = presentations.front();
    for (size_t m = 1; m < presentations.size(); ++m) {
        std::vector<int> next;
        for (int t : ts) {
            auto parts = ad_decompose(s, t, presentations[m]);
            if (!parts) return std::nullopt;
            for (int v : *parts)
                if (v != s.zero()) next.push_back(v);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        ts = std::move(next);
    }
    return ts;
}

Classification classify(const FiniteJoinStructure& s) {
    Classification c;
    const AxiomReport axioms = check_contact_axioms(s);
    c.satisfies_contact_axioms_9_to_13 = axioms.all_pass();
    c.satisfies_ad = check_ad(s).pass;
    c.is_dcjs = c.satisfies_contact_axioms_9_to_13 && c.satisfies_ad;
    if (axioms.no_contact_with_zero.pass && axioms.symmetry.pass)
        c.is_cjs = check_schema_A1(s).pass && check_schema_A(s).pass;
    return c;
}

}  // namespace cjs
