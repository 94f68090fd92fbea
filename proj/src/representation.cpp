#include "cjs/representation.hpp"

#include <algorithm>

#include "cjs/clans.hpp"

namespace cjs {

namespace {

std::string point_name(const FiniteJoinStructure& s, Mask m) {
    std::string out = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) out += ",";
        out += s.name(e);
        first = false;
    }
    return out + "}";
}

Embedding build_embedding(const FiniteJoinStructure& s, std::vector<Mask> points,
                          TargetKind target) {
    Embedding e;
    e.target = target;
    e.points = std::move(points);
    for (Mask m : e.points) e.point_names.push_back(point_name(s, m));
    e.image.assign(s.size(), {});
    for (int a = 0; a < s.size(); ++a)
        for (size_t p = 0; p < e.points.size(); ++p)
            if (e.points[p] >> a & 1) e.image[a].push_back(static_cast<int>(p));
    if (target == TargetKind::Relational) {
        const size_t n = e.points.size();
        e.relation.assign(n, std::vector<char>(n, 0));
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p; q < n; ++q) {
                bool all = true;
                for (int a : mask_elements(e.points[p])) {
                    for (int b : mask_elements(e.points[q]))
                        if (!s.contact(a, b)) {
                            all = false;
                            break;
                        }
                    if (!all) break;
                }
                e.relation[p][q] = e.relation[q][p] = all ? 1 : 0;
            }
    }
    return e;
}

}  // namespace

bool Embedding::image_contains(int element, int point) const {
    return std::binary_search(image[element].begin(), image[element].end(), point);
}

bool Embedding::target_contact(int a, int b) const {
    if (target == TargetKind::Powerset) {
        for (int p : image[a])
            if (image_contains(b, p)) return true;
        return false;
    }
    for (int p : image[a])
        for (int q : image[b])
            if (relation[p][q]) return true;
    return false;
}

Embedding set_representation(const FiniteJoinStructure& s) {
    const Classification c = classify(s);
    if (!c.is_cjs) throw std::invalid_argument("set_representation: structure is not a CJS");
    return build_embedding(s, enumerate_clans(s), TargetKind::Powerset);
}

Embedding relational_representation(const FiniteJoinStructure& s, RelationalStrategy strategy) {
    const Classification c = classify(s);
    if (!c.is_dcjs)
        throw std::invalid_argument("relational_representation: structure is not a DCJS");
    std::vector<Mask> points;
    if (strategy == RelationalStrategy::ClanBased) {
        points = enumerate_abstract_points(s);
    } else {
        // complements of proper prime ideals containing zero
        for (Mask p = 0; p <= s.full_mask(); ++p) {
            if ((p >> s.zero() & 1) && !(p >> s.one() & 1) && is_prime_ideal(s, p))
                points.push_back(s.full_mask() & ~p);
            if (p == s.full_mask()) break;
        }
        std::sort(points.begin(), points.end());
    }
    return build_embedding(s, std::move(points), TargetKind::Relational);
}

bool EmbeddingReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const EmbeddingClause& c) { return c.pass; });
}

EmbeddingReport verify_embedding(const FiniteJoinStructure& s, const Embedding& e) {
    EmbeddingReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& witness) {
        report.clauses.push_back({name, pass, pass ? "" : witness});
    };

    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < s.size() && pass; ++a)
            for (int b = a + 1; b < s.size(); ++b)
                if (e.image[a] == e.image[b]) {
                    pass = false;
                    witness = "(" + s.name(a) + ", " + s.name(b) + ")";
                    break;
                }
        add("injective", pass, witness);
    }
    {
        const bool zero_ok = e.image[s.zero()].empty();
        const bool one_ok = e.image[s.one()].size() == e.points.size();
        add("bounds", zero_ok && one_ok,
            zero_ok ? "image of one is not the whole point set" : "image of zero is nonempty");
    }
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < s.size() && pass; ++a)
            for (int b = 0; b < s.size(); ++b) {
                std::vector<int> u;
                std::set_union(e.image[a].begin(), e.image[a].end(), e.image[b].begin(),
                               e.image[b].end(), std::back_inserter(u));
                if (u != e.image[s.join(a, b)]) {
                    pass = false;
                    witness = "(" + s.name(a) + ", " + s.name(b) + ")";
                    break;
                }
            }
        add("join-as-union", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < s.size() && pass; ++a)
            for (int b = 0; b < s.size(); ++b) {
                const bool incl = std::includes(e.image[b].begin(), e.image[b].end(),
                                                e.image[a].begin(), e.image[a].end());
                if (s.leq(a, b) != incl) {
                    pass = false;
                    witness = "(" + s.name(a) + ", " + s.name(b) + ")";
                    break;
                }
            }
        add("order-as-inclusion", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < s.size() && pass; ++a)
            for (int b = 0; b < s.size(); ++b)
                if (s.contact(a, b) != e.target_contact(a, b)) {
                    pass = false;
                    witness = "(" + s.name(a) + ", " + s.name(b) + ")";
                    break;
                }
        add("contact", pass, witness);
    }
    return report;
}

namespace {

int point_index(const Embedding& e, Mask m) {
    for (size_t i = 0; i < e.points.size(); ++i)
        if (e.points[i] == m) return static_cast<int>(i);
    return -1;
}

// Second proof of the relational theorem: build the witnessing abstract
// points F and F1 from prime ideals, never touching clans.
std::optional<std::pair<Mask, Mask>> prime_ideal_witness(const FiniteJoinStructure& s, int a,
                                                         int b) {
    // P = {x : not xCb} is an ideal; extend it to a prime ideal avoiding [a).
    Mask p0 = 0;
    for (int x = 0; x < s.size(); ++x)
        if (!s.contact(x, b)) p0 |= Mask{1} << x;
    if (!is_ideal(s, p0)) return std::nullopt;
    const auto p1 = separating_prime_ideal(s, p0, s.upset(a));
    if (!p1) return std::nullopt;
    const Mask f = s.full_mask() & ~*p1;
    if (!is_abstract_point(s, f)) return std::nullopt;

    // I = {x : some y in F with not xCy}; extend avoiding [b).
    Mask i0 = 0;
    for (int x = 0; x < s.size(); ++x)
        for (int y : mask_elements(f))
            if (!s.contact(x, y)) {
                i0 |= Mask{1} << x;
                break;
            }
    if (!is_ideal(s, i0)) return std::nullopt;
    const auto i1 = separating_prime_ideal(s, i0, s.upset(b));
    if (!i1) return std::nullopt;
    const Mask f1 = s.full_mask() & ~*i1;
    if (!is_abstract_point(s, f1)) return std::nullopt;
    return std::make_pair(f, f1);
}

}  // namespace

std::optional<std::pair<int, int>> relational_contact_witness(const FiniteJoinStructure& s,
                                                              const Embedding& e, int a, int b,
                                                              RelationalStrategy strategy) {
    if (!s.contact(a, b)) return std::nullopt;
    if (strategy == RelationalStrategy::PrimeIdeal) {
        const auto w = prime_ideal_witness(s, a, b);
        if (!w) return std::nullopt;
        const int p = point_index(e, w->first);
        const int q = point_index(e, w->second);
        if (p < 0 || q < 0 || !e.relation[p][q]) return std::nullopt;
        return std::make_pair(p, q);
    }
    const auto clan = find_clan_containing(s, a, b);
    if (!clan) return std::nullopt;
    const auto sigma = clan_decomposition(s, *clan);
    if (!sigma) return std::nullopt;
    int pa = -1, pb = -1;
    for (Mask u : *sigma) {
        if (pa < 0 && (u >> a & 1)) pa = point_index(e, u);
        if (pb < 0 && (u >> b & 1)) pb = point_index(e, u);
    }
    if (pa < 0 || pb < 0 || !e.relation[pa][pb]) return std::nullopt;
    return std::make_pair(pa, pb);
}

}  // namespace cjs
