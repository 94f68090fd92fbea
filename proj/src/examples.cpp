#include "cjs/examples.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cjs/structure.hpp"

namespace cjs {

namespace {

std::string set_name(const std::vector<std::string>& points, Mask m) {
    std::string out = "{";
    bool first = true;
    for (size_t i = 0; i < points.size(); ++i)
        if (m >> i & 1) {
            if (!first) out += ",";
            out += points[i];
            first = false;
        }
    return out + "}";
}

// Family elements sorted by (size, bitmask); zero first, one last.
std::vector<Mask> sorted_family(const std::vector<std::string>& points,
                                const std::vector<Mask>& family) {
    const Mask full = points.empty() ? 0 : (Mask{1} << points.size()) - 1;
    std::vector<Mask> sets = family;
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    if (sets.empty() || sets.front() != 0)
        throw StructureError("family must contain the empty set");
    if (sets.back() != full) throw StructureError("family must contain the full set");
    return sets;
}

FiniteJoinStructure family_structure(const std::vector<std::string>& points,
                                     const std::vector<Mask>& family,
                                     const std::vector<Mask>& point_neighbours) {
    const std::vector<Mask> sets = sorted_family(points, family);
    const int n = static_cast<int>(sets.size());
    std::map<Mask, int> index;
    for (int i = 0; i < n; ++i) index[sets[i]] = i;

    std::vector<std::string> names;
    for (Mask m : sets) names.push_back(set_name(points, m));

    std::vector<int> join(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto it = index.find(sets[a] | sets[b]);
            if (it == index.end())
                throw StructureError("family not closed under union: witness (" + names[a] +
                                     ", " + names[b] + ")");
            join[a * n + b] = it->second;
        }

    std::vector<char> contact(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mask reach = 0;
            for (size_t i = 0; i < points.size(); ++i)
                if (sets[b] >> i & 1) reach |= point_neighbours[i];
            contact[a * n + b] = (sets[a] & reach) != 0 ? 1 : 0;
        }
    return FiniteJoinStructure::from_tables(std::move(names), 0, n - 1, std::move(join),
                                            std::move(contact));
}

std::vector<Mask> identity_neighbours(size_t npoints) {
    std::vector<Mask> nb(npoints);
    for (size_t i = 0; i < npoints; ++i) nb[i] = Mask{1} << i;
    return nb;
}

}  // namespace

FiniteJoinStructure family_cjs(const std::vector<std::string>& points,
                               const std::vector<Mask>& family) {
    return family_structure(points, family, identity_neighbours(points.size()));
}

FiniteJoinStructure relational_structure(const std::vector<std::string>& points,
                                         const std::vector<std::pair<int, int>>& relation,
                                         const std::vector<Mask>& family) {
    std::vector<Mask> nb(points.size(), 0);
    for (auto [x, y] : relation) {
        if (x < 0 || y < 0 || static_cast<size_t>(x) >= points.size() ||
            static_cast<size_t>(y) >= points.size())
            throw StructureError("relation pair out of range");
        nb[x] |= Mask{1} << y;
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (!(nb[i] >> i & 1))
            throw StructureError("relation not reflexive at point '" + points[i] + "'");
        for (size_t j = 0; j < points.size(); ++j)
            if ((nb[i] >> j & 1) && !(nb[j] >> i & 1))
                throw StructureError("relation not symmetric: witness ('" + points[i] +
                                     "', '" + points[j] + "')");
    }
    return family_structure(points, family, nb);
}

FiniteTopology FiniteTopology::validate(std::vector<std::string> points,
                                        std::vector<Mask> opens) {
    FiniteTopology t;
    t.points = std::move(points);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    t.opens = std::move(opens);
    auto has = [&](Mask m) { return std::binary_search(t.opens.begin(), t.opens.end(), m); };
    if (!has(0)) throw StructureError("topology must contain the empty set");
    if (!has(t.full())) throw StructureError("topology must contain the full set");
    for (Mask a : t.opens)
        for (Mask b : t.opens) {
            if (!has(a | b))
                throw StructureError("opens not closed under union: witness (" +
                                     set_name(t.points, a) + ", " + set_name(t.points, b) + ")");
            if (!has(a & b))
                throw StructureError("opens not closed under intersection: witness (" +
                                     set_name(t.points, a) + ", " + set_name(t.points, b) + ")");
        }
    return t;
}

Mask FiniteTopology::interior(Mask a) const {
    Mask out = 0;
    for (Mask o : opens)
        if ((o & ~a) == 0) out |= o;
    return out;
}

Mask FiniteTopology::closure(Mask a) const { return full() & ~interior(full() & ~a); }

ContactAlgebraStructure finite_topology_rc(const FiniteTopology& t) {
    std::vector<Mask> rc;
    for (Mask a = 0; a <= t.full(); ++a) {
        if (t.closure(t.interior(a)) == a) rc.push_back(a);
        if (a == t.full()) break;
    }
    ContactAlgebraStructure out{family_cjs(t.points, rc), {}, {}};

    const std::vector<Mask> sets = sorted_family(t.points, rc);
    std::map<Mask, int> index;
    for (size_t i = 0; i < sets.size(); ++i) index[sets[i]] = static_cast<int>(i);
    const int n = static_cast<int>(sets.size());
    out.meet.resize(static_cast<size_t>(n) * n);
    out.complement.resize(n);
    for (int a = 0; a < n; ++a) {
        out.complement[a] = index.at(t.closure(t.full() & ~sets[a]));
        for (int b = 0; b < n; ++b)
            out.meet[a * n + b] = index.at(t.closure(t.interior(sets[a] & sets[b])));
    }
    return out;
}

ContactAlgebraReport check_contact_algebra(const ContactAlgebraStructure& alg) {
    const FiniteJoinStructure& s = alg.structure;
    const int n = s.size();
    ContactAlgebraReport report;
    auto law2 = [&](const std::string& name, auto pred) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!pred(a, b)) {
                    report.clauses.push_back(
                        {name, false, "(" + s.name(a) + ", " + s.name(b) + ")"});
                    return;
                }
        report.clauses.push_back({name, true, ""});
    };
    auto law3 = [&](const std::string& name, auto pred) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!pred(a, b, c)) {
                        report.clauses.push_back({name, false, "(" + s.name(a) + ", " +
                                                                   s.name(b) + ", " + s.name(c) +
                                                                   ")"});
                        return;
                    }
        report.clauses.push_back({name, true, ""});
    };
    const auto m = [&](int a, int b) { return alg.meet_of(a, b); };

    law2("join commutative", [&](int a, int b) { return s.join(a, b) == s.join(b, a); });
    law3("join associative",
         [&](int a, int b, int c) { return s.join(s.join(a, b), c) == s.join(a, s.join(b, c)); });
    law2("join idempotent", [&](int a, int) { return s.join(a, a) == a; });
    law2("meet commutative", [&](int a, int b) { return m(a, b) == m(b, a); });
    law3("meet associative",
         [&](int a, int b, int c) { return m(m(a, b), c) == m(a, m(b, c)); });
    law2("meet idempotent", [&](int a, int) { return m(a, a) == a; });
    law2("join identity a+0=a", [&](int a, int) { return s.join(a, s.zero()) == a; });
    law2("meet identity a*1=a", [&](int a, int) { return m(a, s.one()) == a; });
    law2("absorption a+(a*b)=a", [&](int a, int b) { return s.join(a, m(a, b)) == a; });
    law2("absorption a*(a+b)=a", [&](int a, int b) { return m(a, s.join(a, b)) == a; });
    law3("meet distributes over join",
         [&](int a, int b, int c) { return m(a, s.join(b, c)) == s.join(m(a, b), m(a, c)); });
    law3("join distributes over meet",
         [&](int a, int b, int c) { return s.join(a, m(b, c)) == m(s.join(a, b), s.join(a, c)); });
    law2("complement join", [&](int a, int) { return s.join(a, alg.complement[a]) == s.one(); });
    law2("complement meet", [&](int a, int) { return m(a, alg.complement[a]) == s.zero(); });
    const size_t boolean_end = report.clauses.size();
    report.boolean_laws =
        std::all_of(report.clauses.begin(), report.clauses.end(),
                    [](const LawClause& c) { return c.pass; });

    law2("(C1) contact excludes zero",
         [&](int a, int b) { return !s.contact(a, b) || a != s.zero(); });
    {
        bool pass = true;
        std::string witness;
        for (int a = 0; a < n && pass; ++a)
            for (int b = 0; b < n && pass; ++b)
                for (int c = 0; c < n && pass; ++c)
                    for (int d = 0; d < n; ++d)
                        if (s.contact(a, b) && s.leq(a, c) && s.leq(b, d) && !s.contact(c, d)) {
                            pass = false;
                            witness = "(" + s.name(a) + ", " + s.name(b) + ", " + s.name(c) +
                                      ", " + s.name(d) + ")";
                            break;
                        }
        report.clauses.push_back({"(C2) contact monotone", pass, witness});
    }
    law3("(C3) contact splits joins", [&](int a, int b, int c) {
        return !s.contact(a, s.join(b, c)) || s.contact(a, b) || s.contact(a, c);
    });
    law2("(C4) contact symmetric",
         [&](int a, int b) { return !s.contact(a, b) || s.contact(b, a); });
    law2("(C5) nonzero self-contact",
         [&](int a, int) { return a == s.zero() || s.contact(a, a); });
    report.contact_axioms = std::all_of(report.clauses.begin() + boolean_end,
                                        report.clauses.end(),
                                        [](const LawClause& c) { return c.pass; });

    report.reduct_is_dcjs = classify(s).is_dcjs;
    report.clauses.push_back({"reduct is a DCJS", report.reduct_is_dcjs, ""});
    return report;
}

FiniteJoinStructure fixture_pr2nn() {
    // W = {1,2,3,4}; B = {{}, W, {1,3}, {2,4}, {1,2}, {1,2,3}, {1,2,4}}
    return family_cjs({"1", "2", "3", "4"},
                      {0b0000, 0b1111, 0b0101, 0b1010, 0b0011, 0b0111, 0b1011});
}

FiniteJoinStructure powerset_cjs(const std::vector<std::string>& points) {
    const Mask full = points.empty() ? 0 : (Mask{1} << points.size()) - 1;
    std::vector<Mask> family;
    for (Mask m = 0; m <= full; ++m) {
        family.push_back(m);
        if (m == full) break;
    }
    return family_cjs(points, family);
}

}  // namespace cjs
