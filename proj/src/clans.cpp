#include "cjs/clans.hpp"

#include <algorithm>
#include <bit>

namespace cjs {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    for (int e = 0; m >> e; ++e)
        if (m >> e & 1) out.push_back(e);
    return out;
}

std::vector<Presentation> presentations(const FiniteJoinStructure& s, int target) {
    if (target == s.zero()) return {{target, {s.zero()}}};
    std::vector<int> nonzero;
    for (int e = 0; e < s.size(); ++e)
        if (e != s.zero()) nonzero.push_back(e);
    std::vector<Presentation> out;
    const Mask top = Mask{1} << nonzero.size();
    for (Mask m = 1; m < top; ++m) {
        int acc = s.zero();
        for (size_t i = 0; i < nonzero.size(); ++i)
            if (m >> i & 1) acc = s.join(acc, nonzero[i]);
        if (acc != target) continue;
        Presentation p{target, {}};
        for (size_t i = 0; i < nonzero.size(); ++i)
            if (m >> i & 1) p.summands.push_back(nonzero[i]);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

bool choice_rec(const FiniteJoinStructure& s, const std::vector<const Presentation*>& ps,
                const ChoiceConstraint& c, size_t k, std::vector<int>& chosen) {
    if (k == ps.size()) return true;
    for (int cand : ps[k]->summands) {
        if (!s.contact(cand, cand)) continue;
        if (c.kind == ChoiceConstraint::Kind::NotBelow && s.leq(cand, c.u)) continue;
        bool ok = true;
        for (size_t j = 0; j < k; ++j)
            if (!s.contact(cand, chosen[j])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen[k] = cand;
        if (choice_rec(s, ps, c, k + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_choice_system(
    const FiniteJoinStructure& s, const std::vector<std::vector<Presentation>>& groups,
    const ChoiceConstraint& constraint) {
    std::vector<const Presentation*> flat;
    for (const auto& g : groups)
        for (const auto& p : g) flat.push_back(&p);
    std::vector<int> chosen(flat.size(), -1);
    if (choice_rec(s, flat, constraint, 0, chosen)) return chosen;
    return std::nullopt;
}

namespace {

// Maximal cliques of the contact graph restricted to `vertices`, all of
// which must contain `seed`. Bron-Kerbosch with pivoting over bitmasks.
class CliqueEnumerator {
public:
    CliqueEnumerator(const FiniteJoinStructure& s, Mask vertices) : s_(s) {
        adj_.assign(s.size(), 0);
        for (int a = 0; a < s.size(); ++a) {
            if (!(vertices >> a & 1)) continue;
            for (int b = 0; b < s.size(); ++b)
                if (a != b && (vertices >> b & 1) && s.contact(a, b)) adj_[a] |= Mask{1} << b;
        }
        vertices_ = vertices;
    }

    // Seed must be a clique within the vertex set; otherwise no result.
    std::vector<Mask> maximal_cliques_containing(Mask seed) {
        if ((seed & ~vertices_) != 0) return {};
        Mask candidates = vertices_ & ~seed;
        for (int v : mask_elements(seed)) {
            for (int w : mask_elements(seed & ~(Mask{1} << v)))
                if (!s_.contact(v, w)) return {};
            candidates &= adj_[v];
        }
        out_.clear();
        expand(seed, candidates, 0);
        return std::move(out_);
    }

private:
    void expand(Mask r, Mask p, Mask x) {
        if (p == 0 && x == 0) {
            out_.push_back(r);
            return;
        }
        // pivot: vertex of p|x with most neighbours in p
        int pivot = -1, best = -1;
        for (int v : mask_elements(p | x)) {
            const int deg = std::popcount(p & adj_[v]);
            if (deg > best) best = deg, pivot = v;
        }
        for (int v : mask_elements(p & ~adj_[pivot])) {
            const Mask bit = Mask{1} << v;
            expand(r | bit, p & adj_[v], x & adj_[v]);
            p &= ~bit;
            x |= bit;
        }
    }

    const FiniteJoinStructure& s_;
    Mask vertices_ = 0;
    std::vector<Mask> adj_;
    std::vector<Mask> out_;
};

// Every presentation of `target` has a summand in `picked` iff the join of
// the nonzero elements below `target` and outside `picked` falls short of
// `target` (otherwise those elements themselves form an avoiding
// presentation).
bool hits_all_presentations(const FiniteJoinStructure& s, Mask picked, int target) {
    const Mask avoid = s.downset(target) & ~picked & ~(Mask{1} << s.zero());
    return s.join_mask(avoid) != target;
}

// Self-contacting nonzero elements, the only legal picks.
Mask self_contact_vertices(const FiniteJoinStructure& s) {
    Mask v = 0;
    for (int e = 0; e < s.size(); ++e)
        if (e != s.zero() && s.contact(e, e)) v |= Mask{1} << e;
    return v;
}

void require_axioms_9_10(const FiniteJoinStructure& s) {
    const AxiomReport r = check_contact_axioms(s);
    if (!r.no_contact_with_zero.pass || !r.symmetry.pass)
        throw std::invalid_argument("schema check requires axioms (9) and (10)");
}

// The full choice system for the upper bounds in `ubs` is satisfiable iff
// some maximal contact clique M within `vertices` contains all of them
// (their trivial presentations force membership) and hits every
// presentation of each.
bool full_system_satisfiable(const FiniteJoinStructure& s, Mask vertices, Mask ubs) {
    if ((ubs & ~vertices) != 0) return false;
    CliqueEnumerator ce(s, vertices);
    for (Mask m : ce.maximal_cliques_containing(ubs)) {
        bool ok = true;
        for (int t : mask_elements(ubs))
            if (!hits_all_presentations(s, m, t)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

SchemaResult check_schema_A1(const FiniteJoinStructure& s) {
    require_axioms_9_10(s);
    const Mask vertices = self_contact_vertices(s);
    for (int x = 0; x < s.size(); ++x)
        for (int y = x; y < s.size(); ++y) {
            if (!s.contact(x, y)) continue;
            if (!full_system_satisfiable(s, vertices, s.upset(x) | s.upset(y)))
                return {false, x, y};
        }
    return {};
}

SchemaResult check_schema_A(const FiniteJoinStructure& s) {
    require_axioms_9_10(s);
    const Mask vertices = self_contact_vertices(s);
    for (int t = 0; t < s.size(); ++t)
        for (int u = 0; u < s.size(); ++u) {
            if (s.leq(t, u)) continue;
            Mask allowed = vertices;
            for (int v = 0; v < s.size(); ++v)
                if (s.leq(v, u)) allowed &= ~(Mask{1} << v);
            if (!full_system_satisfiable(s, allowed, s.upset(t))) return {false, t, u};
        }
    return {};
}

bool is_ideal(const FiniteJoinStructure& s, Mask a) {
    if (a == 0) return false;
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            const bool in_both = (a >> x & 1) && (a >> y & 1);
            const bool join_in = a >> s.join(x, y) & 1;
            if (join_in != in_both) return false;
        }
    return true;
}

bool is_dual_ideal(const FiniteJoinStructure& s, Mask a) {
    for (int x : mask_elements(a)) {
        if ((s.upset(x) & ~a) != 0) return false;
        for (int y : mask_elements(a)) {
            const Mask lower = s.downset(x) & s.downset(y) & a;
            if (lower == 0) return false;
        }
    }
    return true;
}

bool is_prime_ideal(const FiniteJoinStructure& s, Mask a) {
    return is_ideal(s, a) && a != s.full_mask() && is_dual_ideal(s, s.full_mask() & ~a);
}

namespace {

// Conditions 1,2,3,5 of a clan: contains one, excludes zero, upward closed,
// splits every join. Shared by clans and abstract points.
bool is_grill(const FiniteJoinStructure& s, Mask a) {
    if (!(a >> s.one() & 1)) return false;
    if (a >> s.zero() & 1) return false;
    for (int x : mask_elements(a))
        if ((s.upset(x) & ~a) != 0) return false;
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if ((a >> s.join(x, y) & 1) && !(a >> x & 1) && !(a >> y & 1)) return false;
    return true;
}

}  // namespace

bool is_clan(const FiniteJoinStructure& s, Mask a) {
    if (!is_grill(s, a)) return false;
    for (int x : mask_elements(a))
        for (int y : mask_elements(a))
            if (!s.contact(x, y)) return false;
    return true;
}

bool is_abstract_point(const FiniteJoinStructure& s, Mask a) {
    if (!is_grill(s, a)) return false;
    for (int x : mask_elements(a))
        for (int y : mask_elements(a))
            if ((s.downset(x) & s.downset(y) & a) == 0) return false;
    return true;
}

SubsetKinds classify_subset(const FiniteJoinStructure& s, Mask a) {
    SubsetKinds k;
    k.ideal = is_ideal(s, a);
    k.dual_ideal = is_dual_ideal(s, a);
    k.prime_ideal = is_prime_ideal(s, a);
    k.clan = is_clan(s, a);
    k.abstract_point = is_abstract_point(s, a);
    return k;
}

std::vector<Mask> enumerate_clans(const FiniteJoinStructure& s) {
    std::vector<Mask> out;
    const Mask one_bit = Mask{1} << s.one();
    const Mask zero_bit = Mask{1} << s.zero();
    for (Mask a = 0; a <= s.full_mask(); ++a) {
        if (!(a & one_bit) || (a & zero_bit)) continue;
        if (is_clan(s, a)) out.push_back(a);
        if (a == s.full_mask()) break;
    }
    return out;
}

std::vector<Mask> enumerate_abstract_points(const FiniteJoinStructure& s) {
    std::vector<Mask> out;
    const Mask one_bit = Mask{1} << s.one();
    const Mask zero_bit = Mask{1} << s.zero();
    for (Mask a = 0; a <= s.full_mask(); ++a) {
        if (!(a & one_bit) || (a & zero_bit)) continue;
        if (is_abstract_point(s, a)) out.push_back(a);
        if (a == s.full_mask()) break;
    }
    return out;
}

std::optional<Mask> find_clan_containing(const FiniteJoinStructure& s, int t, int t1) {
    if (!s.contact(t, t1)) return std::nullopt;
    const Mask want = (Mask{1} << t) | (Mask{1} << t1);
    for (Mask c : enumerate_clans(s))
        if ((c & want) == want) return c;
    return std::nullopt;
}

std::optional<Mask> find_clan_separating(const FiniteJoinStructure& s, int t, int u) {
    if (s.leq(t, u)) return std::nullopt;
    for (Mask c : enumerate_clans(s))
        if ((c >> t & 1) && !(c >> u & 1)) return c;
    return std::nullopt;
}

std::optional<Mask> separating_prime_ideal(const FiniteJoinStructure& s, Mask ideal,
                                           Mask dual_ideal) {
    if (!is_ideal(s, ideal))
        throw std::invalid_argument("separating_prime_ideal: first argument is not an ideal");
    if (dual_ideal == 0 || !is_dual_ideal(s, dual_ideal))
        throw std::invalid_argument(
            "separating_prime_ideal: second argument is not a nonvoid dual ideal");
    if ((ideal & dual_ideal) != 0)
        throw std::invalid_argument("separating_prime_ideal: ideal and dual ideal intersect");
    for (Mask p = 0; p <= s.full_mask(); ++p) {
        if ((p & ideal) == ideal && (p & dual_ideal) == 0 && is_prime_ideal(s, p)) return p;
        if (p == s.full_mask()) break;
    }
    return std::nullopt;
}

std::optional<Mask> point_inside_clan(const FiniteJoinStructure& s, Mask clan, int a) {
    if (!is_clan(s, clan)) throw std::invalid_argument("point_inside_clan: not a clan");
    if (!(clan >> a & 1)) throw std::invalid_argument("point_inside_clan: a is not in the clan");
    const Mask ideal = s.full_mask() & ~clan;
    const auto prime = separating_prime_ideal(s, ideal, s.upset(a));
    if (!prime) return std::nullopt;
    const Mask u = s.full_mask() & ~*prime;
    if (!is_abstract_point(s, u)) return std::nullopt;
    return u;
}

std::optional<std::vector<Mask>> clan_decomposition(const FiniteJoinStructure& s, Mask clan) {
    std::vector<Mask> sigma;
    for (int a : mask_elements(clan)) {
        const auto u = point_inside_clan(s, clan, a);
        if (!u) return std::nullopt;
        sigma.push_back(*u);
    }
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    return sigma;
}

}  // namespace cjs
