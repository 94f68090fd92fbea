#include "cjs/decider.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace cjs {

namespace {

std::vector<int> encode_with(const FiniteJoinStructure& s, const std::vector<int>& relabel) {
    const int n = s.size();
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[relabel[i]] = i;
    std::vector<int> out;
    out.reserve(2 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(relabel[s.join(inverse[i], inverse[j])]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(s.contact(inverse[i], inverse[j]) ? 1 : 0);
    return out;
}

bool check_transitive(const std::vector<char>& leq, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!leq[a * n + b]) continue;
            for (int c = 0; c < n; ++c)
                if (leq[b * n + c] && !leq[a * n + c]) return false;
        }
    return true;
}

// Least upper bounds for a reflexive transitive antisymmetric leq with top
// n-1; empty result when some pair has no least upper bound.
std::vector<int> join_table_of(const std::vector<char>& leq, int n) {
    std::vector<int> join(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            int lub = -1;
            for (int u = 0; u < n; ++u) {
                if (!leq[a * n + u] || !leq[b * n + u]) continue;
                bool least = true;
                for (int w = 0; w < n; ++w)
                    if (leq[a * n + w] && leq[b * n + w] && !leq[u * n + w]) {
                        least = false;
                        break;
                    }
                if (least) {
                    lub = u;
                    break;
                }
            }
            if (lub < 0) return {};
            join[a * n + b] = join[b * n + a] = lub;
        }
    return join;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    if (n == 1) return {"0"};
    names.push_back("0");
    for (int i = 1; i + 1 < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    names.push_back("1");
    return names;
}

// Orders on labels 0..n-1 compatible with the index order, bottom 0 and top
// n-1; every finite lattice admits such a labeling. Middle pairs (i, j) with
// 1 <= i < j <= n-2 are the free bits.
class OrderEnumerator {
public:
    explicit OrderEnumerator(int n) : n_(n) {
        for (int i = 1; i + 1 < n_; ++i)
            for (int j = i + 1; j + 1 < n_; ++j) free_pairs_.push_back({i, j});
    }

    long long count() const { return 1LL << free_pairs_.size(); }

    // Join table for the bits-th candidate, or empty when it is not a lattice.
    std::vector<int> join_for(long long bits) const {
        std::vector<char> leq(static_cast<size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i) {
            leq[i * n_ + i] = 1;
            leq[0 * n_ + i] = 1;
            leq[i * n_ + (n_ - 1)] = 1;
        }
        for (size_t k = 0; k < free_pairs_.size(); ++k)
            if (bits >> k & 1) leq[free_pairs_[k].first * n_ + free_pairs_[k].second] = 1;
        if (!check_transitive(leq, n_)) return {};
        return join_table_of(leq, n_);
    }

private:
    int n_;
    std::vector<std::pair<int, int>> free_pairs_;
};

std::vector<std::pair<int, int>> nonzero_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < n; ++a)
        for (int b = a; b < n; ++b) pairs.push_back({a, b});
    return pairs;
}

bool kind_accepts(StructureKind kind, const FiniteJoinStructure& s) {
    if (kind == StructureKind::Raw) return true;
    const Classification c = classify(s);
    return kind == StructureKind::Cjs ? c.is_cjs : c.is_dcjs;
}

std::vector<FiniteJoinStructure> enumerate_of_size(int n, StructureKind kind) {
    std::map<std::vector<int>, FiniteJoinStructure> seen;
    OrderEnumerator orders(n);
    const auto pairs = nonzero_pairs(n);
    for (long long bits = 0; bits < orders.count(); ++bits) {
        const std::vector<int> join = orders.join_for(bits);
        if (join.empty()) continue;
        for (Mask cm = 0; cm < (Mask{1} << pairs.size()); ++cm) {
            std::vector<char> contact(static_cast<size_t>(n) * n, 0);
            for (size_t k = 0; k < pairs.size(); ++k)
                if (cm >> k & 1) {
                    contact[pairs[k].first * n + pairs[k].second] = 1;
                    contact[pairs[k].second * n + pairs[k].first] = 1;
                }
            FiniteJoinStructure s = FiniteJoinStructure::from_tables(
                default_names(n), 0, n - 1, std::vector<int>(join), std::move(contact));
            if (!kind_accepts(kind, s)) continue;
            std::vector<int> key = canonical_form(s);
            seen.emplace(std::move(key), std::move(s));
            if (pairs.empty()) break;
        }
    }
    std::vector<FiniteJoinStructure> out;
    out.reserve(seen.size());
    for (auto& [key, s] : seen) out.push_back(std::move(s));
    return out;
}

}  // namespace

std::vector<int> canonical_form(const FiniteJoinStructure& s) {
    const int n = s.size();
    std::vector<int> middles;
    for (int i = 0; i < n; ++i)
        if (i != s.zero() && i != s.one()) middles.push_back(i);
    std::sort(middles.begin(), middles.end());

    std::vector<int> best;
    std::vector<int> relabel(n);
    do {
        relabel[s.zero()] = 0;
        if (s.one() != s.zero()) relabel[s.one()] = n - 1;
        for (size_t k = 0; k < middles.size(); ++k) relabel[middles[k]] = 1 + static_cast<int>(k);
        std::vector<int> enc = encode_with(s, relabel);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(middles.begin(), middles.end()));
    return best;
}

std::vector<FiniteJoinStructure> enumerate_structures(const EnumerationCursor& cursor) {
    if (cursor.max_size < 1) throw std::invalid_argument("size bound must be at least 1");
    std::vector<FiniteJoinStructure> out;
    for (int n = 1; n <= cursor.max_size; ++n) {
        std::vector<FiniteJoinStructure> batch = enumerate_of_size(n, cursor.kind);
        for (auto& s : batch) out.push_back(std::move(s));
    }
    return out;
}

const std::vector<FiniteJoinStructure>& StructureCatalog::of_size(int size, StructureKind kind) {
    const auto key = std::make_pair(size, static_cast<int>(kind));
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, enumerate_of_size(size, kind)).first;
    return it->second;
}

namespace {

// Reference search: every structure within the bound, every valuation.
DecisionResult decide_by_enumeration(const FormulaPtr& f, StructureKind kind,
                                     StructureCatalog& catalog, const DecideLimits& limits) {
    const std::vector<std::string> vars = variables(f);
    const int bound = (1 << vars.size()) + 1;
    DecisionResult result;
    if (bound > limits.max_reference_carrier) {
        result.verdict = Verdict::Inconclusive;
        result.note = "small-model bound " + std::to_string(bound) +
                      " exceeds the carrier cap " + std::to_string(limits.max_reference_carrier);
        return result;
    }
    for (int size = 1; size <= bound; ++size) {
        for (const FiniteJoinStructure& s : catalog.of_size(size, kind)) {
            ++result.stats.structures_examined;
            std::vector<int> assign(vars.size(), 0);
            while (true) {
                Valuation v;
                for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = assign[i];
                ++result.stats.work_units;
                if (!eval_formula(s, v, f)) {
                    result.verdict = Verdict::Invalid;
                    result.counterexample = s;
                    result.valuation = std::move(v);
                    return result;
                }
                size_t k = 0;
                while (k < assign.size() && ++assign[k] == size) assign[k++] = 0;
                if (k == assign.size()) break;
            }
        }
    }
    result.verdict = Verdict::Valid;
    return result;
}

// --- generated mode ---------------------------------------------------
//
// The term skeleton on n generators has elements 0, the nonempty generator
// subsets (joined), and 1 strictly on top: 2^n+1 elements. Every model of
// size <= 2^n+1 reachable by a valuation is a quotient of the skeleton by
// the join-congruence induced by the valuation map, so enumerating the
// congruences and the canonical valuation v(p_i) = [{i}] covers every
// candidate countermodel shape.

struct Skeleton {
    int n_vars;
    int size;  // 2^n + 1; index 0 = zero, masks are their own index, last = one

    int join(int a, int b) const {
        if (a == size - 1 || b == size - 1) return size - 1;
        return a | b;
    }
};

struct Quotient {
    int classes = 0;
    std::vector<int> cls;   // skeleton index -> class
    std::vector<int> join;  // classes x classes
    std::vector<char> leq;
    std::vector<Mask> down;  // downset per class
    int zero = 0, one = 0;
};

bool is_congruence(const Skeleton& sk, const std::vector<int>& rgs) {
    for (int a = 0; a < sk.size; ++a)
        for (int b = a + 1; b < sk.size; ++b) {
            if (rgs[a] != rgs[b]) continue;
            for (int c = 0; c < sk.size; ++c)
                if (rgs[sk.join(a, c)] != rgs[sk.join(b, c)]) return false;
        }
    return true;
}

Quotient build_quotient(const Skeleton& sk, const std::vector<int>& rgs) {
    Quotient q;
    q.cls = rgs;
    q.classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<int> rep(q.classes, -1);
    for (int i = sk.size - 1; i >= 0; --i) rep[rgs[i]] = i;
    q.join.assign(static_cast<size_t>(q.classes) * q.classes, 0);
    for (int p = 0; p < q.classes; ++p)
        for (int r = 0; r < q.classes; ++r) q.join[p * q.classes + r] = rgs[sk.join(rep[p], rep[r])];
    q.leq.assign(static_cast<size_t>(q.classes) * q.classes, 0);
    q.down.assign(q.classes, 0);
    for (int p = 0; p < q.classes; ++p)
        for (int r = 0; r < q.classes; ++r)
            if (q.join[p * q.classes + r] == r) {
                q.leq[p * q.classes + r] = 1;
                q.down[r] |= Mask{1} << p;
            }
    q.zero = rgs[0];
    q.one = rgs[sk.size - 1];
    return q;
}

struct ContactAtomTable {
    std::vector<std::pair<int, int>> pairs;  // normalized (min, max), first occurrence order
    std::vector<bool> truth;

    int index_of(int a, int b) {
        if (a > b) std::swap(a, b);
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::make_pair(a, b)) return static_cast<int>(i);
        pairs.push_back({a, b});
        truth.push_back(false);
        return static_cast<int>(pairs.size()) - 1;
    }
};

int eval_term_q(const Quotient& q, const std::vector<int>& var_value,
                const std::vector<std::string>& vars, const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Zero: return q.zero;
        case Term::Kind::One: return q.one;
        case Term::Kind::Var: {
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == t->var) return var_value[i];
            return q.zero;
        }
        case Term::Kind::Join: {
            const int l = eval_term_q(q, var_value, vars, t->left);
            const int r = eval_term_q(q, var_value, vars, t->right);
            return q.join[l * q.classes + r];
        }
    }
    return q.zero;
}

// collect_atoms fills the pair table; eval_q then reads truths from it.
void collect_atoms(const Quotient& q, const std::vector<int>& var_value,
                   const std::vector<std::string>& vars, const FormulaPtr& f,
                   ContactAtomTable& table) {
    if (f->kind == Formula::Kind::Atom) {
        if (f->rel == Rel::Contact)
            table.index_of(eval_term_q(q, var_value, vars, f->lhs),
                           eval_term_q(q, var_value, vars, f->rhs));
        return;
    }
    if (f->left) collect_atoms(q, var_value, vars, f->left, table);
    if (f->right) collect_atoms(q, var_value, vars, f->right, table);
}

bool eval_q(const Quotient& q, const std::vector<int>& var_value,
            const std::vector<std::string>& vars, const FormulaPtr& f, ContactAtomTable& table) {
    switch (f->kind) {
        case Formula::Kind::Atom: {
            const int l = eval_term_q(q, var_value, vars, f->lhs);
            const int r = eval_term_q(q, var_value, vars, f->rhs);
            switch (f->rel) {
                case Rel::Leq: return q.leq[l * q.classes + r] != 0;
                case Rel::Eq:
                    return q.leq[l * q.classes + r] != 0 && q.leq[r * q.classes + l] != 0;
                case Rel::Contact: return table.truth[table.index_of(l, r)];
            }
            return false;
        }
        case Formula::Kind::Not: return !eval_q(q, var_value, vars, f->left, table);
        case Formula::Kind::And:
            return eval_q(q, var_value, vars, f->left, table) &&
                   eval_q(q, var_value, vars, f->right, table);
        case Formula::Kind::Or:
            return eval_q(q, var_value, vars, f->left, table) ||
                   eval_q(q, var_value, vars, f->right, table);
        case Formula::Kind::Implies:
            return !eval_q(q, var_value, vars, f->left, table) ||
                   eval_q(q, var_value, vars, f->right, table);
        case Formula::Kind::Iff:
            return eval_q(q, var_value, vars, f->left, table) ==
                   eval_q(q, var_value, vars, f->right, table);
    }
    return false;
}

// Grills: 1 in G, 0 not in G, up-closed, join-splitting. A grill made
// pairwise-contacting is a clan, and a union of clan squares is a CJS
// contact, so feasibility of a partial contact assignment reduces to
// finding covering grills.
std::vector<Mask> grills_avoiding(const Quotient& q,
                                  const std::vector<std::pair<int, int>>& false_pairs) {
    std::vector<Mask> out;
    const Mask limit = q.classes == 32 ? ~Mask{0} : ((Mask{1} << q.classes) - 1);
    for (Mask g = 0; g <= limit; ++g) {
        if (!(g >> q.one & 1) || (g >> q.zero & 1)) {
            if (g == limit) break;
            continue;
        }
        bool ok = true;
        for (int x = 0; x < q.classes && ok; ++x) {
            if (!(g >> x & 1)) continue;
            for (int y = 0; y < q.classes; ++y)
                if (q.leq[x * q.classes + y] && !(g >> y & 1)) {
                    ok = false;
                    break;
                }
        }
        for (int x = 0; x < q.classes && ok; ++x)
            for (int y = x; y < q.classes && ok; ++y) {
                const int j = q.join[x * q.classes + y];
                if ((g >> j & 1) && !(g >> x & 1) && !(g >> y & 1)) ok = false;
            }
        for (const auto& [a, b] : false_pairs)
            if ((g >> a & 1) && (g >> b & 1)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
        if (g == limit) break;
    }
    return out;
}

struct Feasibility {
    bool ok = false;
    std::vector<Mask> grills;
};

Feasibility feasible_contact(const Quotient& q, const ContactAtomTable& table) {
    std::vector<std::pair<int, int>> false_pairs, true_pairs;
    for (size_t i = 0; i < table.pairs.size(); ++i)
        (table.truth[i] ? true_pairs : false_pairs).push_back(table.pairs[i]);
    Feasibility out;
    out.grills = grills_avoiding(q, false_pairs);
    for (const auto& [a, b] : true_pairs) {
        bool covered = false;
        for (Mask g : out.grills)
            if ((g >> a & 1) && (g >> b & 1)) {
                covered = true;
                break;
            }
        if (!covered) return out;
    }
    for (int u = 0; u < q.classes; ++u)
        for (int t = 0; t < q.classes; ++t) {
            if (q.leq[t * q.classes + u]) continue;
            bool separated = false;
            for (Mask g : out.grills)
                if ((g >> t & 1) && (g & q.down[u]) == 0) {
                    separated = true;
                    break;
                }
            if (!separated) return out;
        }
    out.ok = true;
    return out;
}

std::string class_name(const Skeleton& sk, const std::vector<int>& rgs, int cls,
                       const std::vector<std::string>& vars) {
    int member = -1;
    for (int i = 0; i < sk.size; ++i)
        if (rgs[i] == cls) {
            member = i;
            break;
        }
    if (member == 0) return "0";
    if (member == sk.size - 1) return "1";
    std::string name;
    for (int i = 0; i < sk.n_vars; ++i)
        if (member >> i & 1) {
            if (!name.empty()) name += "+";
            name += vars[i];
        }
    return name;
}

FiniteJoinStructure realize(const Skeleton& sk, const std::vector<int>& rgs, const Quotient& q,
                            const std::vector<Mask>& grills,
                            const std::vector<std::string>& vars) {
    std::vector<std::string> names;
    for (int c = 0; c < q.classes; ++c) names.push_back(class_name(sk, rgs, c, vars));
    std::vector<char> contact(static_cast<size_t>(q.classes) * q.classes, 0);
    for (Mask g : grills)
        for (int a = 0; a < q.classes; ++a) {
            if (!(g >> a & 1)) continue;
            for (int b = 0; b < q.classes; ++b)
                if (g >> b & 1) contact[a * q.classes + b] = 1;
        }
    return FiniteJoinStructure::from_tables(std::move(names), q.zero, q.one,
                                            std::vector<int>(q.join), std::move(contact));
}

DecisionResult decide_generated(const FormulaPtr& f, const DecideLimits& limits) {
    const std::vector<std::string> vars = variables(f);
    const int n = static_cast<int>(vars.size());
    DecisionResult result;
    if (n > limits.max_generated_vars) {
        result.verdict = Verdict::Inconclusive;
        result.note = "formula has " + std::to_string(n) + " variables; generated mode cap is " +
                      std::to_string(limits.max_generated_vars);
        return result;
    }
    const Skeleton sk{n, (1 << n) + 1};

    std::vector<int> canonical_value(n);

    // restricted growth strings enumerate set partitions of the skeleton
    std::vector<int> rgs(sk.size, 0);
    while (true) {
        if (is_congruence(sk, rgs)) {
            ++result.stats.structures_examined;
            const Quotient q = build_quotient(sk, rgs);
            for (int i = 0; i < n; ++i) canonical_value[i] = rgs[1 << i];

            ContactAtomTable table;
            collect_atoms(q, canonical_value, vars, f, table);
            const size_t k = table.pairs.size();
            if (k > 20) {
                result.verdict = Verdict::Inconclusive;
                result.note = "formula induces " + std::to_string(k) +
                              " distinct contact atoms; assignment cap is 20";
                return result;
            }
            for (Mask assign = 0; assign < (Mask{1} << k); ++assign) {
                for (size_t i = 0; i < k; ++i) table.truth[i] = (assign >> i & 1) != 0;
                ++result.stats.work_units;
                if (eval_q(q, canonical_value, vars, f, table)) continue;
                const Feasibility feas = feasible_contact(q, table);
                if (!feas.ok) continue;
                FiniteJoinStructure s = realize(sk, rgs, q, feas.grills, vars);
                Valuation v;
                for (int i = 0; i < n; ++i) v[vars[i]] = canonical_value[i];
                if (!classify(s).is_cjs || eval_formula(s, v, f)) continue;
                result.verdict = Verdict::Invalid;
                result.counterexample = std::move(s);
                result.valuation = std::move(v);
                return result;
            }
        }
        // next restricted growth string
        int i = sk.size - 1;
        while (i > 0) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
    result.verdict = Verdict::Valid;
    return result;
}

}  // namespace

DecisionResult decide(const FormulaPtr& f, DecideMode mode, StructureCatalog* catalog,
                      const DecideLimits& limits) {
    if (mode == DecideMode::Generated) return decide_generated(f, limits);
    StructureCatalog local;
    return decide_by_enumeration(f, StructureKind::Cjs, catalog ? *catalog : local, limits);
}

DecisionResult decide_restricted_dcjs(const FormulaPtr& f, StructureCatalog* catalog,
                                      const DecideLimits& limits) {
    StructureCatalog local;
    return decide_by_enumeration(f, StructureKind::Dcjs, catalog ? *catalog : local, limits);
}

FiniteJoinStructure random_structure(int size, std::uint64_t seed, StructureKind kind) {
    if (size < 1) throw std::invalid_argument("size must be at least 1");
    std::mt19937_64 rng(seed);
    OrderEnumerator orders(size);
    const auto pairs = nonzero_pairs(size);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        const long long bits = orders.count() == 1 ? 0 : static_cast<long long>(
                                   rng() % static_cast<std::uint64_t>(orders.count()));
        std::vector<int> join = orders.join_for(bits);
        if (join.empty()) continue;
        std::vector<char> contact(static_cast<size_t>(size) * size, 0);
        for (const auto& [a, b] : pairs)
            if (rng() % 2) {
                contact[a * size + b] = 1;
                contact[b * size + a] = 1;
            }
        FiniteJoinStructure s = FiniteJoinStructure::from_tables(default_names(size), 0, size - 1,
                                                                 std::move(join),
                                                                 std::move(contact));
        if (kind_accepts(kind, s)) return s;
    }
    throw std::runtime_error("random_structure: retry budget exhausted");
}

}  // namespace cjs
