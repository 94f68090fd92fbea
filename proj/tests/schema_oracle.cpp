#include "schema_oracle.hpp"

#include <set>

namespace oracle {

using cjs::FiniteJoinStructure;
using cjs::Mask;

std::vector<std::vector<int>> literal_presentations(const FiniteJoinStructure& s, int target) {
    std::vector<std::vector<int>> out;
    const Mask full = s.full_mask();
    for (Mask m = 1; m <= full; ++m) {
        if (s.join_mask(m) != target) continue;
        std::vector<int> summands;
        for (int e = 0; e < s.size(); ++e)
            if (m >> e & 1) summands.push_back(e);
        out.push_back(std::move(summands));
    }
    return out;
}

bool instance_solvable(const FiniteJoinStructure& s, const std::vector<std::vector<int>>& joins,
                       int forbidden_u) {
    // state: (next join index, set of elements chosen so far); the chosen
    // set is pairwise in contact by construction, so only failed states
    // need remembering
    std::set<std::pair<size_t, Mask>> dead;
    auto solve = [&](auto&& self, size_t idx, Mask chosen) -> bool {
        if (idx == joins.size()) return true;
        if (dead.count({idx, chosen})) return false;
        for (int pick : joins[idx]) {
            if (forbidden_u >= 0 && s.leq(pick, forbidden_u)) continue;
            if (!s.contact(pick, pick)) continue;
            bool compatible = true;
            for (int e = 0; e < s.size() && compatible; ++e)
                if ((chosen >> e & 1) && !s.contact(pick, e)) compatible = false;
            if (!compatible) continue;
            if (self(self, idx + 1, chosen | (Mask{1} << pick))) return true;
        }
        dead.insert({idx, chosen});
        return false;
    };
    return solve(solve, 0, 0);
}

namespace {

std::vector<std::vector<int>> upper_bound_system(const FiniteJoinStructure& s, int x) {
    std::vector<std::vector<int>> joins;
    for (int ub = 0; ub < s.size(); ++ub) {
        if (!s.leq(x, ub)) continue;
        for (auto& p : literal_presentations(s, ub)) joins.push_back(std::move(p));
    }
    return joins;
}

}  // namespace

bool schema_A1_holds(const FiniteJoinStructure& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y = x; y < s.size(); ++y) {
            if (!s.contact(x, y)) continue;
            std::vector<std::vector<int>> joins = upper_bound_system(s, x);
            for (auto& p : upper_bound_system(s, y)) joins.push_back(std::move(p));
            if (!instance_solvable(s, joins, -1)) return false;
        }
    return true;
}

bool schema_A_holds(const FiniteJoinStructure& s) {
    for (int t = 0; t < s.size(); ++t)
        for (int u = 0; u < s.size(); ++u) {
            if (s.leq(t, u)) continue;
            if (!instance_solvable(s, upper_bound_system(s, t), u)) return false;
        }
    return true;
}

}  // namespace oracle
