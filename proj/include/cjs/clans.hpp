#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cjs/structure.hpp"

namespace cjs {

/// An element together with a nonempty set of summands joining to it.
/// Zero never appears as a summand unless the target is zero.
struct Presentation {
    int target = -1;
    std::vector<int> summands;  // sorted by element index
};

/// All presentations of s: every subset of nonzero elements whose join is s
/// (including the trivial {s}); for s = 0 the single presentation {0}.
/// Ordered by summand-set bitmask.
std::vector<Presentation> presentations(const FiniteJoinStructure& s, int target);

/// Side constraint on the elements a choice function may pick.
struct ChoiceConstraint {
    enum class Kind { None, NotBelow };
    Kind kind = Kind::None;
    int u = -1;

    static ChoiceConstraint none() { return {}; }
    static ChoiceConstraint not_below(int u) { return {Kind::NotBelow, u}; }
};

/// Picks one summand per presentation (groups are flattened in order) so
/// that all picked elements are pairwise in contact, self-contact included,
/// and each satisfies the side constraint. Exhaustive backtracking; first
/// solution in summand order. std::nullopt when unsatisfiable.
std::optional<std::vector<int>> solve_choice_system(
    const FiniteJoinStructure& s, const std::vector<std::vector<Presentation>>& groups,
    const ChoiceConstraint& constraint = ChoiceConstraint::none());

/// Schema verdict: pass or the first violating pair in element order.
struct SchemaResult {
    bool pass = true;
    int a = -1, b = -1;
};

/// Axiom schema (14): for every contact pair (x,y) the full choice system
/// over all presentations of all upper bounds of x and of y must be
/// satisfiable. Requires axioms (9) and (10) (throws std::invalid_argument).
SchemaResult check_schema_A1(const FiniteJoinStructure& s);

/// Axiom schema (15): for every t not below u, the full choice system over
/// all presentations of all upper bounds of t with side constraint
/// not-below(u) must be satisfiable. Requires axioms (9) and (10).
SchemaResult check_schema_A(const FiniteJoinStructure& s);

/// Flag set a carrier subset can satisfy.
struct SubsetKinds {
    bool ideal = false;
    bool dual_ideal = false;
    bool prime_ideal = false;
    bool clan = false;
    bool abstract_point = false;
};

bool is_ideal(const FiniteJoinStructure& s, Mask a);
bool is_dual_ideal(const FiniteJoinStructure& s, Mask a);
bool is_prime_ideal(const FiniteJoinStructure& s, Mask a);
bool is_clan(const FiniteJoinStructure& s, Mask a);
bool is_abstract_point(const FiniteJoinStructure& s, Mask a);

SubsetKinds classify_subset(const FiniteJoinStructure& s, Mask a);

/// All clans, in ascending bitmask order.
std::vector<Mask> enumerate_clans(const FiniteJoinStructure& s);
/// All abstract points, in ascending bitmask order.
std::vector<Mask> enumerate_abstract_points(const FiniteJoinStructure& s);

/// First clan containing both t and t1; exists for every contact pair of a
/// CJS. std::nullopt when the goal is unsatisfiable (in particular when the
/// precondition tCt1 fails).
std::optional<Mask> find_clan_containing(const FiniteJoinStructure& s, int t, int t1);

/// First clan with t inside and u outside; exists whenever t is not below u
/// in a CJS. std::nullopt when unsatisfiable.
std::optional<Mask> find_clan_separating(const FiniteJoinStructure& s, int t, int u);

/// First prime ideal containing the ideal I and disjoint from the nonvoid
/// dual ideal F. Preconditions are checked (std::invalid_argument).
/// std::nullopt can occur only for non-distributive structures.
std::optional<Mask> separating_prime_ideal(const FiniteJoinStructure& s, Mask ideal,
                                           Mask dual_ideal);

/// Abstract point U with a in U and U inside the clan, built as the
/// complement of a prime ideal extending the clan's complement and avoiding
/// the upset of a. std::nullopt signals the structure is not a DCJS.
std::optional<Mask> point_inside_clan(const FiniteJoinStructure& s, Mask clan, int a);

/// Set of abstract points covering the clan with pairwise cross-contact.
/// std::nullopt when some member has no inside point (non-DCJS).
std::optional<std::vector<Mask>> clan_decomposition(const FiniteJoinStructure& s, Mask clan);

/// Elements of a mask in ascending index order.
std::vector<int> mask_elements(Mask m);

}  // namespace cjs
