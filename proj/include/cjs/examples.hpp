#pragma once

#include <string>
#include <vector>

#include "cjs/structure.hpp"

namespace cjs {

/// Structure over a union-closed family of subsets of W (must contain the
/// empty set and W): join is union, contact is overlap. Elements are named
/// "{p,q,...}" and ordered by (size, bitmask). Throws StructureError on a
/// closure violation, naming the witness pair.
FiniteJoinStructure family_cjs(const std::vector<std::string>& points,
                               const std::vector<Mask>& family);

/// Same carrier but contact induced by a reflexive symmetric relation on
/// the points: aCb iff some x in a and y in b with xRy. Throws when R is
/// not reflexive or not symmetric.
FiniteJoinStructure relational_structure(const std::vector<std::string>& points,
                                         const std::vector<std::pair<int, int>>& relation,
                                         const std::vector<Mask>& family);

/// A finite topology given by its full open-set family.
struct FiniteTopology {
    std::vector<std::string> points;
    std::vector<Mask> opens;

    /// Checks that opens contains the empty and full sets and is closed
    /// under union and intersection. Throws StructureError otherwise.
    static FiniteTopology validate(std::vector<std::string> points, std::vector<Mask> opens);

    Mask full() const { return points.empty() ? 0 : (Mask{1} << points.size()) - 1; }
    Mask interior(Mask a) const;
    Mask closure(Mask a) const;
};

/// A join structure extended with meet and complement tables; the carrier
/// is expected to obey the Boolean-algebra laws (checked separately).
struct ContactAlgebraStructure {
    FiniteJoinStructure structure;
    std::vector<int> meet;        // size n*n
    std::vector<int> complement;  // size n

    int meet_of(int a, int b) const { return meet[a * structure.size() + b]; }
};

/// The contact algebra of regular closed sets of a finite topology: join is
/// union, meet is the closure of the interior of the intersection,
/// complement is the closure of the set complement, contact is overlap.
ContactAlgebraStructure finite_topology_rc(const FiniteTopology& t);

struct LawClause {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct ContactAlgebraReport {
    std::vector<LawClause> clauses;
    bool boolean_laws = false;
    bool contact_axioms = false;  // (C1)-(C5)
    bool reduct_is_dcjs = false;
    bool all_pass() const { return boolean_laws && contact_axioms && reduct_is_dcjs; }
};

/// Verifies the complemented-distributive-lattice laws, (C1)-(C5), and that
/// the join/contact reduct passes the DCJS check.
ContactAlgebraReport check_contact_algebra(const ContactAlgebraStructure& a);

/// The 7-element family over {1,2,3,4} that is a CJS but not a DCJS.
FiniteJoinStructure fixture_pr2nn();

/// Full powerset structure over named points with overlap contact.
FiniteJoinStructure powerset_cjs(const std::vector<std::string>& points);

}  // namespace cjs
