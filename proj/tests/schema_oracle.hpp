#pragma once

#include "cjs/structure.hpp"

// Literal bounded-instance oracle for the axiom schemas (14) and (15),
// kept independent of the library's clan machinery: it enumerates explicit
// presentation lists (joins may include zero and repeats) and solves the
// choice problem by memoized search over chosen-element sets. The full
// instance (every presentation of every upper bound) is the hardest one:
// any other instance is a sub- or padded variant of it, so its
// satisfiability decides the whole schema family.
namespace oracle {

bool schema_A1_holds(const cjs::FiniteJoinStructure& s);
bool schema_A_holds(const cjs::FiniteJoinStructure& s);

// Satisfiability of one explicit instance: pick one summand per
// presentation, all pairwise in contact (self included), each not below
// forbidden_u when forbidden_u >= 0.
bool instance_solvable(const cjs::FiniteJoinStructure& s,
                       const std::vector<std::vector<int>>& joins, int forbidden_u);

// Every nonempty summand list (as a subset, zero allowed) joining to the
// target.
std::vector<std::vector<int>> literal_presentations(const cjs::FiniteJoinStructure& s,
                                                    int target);

}  // namespace oracle
