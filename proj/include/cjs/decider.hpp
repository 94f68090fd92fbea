#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cjs/formula.hpp"
#include "cjs/structure.hpp"

namespace cjs {

/// Relabeling-invariant encoding: minimum over all element permutations
/// fixing 0 and 1 of the join table concatenated with the contact matrix.
/// Equal encodings iff isomorphic.
std::vector<int> canonical_form(const FiniteJoinStructure& s);

enum class StructureKind { Raw, Cjs, Dcjs };

struct EnumerationCursor {
    int max_size = 1;
    StructureKind kind = StructureKind::Cjs;
};

/// All structures of size 1..max_size, one per isomorphism class, filtered
/// by kind, ordered by (size, canonical form). Raw means any bounded join
/// structure passing validation.
std::vector<FiniteJoinStructure> enumerate_structures(const EnumerationCursor& cursor);

/// Memo of enumerate_structures keyed by (size, kind).
class StructureCatalog {
public:
    const std::vector<FiniteJoinStructure>& of_size(int size, StructureKind kind);

private:
    std::map<std::pair<int, int>, std::vector<FiniteJoinStructure>> memo_;
};

enum class Verdict { Valid, Invalid, Inconclusive };

struct DecisionStats {
    long long structures_examined = 0;
    long long work_units = 0;  // (structure, valuation) evaluations
};

struct DecisionResult {
    Verdict verdict = Verdict::Valid;
    std::optional<FiniteJoinStructure> counterexample;
    Valuation valuation;  // set when invalid
    DecisionStats stats;
    std::string note;  // for inconclusive: which cap was hit
};

enum class DecideMode { Reference, Generated };

struct DecideLimits {
    int max_reference_carrier = 5;  // reference mode cap on 2^n+1
    int max_generated_vars = 3;     // generated mode cap on n
};

/// Validity of φ over all CJS; the small-model bound is 2^n+1 elements
/// where n counts φ's variables. Reference mode enumerates all CJS up to
/// isomorphism within the bound and all valuations; generated mode
/// enumerates quotients of the 2^n+1-element term skeleton and checks the
/// canonical generator valuation only. An invalid result carries the first
/// counterexample in enumeration order, re-verified before returning.
DecisionResult decide(const FormulaPtr& f, DecideMode mode = DecideMode::Generated,
                      StructureCatalog* catalog = nullptr, const DecideLimits& limits = {});

/// The reference search restricted to structures passing the DCJS check.
/// The verdict always matches decide; exposed for cross-validation.
DecisionResult decide_restricted_dcjs(const FormulaPtr& f, StructureCatalog* catalog = nullptr,
                                      const DecideLimits& limits = {});

/// Deterministic in (size, seed): rejection-samples join tables and contact
/// sets until the kind's checks pass. Throws std::runtime_error when the
/// retry budget runs out.
FiniteJoinStructure random_structure(int size, std::uint64_t seed, StructureKind kind);

}  // namespace cjs
