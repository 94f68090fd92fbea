#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cjs/structure.hpp"

namespace cjs {

enum class TargetKind { Powerset, Relational };

/// How the relational representation materializes its points: direct scan
/// for abstract points, or complements of proper prime ideals (the
/// ideal-based route). Both yield the same point set.
enum class RelationalStrategy { ClanBased, PrimeIdeal };

/// An embedding of a structure into a powerset or relational target.
/// Points are carrier subsets (clans or abstract points); image(a) is the
/// sorted list of point indices whose region set contains a.
struct Embedding {
    TargetKind target = TargetKind::Powerset;
    std::vector<Mask> points;
    std::vector<std::string> point_names;
    std::vector<std::vector<char>> relation;  // point adjacency, relational targets only
    std::vector<std::vector<int>> image;      // element -> sorted point indices

    bool target_contact(int a, int b) const;
    bool image_contains(int element, int point) const;
};

/// Canonical set-theoretic embedding of a CJS: points are the clans, each
/// element maps to the clans containing it, contact is overlap. Throws
/// std::invalid_argument when the structure fails the CJS check.
Embedding set_representation(const FiniteJoinStructure& s);

/// Relational embedding of a DCJS: points are the abstract points, U R V
/// iff every member of U contacts every member of V. Throws
/// std::invalid_argument when the structure fails the DCJS check.
Embedding relational_representation(const FiniteJoinStructure& s,
                                    RelationalStrategy strategy = RelationalStrategy::ClanBased);

struct EmbeddingClause {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct EmbeddingReport {
    std::vector<EmbeddingClause> clauses;
    bool all_pass() const;
};

/// Checks injectivity, the 0/1 images, join-as-union, order-as-inclusion
/// and contact preservation; each clause reports a witness on failure.
EmbeddingReport verify_embedding(const FiniteJoinStructure& s, const Embedding& e);

/// For a contact pair (a,b) of a DCJS, produces point indices (U,V) of the
/// relational embedding with a in U, b in V and U R V. The clan strategy
/// decomposes a clan containing both; the prime-ideal strategy runs the
/// ideal constructions avoiding clans. std::nullopt signals a non-DCJS
/// input or a non-contact pair.
std::optional<std::pair<int, int>> relational_contact_witness(const FiniteJoinStructure& s,
                                                              const Embedding& e, int a, int b,
                                                              RelationalStrategy strategy);

}  // namespace cjs
