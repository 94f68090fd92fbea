#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjs {

/// Subset of the carrier as a bitmask (element i <-> bit i).
using Mask = std::uint32_t;

/// Raised when a raw structure description fails validation. The message
/// names the violated law and a witness tuple.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Raw input for validate(): element names, designated bottom/top, a join
/// table (symmetric duplicates and idempotent entries may be omitted) and a
/// set of unordered contact pairs.
struct StructureDescription {
    std::vector<std::string> elements;
    std::string zero;
    std::string one;
    std::vector<std::array<std::string, 3>> join;     // {a, b, a+b}
    std::vector<std::array<std::string, 2>> contact;  // unordered pairs
};

/// A finite join-semilattice with 0, 1 and a contact relation. Immutable
/// after validation; the order is derived from the join table (a<=b iff
/// a+b=b). Carrier size is capped so subsets fit in a Mask.
class FiniteJoinStructure {
public:
    static constexpr int kMaxCarrier = 24;

    /// Checks that the description yields a bounded join-semilattice:
    /// total join table, derived order a partial order, join a least upper
    /// bound, zero the bottom, one the top. Throws StructureError with a
    /// witness otherwise. Contact is symmetrized; reflexive pairs are not
    /// auto-added.
    static FiniteJoinStructure validate(const StructureDescription& desc);

    /// Builds from in-memory tables and runs the same validation.
    static FiniteJoinStructure from_tables(std::vector<std::string> names, int zero, int one,
                                           std::vector<int> join_table,
                                           std::vector<char> contact_matrix);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int e) const { return names_[e]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a named element, or -1.
    int index_of(const std::string& name) const;

    int zero() const { return zero_; }
    int one() const { return one_; }

    int join(int a, int b) const { return join_[a * size() + b]; }
    bool leq(int a, int b) const { return join(a, b) == b; }
    bool contact(int a, int b) const { return contact_[a * size() + b] != 0; }

    /// Left-fold of the join table; the empty fold is zero.
    int join_all(std::span<const int> elems) const;
    /// Join of the elements in a subset mask.
    int join_mask(Mask m) const;

    /// Bitmask of {y : e <= y}.
    Mask upset(int e) const { return upset_[e]; }
    /// Bitmask of {y : y <= e}.
    Mask downset(int e) const { return downset_[e]; }
    Mask full_mask() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

    bool same_tables(const FiniteJoinStructure& other) const;

private:
    FiniteJoinStructure() = default;
    void finish();  // precompute upsets/downsets

    std::vector<std::string> names_;
    int zero_ = 0;
    int one_ = 0;
    std::vector<int> join_;
    std::vector<char> contact_;
    std::vector<Mask> upset_;
    std::vector<Mask> downset_;
};

/// Verdict for one axiom; a failing axiom carries the violating tuple.
struct AxiomVerdict {
    bool pass = true;
    std::vector<int> witness;  // empty when pass
};

/// Report for contact axioms (9)-(13).
struct AxiomReport {
    AxiomVerdict no_contact_with_zero;  // (9)  xCy -> x != 0
    AxiomVerdict symmetry;              // (10) xCy -> yCx
    AxiomVerdict join_distribution;     // (11) xC(y+z) -> xCy or xCz
    AxiomVerdict monotonicity;          // (12) xCy, y<=y' -> xCy'
    AxiomVerdict reflexivity;           // (13) x != 0 -> xCx

    bool all_pass() const {
        return no_contact_with_zero.pass && symmetry.pass && join_distribution.pass &&
               monotonicity.pass && reflexivity.pass;
    }
};

AxiomReport check_contact_axioms(const FiniteJoinStructure& s);

/// Result of the (ad) check: pass, or the first violating triple (x,a,b)
/// in element order with x <= a+b but no a'<=a, b'<=b, x = a'+b'.
struct AdResult {
    bool pass = true;
    int x = -1, a = -1, b = -1;
};

AdResult check_ad(const FiniteJoinStructure& s);

/// Searches for parts' decomposition x = a_1'+...+a_n' with a_k' <= a_k.
/// Requires x <= join(parts) (throws std::invalid_argument otherwise).
/// Returns std::nullopt only when the structure violates (ad).
std::optional<std::vector<int>> ad_decompose(const FiniteJoinStructure& s, int x,
                                             std::span<const int> parts);

/// Given several presentations of x as joins, returns t_1..t_n with join x
/// such that every t_j lies below one summand of every presentation
/// (iterated ad_decompose). std::nullopt only when the structure is not
/// distributive. Each presentation must join to x.
std::optional<std::vector<int>> refine_presentations(
    const FiniteJoinStructure& s, int x, const std::vector<std::vector<int>>& presentations);

struct Classification {
    bool is_join_semilattice = true;  // guaranteed by validation
    bool satisfies_contact_axioms_9_to_13 = false;
    bool satisfies_ad = false;
    bool is_cjs = false;   // (1)-(10) + schemas (14), (15)
    bool is_dcjs = false;  // (1)-(13) + (ad)
};

Classification classify(const FiniteJoinStructure& s);

}  // namespace cjs
