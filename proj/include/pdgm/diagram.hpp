#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "pdgm/rational.hpp"

namespace pdgm {

/// A point strictly above the diagonal: birth < death.
struct BirthDeathPair {
    Rational birth;
    Rational death;

    Rational persistence() const { return death - birth; }
    friend bool operator==(const BirthDeathPair&, const BirthDeathPair&) = default;
    friend std::strong_ordering operator<=>(const BirthDeathPair& a, const BirthDeathPair& b) {
        if (auto c = a.birth <=> b.birth; c != 0) return c;
        return a.death <=> b.death;
    }
};

/// Query point for the rank function; the diagonal (b == d) is allowed.
struct RankQuery {
    Rational b;
    Rational d;
};

/// Finite multiset of birth-death pairs, kept sorted lexicographically with
/// merged multiplicities, so multiset equality is structural equality.
class PersistenceDiagram {
public:
    struct Entry {
        BirthDeathPair pair;
        std::int64_t multiplicity = 1;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    PersistenceDiagram() = default;
    static PersistenceDiagram from_pairs(const std::vector<BirthDeathPair>& pairs);

    /// Inserts `count` copies; rejects pairs on or below the diagonal.
    void add(const BirthDeathPair& pair, std::int64_t count = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::int64_t total_points() const;
    /// One element per point, multiplicities expanded, canonical order.
    std::vector<BirthDeathPair> flatten() const;
    bool all_births_zero() const;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<Entry> entries_;
};

/// Number of pairs (with multiplicity) properly containing the query:
/// birth_i <= b and d < death_i.
std::int64_t rank_at(const PersistenceDiagram& diagram, const RankQuery& query);

/// Moves every pair towards the diagonal by eps on each side, dropping pairs
/// that do not survive:  (b, d) -> (b + eps, d - eps)  kept iff b+eps < d-eps.
PersistenceDiagram shrink_diagram(const PersistenceDiagram& diagram, const Rational& eps);

/// Diagram poset order: rank_at(lhs, I) <= rank_at(rhs, I) for every query I.
/// Decided exactly on a finite sufficient test set; see the implementation.
bool diagram_leq(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs);

/// Whether eps witnesses the two-sided rank domination between the diagrams,
/// i.e. diagram_leq(shrink(lhs, eps), rhs) and diagram_leq(shrink(rhs, eps), lhs).
bool erosion_feasible(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs, const Rational& eps);

/// Half the minimum feature separation of a non-empty diagram: min over all
/// distinct-birth gaps, distinct-death gaps, and half-persistences, halved.
/// Within this radius the bottleneck and erosion distances coincide.
Rational local_radius(const PersistenceDiagram& diagram);

}  // namespace pdgm
