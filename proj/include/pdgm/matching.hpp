#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pdgm/diagram.hpp"
#include "pdgm/rational.hpp"

namespace pdgm {

/// Chebyshev distance between two points of the plane.
Rational linf_dist(const BirthDeathPair& a, const BirthDeathPair& b);

/// A bijection between subsets of two diagrams; the leftover points on either
/// side are charged half their persistence (their distance to the diagonal).
/// Indices refer to the diagrams' flatten() order.
struct PartialMatching {
    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::vector<std::size_t> unmatched_left;
    std::vector<std::size_t> unmatched_right;
    Rational cost;
};

/// Indices partition both flattened diagrams and the matched pairs form a
/// bijection.
bool is_valid_matching(const PersistenceDiagram& left, const PersistenceDiagram& right,
                       const PartialMatching& matching);

/// Max of the matched Chebyshev costs and the unmatched half-persistences.
Rational matching_cost(const PersistenceDiagram& left, const PersistenceDiagram& right,
                       const PartialMatching& matching);

/// Exact bottleneck distance with an optimal witness. The optimum is attained
/// at one of finitely many candidate thresholds (pairwise Chebyshev distances
/// and half-persistences); a binary search over the sorted candidates tests
/// feasibility by maximum bipartite matching on the diagonal-augmented graph.
std::pair<Rational, PartialMatching> bottleneck(const PersistenceDiagram& left,
                                                const PersistenceDiagram& right);

/// Linear interpolation along a matching at time t in [0, 1]: matched points
/// travel to their partners, unmatched points travel to/from their nearest
/// diagonal projection ((b+d)/2, (b+d)/2). A point whose interpolant lies on
/// the diagonal is dropped, so the endpoints reproduce the inputs exactly.
PersistenceDiagram interpolate_matched(const PersistenceDiagram& left, const PersistenceDiagram& right,
                                       const PartialMatching& matching, const Rational& t);

}  // namespace pdgm
