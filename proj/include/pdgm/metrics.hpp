#pragma once

#include <cstddef>
#include <vector>

#include "pdgm/diagram.hpp"
#include "pdgm/landscape.hpp"
#include "pdgm/matching.hpp"
#include "pdgm/rational.hpp"

namespace pdgm {

/// Erosion distance, computed exactly as the sup-norm distance between the
/// diagrams' landscapes (the two quantities coincide; erosion_direct keeps the
/// rank-based route available as an independent cross-check).
Rational erosion(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs);

/// Landscape distance between the diagrams' landscapes. Same value as
/// erosion() by construction of the production path.
Rational landscape_distance(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs);

struct ErosionBracket {
    Rational lo;
    Rational hi;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Independent route: bisects the feasibility predicate of the two-sided rank
/// domination (monotone in eps) down to a bracket of width <= tol around the
/// infimum. Returns [0, 0] exactly when the diagrams are equal.
ErosionBracket erosion_direct(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs,
                              const Rational& tol);

/// Closed form on birth-zero diagrams, where bottleneck, erosion and landscape
/// distances all coincide: sort deaths descending, zero-pad, and take
/// max_i min{ |d_i - d'_i|, max{d_i/2, d'_i/2} }.
Rational birthzero_distance(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs);

/// Non-increasing positive entries, implicitly zero-padded.
class DeathVector {
public:
    DeathVector() = default;
    explicit DeathVector(std::vector<Rational> entries);
    const std::vector<Rational>& entries() const { return entries_; }
    friend bool operator==(const DeathVector&, const DeathVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Sorted-descending death coordinates of a birth-zero diagram.
DeathVector death_vectorization(const PersistenceDiagram& diagram);
/// Inverse of death_vectorization.
PersistenceDiagram diagram_from_death_vector(const DeathVector& v);
/// Sup norm of the zero-padded entrywise difference.
Rational dv_distance(const DeathVector& lhs, const DeathVector& rhs);

/// A finite metric space given by its distance matrix.
class FiniteMetric {
public:
    /// Validates the metric axioms; throws std::invalid_argument naming the
    /// violated axiom. `dist` is row-major n x n.
    static FiniteMetric from_matrix(std::size_t n, std::vector<Rational> dist);
    std::size_t size() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

private:
    FiniteMetric() = default;
    std::size_t n_ = 0;
    std::vector<Rational> dist_;
};

/// Isometrically embeds a finite metric space into birth-zero diagrams: the
/// Kuratowski map into (R^n, l_inf) followed by an offset map onto strictly
/// decreasing positive vectors, read back through the death-vector inverse.
/// Pairwise birthzero_distance of the outputs equals the input distances.
std::vector<PersistenceDiagram> embed_finite_metric(const FiniteMetric& metric);

/// Length of the matched linear path between the diagrams, measured by summing
/// erosion distances over `segments` equal time steps of an optimal bottleneck
/// matching interpolation. Behaviour is undefined when interpolants of
/// distinct points collide along the way; pick inputs that keep them apart.
Rational erosion_path_length(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs,
                             unsigned segments);

/// A pair of diagrams with erosion distance strictly below bottleneck
/// distance: d_B = 1 but erosion = 1/2.
struct GapWitness {
    PersistenceDiagram left;
    PersistenceDiagram right;
    Rational bottleneck_value;
    Rational erosion_value;
};
GapWitness gap_example();

/// Explicit description of the radius-r neighbourhood of a diagram: every
/// point of `candidate` lies in an open Chebyshev r-box around a point of
/// `center` or within the open band of half-persistence < r, and each point of
/// `center` of multiplicity m has exactly m candidate points in its box. For
/// r <= local_radius(center) this set equals both the bottleneck and the
/// erosion open r-ball around `center`.
bool in_box_band_neighborhood(const PersistenceDiagram& center, const PersistenceDiagram& candidate,
                              const Rational& r);

}  // namespace pdgm
