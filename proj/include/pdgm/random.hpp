#pragma once

#include <cstdint>
#include <random>

#include "pdgm/diagram.hpp"
#include "pdgm/metrics.hpp"
#include "pdgm/rational.hpp"

namespace pdgm {

/// Deterministic source of random test inputs. All draws go through explicit
/// arithmetic on the engine output, so a fixed seed reproduces the same
/// objects everywhere.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)
    /// Dyadic rational k / 2^denom_pow with 0 <= value <= range.
    Rational dyadic(long range, unsigned denom_pow);

    /// Up to max_points points, dyadic coordinates in [0, coord_range],
    /// occasional repeated points for multiplicity coverage.
    PersistenceDiagram diagram(std::size_t max_points, long coord_range = 16);
    PersistenceDiagram nonempty_diagram(std::size_t max_points, long coord_range = 16);
    PersistenceDiagram birth_zero_diagram(std::size_t max_points, long coord_range = 16);

    /// A diagram inside the open local-isometry ball around `center`: each
    /// point moved by strictly less than r in Chebyshev distance, plus up to
    /// two spurious points of persistence strictly below 2r.
    PersistenceDiagram perturb_within(const PersistenceDiagram& center, const Rational& r);

    /// A valid finite metric with rational entries (random weights repaired to
    /// a metric by shortest paths).
    FiniteMetric metric(std::size_t max_points);

private:
    std::mt19937_64 engine_;
};

}  // namespace pdgm
