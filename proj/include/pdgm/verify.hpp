#pragma once

#include <cstdint>
#include <iosfwd>

namespace pdgm {

/// Runs the cross-route property suites on seeded random inputs: coflow laws,
/// equivariance, landscape round trips and decomposition, order preservation,
/// the erosion/landscape agreement against the rank-based bisection, metric
/// inequalities, local isometry, birth-zero identities, the embedding, and
/// path refinement. Prints one line per suite; on the first violated property
/// prints the offending inputs in the diagram text format and returns false.
bool run_verification(std::uint64_t seed, std::uint64_t cases, std::ostream& out);

}  // namespace pdgm
