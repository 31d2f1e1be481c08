#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdgm/diagram.hpp"
#include "pdgm/rational.hpp"

namespace pdgm {

struct Breakpoint {
    Rational t;
    Rational h;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// An unvalidated curve, straight from a file or a caller: a polyline given by
/// its breakpoints, zero outside their span.
using RawCurve = std::vector<Breakpoint>;

/// Compactly supported piecewise-linear curve whose slopes are +1 or -1
/// wherever it is positive, stored canonically:
///   - strictly increasing abscissas, first and last height 0, heights >= 0;
///   - no interior breakpoint collinear with its neighbours;
///   - a pair of consecutive height-0 breakpoints marks a gap between humps
///     (the function is identically 0 there); no other flat segments exist.
/// The identically-zero curve is the empty breakpoint list.
class LandscapeCurve {
public:
    LandscapeCurve() = default;

    /// Canonicalizes an exact polyline sampling of a curve. The input must
    /// list strictly increasing abscissas, start and end at height 0 (unless
    /// empty/all-zero), and be linear between consecutive points.
    static LandscapeCurve from_polyline(std::vector<Breakpoint> points);

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    bool is_zero() const { return points_.empty(); }
    Rational value_at(const Rational& t) const;
    /// One-sided slopes (-1, 0, +1) at t; 0 means flat or off-support.
    std::pair<int, int> slopes_at(const Rational& t) const;
    Rational max_height() const;
    /// Local maxima (t, h), left to right. Each is a breakpoint with slope
    /// pattern (+1, -1).
    std::vector<Breakpoint> local_maxima() const;

    friend bool operator==(const LandscapeCurve&, const LandscapeCurve&) = default;

private:
    std::vector<Breakpoint> points_;
};

/// A finite non-increasing stack of landscape curves; curves beyond the stored
/// depth are identically zero. Construction validates the defining properties
/// (see validate), so a LandscapeSequence is always a genuine landscape
/// sequence. Trailing zero curves are trimmed.
class LandscapeSequence {
public:
    LandscapeSequence() = default;
    /// Validates and canonicalizes; throws std::invalid_argument on violation.
    static LandscapeSequence from_raw(const std::vector<RawCurve>& curves);
    /// For algorithms whose output is known to be a valid landscape sequence;
    /// still trims trailing zero curves.
    static LandscapeSequence from_curves_unchecked(std::vector<LandscapeCurve> curves);

    std::size_t depth() const { return curves_.size(); }
    bool empty() const { return curves_.empty(); }
    /// 1-based, like the mathematical indexing; k > depth() is the zero curve.
    const LandscapeCurve& curve(std::size_t k) const;
    const std::vector<LandscapeCurve>& curves() const { return curves_; }

    friend bool operator==(const LandscapeSequence&, const LandscapeSequence&) = default;

private:
    std::vector<LandscapeCurve> curves_;
};

/// The triangular curve of a birth-death pair: 0 outside (b, d), peak of
/// height (d-b)/2 at the midpoint.
LandscapeCurve tent(const Rational& b, const Rational& d);

/// The landscape of a diagram: the k-th curve is the k-th largest tent value,
/// with multiplicity, at every point. Exact.
LandscapeSequence build_landscape(const PersistenceDiagram& diagram);

/// Value of the k-th curve at t (k >= 1); zero beyond the stored depth.
Rational evaluate(const LandscapeSequence& seq, std::size_t k, const Rational& t);

/// Exact sup over k and t of |lhs_k(t) - rhs_k(t)|. The difference of two
/// curves is piecewise linear, so the sup is attained at a merged breakpoint.
Rational sup_norm_dist(const LandscapeSequence& lhs, const LandscapeSequence& rhs);

/// Stack merge: the k-th output curve is the k-th largest value among all
/// curves of both inputs. Because each input stack is non-increasing, only the
/// first k curves of either side can reach the k-th maximum, so this agrees
/// with the level-wise definition. The result is again a landscape sequence.
LandscapeSequence direct_sum(const LandscapeSequence& lhs, const LandscapeSequence& rhs);

/// Shifts every curve down by eps and truncates at zero, re-canonicalizing.
LandscapeSequence flow(const LandscapeSequence& seq, const Rational& eps);

/// Degree of (t, h), h > 0: the number of curves with a strict local maximum
/// there minus the number with a strict local minimum there, read from
/// one-sided slopes.
int degree_at(const LandscapeSequence& seq, const Rational& t, const Rational& h);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks the defining properties on raw curves: per-curve structure
/// (increasing abscissas, non-negative heights, zero ends, slopes +1/-1 at
/// positive height), monotonicity of the stack, and non-negative degree at
/// every positive-height critical point.
ValidationReport validate(const std::vector<RawCurve>& curves);

/// Reads the diagram off the degrees: every positive-height point of positive
/// degree m contributes (t-h, t+h) with multiplicity m. Inverse of
/// build_landscape.
PersistenceDiagram invert_by_degree(const LandscapeSequence& seq);

/// Reads the diagram off by repeatedly splitting off the tent at the leftmost
/// local maximum of the top curve and splicing the remainder. Agrees with
/// invert_by_degree; the two routes are kept independent on purpose.
PersistenceDiagram invert_by_peeling(const LandscapeSequence& seq);

/// Pointwise order of stacks: lhs_k <= rhs_k everywhere, every k.
bool landscape_leq(const LandscapeSequence& lhs, const LandscapeSequence& rhs);

}  // namespace pdgm
