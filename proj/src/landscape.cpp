#include "pdgm/landscape.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pdgm {

namespace {

// Piecewise-linear evaluation on a raw breakpoint list (0 outside the span).
Rational raw_value_at(const std::vector<Breakpoint>& pts, const Rational& t) {
    if (pts.empty() || t < pts.front().t || t > pts.back().t) return Rational(0);
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const Breakpoint& bp, const Rational& x) { return bp.t < x; });
    if (it != pts.end() && it->t == t) return it->h;
    const Breakpoint& right = *it;
    const Breakpoint& left = *(it - 1);
    // left.t < t < right.t; linear interpolation, exact in rationals.
    return left.h + (right.h - left.h) * (t - left.t) / (right.t - left.t);
}

int segment_slope_sign(const Breakpoint& a, const Breakpoint& b) { return (b.h - a.h).sign(); }

std::pair<int, int> raw_slopes_at(const std::vector<Breakpoint>& pts, const Rational& t) {
    if (pts.empty() || t < pts.front().t || t > pts.back().t) return {0, 0};
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const Breakpoint& bp, const Rational& x) { return bp.t < x; });
    if (it != pts.end() && it->t == t) {
        const int left = (it == pts.begin()) ? 0 : segment_slope_sign(*(it - 1), *it);
        const int right = (it + 1 == pts.end()) ? 0 : segment_slope_sign(*it, *(it + 1));
        return {left, right};
    }
    const int s = segment_slope_sign(*(it - 1), *it);
    return {s, s};
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    return (b.h - a.h) * (c.t - b.t) == (c.h - b.h) * (b.t - a.t);
}

// Sorted unique abscissas of both curves' breakpoints.
std::vector<Rational> merged_abscissas(const LandscapeCurve& a, const LandscapeCurve& b) {
    std::vector<Rational> xs;
    xs.reserve(a.breakpoints().size() + b.breakpoints().size());
    for (const auto& bp : a.breakpoints()) xs.push_back(bp.t);
    for (const auto& bp : b.breakpoints()) xs.push_back(bp.t);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// The k-th upper envelopes of a family of curves, k = 1, 2, ... Exact: the
// candidate abscissas contain every breakpoint and every crossing of two
// segments of opposite slope, so between consecutive candidates each curve is
// linear and the pointwise order of the family is constant; sampling the k-th
// largest value at the candidates and interpolating reproduces the envelope.
// Quadratic candidate set; a sweep over crossing events would reduce it, but
// the input sizes here do not call for one.
std::vector<LandscapeCurve> upper_envelope_stack(const std::vector<const LandscapeCurve*>& input) {
    std::vector<const LandscapeCurve*> curves;
    for (const auto* c : input)
        if (c != nullptr && !c->is_zero()) curves.push_back(c);
    if (curves.empty()) return {};

    std::vector<Rational> xs;
    for (const auto* c : curves)
        for (const auto& bp : c->breakpoints()) xs.push_back(bp.t);

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& a = curves[i]->breakpoints();
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            const auto& b = curves[j]->breakpoints();
            for (std::size_t p = 0; p + 1 < a.size(); ++p) {
                const int sa = segment_slope_sign(a[p], a[p + 1]);
                if (sa == 0) continue;
                for (std::size_t q = 0; q + 1 < b.size(); ++q) {
                    const int sb = segment_slope_sign(b[q], b[q + 1]);
                    if (sa * sb != -1) continue;
                    // lines h = ha + sa (t - ta) and h = hb + sb (t - tb)
                    Rational num = b[q].h - a[p].h + (sa > 0 ? a[p].t : -a[p].t) - (sb > 0 ? b[q].t : -b[q].t);
                    Rational cross = (sa > 0 ? num : -num).half();
                    const Rational lo = std::max(a[p].t, b[q].t);
                    const Rational hi = std::min(a[p + 1].t, b[q + 1].t);
                    if (lo <= cross && cross <= hi) xs.push_back(std::move(cross));
                }
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<std::vector<Breakpoint>> polylines(curves.size());
    std::vector<Rational> vals(curves.size());
    for (const Rational& x : xs) {
        for (std::size_t c = 0; c < curves.size(); ++c) vals[c] = curves[c]->value_at(x);
        std::sort(vals.begin(), vals.end(), [](const Rational& u, const Rational& v) { return v < u; });
        for (std::size_t k = 0; k < curves.size(); ++k) polylines[k].push_back({x, vals[k]});
    }

    std::vector<LandscapeCurve> out;
    for (auto& poly : polylines) {
        LandscapeCurve c = LandscapeCurve::from_polyline(std::move(poly));
        if (c.is_zero()) break;  // the stack is non-increasing
        out.push_back(std::move(c));
    }
    return out;
}

void check_canonical(const std::vector<Breakpoint>& pts) {
    if (pts.empty()) return;
    if (pts.size() < 3) throw std::logic_error("LandscapeCurve: degenerate breakpoint list");
    if (!pts.front().h.is_zero() || !pts.back().h.is_zero())
        throw std::logic_error("LandscapeCurve: support does not close at zero");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].t < pts[i + 1].t)) throw std::logic_error("LandscapeCurve: abscissas not increasing");
        const Rational dt = pts[i + 1].t - pts[i].t;
        const Rational dh = pts[i + 1].h - pts[i].h;
        const bool unit_slope = dh == dt || dh == -dt;
        const bool gap = pts[i].h.is_zero() && pts[i + 1].h.is_zero();
        if (!unit_slope && !gap) throw std::logic_error("LandscapeCurve: slope not +-1 on a positive segment");
        if (pts[i].h.sign() < 0) throw std::logic_error("LandscapeCurve: negative height");
    }
}

}  // namespace

LandscapeCurve LandscapeCurve::from_polyline(std::vector<Breakpoint> points) {
    std::vector<Breakpoint> kept;
    kept.reserve(points.size());
    for (auto& bp : points) {
        if (!kept.empty() && !(kept.back().t < bp.t))
            throw std::invalid_argument("from_polyline: abscissas must be strictly increasing");
        kept.push_back(std::move(bp));
        while (kept.size() >= 3 && collinear(kept[kept.size() - 3], kept[kept.size() - 2], kept.back())) {
            kept.erase(kept.end() - 2);
        }
    }

    std::size_t first = kept.size(), last = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i].h.sign() > 0) {
            if (first == kept.size()) first = i;
            last = i;
        }
        if (kept[i].h.sign() < 0) throw std::invalid_argument("from_polyline: negative height");
    }
    LandscapeCurve curve;
    if (first == kept.size()) return curve;  // identically zero
    if (first == 0 || last + 1 == kept.size())
        throw std::invalid_argument("from_polyline: support must close at zero");
    curve.points_.assign(kept.begin() + (first - 1), kept.begin() + (last + 2));
    check_canonical(curve.points_);
    return curve;
}

Rational LandscapeCurve::value_at(const Rational& t) const { return raw_value_at(points_, t); }

std::pair<int, int> LandscapeCurve::slopes_at(const Rational& t) const { return raw_slopes_at(points_, t); }

Rational LandscapeCurve::max_height() const {
    Rational best(0);
    for (const auto& bp : points_) best = std::max(best, bp.h);
    return best;
}

std::vector<Breakpoint> LandscapeCurve::local_maxima() const {
    std::vector<Breakpoint> out;
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
        if (segment_slope_sign(points_[i - 1], points_[i]) == 1 &&
            segment_slope_sign(points_[i], points_[i + 1]) == -1)
            out.push_back(points_[i]);
    }
    return out;
}

LandscapeSequence LandscapeSequence::from_raw(const std::vector<RawCurve>& curves) {
    ValidationReport report = validate(curves);
    if (!report.ok) throw std::invalid_argument("invalid landscape sequence: " + report.violations.front());
    std::vector<LandscapeCurve> canonical;
    canonical.reserve(curves.size());
    for (const auto& raw : curves) canonical.push_back(LandscapeCurve::from_polyline(raw));
    return from_curves_unchecked(std::move(canonical));
}

LandscapeSequence LandscapeSequence::from_curves_unchecked(std::vector<LandscapeCurve> curves) {
    while (!curves.empty() && curves.back().is_zero()) curves.pop_back();
    for (const auto& c : curves)
        if (c.is_zero()) throw std::logic_error("LandscapeSequence: interior zero curve");
    LandscapeSequence seq;
    seq.curves_ = std::move(curves);
    return seq;
}

const LandscapeCurve& LandscapeSequence::curve(std::size_t k) const {
    static const LandscapeCurve zero;
    if (k == 0) throw std::invalid_argument("LandscapeSequence::curve: k is 1-based");
    return k <= curves_.size() ? curves_[k - 1] : zero;
}

LandscapeCurve tent(const Rational& b, const Rational& d) {
    if (!(b < d)) throw std::invalid_argument("tent: requires b < d");
    return LandscapeCurve::from_polyline({{b, Rational(0)}, {(b + d).half(), (d - b).half()}, {d, Rational(0)}});
}

LandscapeSequence build_landscape(const PersistenceDiagram& diagram) {
    std::vector<LandscapeCurve> tents;
    tents.reserve(static_cast<std::size_t>(diagram.total_points()));
    for (const auto& e : diagram.entries()) {
        LandscapeCurve t = tent(e.pair.birth, e.pair.death);
        for (std::int64_t i = 0; i + 1 < e.multiplicity; ++i) tents.push_back(t);
        tents.push_back(std::move(t));
    }
    std::vector<const LandscapeCurve*> ptrs;
    ptrs.reserve(tents.size());
    for (const auto& t : tents) ptrs.push_back(&t);
    return LandscapeSequence::from_curves_unchecked(upper_envelope_stack(ptrs));
}

Rational evaluate(const LandscapeSequence& seq, std::size_t k, const Rational& t) {
    if (k == 0) throw std::invalid_argument("evaluate: k is 1-based");
    return seq.curve(k).value_at(t);
}

Rational sup_norm_dist(const LandscapeSequence& lhs, const LandscapeSequence& rhs) {
    Rational best(0);
    const std::size_t depth = std::max(lhs.depth(), rhs.depth());
    for (std::size_t k = 1; k <= depth; ++k) {
        const LandscapeCurve& a = lhs.curve(k);
        const LandscapeCurve& b = rhs.curve(k);
        for (const Rational& x : merged_abscissas(a, b))
            best = std::max(best, abs(a.value_at(x) - b.value_at(x)));
    }
    return best;
}

LandscapeSequence direct_sum(const LandscapeSequence& lhs, const LandscapeSequence& rhs) {
    std::vector<const LandscapeCurve*> ptrs;
    ptrs.reserve(lhs.depth() + rhs.depth());
    for (const auto& c : lhs.curves()) ptrs.push_back(&c);
    for (const auto& c : rhs.curves()) ptrs.push_back(&c);
    return LandscapeSequence::from_curves_unchecked(upper_envelope_stack(ptrs));
}

LandscapeSequence flow(const LandscapeSequence& seq, const Rational& eps) {
    if (eps.sign() < 0) throw std::invalid_argument("flow: eps must be non-negative");
    if (eps.is_zero()) return seq;
    std::vector<LandscapeCurve> out;
    for (const auto& curve : seq.curves()) {
        const auto& pts = curve.breakpoints();
        std::vector<Breakpoint> poly;
        poly.reserve(pts.size() + 2);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            poly.push_back({pts[i].t, std::max(Rational(0), pts[i].h - eps)});
            if (i + 1 < pts.size()) {
                // insert the level crossing if the segment passes through eps strictly
                const bool below_then_above = pts[i].h < eps && eps < pts[i + 1].h;
                const bool above_then_below = pts[i + 1].h < eps && eps < pts[i].h;
                if (below_then_above || above_then_below) {
                    const int s = segment_slope_sign(pts[i], pts[i + 1]);
                    Rational cross_t = s > 0 ? pts[i].t + (eps - pts[i].h) : pts[i].t + (pts[i].h - eps);
                    poly.push_back({std::move(cross_t), Rational(0)});
                }
            }
        }
        LandscapeCurve c = LandscapeCurve::from_polyline(std::move(poly));
        if (c.is_zero()) break;  // lower curves sink first
        out.push_back(std::move(c));
    }
    return LandscapeSequence::from_curves_unchecked(std::move(out));
}

int degree_at(const LandscapeSequence& seq, const Rational& t, const Rational& h) {
    if (h.sign() <= 0) throw std::invalid_argument("degree_at: defined only at positive heights");
    int degree = 0;
    for (const auto& curve : seq.curves()) {
        if (curve.value_at(t) != h) continue;
        const auto [left, right] = curve.slopes_at(t);
        if (left == 1 && right == -1) ++degree;
        if (left == -1 && right == 1) --degree;
    }
    return degree;
}

ValidationReport validate(const std::vector<RawCurve>& curves) {
    ValidationReport report;
    auto fail = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    bool structure_ok = true;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& pts = curves[k];
        const std::string tag = "curve " + std::to_string(k + 1);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (!(pts[i].t < pts[i + 1].t)) {
                fail(tag + ": abscissas not strictly increasing");
                ok = false;
                break;
            }
        }
        if (!ok) {
            structure_ok = false;
            continue;
        }
        bool positive = false;
        for (const auto& bp : pts) {
            if (bp.h.sign() < 0) {
                fail(tag + ": negative height at t=" + bp.t.str());
                ok = false;
                break;
            }
            positive = positive || bp.h.sign() > 0;
        }
        if (ok && positive && (!pts.front().h.is_zero() || !pts.back().h.is_zero()))
            fail(tag + ": compact support violated (endpoints must have height 0)");
        if (ok) {
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                const Rational dt = pts[i + 1].t - pts[i].t;
                const Rational dh = pts[i + 1].h - pts[i].h;
                if (dh == dt || dh == -dt) continue;
                if (pts[i].h.is_zero() && pts[i + 1].h.is_zero()) continue;
                fail(tag + ": slope not +-1 on positive segment starting at t=" + pts[i].t.str());
                break;
            }
        }
        structure_ok = structure_ok && ok;
    }
    if (!structure_ok || !report.ok) return report;

    for (std::size_t k = 0; k + 1 < curves.size(); ++k) {
        std::vector<Rational> xs;
        for (const auto& bp : curves[k]) xs.push_back(bp.t);
        for (const auto& bp : curves[k + 1]) xs.push_back(bp.t);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (const Rational& x : xs) {
            if (raw_value_at(curves[k], x) < raw_value_at(curves[k + 1], x)) {
                fail("monotonicity violated between curves " + std::to_string(k + 1) + " and " +
                     std::to_string(k + 2) + " at t=" + x.str());
                break;
            }
        }
    }

    std::vector<std::pair<Rational, Rational>> critical;
    for (const auto& pts : curves)
        for (const auto& bp : pts)
            if (bp.h.sign() > 0) critical.emplace_back(bp.t, bp.h);
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
    for (const auto& [t, h] : critical) {
        int degree = 0;
        for (const auto& pts : curves) {
            if (raw_value_at(pts, t) != h) continue;
            const auto [left, right] = raw_slopes_at(pts, t);
            if (left == 1 && right == -1) ++degree;
            if (left == -1 && right == 1) --degree;
        }
        if (degree < 0) fail("negative degree at (" + t.str() + ", " + h.str() + ")");
    }
    return report;
}

PersistenceDiagram invert_by_degree(const LandscapeSequence& seq) {
    std::vector<std::pair<Rational, Rational>> critical;
    for (const auto& curve : seq.curves())
        for (const auto& bp : curve.breakpoints())
            if (bp.h.sign() > 0) critical.emplace_back(bp.t, bp.h);
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    PersistenceDiagram out;
    for (const auto& [t, h] : critical) {
        const int m = degree_at(seq, t, h);
        if (m > 0) out.add(BirthDeathPair{t - h, t + h}, m);
    }
    return out;
}

namespace {

// Joins top (for t < x) with bottom (for t >= x); the two must agree at x.
LandscapeCurve splice_at(const LandscapeCurve& top, const LandscapeCurve& bottom, const Rational& x) {
    const Rational v = top.value_at(x);
    if (v != bottom.value_at(x)) throw std::logic_error("splice_at: discontinuous junction");
    std::vector<Breakpoint> poly;
    for (const auto& bp : top.breakpoints()) {
        if (bp.t < x) poly.push_back(bp);
    }
    poly.push_back({x, v});
    for (const auto& bp : bottom.breakpoints()) {
        if (x < bp.t) poly.push_back(bp);
    }
    return LandscapeCurve::from_polyline(std::move(poly));
}

// Leftmost t in [lo, apex] where the curve runs with slope +1 into the line
// h = apex - t. Returns false if there is none.
bool ascend_into_leg(const LandscapeCurve& curve, const Rational& lo, const Rational& apex, Rational& out) {
    const auto& pts = curve.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (segment_slope_sign(pts[i], pts[i + 1]) != 1) continue;
        // h(t) = pts[i].h + (t - pts[i].t) meets apex - t at:
        Rational cross = (apex + pts[i].t - pts[i].h).half();
        if (cross <= pts[i].t || pts[i + 1].t < cross) continue;  // need left slope +1 at the meet
        if (cross < lo || apex < cross) continue;
        out = std::move(cross);
        return true;
    }
    return false;
}

std::size_t count_local_maxima(const LandscapeSequence& seq) {
    std::size_t n = 0;
    for (const auto& c : seq.curves()) n += c.local_maxima().size();
    return n;
}

}  // namespace

PersistenceDiagram invert_by_peeling(const LandscapeSequence& seq) {
    PersistenceDiagram out;
    LandscapeSequence current = seq;
    std::size_t maxima = count_local_maxima(current);
    while (!current.empty()) {
        const auto peaks = current.curve(1).local_maxima();
        const Rational& x1 = peaks.front().t;
        const Rational& y1 = peaks.front().h;
        const Rational apex = x1 + y1;

        // Climb the stack along the descending leg of the peeled tent.
        const std::size_t depth = current.depth();
        std::vector<Rational> xs(depth + 2);
        xs[1] = x1;
        bool chain_alive = true;
        Rational prev = x1;
        for (std::size_t k = 2; k <= depth; ++k) {
            Rational found;
            if (chain_alive && ascend_into_leg(current.curve(k), prev, apex, found)) {
                xs[k] = found;
                prev = std::move(found);
            } else {
                chain_alive = false;
                xs[k] = apex;
            }
        }
        xs[depth + 1] = apex;

        std::vector<LandscapeCurve> remainder;
        remainder.reserve(depth);
        for (std::size_t k = 1; k <= depth; ++k) {
            LandscapeCurve c = splice_at(current.curve(k + 1), current.curve(k), xs[k + 1]);
            if (c.is_zero()) break;
            remainder.push_back(std::move(c));
        }

        out.add(BirthDeathPair{x1 - y1, apex});
        current = LandscapeSequence::from_curves_unchecked(std::move(remainder));

        const std::size_t now = count_local_maxima(current);
        if (!current.empty() && now >= maxima) throw std::logic_error("invert_by_peeling: no progress");
        maxima = now;
    }
    return out;
}

bool landscape_leq(const LandscapeSequence& lhs, const LandscapeSequence& rhs) {
    const std::size_t depth = std::max(lhs.depth(), rhs.depth());
    for (std::size_t k = 1; k <= depth; ++k) {
        const LandscapeCurve& a = lhs.curve(k);
        const LandscapeCurve& b = rhs.curve(k);
        if (a.is_zero()) continue;
        for (const Rational& x : merged_abscissas(a, b))
            if (b.value_at(x) < a.value_at(x)) return false;
    }
    return true;
}

}  // namespace pdgm
