#pragma once

#include <initializer_list>
#include <utility>

#include "pdgm/diagram.hpp"
#include "pdgm/rational.hpp"

namespace pdgm::testing {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline PersistenceDiagram dgm(std::initializer_list<std::pair<Rational, Rational>> pairs) {
    PersistenceDiagram d;
    for (const auto& [b, dth] : pairs) d.add(BirthDeathPair{b, dth});
    return d;
}

// The worked example diagram used throughout: {(1,7),(3,8),(2,5),(2,5),(9,10)}.
inline PersistenceDiagram fig1() {
    PersistenceDiagram d;
    d.add({Rational(1), Rational(7)});
    d.add({Rational(3), Rational(8)});
    d.add({Rational(2), Rational(5)}, 2);
    d.add({Rational(9), Rational(10)});
    return d;
}

inline PersistenceDiagram crossing_left() { return dgm({{Rational(0), Rational(10)}, {Rational(1), Rational(11)}}); }
inline PersistenceDiagram crossing_right() { return dgm({{Rational(0), Rational(11)}, {Rational(1), Rational(10)}}); }

}  // namespace pdgm::testing
