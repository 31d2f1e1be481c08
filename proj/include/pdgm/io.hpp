#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdgm/diagram.hpp"
#include "pdgm/landscape.hpp"
#include "pdgm/metrics.hpp"

namespace pdgm {

/// Input problem with the 1-based line it was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Diagram text format: one pair per line as `birth death [multiplicity]`,
/// values as decimal or p/q rational literals; `#` starts a comment; blank
/// lines are ignored.
PersistenceDiagram read_diagram(std::istream& in);
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);

/// Landscape text format: one record per curve, `k  t:h  t:h ...` with k
/// consecutive from 1; same comment and rational conventions as diagrams.
std::vector<RawCurve> read_landscape_raw(std::istream& in);
void write_landscape(std::ostream& out, const LandscapeSequence& seq);

/// Metric format: first line n, then n lines of n rational entries.
FiniteMetric read_metric(std::istream& in);

/// One polyline per curve, colored by depth. Presentation only.
void write_svg(std::ostream& out, const LandscapeSequence& seq);

PersistenceDiagram read_diagram_file(const std::string& path);
std::vector<RawCurve> read_landscape_file(const std::string& path);
FiniteMetric read_metric_file(const std::string& path);

}  // namespace pdgm
