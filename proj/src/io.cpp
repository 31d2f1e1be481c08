#include "pdgm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pdgm {

namespace {

// Strips comments and splits on whitespace.
std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

Rational parse_rational(const std::string& tok, int line) {
    auto r = Rational::parse(tok);
    if (!r) throw ParseError("expected a rational number, got '" + tok + "'", line);
    return *r;
}

}  // namespace

PersistenceDiagram read_diagram(std::istream& in) {
    PersistenceDiagram out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("expected 'birth death [multiplicity]'", line_no);
        Rational b = parse_rational(toks[0], line_no);
        Rational d = parse_rational(toks[1], line_no);
        std::int64_t mult = 1;
        if (toks.size() == 3) {
            try {
                mult = std::stoll(toks[2]);
            } catch (const std::exception&) {
                throw ParseError("bad multiplicity '" + toks[2] + "'", line_no);
            }
            if (mult <= 0) throw ParseError("multiplicity must be positive", line_no);
        }
        if (!(b < d)) throw ParseError("birth must be strictly below death", line_no);
        out.add(BirthDeathPair{std::move(b), std::move(d)}, mult);
    }
    return out;
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
    for (const auto& e : diagram.entries()) {
        out << e.pair.birth << ' ' << e.pair.death;
        if (e.multiplicity != 1) out << ' ' << e.multiplicity;
        out << '\n';
    }
}

std::vector<RawCurve> read_landscape_raw(std::istream& in) {
    std::vector<RawCurve> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        std::size_t k = 0;
        try {
            k = static_cast<std::size_t>(std::stoull(toks[0]));
        } catch (const std::exception&) {
            throw ParseError("expected a curve index, got '" + toks[0] + "'", line_no);
        }
        if (k != out.size() + 1) throw ParseError("curve indices must run 1, 2, ... in order", line_no);
        RawCurve curve;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const auto colon = toks[i].find(':');
            if (colon == std::string::npos) throw ParseError("expected 't:h' breakpoint", line_no);
            curve.push_back({parse_rational(toks[i].substr(0, colon), line_no),
                             parse_rational(toks[i].substr(colon + 1), line_no)});
        }
        out.push_back(std::move(curve));
    }
    return out;
}

void write_landscape(std::ostream& out, const LandscapeSequence& seq) {
    for (std::size_t k = 1; k <= seq.depth(); ++k) {
        out << k;
        for (const auto& bp : seq.curve(k).breakpoints()) out << ' ' << bp.t << ':' << bp.h;
        out << '\n';
    }
}

FiniteMetric read_metric(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 1) throw ParseError("expected the point count alone on the first line", line_no);
        try {
            n = static_cast<std::size_t>(std::stoull(toks[0]));
        } catch (const std::exception&) {
            throw ParseError("bad point count '" + toks[0] + "'", line_no);
        }
        break;
    }
    if (n == 0) throw ParseError("expected a positive point count", line_no);

    std::vector<Rational> dist;
    dist.reserve(n * n);
    std::size_t rows = 0;
    while (rows < n && std::getline(in, line)) {
        ++line_no;
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != n)
            throw ParseError("expected " + std::to_string(n) + " entries in this row", line_no);
        for (const auto& tok : toks) dist.push_back(parse_rational(tok, line_no));
        ++rows;
    }
    if (rows < n) throw ParseError("expected " + std::to_string(n) + " matrix rows", line_no);
    try {
        return FiniteMetric::from_matrix(n, std::move(dist));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
    }
}

namespace {

std::string svg_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

void write_svg(std::ostream& out, const LandscapeSequence& seq) {
    static const char* palette[] = {"#1b6ca8", "#d1495b", "#2e933c", "#9b5de5",
                                    "#ee964b", "#00a6a6", "#815839", "#5c677d"};
    double t_min = 0, t_max = 1, h_max = 1;
    bool first = true;
    for (const auto& curve : seq.curves()) {
        for (const auto& bp : curve.breakpoints()) {
            const double t = bp.t.to_double(), h = bp.h.to_double();
            if (first) {
                t_min = t_max = t;
                h_max = h;
                first = false;
            }
            t_min = std::min(t_min, t);
            t_max = std::max(t_max, t);
            h_max = std::max(h_max, h);
        }
    }
    if (t_max - t_min < 1e-9) t_max = t_min + 1;
    if (h_max < 1e-9) h_max = 1;

    const double width = 640, height = 360, margin = 32;
    auto sx = [&](double t) { return margin + (t - t_min) / (t_max - t_min) * (width - 2 * margin); };
    auto sy = [&](double h) { return height - margin - h / h_max * (height - 2 * margin); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <line x1=\"" << svg_num(margin) << "\" y1=\"" << svg_num(height - margin) << "\" x2=\""
        << svg_num(width - margin) << "\" y2=\"" << svg_num(height - margin)
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << svg_num(margin) << "\" y1=\"" << svg_num(margin) << "\" x2=\""
        << svg_num(margin) << "\" y2=\"" << svg_num(height - margin)
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (std::size_t k = 1; k <= seq.depth(); ++k) {
        out << "  <polyline fill=\"none\" stroke=\"" << palette[(k - 1) % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        bool space = false;
        for (const auto& bp : seq.curve(k).breakpoints()) {
            if (space) out << ' ';
            out << svg_num(sx(bp.t.to_double())) << ',' << svg_num(sy(bp.h.to_double()));
            space = true;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

PersistenceDiagram read_diagram_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_diagram(in);
}

std::vector<RawCurve> read_landscape_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_landscape_raw(in);
}

FiniteMetric read_metric_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_metric(in);
}

}  // namespace pdgm
