#include "pdgm/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "pdgm/io.hpp"
#include "pdgm/landscape.hpp"
#include "pdgm/matching.hpp"
#include "pdgm/metrics.hpp"
#include "pdgm/verify.hpp"

namespace pdgm {

namespace {

void print_value(std::ostream& out, const Rational& value, const std::optional<int>& decimal_digits) {
    if (decimal_digits)
        out << value.decimal(*decimal_digits) << '\n';
    else
        out << value << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

LandscapeSequence load_landscape(const std::string& path) {
    return LandscapeSequence::from_raw(read_landscape_file(path));
}

void print_witness(std::ostream& out, const PersistenceDiagram& a, const PersistenceDiagram& b,
                   const PartialMatching& m) {
    const auto pa = a.flatten();
    const auto pb = b.flatten();
    for (const auto& [i, j] : m.matched)
        out << "match " << pa[i].birth << ' ' << pa[i].death << " -> " << pb[j].birth << ' '
            << pb[j].death << '\n';
    for (std::size_t i : m.unmatched_left)
        out << "diagonal-left " << pa[i].birth << ' ' << pa[i].death << '\n';
    for (std::size_t j : m.unmatched_right)
        out << "diagonal-right " << pb[j].birth << ' ' << pb[j].death << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact distances, landscapes and inverses for persistence diagrams"};
    app.require_subcommand(1);

    std::string metric, file_a, file_b, output, method = "degree";
    std::optional<int> decimal_digits;
    bool witness = false;
    unsigned segments = 1;
    std::uint64_t seed = 0, cases = 50;

    auto add_decimal = [&](CLI::App* cmd) {
        cmd->add_option("--decimal", decimal_digits,
                        "print a rounded decimal expansion with this many digits instead of p/q");
    };

    CLI::App* dist = app.add_subcommand("dist", "distance between two diagram files");
    dist->add_option("--metric", metric, "one of: bottleneck, erosion, landscape, birthzero, dv")
        ->required()
        ->check(CLI::IsMember({"bottleneck", "erosion", "landscape", "birthzero", "dv"}));
    dist->add_option("A", file_a, "first diagram file")->required();
    dist->add_option("B", file_b, "second diagram file")->required();
    dist->add_flag("--witness", witness, "with --metric bottleneck, also print an optimal matching");
    add_decimal(dist);

    CLI::App* build = app.add_subcommand("landscape-build", "landscape of a diagram file");
    build->add_option("A", file_a, "diagram file")->required();
    build->add_option("-o,--output", output, "write to this file instead of stdout");

    CLI::App* invert = app.add_subcommand("landscape-invert", "diagram of a landscape file");
    invert->add_option("A", file_a, "landscape file")->required();
    invert->add_option("--method", method, "degree or peeling")
        ->check(CLI::IsMember({"degree", "peeling"}));

    CLI::App* validate_cmd = app.add_subcommand("landscape-validate", "check the landscape properties");
    validate_cmd->add_option("A", file_a, "landscape file")->required();

    CLI::App* radius = app.add_subcommand("radius", "local isometry radius of a diagram file");
    radius->add_option("A", file_a, "diagram file")->required();
    add_decimal(radius);

    CLI::App* embed = app.add_subcommand("embed", "embed a finite metric space into birth-zero diagrams");
    embed->add_option("M", file_a, "metric file (first line n, then an n x n matrix)")->required();
    embed->add_option("-o,--output", output, "directory for the output diagrams, one per point")
        ->required();

    CLI::App* path_length = app.add_subcommand("path-length",
                                               "erosion length of the matched path between two diagrams");
    path_length->add_option("A", file_a, "first diagram file")->required();
    path_length->add_option("B", file_b, "second diagram file")->required();
    path_length->add_option("--segments", segments, "number of interpolation steps")
        ->required()
        ->check(CLI::PositiveNumber);
    add_decimal(path_length);

    CLI::App* gap = app.add_subcommand("gap-demo",
                                       "a diagram pair whose erosion distance is strictly below bottleneck");

    CLI::App* verify = app.add_subcommand("verify", "run the property suites on seeded random inputs");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--cases", cases, "cases per suite");

    CLI::App* plot = app.add_subcommand("plot", "render a landscape file as SVG");
    plot->add_option("A", file_a, "landscape file")->required();
    plot->add_option("-o,--output", output, "output SVG file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(dist)) {
            const PersistenceDiagram a = read_diagram_file(file_a);
            const PersistenceDiagram b = read_diagram_file(file_b);
            if (metric == "bottleneck") {
                auto [value, m] = bottleneck(a, b);
                print_value(out, value, decimal_digits);
                if (witness) print_witness(out, a, b, m);
            } else if (metric == "erosion" || metric == "landscape") {
                print_value(out, erosion(a, b), decimal_digits);
            } else if (metric == "birthzero") {
                print_value(out, birthzero_distance(a, b), decimal_digits);
            } else {
                print_value(out, dv_distance(death_vectorization(a), death_vectorization(b)),
                            decimal_digits);
            }
        } else if (app.got_subcommand(build)) {
            const LandscapeSequence seq = build_landscape(read_diagram_file(file_a));
            if (output.empty()) {
                write_landscape(out, seq);
            } else {
                auto file = open_output(output);
                write_landscape(file, seq);
            }
        } else if (app.got_subcommand(invert)) {
            const LandscapeSequence seq = load_landscape(file_a);
            write_diagram(out, method == "degree" ? invert_by_degree(seq) : invert_by_peeling(seq));
        } else if (app.got_subcommand(validate_cmd)) {
            const ValidationReport report = validate(read_landscape_file(file_a));
            if (report.ok) {
                out << "ok\n";
            } else {
                for (const auto& v : report.violations) out << v << '\n';
                return 2;
            }
        } else if (app.got_subcommand(radius)) {
            print_value(out, local_radius(read_diagram_file(file_a)), decimal_digits);
        } else if (app.got_subcommand(embed)) {
            const FiniteMetric m = read_metric_file(file_a);
            const auto diagrams = embed_finite_metric(m);
            std::filesystem::create_directories(output);
            for (std::size_t i = 0; i < diagrams.size(); ++i) {
                std::ostringstream name;
                name << "point_" << std::setfill('0') << std::setw(3) << i << ".dgm";
                auto file = open_output((std::filesystem::path(output) / name.str()).string());
                write_diagram(file, diagrams[i]);
                out << name.str() << '\n';
            }
        } else if (app.got_subcommand(path_length)) {
            const PersistenceDiagram a = read_diagram_file(file_a);
            const PersistenceDiagram b = read_diagram_file(file_b);
            print_value(out, erosion_path_length(a, b, segments), decimal_digits);
        } else if (app.got_subcommand(gap)) {
            const GapWitness w = gap_example();
            out << "# diagram A\n";
            write_diagram(out, w.left);
            out << "# diagram B\n";
            write_diagram(out, w.right);
            out << "bottleneck " << w.bottleneck_value << '\n';
            out << "erosion " << w.erosion_value << '\n';
        } else if (app.got_subcommand(verify)) {
            if (!run_verification(seed, cases, out)) return 2;
        } else if (app.got_subcommand(plot)) {
            const LandscapeSequence seq = load_landscape(file_a);
            if (output.empty()) {
                write_svg(out, seq);
            } else {
                auto file = open_output(output);
                write_svg(file, seq);
            }
        }
    } catch (const ParseError& e) {
        err << file_a << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace pdgm
