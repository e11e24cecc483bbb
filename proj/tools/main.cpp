// Command-line front end: energies, spectra, bound reports, integral
// representations, tree-extremum searches and equienergetic constructions
// over graph6 / edge-list inputs or built-in families.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isienergy/bounds.hpp"
#include "isienergy/coulson.hpp"
#include "isienergy/equienergetic.hpp"
#include "isienergy/graph.hpp"
#include "isienergy/isi.hpp"
#include "isienergy/spectral.hpp"
#include "isienergy/trees.hpp"

namespace {

using namespace isienergy;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// graph6 bytes live in 63..126, so an edge-list header digit is unambiguous
Graph parse_graph_text(const std::string& text, const std::string& source) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' ||
                               text[i] == '\t'))
        ++i;
    if (i == text.size()) throw UsageError("empty graph input: " + source);
    char c = text[i];
    try {
        if (c >= '0' && c <= '9') return parse_edge_list(text.substr(i));
        return parse_graph6(text.substr(i));
    } catch (const std::invalid_argument& e) {
        throw UsageError(source + ": " + e.what());
    }
}

struct InputOptions {
    std::string graph6_literal;
    std::string graph6_file;
    std::string edge_list_file;
    std::string family;
    int n = 0;
    int m = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6_literal, "graph6 string");
        cmd->add_option("--graph6-file", graph6_file, "file with one graph6 line ('-' = stdin)");
        cmd->add_option("--edge-list", edge_list_file,
                        "edge-list file: 'n m' header then 1-indexed 'u v' lines ('-' = stdin)");
        cmd->add_option("--family", family,
                        "built-in family: path|cycle|complete|complete-bipartite|star|empty|petersen|prism");
        cmd->add_option("--n", n, "family order (second part size for complete-bipartite)");
        cmd->add_option("--m", m, "first part size for complete-bipartite");
    }

    Graph load() const {
        int sources = !graph6_literal.empty() + !graph6_file.empty() +
                      !edge_list_file.empty() + !family.empty();
        if (sources != 1)
            throw UsageError("exactly one input source required "
                             "(--graph6 | --graph6-file | --edge-list | --family)");
        if (!graph6_literal.empty()) {
            try {
                return parse_graph6(graph6_literal);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--graph6: ") + e.what());
            }
        }
        if (!graph6_file.empty())
            return parse_graph_text(read_stream_or_file(graph6_file), graph6_file);
        if (!edge_list_file.empty()) {
            try {
                return parse_edge_list(read_stream_or_file(edge_list_file));
            } catch (const std::invalid_argument& e) {
                throw UsageError(edge_list_file + ": " + e.what());
            }
        }
        try {
            if (family == "path") return path_graph(n);
            if (family == "cycle") return cycle_graph(n);
            if (family == "complete") return complete_graph(n);
            if (family == "complete-bipartite") return complete_bipartite_graph(m, n);
            if (family == "star") return star_graph(n);
            if (family == "empty") return empty_graph(n);
            if (family == "petersen") return petersen_graph();
            if (family == "prism") return prism_graph();
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--family: ") + e.what());
        }
        throw UsageError("unknown family: " + family);
    }
};

std::string human(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

void print_summary(const IsiSummary& s, const std::string& format) {
    if (format == "json") {
        std::cout << isi_summary_json(s) << "\n";
    } else if (format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "n,m,q,theta,isi_index,energy\n"
            << s.n << "," << s.m << "," << s.q << "," << s.theta << "," << s.isi_index
            << "," << s.energy << "\n";
        std::cout << out.str();
    } else {
        std::cout << "n = " << s.n << ", m = " << s.m << "\n"
                  << "ISI index = " << human(s.isi_index) << "\n"
                  << "Q = " << human(s.q) << ", theta = " << human(s.theta) << "\n"
                  << "ISI energy = " << human(s.energy) << "\n";
    }
}

int run_energy(const InputOptions& input, const std::string& format, bool adjacency) {
    Graph g = input.load();
    if (adjacency) {
        double e = adjacency_energy(g);
        if (format == "json")
            std::cout << json{{"n", g.vertex_count()}, {"m", g.edge_count()},
                              {"adjacency_energy", e}}
                             .dump()
                      << "\n";
        else
            std::cout << human(e) << "\n";
        return 0;
    }
    print_summary(isi_summary(g), format);
    return 0;
}

int run_spectrum(const InputOptions& input, const std::string& format, bool adjacency,
                 double grouping_tol) {
    Graph g = input.load();
    Spectrum spec = adjacency ? adjacency_spectrum(g) : isi_spectrum(g);
    spec.grouping_tol = grouping_tol;
    auto groups = spec.grouped();
    if (format == "json") {
        json values = spec.values, grouped = json::array(), mults = json::array();
        for (const auto& grp : groups) {
            grouped.push_back(grp.value);
            mults.push_back(grp.multiplicity);
        }
        std::cout << json{{"n", g.vertex_count()},
                          {"values", values},
                          {"spectrum", grouped},
                          {"multiplicities", mults}}
                         .dump()
                  << "\n";
    } else if (format == "csv") {
        std::ostringstream out;
        out.precision(17);
        out << "value,multiplicity\n";
        for (const auto& grp : groups) out << grp.value << "," << grp.multiplicity << "\n";
        std::cout << out.str();
    } else {
        for (const auto& grp : groups)
            std::cout << human(grp.value) << " (x" << grp.multiplicity << ")\n";
    }
    return 0;
}

int run_index(const InputOptions& input, const std::string& format) {
    Graph g = input.load();
    double idx = isi_index(g);
    if (format == "json")
        std::cout << json{{"n", g.vertex_count()}, {"isi_index", idx}}.dump() << "\n";
    else
        std::cout << human(idx) << "\n";
    return 0;
}

int run_bounds(const InputOptions& input, const std::string& format) {
    Graph g = input.load();
    auto report = run_all_bounds(g);
    if (format == "csv") {
        std::cout << bound_report_csv(report);
    } else if (format == "json") {
        std::cout << bound_report_json(report) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << c.name << ": ";
            if (c.not_applicable) {
                std::cout << "not applicable\n";
                continue;
            }
            if (c.lower) std::cout << human(*c.lower) << " <= ";
            std::cout << human(c.value);
            if (c.upper) std::cout << " <= " << human(*c.upper);
            std::cout << (c.holds ? "  ok" : "  VIOLATED");
            if (!c.hypothesis_ok) std::cout << "  (hypothesis not satisfied)";
            if (c.equality) std::cout << "  (equality case)";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_coulson(const InputOptions& input, const std::string& format,
                const std::string& form, QuadratureConfig cfg) {
    Graph g = input.load();
    auto spec = isi_spectrum(g);
    auto coeffs = char_poly_coeffs(spec);
    double direct = spectrum_energy(spec);
    double value = 0;
    if (form == "derivative")
        value = coulson_energy(coeffs, cfg);
    else if (form == "log")
        value = coulson_energy_logform(coeffs, cfg);
    else if (form == "corollary")
        value = coulson_energy_corollary_form(coeffs, cfg);
    else
        throw UsageError("unknown --coulson-form: " + form);
    if (format == "json")
        std::cout << json{{"form", form},
                          {"energy", value},
                          {"direct_energy", direct},
                          {"residual", value - direct}}
                         .dump()
                  << "\n";
    else
        std::cout << form << " integral = " << human(value)
                  << " (direct = " << human(direct) << ")\n";
    return 0;
}

int run_conjecture(int n, bool full_ranking, const std::string& format) {
    auto report = check_conjecture(n, 1e-9, full_ranking);
    if (format == "json") {
        std::cout << conjecture_report_json(report) << "\n";
    } else {
        std::cout << "n = " << report.n << ": " << report.tree_count << " trees\n"
                  << "min energy " << human(report.min_energy) << " at "
                  << report.argmin_graph6
                  << (report.star_is_min ? " (star)" : " (NOT star)") << "\n"
                  << "max energy " << human(report.max_energy) << " at "
                  << report.argmax_graph6
                  << (report.path_is_max ? " (path)" : " (NOT path)") << "\n";
    }
    return 0;
}

int run_equienergetic(const std::string& g1_path, const std::string& g2_path, int iterate,
                      int pad, int max_vertices, double tol, const std::string& format) {
    Graph g1, g2;
    if (g1_path.empty() != g2_path.empty())
        throw UsageError("--g1 and --g2 must be given together");
    if (g1_path.empty()) {
        // built-in demonstration pair: smallest same-order same-degree
        // A-noncospectral regular pair
        g1 = complete_bipartite_graph(3, 3);
        g2 = prism_graph();
    } else {
        g1 = parse_graph_text(read_stream_or_file(g1_path), g1_path);
        g2 = parse_graph_text(read_stream_or_file(g2_path), g2_path);
    }
    if (iterate == 1 || iterate < 0)
        throw UsageError("--iterate must be >= 2 (omit it to compare the inputs directly)");
    EquienergeticPair pair = iterate >= 2 ? build_Lm_pair(g1, g2, iterate, max_vertices)
                                          : verify_pair(g1, g2, tol);
    if (pad > 0) pair = pad_with_isolated(pair, pad);
    if (format == "json") {
        std::cout << pair_json(pair) << "\n";
    } else {
        std::cout << pair.classification << ": E1 = " << human(pair.energy1)
                  << ", E2 = " << human(pair.energy2) << " ("
                  << pair.construction << ")\n";
    }
    return 0;
}

int run_batch(const std::string& path) {
    std::istringstream in(read_stream_or_file(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        // every input line yields exactly one record, errors included
        json record;
        try {
            Graph g = parse_graph6(line);
            record = json::parse(isi_summary_json(isi_summary(g)));
            record["graph"] = write_graph6(g);
        } catch (const std::exception& e) {
            record = json{{"error", e.what()}};
        }
        record["line"] = line_no;
        std::cout << record.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ISI matrices, spectra and energies of simple graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options like --format after the subcommand

    std::string format = "json";
    app.add_option("--format", format, "output format: json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));

    InputOptions energy_in, spectrum_in, index_in, bounds_in, coulson_in;
    bool energy_adjacency = false, spectrum_adjacency = false;
    double grouping_tol = 1e-8;

    auto* energy = app.add_subcommand("energy", "ISI energy and summary quantities");
    energy_in.attach(energy);
    energy->add_flag("--adjacency", energy_adjacency, "adjacency energy instead of ISI");

    auto* spectrum = app.add_subcommand("spectrum", "S-spectrum with multiplicities");
    spectrum_in.attach(spectrum);
    spectrum->add_flag("--adjacency", spectrum_adjacency, "adjacency spectrum instead");
    spectrum->add_option("--grouping-tol", grouping_tol, "multiplicity merge tolerance");

    auto* index = app.add_subcommand("index", "ISI topological index");
    index_in.attach(index);

    auto* bounds = app.add_subcommand("bounds", "evaluate all inequality checks");
    bounds_in.attach(bounds);

    std::string coulson_form = "derivative";
    QuadratureConfig quad_cfg;
    std::string quad_rule = "tan";
    auto* coulson = app.add_subcommand("coulson", "integral representations of the energy");
    coulson_in.attach(coulson);
    coulson->add_option("--coulson-form", coulson_form, "derivative|log|corollary")
        ->check(CLI::IsMember({"derivative", "log", "corollary"}));
    coulson->add_option("--quad-tol", quad_cfg.target_tol, "quadrature tolerance");
    coulson->add_option("--quad-panels", quad_cfg.max_panels, "panel budget (>= 16)");
    coulson->add_option("--quad-rule", quad_rule, "tan|truncated")
        ->check(CLI::IsMember({"tan", "truncated"}));
    coulson->add_option("--quad-cutoff", quad_cfg.cutoff,
                        "truncation point for the truncated rule (0 = auto)");

    int conjecture_n = 0;
    bool full_ranking = false;
    auto* conjecture =
        app.add_subcommand("conjecture", "tree energy extremes by exhaustive enumeration");
    conjecture->add_option("--n", conjecture_n, "tree order")->required();
    conjecture->add_flag("--full-ranking", full_ranking, "include all trees sorted by energy");

    std::string g1_path, g2_path;
    int iterate = 0, pad = 0, max_vertices = 10000;
    double pair_tol = 1e-8;
    auto* equi = app.add_subcommand("equienergetic",
                                    "equal-energy noncospectral pair constructions");
    equi->add_option("--g1", g1_path, "first graph file (graph6 or edge list)");
    equi->add_option("--g2", g2_path, "second graph file");
    equi->add_option("--iterate", iterate, "apply the m-fold line-graph construction (m >= 2)");
    equi->add_option("--pad", pad, "pad both graphs with this many isolated vertices");
    equi->add_option("--max-vertices", max_vertices,
                     "size cap for intermediate line graphs");
    equi->add_option("--tol", pair_tol, "spectral comparison tolerance");

    std::string batch_path;
    auto* batch = app.add_subcommand("batch", "one summary per graph6 input line");
    batch->add_option("--input", batch_path, "graph6 file, one graph per line ('-' = stdin)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (energy->parsed()) return run_energy(energy_in, format, energy_adjacency);
        if (spectrum->parsed())
            return run_spectrum(spectrum_in, format, spectrum_adjacency, grouping_tol);
        if (index->parsed()) return run_index(index_in, format);
        if (bounds->parsed()) return run_bounds(bounds_in, format);
        if (coulson->parsed()) {
            quad_cfg.rule = quad_rule == "truncated" ? QuadratureConfig::Rule::truncated
                                                     : QuadratureConfig::Rule::tan_map;
            return run_coulson(coulson_in, format, coulson_form, quad_cfg);
        }
        if (conjecture->parsed()) return run_conjecture(conjecture_n, full_ranking, format);
        if (equi->parsed())
            return run_equienergetic(g1_path, g2_path, iterate, pad, max_vertices,
                                     pair_tol, format);
        if (batch->parsed()) return run_batch(batch_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
