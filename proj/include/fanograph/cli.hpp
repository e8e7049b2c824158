#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes:
//   0  success, whatever the verdict
//   1  internal error
//   2  usage error, malformed graph file or invalid family specifier
//   3  disconnected underlying graph
//   4  sweep refused: vertex limit exceeded without --force

#include "constructions.hpp"
#include "fano_criteria.hpp"
#include "graph_io.hpp"
#include "lattice_polytope.hpp"
#include "oracle.hpp"
#include "report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace fanograph {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_disconnected = 3,
    exit_limit = 4,
};

namespace cli_detail {

/// "x1+x3=1"; a zero functional prints as "0=1".
inline std::string format_functional(const LatticeVector& a, const Integer& offset) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const Integer mag = abs(a[i]);
        if (a[i] < 0) {
            s += "-";
        } else if (!s.empty()) {
            s += "+";
        }
        if (mag != 1) s += mag.str();
        s += "x" + std::to_string(i + 1);
    }
    if (s.empty()) s = "0";
    return s + "=" + offset.str();
}

inline std::string format_point(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

inline std::string vertex_list(const std::vector<Vertex>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string headline(const GraphReport& r) {
    const auto& geo = r.geometric;
    const std::string shape = "dim " + std::to_string(geo.dim) + ", " + std::to_string(geo.vertex_count) +
                              " vertices, " + std::to_string(geo.facet_count) + " facets";
    const auto& s = r.graph_verdict.smoothness;
    if (s && s->obstruction) {
        return "not simplicial; obstruction cycle " + vertex_list(s->obstruction->vertices()) + "; witness " +
               format_functional(s->witness->normal, s->witness->offset);
    }
    if (!geo.is_fano) return "not Fano, " + shape;
    if (geo.is_smooth) return "smooth Fano, " + shape;
    if (geo.is_simplicial) return "simplicial Fano, not smooth, " + shape;
    return "Fano, not simplicial, " + shape;
}

inline void print_graph_report(std::ostream& out, const GraphReport& r, bool quiet) {
    const auto& geo = r.geometric;
    const auto& gv = r.graph_verdict;
    if (!quiet && !r.source.empty()) out << r.source << "\n";
    out << (quiet ? "" : "  ") << headline(r) << "\n";
    if (quiet) return;
    const int d = r.graph.vertex_count();
    out << "  graph: " << d << " vertices, " << r.graph.arrow_count() << " arrows\n";
    out << "  polytope: dim " << geo.dim << " in Z^" << geo.ambient_dim << ", " << geo.vertex_count << " vertices, "
        << geo.facet_count << " facets, " << geo.boundary_lattice_point_count << " boundary and "
        << geo.interior_lattice_point_count << " interior lattice points\n";
    out << "  fano " << (geo.is_fano ? "yes" : "no") << ", terminal " << (geo.is_terminal ? "yes" : "no")
        << ", gorenstein " << (geo.is_gorenstein ? "yes" : "no") << ", simplicial "
        << (geo.is_simplicial ? "yes" : "no") << ", smooth " << (geo.is_smooth ? "yes" : "no") << "\n";
    if (!gv.spans_full_dimension) out << "  every cycle is homogeneous: dim P_G < d - 1\n";
    if (!gv.every_arrow_in_directed_cycle) {
        out << "  arrows on no directed cycle:";
        for (const Arrow& a : arrows_off_directed_cycles(r.graph)) out << " " << to_string(a);
        out << "\n";
    }
    if (gv.smoothness && gv.smoothness->obstruction) {
        const auto& c = *gv.smoothness->obstruction;
        const auto& w = *gv.smoothness->witness;
        out << "  obstruction: " << to_string(c) << "\n";
        out << "  witness in Z^" << d << ": " << format_functional(w.normal, w.offset) << "  a = " << format_point(w.normal)
            << "\n";
        out << "  witness in Z^" << d - 1 << ": " << format_functional(*r.witness_projected, w.offset)
            << "  a = " << format_point(*r.witness_projected) << "\n";
    } else if (gv.smoothness) {
        out << "  no homogeneous cycle satisfies the distance inequality\n";
    }
    const auto& f = r.fingerprint;
    out << "  fingerprint: normalized volume " << f.normalized_volume << ", centrally symmetric "
        << (f.centrally_symmetric ? "yes" : "no") << ", pseudo symmetric " << (f.pseudo_symmetric ? "yes" : "no") << "\n";
    if (r.predicted_smooth) {
        const bool computed = geo.is_smooth;
        out << "  predicted " << (*r.predicted_smooth ? "smooth" : "not smooth") << ", computed "
            << (computed ? "smooth" : "not smooth") << ": "
            << (*r.predicted_smooth == computed ? "prediction matches" : "PREDICTION MISMATCH") << "\n";
    }
    if (r.agreement()) {
        out << "  graph criteria and geometry agree\n";
    } else {
        for (const auto& m : r.mismatches) out << "  DISAGREEMENT " << m << "\n";
    }
}

inline void print_facets(std::ostream& out, const FacetListing& l, bool quiet) {
    std::size_t bad = 0;
    for (const auto& f : l.facets) bad += f.simplex ? 0 : 1;
    if (!quiet && !l.source.empty()) out << l.source << "\n";
    out << l.facets.size() << " facets, dim " << l.dim << ", " << bad << " not simplicial\n";
    if (quiet) return;
    for (std::size_t k = 0; k < l.facets.size(); ++k) {
        const auto& f = l.facets[k];
        out << "facet " << k << ": normal " << format_point(f.normal) << " offset " << f.offset << "; "
            << f.vertices.size() << " vertices";
        for (const auto& v : f.vertices) out << " " << format_point(v);
        if (f.determinant) out << "; |det| " << abs(*f.determinant);
        if (!f.simplex) out << "; NOT SIMPLICIAL";
        out << "\n";
    }
}

inline void print_sweep(std::ostream& out, const SweepReport& r, bool quiet) {
    out << "sweep d<=" << r.max_vertices << " (" << to_string(r.scope) << ", chunk " << r.chunk_index + 1 << "/"
        << r.chunk_count;
    if (r.stride > 1) out << ", stride " << r.stride;
    if (r.dedup_isomorphic) out << ", up to isomorphism";
    out << "): " << r.discrepancies.size() << " discrepancies\n";
    if (quiet) return;
    out << "  candidates " << r.graphs_enumerated << ", classified " << r.graphs_classified << "\n";
    out << "  smooth " << r.smooth << ", simplicial not smooth " << r.simplicial_not_smooth << ", not simplicial "
        << r.non_simplicial << ", not fano " << r.not_fano << ", not full-dimensional " << r.not_full_dimensional
        << "\n";
    out << "  symmetric graphs checked " << r.symmetric_checked << "\n";
    for (const auto& d : r.discrepancies) {
        out << "  discrepancy at index " << d.index << ": " << d.record.graph.vertex_count() << " vertices, arrows";
        for (const Arrow& a : d.record.graph.arrows()) out << " " << to_string(a);
        out << "\n";
        for (const auto& m : d.record.mismatches) out << "    " << m << "\n";
    }
}

struct GraphSource {
    std::string label;
    Digraph graph;
    std::optional<bool> predicted_smooth;
};

inline GraphSource load_source(const std::string& file, const std::string& family) {
    if (!file.empty() && !family.empty()) throw CLI::ValidationError("give a graph file or --family, not both");
    if (!family.empty()) {
        FamilyMember fm = parse_family_spec(family);
        return {family, fm.graph, fm.predicted_smooth};
    }
    if (file.empty()) throw CLI::ValidationError("a graph file or --family is required");
    return {file, read_graph_file(file), std::nullopt};
}

inline std::pair<std::uint64_t, std::uint64_t> parse_chunk(const std::string& s) {
    const auto slash = s.find('/');
    int i = 0, n = 0;
    if (slash == std::string::npos || !detail::parse_int(std::string_view(s).substr(0, slash), i) ||
        !detail::parse_int(std::string_view(s).substr(slash + 1), n) || n < 1 || i < 1 || i > n) {
        throw CLI::ValidationError("--chunk expects i/n with 1 <= i <= n");
    }
    return {static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(n)};
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify the edge polytopes P_G of directed graphs"};
    app.name("fanograph");
    app.require_subcommand(1);
    bool json = false, quiet = false;
    app.add_flag("--json", json, "Emit JSON instead of text");
    app.add_flag("--quiet", quiet, "Only print the verdict line");

    std::string file, family;
    auto* classify_cmd = app.add_subcommand("classify", "Classify P_G for a graph file or family member");
    classify_cmd->add_option("file", file, "Graph file");
    classify_cmd->add_option("--family", family, "Family specifier instead of a file");

    std::string spec;
    auto* family_cmd = app.add_subcommand("family", "Classify a member of a graph family");
    family_cmd->add_option("spec", spec, "cycle:n, symcycle:n, pdp:k, gmpq:m,p,q, wedge:A+B, poset:file")->required();

    auto* facets_cmd = app.add_subcommand("facets", "List the facets of P_G");
    facets_cmd->add_option("file", file, "Graph file");
    facets_cmd->add_option("--family", family, "Family specifier instead of a file");

    int max_vertices = 0;
    std::string chunk, output;
    bool force = false, dedup = false, connected = false;
    std::uint64_t stride = 1;
    unsigned threads = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-validate all small digraphs");
    sweep_cmd->add_option("max_vertices", max_vertices, "Largest vertex count")->required();
    sweep_cmd->add_option("--chunk", chunk, "Run slice i of n (1-based), e.g. 3/8");
    sweep_cmd->add_flag("--force", force, "Allow more vertices than the default limit");
    sweep_cmd->add_flag("--dedup", dedup, "Skip graphs that are relabelings of earlier ones");
    sweep_cmd->add_flag("--connected", connected, "Include graphs with arrows off directed cycles");
    sweep_cmd->add_option("--stride", stride, "Sample every k-th candidate")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--output", output, "Write the report to a file instead of standard output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*classify_cmd || *family_cmd) {
            auto src = *family_cmd ? cli_detail::load_source("", spec) : cli_detail::load_source(file, family);
            require_connected(src.graph);
            if (src.graph.arrows().empty()) throw std::invalid_argument("graph has no arrows");
            GraphReport r = make_graph_report(src.graph, src.label, src.predicted_smooth);
            if (json) {
                out << make_document("classify", r).dump(2) << "\n";
            } else {
                cli_detail::print_graph_report(out, r, quiet);
            }
            return exit_ok;
        }
        if (*facets_cmd) {
            auto src = cli_detail::load_source(file, family);
            FacetListing l = make_facet_listing(polytope_of(src.graph), src.label);
            if (json) {
                out << make_document("facets", l).dump(2) << "\n";
            } else {
                cli_detail::print_facets(out, l, quiet);
            }
            return exit_ok;
        }
        if (*sweep_cmd) {
            SweepOptions opt;
            opt.max_vertices = max_vertices;
            opt.force = force;
            opt.dedup_isomorphic = dedup;
            opt.scope = connected ? SweepScope::connected : SweepScope::fano;
            opt.stride = stride;
            opt.threads = threads;
            if (!chunk.empty()) std::tie(opt.chunk_index, opt.chunk_count) = cli_detail::parse_chunk(chunk);
            SweepReport r = sweep(opt);
            std::ofstream file_out;
            if (!output.empty()) {
                file_out.open(output);
                if (!file_out) throw std::runtime_error("cannot write " + output);
            }
            std::ostream& dest = output.empty() ? out : file_out;
            if (json) {
                dest << make_document("sweep", r).dump(2) << "\n";
            } else {
                cli_detail::print_sweep(dest, r, quiet);
            }
            return exit_ok;
        }
    } catch (const disconnected_graph_error& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_disconnected;
    } catch (const sweep_limit_error& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_limit;
    } catch (const parse_error& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "fanograph: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "fanograph: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace fanograph
