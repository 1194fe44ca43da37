#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scramblekit/multigraph.hpp"

namespace scramblekit {

// Line-oriented text formats. `#` starts a comment anywhere on a line.
//
//   graph:    n <count>          divisor:  d <n>           scramble:
//             e <u> <v> <mult>             c <vertex> <chips>   egg <v1> <v2> ...
//
// Writers emit canonical order so write/read round-trips are byte exact.

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    return lines;
}

} // namespace detail

inline void write_graph_text(std::ostream& out, const Multigraph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.mult << "\n";
}

inline std::string graph_to_text(const Multigraph& g) {
    std::ostringstream out;
    write_graph_text(out, g);
    return out.str();
}

inline Multigraph read_graph_text(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) fail(errc::parse_error, "empty graph file");
    int n = -1;
    std::vector<Edge> edges;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::string tag;
        ls >> tag;
        if (i == 0) {
            if (tag != "n") fail(errc::parse_error, "graph file must start with an `n` line");
            if (!(ls >> n)) fail(errc::parse_error, "bad vertex count");
            continue;
        }
        if (tag != "e") fail(errc::parse_error, "expected `e <u> <v> <mult>` line, got `" + tag + "`");
        Edge e;
        if (!(ls >> e.u >> e.v >> e.mult)) fail(errc::parse_error, "bad edge line");
        edges.push_back(e);
    }
    return Multigraph::build(n, edges);
}

inline Multigraph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

inline void write_dot(std::ostream& out, const Multigraph& g, const std::string& name = "G") {
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (e.mult > 1) out << " [label=" << e.mult << "]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace scramblekit
