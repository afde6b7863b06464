#include "oal/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oal {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == '#') continue;
        std::istringstream iss(line);
        if (n < 0) {
            if (!(iss >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");
            continue;
        }
        int u, v;
        if (!(iss >> u >> v)) parse_fail(lineno, "expected edge 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) parse_fail(lineno ? lineno : 1, "missing header 'n m'");
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error("edge list declares " + std::to_string(m) + " edges but contains " + std::to_string(edges.size()));
    return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string fmt;
            if (!(iss >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges" && fmt != "col") || n < 0 || m < 0)
                parse_fail(lineno, "expected header 'p edge n m'");
        } else if (tag == "e") {
            if (n < 0) parse_fail(lineno, "edge before 'p' header");
            int u, v;
            if (!(iss >> u >> v)) parse_fail(lineno, "expected 'e u v'");
            if (u < 1 || v < 1 || u > n || v > n) parse_fail(lineno, "endpoint outside 1.." + std::to_string(n));
            edges.emplace_back(u - 1, v - 1);  // remap 1-based labels to dense 0-based
        } else {
            parse_fail(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) parse_fail(lineno ? lineno : 1, "missing 'p edge' header");
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error("DIMACS header declares " + std::to_string(m) + " edges but file contains " + std::to_string(edges.size()));
    return Graph::from_edge_list(n, edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Graph parse_graph(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == 'p' || c == 'c') return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace oal
