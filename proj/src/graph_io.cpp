#include "chordal/graph_io.hpp"

#include "chordal/errors.hpp"

#include <fstream>
#include <sstream>

namespace chordal {

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw FormatError("line " + std::to_string(lineno) + ": duplicate p line");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw FormatError("line " + std::to_string(lineno) + ": malformed p line");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw FormatError("line " + std::to_string(lineno) + ": e line before p line");
            long long u, v;
            if (!(ls >> u >> v))
                throw FormatError("line " + std::to_string(lineno) + ": malformed e line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw FormatError("line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v) throw FormatError("line " + std::to_string(lineno) + ": self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw FormatError("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (n < 0) throw FormatError("missing p line");
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError("p line declares " + std::to_string(m) + " edges, file has " +
                          std::to_string(edges.size()));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw FormatError("cannot write " + path);
    write_edge_list(out, g);
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

} // namespace chordal
