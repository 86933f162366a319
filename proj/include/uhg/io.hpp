#ifndef UHG_IO_HPP
#define UHG_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "uhg/hypergraph.hpp"

namespace uhg {

/// Parse error with 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Text format: line 1 is `r n m` (uniformity 0 for mixed cardinality),
/// followed by m lines of space-separated ascending vertex indices.
inline void write_hypergraph(std::ostream& os, const Hypergraph& h) {
    os << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
}

inline void write_graph(std::ostream& os, const Graph& g) {
    write_hypergraph(os, Hypergraph::from_graph(g));
}

inline std::string to_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

inline Hypergraph read_hypergraph(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!std::getline(is, line)) throw parse_error("missing header", 1);
    ++lineno;
    std::istringstream hdr(line);
    long long r, n, m;
    if (!(hdr >> r >> n >> m)) throw parse_error("header must be `r n m`", lineno);
    if (n < 0 || m < 0 || r < 0) throw parse_error("negative header field", lineno);
    std::vector<HEdge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(is, line)) throw parse_error("unexpected end of file", lineno + 1);
        ++lineno;
        std::istringstream ls(line);
        HEdge e;
        long long v;
        while (ls >> v) e.push_back(static_cast<Vertex>(v));
        if (e.empty()) throw parse_error("empty edge line", lineno);
        if (r > 0 && static_cast<long long>(e.size()) != r)
            throw parse_error("edge cardinality does not match declared uniformity", lineno);
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(static_cast<int>(n), std::move(edges),
                          r > 0 ? static_cast<int>(r) : -1);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno);
    }
}

inline Hypergraph hypergraph_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_hypergraph(is);
}

inline Graph read_graph(std::istream& is) {
    Hypergraph h = read_hypergraph(is);
    std::vector<Edge> es;
    for (const auto& e : h.edges()) {
        if (e.size() != 2) throw std::runtime_error("read_graph: non-2-uniform edge");
        es.emplace_back(e[0], e[1]);
    }
    return Graph(h.num_vertices(), std::move(es));
}

}  // namespace uhg

#endif
