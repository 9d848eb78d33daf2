#include "lir/edgelist.hpp"

#include <sstream>

namespace lir {

namespace {

// Splits into non-empty lines, keeping 1-based numbering for diagnostics.
struct LineReader {
    std::istringstream in;
    int line_no = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    std::optional<std::pair<int, std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            bool blank = true;
            for (char ch : line)
                if (!isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
            if (!blank) return std::make_pair(line_no, line);
        }
        return std::nullopt;
    }
};

std::vector<long long> parse_ints(int line_no, const std::string& line, size_t want) {
    std::istringstream ls(line);
    std::vector<long long> vals;
    long long x;
    while (ls >> x) vals.push_back(x);
    std::string rest;
    if (!ls.eof()) {
        ls.clear();
        ls >> rest;
        if (!rest.empty()) throw ParseError(line_no, "expected integers, got '" + rest + "'");
    }
    if (vals.size() != want)
        throw ParseError(line_no, "expected " + std::to_string(want) + " fields, got " +
                                      std::to_string(vals.size()));
    return vals;
}

}  // namespace

EdgeListDocument parse_edge_list(const std::string& text) {
    LineReader reader(text);
    auto header = reader.next();
    if (!header) throw ParseError(1, "missing header 'n m'");
    auto hv = parse_ints(header->first, header->second, 2);
    long long n = hv[0], m = hv[1];
    if (n < 0 || m < 0) throw ParseError(header->first, "negative counts in header");
    if (n > 10'000'000) throw ParseError(header->first, "vertex count too large");

    SimpleGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto row = reader.next();
        if (!row) throw ParseError(reader.line_no + 1, "expected " + std::to_string(m) +
                                                           " edge lines, got " + std::to_string(i));
        auto ev = parse_ints(row->first, row->second, 2);
        long long u = ev[0], v = ev[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(row->first, "vertex out of range");
        if (u == v) throw ParseError(row->first, "loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(row->first, "edge must be written 'u v' with u < v");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(row->first, "repeated edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }

    EdgeListDocument doc;
    auto extra = reader.next();
    if (extra) {
        DoubledColoring c(g.edge_count());
        std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
        for (long long i = 0; i < m; ++i) {
            if (!extra)
                throw ParseError(reader.line_no + 1,
                                 "coloring block must cover all " + std::to_string(m) + " edges");
            auto cv = parse_ints(extra->first, extra->second, 4);
            long long u = cv[0], v = cv[1], r = cv[2], b = cv[3];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(extra->first, "vertex out of range");
            int e = (u == v) ? -1 : g.edge_id(static_cast<int>(u), static_cast<int>(v));
            if (e < 0) throw ParseError(extra->first, "coloring names a non-edge");
            if (seen[static_cast<size_t>(e)]) throw ParseError(extra->first, "edge colored twice");
            seen[static_cast<size_t>(e)] = 1;
            if (r < 0 || b < 0 || r + b != 2)
                throw ParseError(extra->first, "multiplicities must be nonnegative and sum to 2");
            c.set_red_mult(e, static_cast<int>(r));
            extra = reader.next();
        }
        if (extra) throw ParseError(extra->first, "trailing content after coloring block");
        doc.coloring = std::move(c);
    }

    g.require_connected();
    doc.graph = std::move(g);
    return doc;
}

std::string emit_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_edge_list(const SimpleGraph& g, const DoubledColoring& c) {
    std::ostringstream out;
    out << emit_edge_list(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << u << ' ' << v << ' ' << int(c.red_mult(e)) << ' ' << int(c.blue_mult(e)) << '\n';
    }
    return out.str();
}

std::string emit_dot(const SimpleGraph& g, const DoubledColoring* c,
                     const std::vector<std::string>* vertex_notes) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v;
        if (vertex_notes && v < static_cast<int>(vertex_notes->size()) &&
            !(*vertex_notes)[static_cast<size_t>(v)].empty())
            out << ' ' << (*vertex_notes)[static_cast<size_t>(v)];
        out << "\"]\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int r = c ? c->red_mult(e) : 0;
        int b = c ? c->blue_mult(e) : 2;
        for (int i = 0; i < r; ++i) out << "  " << u << " -- " << v << " [color=red]\n";
        for (int i = 0; i < b; ++i) out << "  " << u << " -- " << v << " [color=blue]\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lir
