#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace biplanar {

Graph::Graph(std::vector<VertexLabel> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(vertices_.size(), {});
    for (const Edge& e : edges_) {
        int ia = vertex_index(e.a), ib = vertex_index(e.b);
        if (ia < 0 || ib < 0)
            throw domain_error("edge endpoint not in vertex set: " + e.str());
        adj_[static_cast<std::size_t>(ia)].push_back(ib);
        adj_[static_cast<std::size_t>(ib)].push_back(ia);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_vertex(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const VertexLabel& u, const VertexLabel& v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

int Graph::vertex_index(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices_.begin());
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) d[i] = static_cast<int>(adj_[i].size());
    std::sort(d.begin(), d.end());
    return d;
}

VertexMap::VertexMap(std::map<VertexLabel, VertexLabel> mapping) : mapping_(std::move(mapping)) {
    std::vector<VertexLabel> images;
    images.reserve(mapping_.size());
    for (const auto& [k, v] : mapping_) images.push_back(v);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        throw domain_error("vertex map is not injective");
}

VertexLabel VertexMap::operator()(const VertexLabel& v) const {
    auto it = mapping_.find(v);
    if (it == mapping_.end())
        throw domain_error("vertex map undefined at " + v.str());
    return it->second;
}

VertexMap VertexMap::identity_on(const std::vector<VertexLabel>& vs) {
    std::map<VertexLabel, VertexLabel> m;
    for (const VertexLabel& v : vs) m.emplace(v, v);
    return VertexMap(std::move(m));
}

Graph hypercube(int d) {
    if (d < 1 || d > 16)
        throw domain_error("hypercube dimension must be in 1..16, got " + std::to_string(d));
    std::vector<VertexLabel> vs;
    vs.reserve(std::size_t(1) << d);
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << d); ++x)
        vs.emplace_back(d, x);
    std::vector<Edge> es;
    es.reserve((std::size_t(d) << d) / 2);
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << d); ++x)
        for (int i = 0; i < d; ++i) {
            std::uint32_t y = x ^ (std::uint32_t(1) << i);
            if (y > x) es.emplace_back(VertexLabel(d, x), VertexLabel(d, y));
        }
    return Graph(std::move(vs), std::move(es));
}

std::vector<Graph> connected_components(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adjacency()[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    q.push(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<VertexLabel>> cvs(static_cast<std::size_t>(ncomp));
    for (std::size_t i = 0; i < n; ++i)
        cvs[static_cast<std::size_t>(comp[i])].push_back(g.vertices()[i]);
    std::vector<std::vector<Edge>> ces(static_cast<std::size_t>(ncomp));
    for (const Edge& e : g.edges())
        ces[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.vertex_index(e.a))])].push_back(e);
    // Vertices are scanned in sorted order, so component i's first vertex is
    // its smallest label and components come out sorted by that label.
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c)
        out.emplace_back(std::move(cvs[static_cast<std::size_t>(c)]), std::move(ces[static_cast<std::size_t>(c)]));
    return out;
}

Graph apply_vertex_map(const Graph& g, const VertexMap& m) {
    std::vector<VertexLabel> vs;
    vs.reserve(g.vertex_count());
    for (const VertexLabel& v : g.vertices()) {
        if (!m.defined_on(v))
            throw domain_error("vertex map not total on graph: missing " + v.str());
        vs.push_back(m(v));
    }
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const Edge& e : g.edges()) es.emplace_back(m(e.a), m(e.b));
    return Graph(std::move(vs), std::move(es));
}

bool is_isomorphism_witness(const Graph& g, const Graph& h, const VertexMap& m) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (m.size() != g.vertex_count()) return false;
    std::vector<VertexLabel> image;
    image.reserve(g.vertex_count());
    for (const VertexLabel& v : g.vertices()) {
        if (!m.defined_on(v)) return false;
        image.push_back(m(v));
    }
    std::sort(image.begin(), image.end());
    if (image != h.vertices()) return false;
    std::vector<Edge> mapped;
    mapped.reserve(g.edge_count());
    for (const Edge& e : g.edges()) mapped.emplace_back(m(e.a), m(e.b));
    std::sort(mapped.begin(), mapped.end());
    // Bijection + mapped edge set equal to E(h): non-adjacency is preserved
    // automatically because edge counts match.
    return mapped == h.edges();
}

std::string write_graph_text(const Graph& g) {
    int width = g.vertices().empty() ? 1 : g.vertices().front().width();
    std::ostringstream os;
    os << "graph width=" << width << "\n";
    for (const Edge& e : g.edges()) os << e.str() << "\n";
    return os.str();
}

namespace {

// Shared line scanner: strips \r, skips blank and '#' lines.
struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::size_t i = raw.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            if (raw[i] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

VertexLabel parse_label(const std::string& s, int width, int lineno) {
    VertexLabel l;
    try {
        l = VertexLabel::parse(s);
    } catch (const domain_error& e) {
        throw parse_error(lineno, e.what());
    }
    if (l.width() != width)
        throw parse_error(lineno, "label '" + s + "' does not have width " + std::to_string(width));
    return l;
}

int parse_header_int(const std::string& line, const std::string& key, int lineno) {
    auto pos = line.find(key + "=");
    if (pos == std::string::npos)
        throw parse_error(lineno, "missing '" + key + "=' in header");
    std::size_t start = pos + key.size() + 1;
    std::size_t end = line.find_first_of(" \t", start);
    std::string val = line.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
        std::size_t used = 0;
        int v = std::stoi(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
        return v;
    } catch (const std::exception&) {
        throw parse_error(lineno, "bad integer for '" + key + "': '" + val + "'");
    }
}

} // namespace

Graph read_graph_text(const std::string& text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line) || line.rfind("graph ", 0) != 0)
        throw parse_error(r.lineno == 0 ? 1 : r.lineno, "expected 'graph width=<d>' header");
    int width = parse_header_int(line, "width", r.lineno);
    if (width < 1 || width > VertexLabel::max_width)
        throw parse_error(r.lineno, "width out of range");

    std::vector<VertexLabel> vs;
    std::vector<Edge> es;
    std::set<Edge> seen;
    while (r.next(line)) {
        std::istringstream ls(line);
        std::string s1, s2, extra;
        if (!(ls >> s1 >> s2) || (ls >> extra))
            throw parse_error(r.lineno, "expected exactly two labels on edge line");
        VertexLabel a = parse_label(s1, width, r.lineno);
        VertexLabel b = parse_label(s2, width, r.lineno);
        if (a == b) throw parse_error(r.lineno, "self-loop edge at " + a.str());
        Edge e(a, b);
        if (!seen.insert(e).second)
            throw parse_error(r.lineno, "duplicate edge " + e.str());
        es.push_back(e);
        vs.push_back(a);
        vs.push_back(b);
    }
    return Graph(std::move(vs), std::move(es));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_graph_text(ss.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write graph file: " + path);
    out << write_graph_text(g);
    if (!out) throw domain_error("write failed: " + path);
}

} // namespace biplanar
