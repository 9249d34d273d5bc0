#include "construction.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace biplanar {

namespace {

VertexLabel lab4(const char* s) { return VertexLabel::parse(s); }

VertexLabel concat(const VertexLabel& prefix, const VertexLabel& suffix) {
    return VertexLabel(prefix.width() + suffix.width(),
                       (prefix.bits() << suffix.width()) | suffix.bits());
}

// Rows 1-3 of both tables: suffix pairs over the 3-bit tail, quantified over
// b in {0,1} and over both pair members.
constexpr const char* kTailRows[12][2] = {
    {"000", "001"}, {"000", "100"}, {"100", "101"}, {"001", "101"},
    {"010", "011"}, {"010", "110"}, {"110", "111"}, {"011", "111"},
    {"000", "010"}, {"001", "011"}, {"100", "110"}, {"101", "111"},
};

// Row 4: literal suffix pairs, quantified over the pair members only.
constexpr const char* kRow4Type1[4][2] = {
    {"0101", "1101"}, {"0111", "1111"}, {"0110", "1110"}, {"0100", "1100"}};
constexpr const char* kRow4Type2[4][2] = {
    {"0011", "1011"}, {"0001", "1001"}, {"0000", "1000"}, {"0010", "1010"}};

// Rows 5-6: literal suffixes carried across the prefix pair.
constexpr const char* kRow56Type1[8] = {"0000", "0100", "1100", "1000",
                                        "1001", "1101", "0101", "0001"};
constexpr const char* kRow56Type2[8] = {"0110", "0111", "0011", "1011",
                                        "1111", "1110", "1010", "0010"};

bool pair_in(const PairSet& ps, const std::pair<VertexLabel, VertexLabel>& p) {
    for (const auto& q : ps.pairs)
        if (q == p) return true;
    return false;
}

std::vector<Edge> sorted_copy(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    return es;
}

} // namespace

Graph EdgePartition::part_graph(std::size_t i) const {
    return Graph(host.vertices(), parts.at(i));
}

bool EdgePartition::well_formed() const {
    std::vector<Edge> all;
    for (const auto& part : parts) {
        for (const Edge& e : part)
            if (!host.has_edge(e.a, e.b)) return false;
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    return all == host.edges();
}

std::pair<std::set<VertexLabel>, std::set<VertexLabel>> c1_c2_sets() {
    std::set<VertexLabel> c1, c2;
    for (const char* s : {"0000", "1000", "0010", "1010", "0011", "1011", "0001", "1001"})
        c1.insert(lab4(s));
    for (const char* s : {"0111", "1111", "0101", "1101", "0100", "1100", "0110", "1110"})
        c2.insert(lab4(s));
    return {c1, c2};
}

std::pair<PairSet, PairSet> pair_sets() {
    PairSet p1, p2;
    p1.pairs = {{lab4("0000"), lab4("1000")},
                {lab4("0010"), lab4("1010")},
                {lab4("0011"), lab4("1011")},
                {lab4("0001"), lab4("1001")}};
    p2.pairs = {{lab4("0111"), lab4("1111")},
                {lab4("0101"), lab4("1101")},
                {lab4("0100"), lab4("1100")},
                {lab4("0110"), lab4("1110")}};
    return {p1, p2};
}

Graph depleted_cube(const DepletedCubeSpec& spec) {
    auto [p1, p2] = pair_sets();
    const PairSet& family = spec.cube_type == CubeType::Type1 ? p1 : p2;
    if (!pair_in(family, spec.pair))
        throw domain_error("pair (" + spec.pair.first.str() + "," + spec.pair.second.str() +
                           ") is not in the pair set for this cube type");

    const auto& row4 = spec.cube_type == CubeType::Type1 ? kRow4Type1 : kRow4Type2;
    const auto& row56 = spec.cube_type == CubeType::Type1 ? kRow56Type1 : kRow56Type2;
    const VertexLabel members[2] = {spec.pair.first, spec.pair.second};

    std::vector<Edge> es;
    es.reserve(64);
    for (const VertexLabel& c : members) {
        for (int b = 0; b <= 1; ++b)
            for (const auto& row : kTailRows) {
                VertexLabel s1 = VertexLabel::parse(std::string(1, char('0' + b)) + row[0]);
                VertexLabel s2 = VertexLabel::parse(std::string(1, char('0' + b)) + row[1]);
                es.emplace_back(concat(c, s1), concat(c, s2));
            }
        for (const auto& row : row4)
            es.emplace_back(concat(c, VertexLabel::parse(row[0])),
                            concat(c, VertexLabel::parse(row[1])));
    }
    for (const char* s : row56) {
        VertexLabel suffix = VertexLabel::parse(s);
        es.emplace_back(concat(members[0], suffix), concat(members[1], suffix));
    }

    std::vector<VertexLabel> vs;
    vs.reserve(32);
    for (const VertexLabel& c : members)
        for (std::uint32_t s = 0; s < 16; ++s) vs.push_back(concat(c, VertexLabel(4, s)));

    Graph g(std::move(vs), std::move(es));
    if (g.vertex_count() != 32 || g.edge_count() != 64)
        throw construction_error("depleted cube expansion produced " +
                                 std::to_string(g.vertex_count()) + " vertices / " +
                                 std::to_string(g.edge_count()) + " edges");
    return g;
}

VertexLabel sigma(const VertexLabel& v) {
    if (v.width() != 8)
        throw domain_error("sigma requires width 8, got " + std::to_string(v.width()));
    std::uint32_t bits = v.bits();
    return VertexLabel(8, ((bits & 0xFu) << 4) | (bits >> 4));
}

Edge rho(const Edge& e) {
    if (e.a.width() != 8 || e.b.width() != 8 || hamming_distance(e.a, e.b) != 1)
        throw domain_error("rho requires a Q8 edge, got " + e.str());
    return Edge(sigma(e.a), sigma(e.b));
}

std::vector<Edge> plane1_edges() {
    auto [p1, p2] = pair_sets();
    std::vector<Edge> es;
    es.reserve(512);
    for (const auto& pr : p1.pairs) {
        Graph d = depleted_cube({CubeType::Type1, pr});
        es.insert(es.end(), d.edges().begin(), d.edges().end());
    }
    for (const auto& pr : p2.pairs) {
        Graph d = depleted_cube({CubeType::Type2, pr});
        es.insert(es.end(), d.edges().begin(), d.edges().end());
    }
    std::sort(es.begin(), es.end());
    if (es.size() != 512 || std::adjacent_find(es.begin(), es.end()) != es.end())
        throw construction_error("plane 1 expansion is not 512 distinct edges");
    return es;
}

EdgePartition build_biplanar_partition() {
    EdgePartition p;
    p.host = hypercube(8);
    std::vector<Edge> plane1 = plane1_edges();
    std::vector<Edge> plane2;
    plane2.reserve(plane1.size());
    for (const Edge& e : plane1) plane2.push_back(rho(e));
    std::sort(plane2.begin(), plane2.end());
    p.parts = {std::move(plane1), std::move(plane2)};
    if (!p.well_formed())
        throw construction_error("table-built partition violates partition invariants");
    return p;
}

EdgePartition czabarka_baseline_partition() {
    EdgePartition p;
    p.host = hypercube(8);
    std::vector<Edge> prefix_edges, suffix_edges;
    for (const Edge& e : p.host.edges()) {
        std::uint32_t diff = e.a.bits() ^ e.b.bits();
        // Bits 1-4 as written are the high nibble of the packed value.
        if (diff & 0xF0u)
            prefix_edges.push_back(e);
        else
            suffix_edges.push_back(e);
    }
    p.parts = {std::move(prefix_edges), std::move(suffix_edges)};
    if (!p.well_formed())
        throw construction_error("baseline partition violates partition invariants");
    return p;
}

VerificationReport verify_construction(const EdgePartition& p) {
    VerificationReport rep;
    const Graph q8 = hypercube(8);

    // (a) sizes
    {
        std::ostringstream d;
        for (std::size_t i = 0; i < p.parts.size(); ++i)
            d << (i ? "/" : "") << p.parts[i].size();
        rep.add("sizes", p.parts.size() == 2 && p.parts[0].size() == 512 && p.parts[1].size() == 512,
                "k=" + std::to_string(p.parts.size()) + " part sizes " + d.str());
    }

    // (f) every part edge is a width-8 Hamming-1 edge; checked up front since
    // rho and sigma are only defined on those.
    bool all_q8_edges = true;
    {
        std::string bad;
        for (const auto& part : p.parts)
            for (const Edge& e : part) {
                if (e.a.width() != 8 || e.b.width() != 8 || hamming_distance(e.a, e.b) != 1) {
                    all_q8_edges = false;
                    if (bad.empty()) bad = e.a.str() + " " + e.b.str();
                }
            }
        rep.add("hamming", all_q8_edges,
                all_q8_edges ? "all edges join width-8 labels at distance 1"
                             : "first offender: " + bad);
    }

    // (b) disjoint and complete against E(Q8)
    {
        bool disjoint = true;
        std::string dup;
        std::vector<Edge> all;
        for (const auto& part : p.parts) {
            std::vector<Edge> sp = sorted_copy(part);
            if (std::adjacent_find(sp.begin(), sp.end()) != sp.end()) {
                disjoint = false;
                dup = "duplicate edge within a part";
            }
            all.insert(all.end(), sp.begin(), sp.end());
        }
        std::sort(all.begin(), all.end());
        auto it = std::adjacent_find(all.begin(), all.end());
        if (it != all.end() && disjoint) {
            disjoint = false;
            dup = "edge in two parts: " + it->str();
        }
        bool complete = all.size() == q8.edge_count() &&
                        std::equal(all.begin(), all.end(), q8.edges().begin(), q8.edges().end());
        rep.add("partition", disjoint && complete,
                !disjoint ? dup
                          : (complete ? "disjoint parts covering all 1024 edges"
                                      : "union of parts is not E(Q8): " +
                                            std::to_string(all.size()) + " edges"));
    }

    // (c) part 1 splits into exactly the eight depleted-cube edge sets
    {
        bool ok = p.parts.size() == 2;
        std::string detail;
        if (ok) {
            std::vector<VertexLabel> vs;
            std::vector<Edge> part1;
            for (const Edge& e : p.parts[0]) {
                vs.push_back(e.a);
                vs.push_back(e.b);
                part1.push_back(e);
            }
            {
                Graph g1(std::move(vs), std::move(part1));
                std::vector<Graph> comps = connected_components(g1);
                if (comps.size() != 8) {
                    ok = false;
                    detail = std::to_string(comps.size()) + " components, expected 8";
                } else {
                    std::vector<std::vector<Edge>> expected;
                    auto [p1s, p2s] = pair_sets();
                    for (const auto& pr : p1s.pairs)
                        expected.push_back(depleted_cube({CubeType::Type1, pr}).edges());
                    for (const auto& pr : p2s.pairs)
                        expected.push_back(depleted_cube({CubeType::Type2, pr}).edges());
                    std::sort(expected.begin(), expected.end());
                    std::vector<std::vector<Edge>> actual;
                    for (const Graph& c : comps) {
                        if (c.vertex_count() != 32 || c.edge_count() != 64) {
                            ok = false;
                            detail = "component with " + std::to_string(c.vertex_count()) +
                                     " vertices / " + std::to_string(c.edge_count()) + " edges";
                        }
                        actual.push_back(c.edges());
                    }
                    std::sort(actual.begin(), actual.end());
                    if (ok && actual != expected) {
                        ok = false;
                        detail = "component edge sets differ from the table-built cubes";
                    }
                    if (ok) detail = "8 components, 32 vertices / 64 edges each, table edge sets matched";
                }
            }
        } else {
            detail = "needs exactly 2 parts";
        }
        rep.add("components", ok, detail);
    }

    // (d) rho swaps the two parts
    {
        bool ok = p.parts.size() == 2 && all_q8_edges;
        std::string detail = ok ? "" : "skipped: parts are not Q8 edges";
        if (ok) {
            std::vector<Edge> img1, img2;
            for (const Edge& e : p.parts[0]) img1.push_back(rho(e));
            for (const Edge& e : p.parts[1]) img2.push_back(rho(e));
            std::sort(img1.begin(), img1.end());
            std::sort(img2.begin(), img2.end());
            bool fwd = img1 == sorted_copy(p.parts[1]);
            bool bwd = img2 == sorted_copy(p.parts[0]);
            ok = fwd && bwd;
            detail = ok ? "rho(part1)=part2 and rho(part2)=part1"
                        : (fwd ? "rho(part2) != part1" : "rho(part1) != part2");
        }
        rep.add("rho_swap", ok, detail);
    }

    // (e) sigma is an adjacency-preserving bijection G1 -> G2
    {
        bool ok = p.parts.size() == 2 && all_q8_edges && p.host.vertex_count() == 256;
        std::string detail = ok ? "" : "skipped: host is not Q8-shaped";
        if (ok) {
            for (const VertexLabel& v : p.host.vertices())
                if (v.width() != 8 || !p.host.has_vertex(sigma(v))) {
                    ok = false;
                    detail = "sigma does not permute the vertex set";
                    break;
                }
            if (ok) {
                std::vector<Edge> mapped;
                for (const Edge& e : p.parts[0]) mapped.emplace_back(sigma(e.a), sigma(e.b));
                std::sort(mapped.begin(), mapped.end());
                ok = p.parts[0].size() == p.parts[1].size() && mapped == sorted_copy(p.parts[1]);
                detail = ok ? "sigma maps G1 edges exactly onto G2 edges"
                            : "sigma image of part 1 is not part 2";
            }
        }
        rep.add("sigma_iso", ok, detail);
    }

    return rep;
}

std::string write_partition_text(const EdgePartition& p) {
    int width = p.host.vertices().empty() ? 8 : p.host.vertices().front().width();
    std::ostringstream os;
    os << "partition k=" << p.parts.size() << " width=" << width << "\n";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        std::vector<Edge> es = sorted_copy(p.parts[i]);
        os << "plane " << (i + 1) << " edges=" << es.size() << "\n";
        for (const Edge& e : es) os << e.str() << "\n";
    }
    return os.str();
}

namespace {

// Same scanning rules as the graph format.
struct PartLineReader {
    std::istringstream in;
    int lineno = 0;
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
    explicit PartLineReader(const std::string& text) : in(text) {}
};

int header_int(const std::string& line, const std::string& key, int lineno) {
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

EdgePartition read_partition_text(const std::string& text) {
    PartLineReader r(text);
    std::string line;
    if (!r.next(line) || line.rfind("partition ", 0) != 0)
        throw parse_error(r.lineno == 0 ? 1 : r.lineno, "expected 'partition k=<k> width=<d>' header");
    int k = header_int(line, "k", r.lineno);
    int width = header_int(line, "width", r.lineno);
    if (k < 1 || k > 64) throw parse_error(r.lineno, "part count out of range");
    if (width < 1 || width > VertexLabel::max_width) throw parse_error(r.lineno, "width out of range");

    EdgePartition p;
    std::vector<VertexLabel> vs;
    std::vector<Edge> all;
    for (int i = 1; i <= k; ++i) {
        if (!r.next(line) || line.rfind("plane ", 0) != 0)
            throw parse_error(r.lineno, "expected 'plane " + std::to_string(i) + " edges=<m>'");
        std::istringstream hs(line);
        std::string word;
        int idx = 0;
        hs >> word >> idx;
        if (idx != i)
            throw parse_error(r.lineno, "plane headers must be numbered in order; got " + line);
        int m = header_int(line, "edges", r.lineno);
        if (m < 0) throw parse_error(r.lineno, "negative edge count");
        std::vector<Edge> part;
        part.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            if (!r.next(line))
                throw parse_error(r.lineno, "unexpected end of file inside plane " + std::to_string(i));
            std::istringstream ls(line);
            std::string s1, s2, extra;
            if (!(ls >> s1 >> s2) || (ls >> extra))
                throw parse_error(r.lineno, "expected exactly two labels on edge line");
            VertexLabel a = VertexLabel::parse(s1), b = VertexLabel::parse(s2);
            if (a.width() != width || b.width() != width)
                throw parse_error(r.lineno, "label width does not match header");
            if (a == b) throw parse_error(r.lineno, "self-loop edge");
            Edge e(a, b);
            part.push_back(e);
            vs.push_back(e.a);
            vs.push_back(e.b);
            all.push_back(e);
        }
        std::sort(part.begin(), part.end());
        p.parts.push_back(std::move(part));
    }
    if (r.next(line)) throw parse_error(r.lineno, "trailing content after last plane");
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    p.host = Graph(std::move(vs), std::move(all));
    return p;
}

EdgePartition read_partition_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open partition file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_partition_text(ss.str());
}

void write_partition_file(const EdgePartition& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write partition file: " + path);
    out << write_partition_text(p);
    if (!out) throw domain_error("write failed: " + path);
}

} // namespace biplanar
