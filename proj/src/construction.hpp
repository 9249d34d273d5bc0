#ifndef BIPLANAR_CONSTRUCTION_HPP
#define BIPLANAR_CONSTRUCTION_HPP

#include <array>
#include <set>
#include <utility>

#include "graph.hpp"
#include "report.hpp"

namespace biplanar {

// Four width-4 label pairs; the prefixes of one family of depleted 5-cubes.
struct PairSet {
    std::vector<std::pair<VertexLabel, VertexLabel>> pairs;
};

enum class CubeType { Type1, Type2 };

// Selects one depleted 5-cube: a cube family and the prefix pair it spans.
struct DepletedCubeSpec {
    CubeType cube_type;
    std::pair<VertexLabel, VertexLabel> pair;
};

// Ordered list of k edge sets over a host graph. Builders guarantee the
// partition invariants; instances read from files may violate them and are
// audited by verify_construction.
struct EdgePartition {
    Graph host;
    std::vector<std::vector<Edge>> parts; // each sorted

    std::size_t k() const { return parts.size(); }

    // Part i as a graph on the full host vertex set (isolated vertices kept).
    Graph part_graph(std::size_t i) const;

    // True when parts are pairwise disjoint, contained in the host edge set,
    // and together cover it exactly.
    bool well_formed() const;
};

// The fixed width-4 vertex classes; every depleted-cube prefix lives in one
// of them.
std::pair<std::set<VertexLabel>, std::set<VertexLabel>> c1_c2_sets();

// The two ordered pair families (first differs from second in bit 1 only).
std::pair<PairSet, PairSet> pair_sets();

// Expands the 64-edge table for the requested cube: 32 vertices, every edge
// at Hamming distance 1 in width 8.
Graph depleted_cube(const DepletedCubeSpec& spec);

// Swap the length-4 prefix and suffix of a width-8 label.
VertexLabel sigma(const VertexLabel& v);

// Apply sigma to both endpoints of a Q8 edge.
Edge rho(const Edge& e);

// Union of all eight depleted-cube edge sets; exactly 512 edges.
std::vector<Edge> plane1_edges();

// Host Q8, plane 1 from the tables, plane 2 its image under rho.
EdgePartition build_biplanar_partition();

// Plane 1 = edges flipping a bit in positions 1-4, plane 2 = positions 5-8;
// sixteen disjoint 4-cube components per plane.
EdgePartition czabarka_baseline_partition();

// Audits a two-part partition of Q8 against the construction claims. All
// failures are recorded in the report; nothing is thrown.
//   sizes        (a) both parts have 512 edges
//   partition    (b) parts disjoint and their union is exactly E(Q8)
//   components   (c) part 1 splits into the 8 depleted-cube edge sets
//   rho_swap     (d) rho maps part 1 onto part 2 and part 2 onto part 1
//   sigma_iso    (e) sigma is an adjacency-preserving bijection G1 -> G2
//   hamming      (f) every part edge joins width-8 labels at distance 1
VerificationReport verify_construction(const EdgePartition& p);

// Partition text format: "partition k=<k> width=<d>", then per part a
// "plane <i> edges=<m>" header and m sorted edge lines. Bit-exact round-trip.
std::string write_partition_text(const EdgePartition& p);
EdgePartition read_partition_text(const std::string& text);
EdgePartition read_partition_file(const std::string& path);
void write_partition_file(const EdgePartition& p, const std::string& path);

} // namespace biplanar

#endif
