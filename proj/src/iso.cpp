#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "graph.hpp"

namespace biplanar {

namespace {

// Joint color refinement over both graphs so colors are comparable.
// Initial color is the degree; one round replaces a vertex color by the
// multiset of neighbor colors. Runs until stable.
void refine_colors(const std::vector<std::vector<int>>& gadj,
                   const std::vector<std::vector<int>>& hadj,
                   std::vector<int>& gcol, std::vector<int>& hcol) {
    auto ng = gadj.size(), nh = hadj.size();
    gcol.assign(ng, 0);
    hcol.assign(nh, 0);
    for (std::size_t i = 0; i < ng; ++i) gcol[i] = static_cast<int>(gadj[i].size());
    for (std::size_t i = 0; i < nh; ++i) hcol[i] = static_cast<int>(hadj[i].size());

    for (std::size_t round = 0; round < ng + 1; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        std::map<Sig, int> rank;
        auto signature = [](const std::vector<std::vector<int>>& adj, const std::vector<int>& col,
                            std::size_t v) {
            std::vector<int> nb;
            nb.reserve(adj[v].size());
            for (int w : adj[v]) nb.push_back(col[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            return Sig{col[v], std::move(nb)};
        };
        std::vector<Sig> gsig(ng), hsig(nh);
        for (std::size_t v = 0; v < ng; ++v) { gsig[v] = signature(gadj, gcol, v); rank[gsig[v]] = 0; }
        for (std::size_t v = 0; v < nh; ++v) { hsig[v] = signature(hadj, hcol, v); rank[hsig[v]] = 0; }
        int c = 0;
        for (auto& [sig, r] : rank) r = c++;
        std::vector<int> gnew(ng), hnew(nh);
        for (std::size_t v = 0; v < ng; ++v) gnew[v] = rank[gsig[v]];
        for (std::size_t v = 0; v < nh; ++v) hnew[v] = rank[hsig[v]];
        if (gnew == gcol && hnew == hcol) break;
        gcol.swap(gnew);
        hcol.swap(hnew);
    }
}

struct IsoSearch {
    int n;
    std::vector<std::vector<char>> gmat, hmat;
    std::vector<std::vector<int>> gadj, hadj;
    std::vector<int> gcol, hcol;
    std::vector<int> assign;  // g index -> h index, -1 unset
    std::vector<char> used;   // h index taken
    std::vector<int> order;   // g indices, assignment order

    bool extend(int depth) {
        if (depth == n) return true;
        int u = select_next();
        order.push_back(u);
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (hcol[static_cast<std::size_t>(w)] != gcol[static_cast<std::size_t>(u)]) continue;
            if (!consistent(u, w)) continue;
            assign[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1)) return true;
            assign[static_cast<std::size_t>(u)] = -1;
            used[static_cast<std::size_t>(w)] = 0;
        }
        order.pop_back();
        return false;
    }

    // Unassigned vertex with the most already-mapped neighbors; ties go to
    // higher degree, then lower index. Keeps the search inside one component.
    int select_next() const {
        int best = -1, best_mapped = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (assign[static_cast<std::size_t>(u)] != -1) continue;
            int mapped = 0;
            for (int v : gadj[static_cast<std::size_t>(u)])
                if (assign[static_cast<std::size_t>(v)] != -1) ++mapped;
            int deg = static_cast<int>(gadj[static_cast<std::size_t>(u)].size());
            if (mapped > best_mapped || (mapped == best_mapped && deg > best_deg)) {
                best = u;
                best_mapped = mapped;
                best_deg = deg;
            }
        }
        return best;
    }

    bool consistent(int u, int w) const {
        for (int v : order) {
            int x = assign[static_cast<std::size_t>(v)];
            if (gmat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
                hmat[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)])
                return false;
        }
        return true;
    }
};

} // namespace

std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;

    IsoSearch s;
    s.n = static_cast<int>(g.vertex_count());
    s.gadj = g.adjacency();
    s.hadj = h.adjacency();
    refine_colors(s.gadj, s.hadj, s.gcol, s.hcol);
    {
        auto gc = s.gcol, hc = s.hcol;
        std::sort(gc.begin(), gc.end());
        std::sort(hc.begin(), hc.end());
        if (gc != hc) return std::nullopt;
    }
    auto nsz = static_cast<std::size_t>(s.n);
    s.gmat.assign(nsz, std::vector<char>(nsz, 0));
    s.hmat.assign(nsz, std::vector<char>(nsz, 0));
    for (std::size_t u = 0; u < nsz; ++u) {
        for (int v : s.gadj[u]) s.gmat[u][static_cast<std::size_t>(v)] = 1;
        for (int v : s.hadj[u]) s.hmat[u][static_cast<std::size_t>(v)] = 1;
    }
    s.assign.assign(nsz, -1);
    s.used.assign(nsz, 0);
    if (!s.extend(0)) return std::nullopt;

    std::map<VertexLabel, VertexLabel> m;
    for (int u = 0; u < s.n; ++u)
        m.emplace(g.vertices()[static_cast<std::size_t>(u)],
                  h.vertices()[static_cast<std::size_t>(s.assign[static_cast<std::size_t>(u)])]);
    VertexMap witness(std::move(m));
    if (!is_isomorphism_witness(g, h, witness))
        throw construction_error("isomorphism search produced an invalid witness");
    return witness;
}

} // namespace biplanar
