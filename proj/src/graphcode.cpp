#include "cealg/invariants.hpp"

#include <algorithm>
#include <map>

namespace cealg {

Digraph Digraph::empty(int n) {
    Digraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n),
                 std::vector<bool>(static_cast<std::size_t>(n), false));
    return g;
}

void Digraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw error("add_edge: vertex out of range");
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
}

namespace {

// Color refinement with signature-ordered color ids, so the refined
// partition and the order of its cells are isomorphism-invariant.
std::vector<int> refine_colors(const Digraph& g, std::vector<int> color) {
    int n = g.n;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> outs, ins;
            for (int u = 0; u < n; ++u) {
                if (g.has_edge(v, u)) outs.push_back(color[static_cast<std::size_t>(u)]);
                if (g.has_edge(u, v)) ins.push_back(color[static_cast<std::size_t>(u)]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            s.push_back(-1);
            s.insert(s.end(), outs.begin(), outs.end());
            s.push_back(-2);
            s.insert(s.end(), ins.begin(), ins.end());
        }
        std::map<std::vector<int>, int> order;
        for (int v = 0; v < n; ++v) order[sig[static_cast<std::size_t>(v)]] = 0;
        int next = 0;
        for (auto& [s, id] : order) id = next++;
        std::vector<int> fresh(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            fresh[static_cast<std::size_t>(v)] = order[sig[static_cast<std::size_t>(v)]];
        int old_cells = 0, new_cells = next;
        {
            std::vector<int> c = color;
            std::sort(c.begin(), c.end());
            old_cells = static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
        }
        color = std::move(fresh);
        if (new_cells == old_cells) return color;
    }
}

Int adjacency_value(const Digraph& g, const std::vector<int>& perm) {
    int n = g.n;
    Int value = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            value <<= 1;
            if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                value |= 1;
        }
    return value;
}

struct CanonSearch {
    const Digraph& g;
    long budget = 2'000'000;
    bool have_best = false;
    Int best;

    void run(std::vector<int> color) {
        if (--budget < 0) throw error("canonical_graph_code: search budget exceeded");
        color = refine_colors(g, color);
        int n = g.n;
        // cells ordered by color id
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells[color[static_cast<std::size_t>(v)]].push_back(v);
        int target_color = -1;
        for (auto& [c, members] : cells)
            if (members.size() > 1) {
                target_color = c;
                break;
            }
        if (target_color < 0) {
            std::vector<int> perm;
            perm.reserve(static_cast<std::size_t>(n));
            for (auto& [c, members] : cells) perm.push_back(members.front());
            Int v = adjacency_value(g, perm);
            if (!have_best || v < best) {
                best = v;
                have_best = true;
            }
            return;
        }
        for (int v : cells[target_color]) {
            // individualize v ahead of its cell
            std::vector<int> branched(color.size());
            for (int u = 0; u < n; ++u)
                branched[static_cast<std::size_t>(u)] = 2 * color[static_cast<std::size_t>(u)];
            branched[static_cast<std::size_t>(v)] -= 1;
            run(branched);
        }
    }
};

Int graph_size_offset(int n) {
    // all graphs on fewer vertices code strictly below; 2^(j*j) labeled
    // digraphs on j vertices is a crude but order-correct block size
    Int off = 0;
    for (int j = 1; j < n; ++j) off += Int(1) << (j * j);
    return off;
}

}  // namespace

GraphCode canonical_graph_code_unbounded(const Digraph& g) {
    if (g.n < 0) throw error("canonical_graph_code: bad graph");
    if (g.n == 0) throw error("canonical_graph_code: empty graph");
    CanonSearch search{g, 2'000'000, false, Int(0)};
    search.run(std::vector<int>(static_cast<std::size_t>(g.n), 0));
    return graph_size_offset(g.n) + search.best;
}

GraphCode canonical_graph_code(const Digraph& g) {
    if (g.n > 12) throw error("canonical_graph_code: vertex bound 12 exceeded");
    return canonical_graph_code_unbounded(g);
}

}  // namespace cealg
