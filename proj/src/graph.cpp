#include "cgt/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cgt {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.resize(labels_.size());
}

int Graph::add_vertex(const std::string& label) {
    labels_.push_back(label);
    adj_.emplace_back();
    return int(labels_.size()) - 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw domain_error("Graph::add_edge: vertex out of range");
    if (u == v) throw domain_error("Graph::add_edge: self-loop");
    if (adjacent(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return int(twice / 2);
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != k) return false;
    return true;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(vertex_count(), -1);
    for (int s = 0; s < vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : adj_[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int Graph::girth() const {
    int best = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        // BFS from s; a cross or back edge closes a cycle through s-layers.
        std::vector<int> dist(vertex_count(), -1), parent(vertex_count(), -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : adj_[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int cyc = dist[u] + dist[w] + 1;
                    if (best == 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
    const int n = g1.vertex_count();
    if (g2.vertex_count() != n || int(map.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : map) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
    return true;
}

namespace {

// Invariant profile: degree plus sorted distance multiset to all vertices.
std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> prof(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, n + 1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (dist[w] > dist[u] + 1) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        std::sort(dist.begin(), dist.end());
        prof[s] = dist;
        prof[s].push_back(g.degree(s));
    }
    return prof;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> map;  // g1 -> g2, -1 unset
    std::vector<int> used; // g2 vertex used
    const std::vector<std::vector<int>>& p1;
    const std::vector<std::vector<int>>& p2;

    bool feasible(int u, int v) const {
        if (p1[u] != p2[v]) return false;
        for (int w : g1.neighbors(u))
            if (map[w] != -1 && !g2.adjacent(v, map[w])) return false;
        // non-neighbors already mapped must stay non-adjacent
        for (int w = 0; w < g1.vertex_count(); ++w)
            if (map[w] != -1 && !g1.adjacent(u, w) && w != u && g2.adjacent(v, map[w])) return false;
        return true;
    }

    int pick_next() const {
        // most mapped neighbors first, then lowest index
        int best = -1, bestScore = -1;
        for (int u = 0; u < g1.vertex_count(); ++u) {
            if (map[u] != -1) continue;
            int score = 0;
            for (int w : g1.neighbors(u))
                if (map[w] != -1) ++score;
            if (score > bestScore) { bestScore = score; best = u; }
        }
        return best;
    }

    bool run(int depth) {
        if (depth == g1.vertex_count()) return true;
        int u = pick_next();
        for (int v = 0; v < g2.vertex_count(); ++v) {
            if (used[v] || !feasible(u, v)) continue;
            map[u] = v;
            used[v] = 1;
            if (run(depth + 1)) return true;
            map[u] = -1;
            used[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> graph_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() > 100 || g2.vertex_count() > 100)
        throw budget_error("graph_isomorphism: size cap (100 vertices) exceeded");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto p1 = vertex_profiles(g1);
    auto p2 = vertex_profiles(g2);
    {
        auto s1 = p1, s2 = p2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    IsoSearch search{g1, g2,
                     std::vector<int>(g1.vertex_count(), -1),
                     std::vector<int>(g2.vertex_count(), 0), p1, p2};
    if (!search.run(0)) return std::nullopt;
    if (!verify_isomorphism(g1, g2, search.map))
        throw internal_error("graph_isomorphism: witness failed re-verification");
    return search.map;
}

} // namespace cgt
