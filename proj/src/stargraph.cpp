#include "cgt/stargraph.hpp"

#include <set>

namespace cgt {

Graph star_graph(const Presentation& p) {
    p.validate();
    const int n = int(p.generators.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(p.generators[i]);
    for (int i = 0; i < n; ++i) labels.push_back(p.generators[i] + "^-1");
    Graph g(labels);
    // vertex of letter l: positive g -> g-1, negative g -> n + g-1
    auto vert = [&](int letter) {
        return letter > 0 ? letter - 1 : n + (-letter) - 1;
    };
    std::set<std::pair<int, int>> edges;
    for (const auto& rel : p.relators) {
        Word r = rel.cyclically_reduced();
        if (r.empty()) throw domain_error("star_graph: empty relator after cyclic reduction");
        for (int side = 0; side < 2; ++side) {
            Word w = side ? r.inverse() : r;
            const auto& ls = w.letters;
            for (size_t i = 0; i < ls.size(); ++i) {
                int u = ls[i];
                int v = ls[(i + 1) % ls.size()];
                int a = vert(-u), b = vert(v);
                if (a == b)
                    throw domain_error("star_graph: relator not cyclically reduced");
                edges.emplace(std::min(a, b), std::max(a, b));
            }
        }
    }
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

} // namespace cgt
