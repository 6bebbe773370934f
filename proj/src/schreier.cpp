#include "cgt/schreier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cgt {

namespace {

// Substitute gen -> expr (word over the same index space) inside w.
Word substitute(const Word& w, int gen, const Word& expr) {
    Word out;
    for (int l : w.letters) {
        if (std::abs(l) - 1 == gen) {
            Word part = l > 0 ? expr : expr.inverse();
            out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
        } else {
            out.letters.push_back(l);
        }
    }
    return out.free_reduced();
}

} // namespace

SubgroupPresentation reidemeister_schreier(const CosetTable& table, bool simplify) {
    if (!table.complete) throw domain_error("reidemeister_schreier: table is incomplete");
    const int n = table.ngens();
    const int idx = table.index();

    // Schreier spanning tree by BFS in table order; tree[c] = (parent coset, letter).
    std::vector<int> visited(idx, 0);
    std::vector<char> tree_edge(size_t(idx) * n, 0); // (coset, positive gen) used by the tree
    visited[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int l = 1; l <= n; ++l) {
            for (int sign : {+1, -1}) {
                int d = table.act(c, sign * l);
                if (visited[d]) continue;
                visited[d] = 1;
                // mark the traversed positive-generator edge
                if (sign > 0)
                    tree_edge[size_t(c) * n + (l - 1)] = 1;
                else
                    tree_edge[size_t(d) * n + (l - 1)] = 1;
                queue.push_back(d);
            }
        }
    }
    for (int c = 0; c < idx; ++c)
        if (!visited[c]) throw internal_error("reidemeister_schreier: table not connected");

    SubgroupPresentation out;
    out.table = table;

    // Schreier generators: every non-tree (coset, generator) pair.
    std::map<std::pair<int, int>, int> gen_of; // (coset, parent gen 0-based) -> raw index
    for (int c = 0; c < idx; ++c)
        for (int g = 0; g < n; ++g) {
            if (tree_edge[size_t(c) * n + g]) continue;
            int id = int(out.schreier_pairs.size());
            gen_of[{c, g}] = id;
            out.schreier_pairs.emplace_back(c, g);
            out.raw.generators.push_back("s" + std::to_string(c) + "_" +
                                         table.parent.generators[g]);
        }

    // Reidemeister rewriting of a parent word traced from a coset.
    auto trace = [&](int start, const Word& w) {
        Word r;
        int c = start;
        for (int l : w.letters) {
            if (l > 0) {
                int g = l - 1;
                auto it = gen_of.find({c, g});
                if (it != gen_of.end()) r.letters.push_back(it->second + 1);
                c = table.act(c, l);
            } else {
                int g = -l - 1;
                int from = table.act(c, l); // coset before applying g forward
                auto it = gen_of.find({from, g});
                if (it != gen_of.end()) r.letters.push_back(-(it->second + 1));
                c = from;
            }
        }
        return std::make_pair(r.free_reduced(), c);
    };

    for (int c = 0; c < idx; ++c)
        for (const auto& rel : table.parent.relators) {
            auto [w, end] = trace(c, rel);
            if (end != c) throw internal_error("reidemeister_schreier: relator trace not closed");
            if (!w.empty()) out.raw.relators.push_back(w);
        }
    out.raw.provenance = "reidemeister-schreier over " + table.parent.provenance;
    out.raw.validate();

    // Light Tietze: eliminate generators that occur in relators of length <= 2.
    const int raw_n = int(out.raw.generators.size());
    std::vector<Word> expr(raw_n); // expression over raw index space; identity = own letter
    std::vector<char> alive(raw_n, 1);
    for (int i = 0; i < raw_n; ++i) expr[i] = Word({i + 1});
    std::vector<Word> rels;
    for (const auto& r : out.raw.relators) rels.push_back(r.cyclically_reduced());

    if (simplify) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rels) {
                if (r.length() == 1) {
                    int g = std::abs(r.letters[0]) - 1;
                    if (!alive[g]) continue;
                    alive[g] = 0;
                    Word empty;
                    for (auto& w : rels) w = substitute(w, g, empty).cyclically_reduced();
                    for (auto& w : expr) w = substitute(w, g, empty);
                    changed = true;
                    break;
                }
                if (r.length() == 2) {
                    int a = r.letters[0], b = r.letters[1];
                    int ga = std::abs(a) - 1, gb = std::abs(b) - 1;
                    if (ga == gb) continue; // torsion relator, not an elimination
                    // eliminate the higher-index generator for determinism
                    int victim = std::max(ga, gb);
                    if (!alive[victim]) continue;
                    Word rhs;
                    if (victim == ga) {
                        // a = b^-1 (if a positive), else a^-1 = ... handle signs
                        rhs = a > 0 ? Word({b}).inverse() : Word({b});
                    } else {
                        rhs = b > 0 ? Word({a}).inverse() : Word({a});
                    }
                    alive[victim] = 0;
                    for (auto& w : rels) w = substitute(w, victim, rhs).cyclically_reduced();
                    for (auto& w : expr) w = substitute(w, victim, rhs);
                    changed = true;
                    break;
                }
            }
        }
    }

    // renumber surviving generators
    std::vector<int> newid(raw_n, -1);
    int kept = 0;
    for (int i = 0; i < raw_n; ++i)
        if (alive[i]) newid[i] = kept++;
    auto reindex = [&](const Word& w) {
        Word r;
        for (int l : w.letters) {
            int g = std::abs(l) - 1;
            if (newid[g] < 0) throw internal_error("reidemeister_schreier: eliminated gen survived");
            r.letters.push_back(l > 0 ? newid[g] + 1 : -(newid[g] + 1));
        }
        return r;
    };
    out.simplified.provenance = out.raw.provenance + " (simplified)";
    for (int i = 0; i < raw_n; ++i)
        if (alive[i]) out.simplified.generators.push_back(out.raw.generators[i]);
    std::set<Word> seen;
    for (const auto& r : rels) {
        if (r.empty()) continue;
        Word w = reindex(r);
        Word key = cyclic_canonical(w);
        Word keyinv = cyclic_canonical(w.inverse());
        if (seen.count(key) || seen.count(keyinv)) continue;
        seen.insert(key);
        out.simplified.relators.push_back(w);
    }
    out.simplified.validate();
    out.raw_to_simplified.resize(raw_n);
    for (int i = 0; i < raw_n; ++i) out.raw_to_simplified[i] = reindex(expr[i]);
    return out;
}

Word SubgroupPresentation::rewrite_raw(const Word& parent_word) const {
    // re-derive the tree information from schreier_pairs: pairs present are
    // exactly the non-tree edges
    const int n = table.ngens();
    std::map<std::pair<int, int>, int> gen_of;
    for (size_t i = 0; i < schreier_pairs.size(); ++i) gen_of[schreier_pairs[i]] = int(i);
    Word r;
    int c = 0;
    for (int l : parent_word.letters) {
        if (l > 0) {
            auto it = gen_of.find({c, l - 1});
            if (it != gen_of.end()) r.letters.push_back(it->second + 1);
            c = table.act(c, l);
        } else {
            int from = table.act(c, l);
            auto it = gen_of.find({from, -l - 1});
            if (it != gen_of.end()) r.letters.push_back(-(it->second + 1));
            c = from;
        }
    }
    if (c != 0)
        throw domain_error("rewrite_raw: word does not lie in the subgroup");
    return r.free_reduced();
}

Word SubgroupPresentation::rewrite(const Word& parent_word) const {
    Word raw_word = rewrite_raw(parent_word);
    Word out;
    for (int l : raw_word.letters) {
        const Word& e = raw_to_simplified[std::abs(l) - 1];
        Word part = l > 0 ? e : e.inverse();
        out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
    }
    return out.free_reduced();
}

} // namespace cgt
