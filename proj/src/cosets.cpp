#include "cgt/cosets.hpp"

#include <deque>
#include <numeric>

namespace cgt {

namespace {

// Working state of one enumeration. Letters are columns: generator g forward
// is 2g, inverse is 2g+1.
struct Enumerator {
    int ngens;
    long max_cosets;
    std::vector<std::vector<int>> tab;
    std::vector<int> uf; // union-find parent, uf[c] <= c; rep == itself

    explicit Enumerator(int n, long cap) : ngens(n), max_cosets(cap) { new_coset(); }

    static int col(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int inv_col(int c) { return c ^ 1; }

    int new_coset() {
        if (long(tab.size()) >= max_cosets)
            throw budget_error("coset_enumerate: budget of " + std::to_string(max_cosets) +
                               " cosets exceeded");
        tab.emplace_back(2 * ngens, -1);
        uf.push_back(int(tab.size()) - 1);
        return int(tab.size()) - 1;
    }

    int rep(int c) {
        while (uf[c] != c) {
            uf[c] = uf[uf[c]];
            c = uf[c];
        }
        return c;
    }
    bool dead(int c) { return rep(c) != c; }

    void merge(int a, int b, std::deque<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;
        queue.push_back(b);
    }

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int dead_c = queue.front();
            queue.pop_front();
            for (int x = 0; x < 2 * ngens; ++x) {
                int d = tab[dead_c][x];
                if (d < 0) continue;
                tab[dead_c][x] = -1;
                if (tab[d][inv_col(x)] == dead_c) tab[d][inv_col(x)] = -1;
                int mu = rep(dead_c), nu = rep(d);
                if (tab[mu][x] >= 0)
                    merge(nu, tab[mu][x], queue);
                else if (tab[nu][inv_col(x)] >= 0)
                    merge(mu, tab[nu][inv_col(x)], queue);
                else {
                    tab[mu][x] = nu;
                    tab[nu][inv_col(x)] = mu;
                }
            }
        }
    }

    // Scan word w as a cycle at coset a; fill gaps with new cosets (HLT).
    void scan_and_fill(int a, const std::vector<int>& w) {
        a = rep(a);
        int i = 0, j = int(w.size());
        int f = a, b = a;
        while (true) {
            while (i < j) {
                int nf = tab[f][col(w[i])];
                if (nf < 0) break;
                f = rep(nf);
                ++i;
            }
            if (i == j) { // cycle closed through the front
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i) {
                int nb = tab[b][inv_col(col(w[j - 1]))];
                if (nb < 0) break;
                b = rep(nb);
                --j;
            }
            if (j == i) { // cycle closed through the back
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i + 1) { // single gap: deduction closes the cycle
                int c = col(w[i]);
                tab[f][c] = b;
                tab[b][inv_col(c)] = f;
                return;
            }
            // gap longer than one: define a coset and resume the forward scan
            int c = col(w[i]);
            int n = new_coset();
            tab[f][c] = n;
            tab[n][inv_col(c)] = f;
        }
    }
};

} // namespace

int CosetTable::act(int coset, int letter) const {
    int c = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return tab[coset][c];
}

int CosetTable::act_word(int coset, const Word& w) const {
    int c = coset;
    for (int l : w.letters) {
        c = act(c, l);
        if (c < 0) return -1;
    }
    return c;
}

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgens,
                           long max_cosets) {
    p.validate();
    if (max_cosets < 1) throw domain_error("coset_enumerate: max_cosets must be >= 1");
    Enumerator en(int(p.generators.size()), max_cosets);

    std::vector<std::vector<int>> rel_words;
    for (const auto& r : p.relators) rel_words.push_back(r.free_reduced().letters);

    for (const auto& w : subgens) en.scan_and_fill(0, w.free_reduced().letters);

    for (size_t a = 0; a < en.tab.size(); ++a) {
        if (en.dead(int(a))) continue;
        for (const auto& r : rel_words) {
            en.scan_and_fill(int(a), r);
            if (en.dead(int(a))) break;
        }
        if (en.dead(int(a))) continue;
        // complete the row so every generator is defined everywhere
        for (int x = 0; x < 2 * en.ngens; ++x) {
            if (en.dead(int(a))) break;
            if (en.tab[a][x] >= 0) continue;
            int n = en.new_coset();
            en.tab[a][x] = n;
            en.tab[n][Enumerator::inv_col(x)] = int(a);
        }
    }

    // compress live cosets in numeric order
    std::vector<int> newid(en.tab.size(), -1);
    int live = 0;
    for (size_t c = 0; c < en.tab.size(); ++c)
        if (!en.dead(int(c))) newid[c] = live++;

    CosetTable out;
    out.parent = p;
    out.subgroup_generators = subgens;
    out.tab.assign(live, std::vector<int>(2 * en.ngens, -1));
    out.complete = true;
    for (size_t c = 0; c < en.tab.size(); ++c) {
        if (newid[c] < 0) continue;
        for (int x = 0; x < 2 * en.ngens; ++x) {
            int d = en.tab[c][x];
            if (d < 0) {
                out.complete = false;
                continue;
            }
            out.tab[newid[c]][x] = newid[en.rep(d)];
        }
    }
    if (!out.complete)
        throw internal_error("coset_enumerate: table incomplete after full pass");

    // closed-table sanity: every relator traces to a cycle from every coset,
    // every subgroup generator fixes coset 0
    for (int c = 0; c < out.index(); ++c)
        for (const auto& r : p.relators)
            if (out.act_word(c, r) != c)
                throw internal_error("coset_enumerate: relator does not close");
    for (const auto& w : subgens)
        if (out.act_word(0, w) != 0)
            throw internal_error("coset_enumerate: subgroup generator moves coset 0");
    return out;
}

CosetTable coset_enumerate(const SubgroupSpec& s, long max_cosets) {
    s.validate();
    return coset_enumerate(s.parent, s.generators, max_cosets);
}

} // namespace cgt
