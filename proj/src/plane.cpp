#include "cgt/plane.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cgt {

bool PlaneIncidence::on_line(int line, int point) const {
    const auto& l = lines[line];
    return std::binary_search(l.begin(), l.end(), point);
}

int PlaneIncidence::line_through(int a, int b) const {
    for (int li = 0; li < int(lines.size()); ++li)
        if (on_line(li, a) && on_line(li, b)) return li;
    return -1;
}

PlaneIncidence plane_from_difference_set(const DifferenceSet& d) {
    auto chk = is_perfect_difference_set(d.residues, d.m);
    if (!chk.perfect)
        throw domain_error("plane_from_difference_set: set is not a perfect difference set");
    PlaneIncidence p;
    p.num_points = d.m;
    p.q = int(d.residues.size()) - 1;
    for (int s = 0; s < d.m; ++s) {
        std::vector<int> line;
        line.reserve(d.residues.size());
        for (int a : d.residues) line.push_back((a + s) % d.m);
        std::sort(line.begin(), line.end());
        p.lines.push_back(std::move(line));
    }
    return p;
}

PlaneIncidence plane_from_lines(int q, int num_points, std::vector<std::vector<int>> lines) {
    PlaneIncidence p;
    p.q = q;
    p.num_points = num_points;
    for (auto& l : lines) {
        std::sort(l.begin(), l.end());
        for (int v : l)
            if (v < 0 || v >= num_points)
                throw domain_error("plane_from_lines: point out of range");
    }
    p.lines = std::move(lines);
    return p;
}

PlaneAxiomReport check_plane_axioms(const PlaneIncidence& plane) {
    PlaneAxiomReport rep;
    auto note = [&](const std::string& s) { rep.violations.push_back(s); };
    for (int li = 0; li < int(plane.lines.size()); ++li)
        if (int(plane.lines[li].size()) != plane.q + 1) {
            std::ostringstream os;
            os << "line " << li << " has " << plane.lines[li].size() << " points, expected "
               << plane.q + 1;
            note(os.str());
        }
    for (int a = 0; a < plane.num_points; ++a)
        for (int b = a + 1; b < plane.num_points; ++b) {
            int cnt = 0;
            for (int li = 0; li < int(plane.lines.size()); ++li)
                if (plane.on_line(li, a) && plane.on_line(li, b)) ++cnt;
            if (cnt != 1) {
                std::ostringstream os;
                os << "points " << a << "," << b << " lie on " << cnt << " common lines";
                note(os.str());
            }
        }
    for (int i = 0; i < int(plane.lines.size()); ++i)
        for (int j = i + 1; j < int(plane.lines.size()); ++j) {
            std::vector<int> meet;
            std::set_intersection(plane.lines[i].begin(), plane.lines[i].end(),
                                  plane.lines[j].begin(), plane.lines[j].end(),
                                  std::back_inserter(meet));
            if (meet.size() != 1) {
                std::ostringstream os;
                os << "lines " << i << "," << j << " meet in " << meet.size() << " points";
                note(os.str());
            }
        }
    rep.valid = rep.violations.empty();
    return rep;
}

Graph incidence_graph(const PlaneIncidence& plane) {
    std::vector<std::string> labels;
    for (int i = 0; i < plane.num_points; ++i) labels.push_back("p" + std::to_string(i));
    for (int j = 0; j < int(plane.lines.size()); ++j) labels.push_back("L" + std::to_string(j));
    Graph g(labels);
    for (int j = 0; j < int(plane.lines.size()); ++j)
        for (int pt : plane.lines[j]) g.add_edge(pt, plane.num_points + j);
    return g;
}

bool fano_partition_check(const PlaneIncidence& plane,
                          const std::vector<std::vector<int>>& parts) {
    if (plane.q != 4) throw domain_error("fano_partition_check: plane must have order 4");
    if (parts.size() != 3) throw domain_error("fano_partition_check: need exactly three parts");
    std::set<int> all;
    for (const auto& part : parts) {
        if (part.size() != 7) throw domain_error("fano_partition_check: parts must have 7 points");
        all.insert(part.begin(), part.end());
    }
    if (int(all.size()) != plane.num_points || plane.num_points != 21)
        throw domain_error("fano_partition_check: parts do not partition the 21 points");

    for (const auto& part : parts) {
        std::set<int> pset(part.begin(), part.end());
        // induced lines: intersections of plane lines with the part, size 3
        std::set<std::vector<int>> induced;
        for (const auto& line : plane.lines) {
            std::vector<int> meet;
            for (int pt : line)
                if (pset.count(pt)) meet.push_back(pt);
            if (meet.size() == 3) induced.insert(meet);
        }
        if (induced.size() != 7) return false;
        // Fano axioms on 7 points with the induced 3-point lines
        for (auto a = part.begin(); a != part.end(); ++a)
            for (auto b = std::next(a); b != part.end(); ++b) {
                int cnt = 0;
                for (const auto& l : induced)
                    if (std::count(l.begin(), l.end(), *a) && std::count(l.begin(), l.end(), *b))
                        ++cnt;
                if (cnt != 1) return false;
            }
        for (auto i = induced.begin(); i != induced.end(); ++i)
            for (auto j = std::next(i); j != induced.end(); ++j) {
                std::vector<int> meet;
                std::set_intersection(i->begin(), i->end(), j->begin(), j->end(),
                                      std::back_inserter(meet));
                if (meet.size() != 1) return false;
            }
    }
    return true;
}

} // namespace cgt
