#include "cgt/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cgt {

std::vector<int> PolyhedralPresentation::all_points() const {
    std::vector<int> pts;
    for (const auto& pp : plane_points) pts.insert(pts.end(), pp.begin(), pp.end());
    std::sort(pts.begin(), pts.end());
    return pts;
}

namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

} // namespace

PolyhedralReport polyhedral_validate(const PolyhedralPresentation& pp) {
    PolyhedralReport rep;
    auto note = [&](const std::string& kind, const std::string& detail) {
        rep.violations.push_back({kind, detail});
    };

    std::vector<int> pts = pp.all_points();
    std::set<int> ptset(pts.begin(), pts.end());
    if (pts.size() != ptset.size()) note("points", "plane point sets are not disjoint");

    // lambda total and a bijection onto its image
    std::set<std::vector<int>> images;
    for (int x : pts) {
        auto it = pp.lambda.find(x);
        if (it == pp.lambda.end()) {
            note("lambda", "no line assigned to point " + std::to_string(x));
            continue;
        }
        std::vector<int> line = it->second;
        std::sort(line.begin(), line.end());
        if (!images.insert(line).second)
            note("lambda", "lambda is not injective: line " + tuple_str(line) + " repeated");
    }

    // per-plane line systems must satisfy the plane axioms
    for (size_t pi = 0; pi < pp.plane_points.size(); ++pi) {
        const auto& ppts = pp.plane_points[pi];
        std::set<int> inplane(ppts.begin(), ppts.end());
        std::vector<std::pair<int, std::vector<int>>> lines; // (owning point, sorted line)
        for (int x : ppts) {
            auto it = pp.lambda.find(x);
            if (it == pp.lambda.end()) continue;
            std::vector<int> line = it->second;
            std::sort(line.begin(), line.end());
            bool ok = true;
            for (int y : line)
                if (!inplane.count(y)) { ok = false; break; }
            if (!ok) {
                note("line-system", "lambda(" + std::to_string(x) + ") leaves its plane");
                continue;
            }
            if (int(line.size()) != pp.q + 1)
                note("line-system", "lambda(" + std::to_string(x) + ") has " +
                                        std::to_string(line.size()) + " points, expected " +
                                        std::to_string(pp.q + 1));
            lines.emplace_back(x, std::move(line));
        }
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j) {
                std::vector<int> meet;
                std::set_intersection(lines[i].second.begin(), lines[i].second.end(),
                                      lines[j].second.begin(), lines[j].second.end(),
                                      std::back_inserter(meet));
                if (meet.size() != 1)
                    note("line-system", "lambda(" + std::to_string(lines[i].first) + ") = " +
                                            tuple_str(lines[i].second) + " and lambda(" +
                                            std::to_string(lines[j].first) + ") = " +
                                            tuple_str(lines[j].second) + " share " +
                                            std::to_string(meet.size()) + " points");
            }
        for (size_t a = 0; a < ppts.size(); ++a)
            for (size_t b = a + 1; b < ppts.size(); ++b) {
                int cnt = 0;
                for (const auto& [x, line] : lines)
                    if (std::binary_search(line.begin(), line.end(), ppts[a]) &&
                        std::binary_search(line.begin(), line.end(), ppts[b]))
                        ++cnt;
                if (cnt != 1)
                    note("line-system", "points " + std::to_string(ppts[a]) + "," +
                                            std::to_string(ppts[b]) + " lie on " +
                                            std::to_string(cnt) + " common lines");
            }
    }

    // incidence relation for condition (1)
    auto incident = [&](int x1, int x2) {
        auto it = pp.lambda.find(x1);
        if (it == pp.lambda.end()) return false;
        return std::find(it->second.begin(), it->second.end(), x2) != it->second.end();
    };

    std::set<std::vector<int>> kset(pp.tuples.begin(), pp.tuples.end());

    // (2) cyclic closure
    for (const auto& t : kset) {
        if (t.size() < 2) {
            note("condition-2", "tuple too short: " + tuple_str(t));
            continue;
        }
        std::vector<int> rot(t.begin() + 1, t.end());
        rot.push_back(t[0]);
        if (!kset.count(rot))
            note("condition-2", "rotation " + tuple_str(rot) + " of " + tuple_str(t) + " missing");
    }

    // (1) and (3) via the continuation map (x1,x2) -> tuples
    std::map<std::pair<int, int>, std::set<int>> continuations;
    for (const auto& t : kset) {
        if (t.size() < 3) continue;
        for (int x : t)
            if (!ptset.count(x))
                note("points", "tuple " + tuple_str(t) + " uses unknown point");
        continuations[{t[0], t[1]}].insert(t[2]);
    }
    for (const auto& [key, conts] : continuations) {
        if (!incident(key.first, key.second))
            note("condition-1", "tuple starts (" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + ") but " +
                                    std::to_string(key.second) + " is not on lambda(" +
                                    std::to_string(key.first) + ")");
        if (conts.size() > 1) {
            std::ostringstream os;
            os << "(" << key.first << "," << key.second << ") continues to "
               << conts.size() << " distinct points";
            note("condition-3", os.str());
        }
    }
    for (int x1 : pts)
        for (int x2 : pts)
            if (incident(x1, x2) && !continuations.count({x1, x2}))
                note("condition-1", "incident pair (" + std::to_string(x1) + "," +
                                        std::to_string(x2) + ") has no tuple in K");

    rep.valid = rep.violations.empty();
    return rep;
}

Presentation polyhedral_to_presentation(const PolyhedralPresentation& pp, bool dedup_cyclic) {
    if (pp.tuples.empty()) throw domain_error("polyhedral_to_presentation: empty tuple set");
    auto rep = polyhedral_validate(pp);
    if (!rep.valid) {
        std::string msg = "polyhedral_to_presentation: invalid data: " + rep.violations[0].kind +
                          ": " + rep.violations[0].detail;
        throw domain_error(msg);
    }
    std::vector<int> pts = pp.all_points();
    std::map<int, int> gen_of;
    Presentation p;
    p.provenance = "polyhedral(q=" + std::to_string(pp.q) + ")";
    for (size_t i = 0; i < pts.size(); ++i) {
        gen_of[pts[i]] = int(i);
        if (!pp.point_labels.empty() && pts[i] < int(pp.point_labels.size()) &&
            !pp.point_labels[pts[i]].empty())
            p.generators.push_back(pp.point_labels[pts[i]]);
        else
            p.generators.push_back("x" + std::to_string(pts[i]));
    }
    for (const auto& t : pp.tuples) {
        std::vector<int> letters;
        for (int x : t) letters.push_back(gen_of.at(x) + 1);
        p.relators.push_back(Word(std::move(letters)));
    }
    p.validate();
    return dedup_cyclic ? dedup_cyclic_relators(p) : p;
}

PlaneIncidence polyhedral_plane(const PolyhedralPresentation& pp) {
    if (pp.plane_points.size() != 1)
        throw domain_error("polyhedral_plane: only defined for single-plane data");
    std::vector<int> pts = pp.all_points();
    std::map<int, int> local;
    for (size_t i = 0; i < pts.size(); ++i) local[pts[i]] = int(i);
    std::vector<std::vector<int>> lines;
    for (int x : pts) {
        std::vector<int> line;
        for (int y : pp.lambda.at(x)) line.push_back(local.at(y));
        lines.push_back(std::move(line));
    }
    PlaneIncidence plane = plane_from_lines(pp.q, int(pts.size()), std::move(lines));
    for (int x : pts) plane.point_labels.push_back(std::to_string(x));
    return plane;
}

} // namespace cgt
