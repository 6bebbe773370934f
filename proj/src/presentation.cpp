#include "cgt/presentation.hpp"

#include <algorithm>
#include <set>

namespace cgt {

int Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : int(it - generators.begin());
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.empty()) throw domain_error("Presentation: empty generator name");
        if (!seen.insert(g).second) throw domain_error("Presentation: duplicate generator " + g);
    }
    for (const auto& r : relators) {
        if (r.free_reduced().empty())
            throw domain_error("Presentation: relator freely reduces to the empty word");
        if (r.max_generator() >= int(generators.size()))
            throw domain_error("Presentation: relator uses undeclared generator");
    }
}

void SubgroupSpec::validate() const {
    parent.validate();
    for (const auto& w : generators) {
        if (w.free_reduced().empty())
            throw domain_error("SubgroupSpec: generator word freely reduces to empty");
        if (w.max_generator() >= int(parent.generators.size()))
            throw domain_error("SubgroupSpec: word uses undeclared parent generator");
    }
}

Presentation dedup_cyclic_relators(const Presentation& p) {
    Presentation out;
    out.generators = p.generators;
    out.provenance = p.provenance.empty() ? "deduped" : p.provenance + " (deduped by cyclic class)";
    std::set<Word> seen;
    for (const auto& r : p.relators) {
        Word key = cyclic_canonical(r);
        if (seen.insert(key).second) out.relators.push_back(r);
    }
    return out;
}

} // namespace cgt
