#pragma once

// Finitely presented groups: named generators plus relator words, with an
// optional provenance tag, and subgroup specs by generator words.

#include <optional>
#include <string>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::string provenance; // source locator or data file

    int generator_index(const std::string& name) const; // -1 if absent
    void validate() const; // relators freely reduce nonempty, indices in range
};

struct SubgroupSpec {
    std::string parent_name; // catalog name or file of the parent
    Presentation parent;
    std::vector<Word> generators; // words in the parent's generators
    std::string provenance;

    void validate() const;
};

/// Keep one representative per cyclic-equivalence class of relators
/// (rotations only; inverses are kept distinct). Order-preserving, explicit,
/// never applied silently.
Presentation dedup_cyclic_relators(const Presentation& p);

} // namespace cgt
