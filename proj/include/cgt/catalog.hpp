#pragma once

// Built-in catalog of the bundled presentations, subgroup generator words,
// tuple words and polyhedral data, plus loading of user-supplied data files
// for the groups whose relators are not bundled (G1, G2, G4, G5, G7, F5).
// Stored words are verbatim; no normalization is applied.

#include <map>
#include <string>
#include <vector>

#include "cgt/polyhedral.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

class Catalog {
public:
    explicit Catalog(std::string data_dir = "",
                     ConjConvention cc = ConjConvention::RightAction);

    /// Bundled or file-backed presentation. Throws missing_data_error when the
    /// entry needs a user data file that is absent, domain_error when unknown.
    Presentation presentation(const std::string& name) const;

    /// Subgroup specs (H0, H, H2, H4, H5, F5). External parents are loaded
    /// from the data directory; throws missing_data_error when absent.
    SubgroupSpec subgroup(const std::string& name) const;

    bool is_known_presentation(const std::string& name) const;
    bool is_known_subgroup(const std::string& name) const;
    std::vector<std::string> bundled_presentations() const;

    /// Tuple words over the generators {x0, x1, x2} of the index-3 subgroup:
    /// names x0, x1, x2, x, y0, y1, y2, y. The y2 word conjugates by x0 and
    /// depends on the configured convention.
    static Word index3_tuple_word(const std::string& name, ConjConvention cc);
    static std::vector<std::string> index3_tuple_names();

    /// Triangle presentation data for the 7-point plane (n=1, q=2).
    static PolyhedralPresentation triangle_q2();

    /// Order-4 polyhedral data. corrected=true applies the two documented
    /// repairs (lambda(13) third point 13 -> 14 and the completion tuple
    /// (15,20,21)); corrected=false is the verbatim printed data, which the
    /// validator rejects.
    static PolyhedralPresentation polyhedral_q4(bool corrected = true);

    /// 21-entry generator map: generator of Ghat -> image word in Gprime.
    static std::vector<std::pair<std::string, std::string>> ghat_to_gprime_table();

    /// Presentation of the same group as "G" on generators a0..a12 obtained by
    /// transporting the relators through x_j = a_{7j mod 13}; derived in code.
    static Presentation cmsz_transported_presentation();

    ConjConvention convention() const { return cc_; }
    const std::string& data_dir() const { return data_dir_; }

private:
    Presentation load_external(const std::string& name) const;
    std::string data_dir_;
    ConjConvention cc_;
};

} // namespace cgt
