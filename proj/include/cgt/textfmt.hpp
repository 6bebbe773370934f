#pragma once

// Line-oriented presentation text format:
//   # comment
//   gens: x0 x1 x2
//   rel: x0*x1*x4^-1
//   sub: x0*x1
// Words use * for product, ^ for integer power, ^(word) for conjugation
// under the configured convention. Parse errors carry line and column.

#include <string>
#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

struct parse_error : domain_error {
    int line, column;
    parse_error(const std::string& msg, int l, int c)
        : domain_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l), column(c) {}
};

/// Parse one word over the given generator names.
Word parse_word(const std::string& text, const std::vector<std::string>& generators,
                ConjConvention cc = ConjConvention::RightAction, int line_no = 1);

struct PresentationFile {
    Presentation presentation;
    std::vector<Word> subgroup_words; // from sub: lines, may be empty
    bool has_generators = false;
};

PresentationFile parse_presentation_text(const std::string& text,
                                         ConjConvention cc = ConjConvention::RightAction);

/// Reads a file; throws missing_data_error if it does not exist or declares
/// no generators (data stub).
PresentationFile load_presentation_file(const std::string& path,
                                        ConjConvention cc = ConjConvention::RightAction);

std::string serialize_presentation(const Presentation& p,
                                   const std::vector<Word>& subgroup_words = {});

} // namespace cgt
