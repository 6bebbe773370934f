#include "cgt/textfmt.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cgt {

namespace {

struct WordParser {
    const std::string& s;
    const std::vector<std::string>& gens;
    ConjConvention cc;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, int(pos) + 1);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Word parse() {
        Word w = parse_word_expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return w;
    }

    Word parse_word_expr() {
        Word w = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                Word f = parse_factor();
                w.letters.insert(w.letters.end(), f.letters.begin(), f.letters.end());
            } else {
                break;
            }
        }
        return w;
    }

    Word parse_factor() {
        Word a = parse_atom();
        while (true) {
            skip_ws();
            if (!eat('^')) break;
            skip_ws();
            if (pos < s.size() && s[pos] == '(') {
                ++pos;
                Word h = parse_word_expr();
                if (!eat(')')) fail("expected ')' closing conjugator");
                a = a.conj(h, cc);
            } else {
                bool neg = false;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    neg = s[pos] == '-';
                    ++pos;
                }
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    fail("expected integer or (word) after '^'");
                long e = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    e = e * 10 + (s[pos] - '0');
                    if (e > 1'000'000) fail("exponent too large");
                    ++pos;
                }
                a = a.pow(int(neg ? -e : e));
            }
        }
        return a;
    }

    Word parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("expected generator or '('");
        if (s[pos] == '(') {
            ++pos;
            Word w = parse_word_expr();
            if (!eat(')')) fail("expected ')'");
            return w;
        }
        if (!std::isalpha(static_cast<unsigned char>(s[pos])) && s[pos] != '_')
            fail("expected generator name");
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return Word::gen(int(i));
        pos = start;
        fail("undeclared generator '" + name + "'");
    }
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generators,
                ConjConvention cc, int line_no) {
    WordParser p{text, generators, cc, line_no};
    return p.parse();
}

PresentationFile parse_presentation_text(const std::string& text, ConjConvention cc) {
    PresentationFile out;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::vector<std::pair<int, std::string>> rel_lines, sub_lines;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'gens:', 'rel:' or 'sub:' line", line_no, 1);
        std::string key = trim(line.substr(0, colon));
        std::string val = trim(line.substr(colon + 1));
        if (key == "gens") {
            if (out.has_generators)
                throw parse_error("duplicate gens: line", line_no, 1);
            std::istringstream gs(val);
            std::string name;
            while (gs >> name) out.presentation.generators.push_back(name);
            out.has_generators = true;
        } else if (key == "rel") {
            if (!out.has_generators)
                throw parse_error("rel: line before any gens: line", line_no, 1);
            rel_lines.emplace_back(line_no, val);
        } else if (key == "sub") {
            if (!out.has_generators)
                throw parse_error("sub: line before any gens: line", line_no, 1);
            sub_lines.emplace_back(line_no, val);
        } else {
            throw parse_error("unknown directive '" + key + "'", line_no, 1);
        }
    }
    for (auto& [ln, txt] : rel_lines)
        out.presentation.relators.push_back(parse_word(txt, out.presentation.generators, cc, ln));
    for (auto& [ln, txt] : sub_lines)
        out.subgroup_words.push_back(parse_word(txt, out.presentation.generators, cc, ln));
    if (out.has_generators) out.presentation.validate();
    return out;
}

PresentationFile load_presentation_file(const std::string& path, ConjConvention cc) {
    std::ifstream f(path);
    if (!f) throw missing_data_error("cannot open presentation file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    PresentationFile out = parse_presentation_text(buf.str(), cc);
    if (!out.has_generators)
        throw missing_data_error("presentation file " + path +
                                 " is a data stub (no generators declared)");
    out.presentation.provenance = path;
    return out;
}

std::string serialize_presentation(const Presentation& p, const std::vector<Word>& subgroup_words) {
    std::ostringstream os;
    if (!p.provenance.empty()) os << "# " << p.provenance << "\n";
    os << "gens:";
    for (const auto& g : p.generators) os << " " << g;
    os << "\n";
    for (const auto& r : p.relators) os << "rel: " << r.to_string(p.generators) << "\n";
    for (const auto& w : subgroup_words) os << "sub: " << w.to_string(p.generators) << "\n";
    return os.str();
}

} // namespace cgt
