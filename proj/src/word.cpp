#include "cgt/word.hpp"

#include <algorithm>

namespace cgt {

Word Word::inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

Word Word::free_reduced() const {
    Word r;
    r.letters.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw domain_error("Word: zero letter");
        if (!r.letters.empty() && r.letters.back() == -l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

bool Word::is_freely_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == -letters[i + 1]) return false;
    return true;
}

Word Word::cyclically_reduced() const {
    Word r = free_reduced();
    size_t a = 0, b = r.letters.size();
    while (b > a + 1 && r.letters[a] == -r.letters[b - 1]) { ++a; --b; }
    return Word(std::vector<int>(r.letters.begin() + a, r.letters.begin() + b));
}

Word Word::operator*(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r.free_reduced();
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Word r;
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

Word Word::conj(const Word& h, ConjConvention cc) const {
    if (cc == ConjConvention::RightAction) return h.inverse() * *this * h;
    return h * *this * h.inverse();
}

int Word::max_generator() const {
    int m = -1;
    for (int l : letters) m = std::max(m, std::abs(l) - 1);
    return m;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (letters.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        int g = std::abs(letters[i]) - 1;
        if (g >= int(names.size())) throw domain_error("Word::to_string: generator out of range");
        if (i) out += "*";
        out += names[g];
        // fold runs of the same letter into powers
        int e = letters[i] > 0 ? 1 : -1;
        while (i + 1 < letters.size() && letters[i + 1] == letters[i]) {
            e += e > 0 ? 1 : -1;
            ++i;
        }
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Word cyclic_canonical(const Word& w) {
    Word c = w.cyclically_reduced();
    if (c.letters.empty()) return c;
    Word best = c;
    Word rot = c;
    for (size_t i = 1; i < c.letters.size(); ++i) {
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool cyclically_equal(const Word& a, const Word& b) {
    return cyclic_canonical(a) == cyclic_canonical(b);
}

} // namespace cgt
