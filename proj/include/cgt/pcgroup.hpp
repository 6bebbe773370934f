#pragma once

// Consistent weighted power-conjugate presentations of finite p-groups and
// exact element arithmetic via collection from the left. Elements are
// exponent vectors in normal form a_1^{e_1} ... a_n^{e_n}, entries in [0,p).

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/word.hpp"

namespace cgt {

struct PcElement {
    std::vector<int> e;
    bool operator==(const PcElement& o) const { return e == o.e; }
    bool operator!=(const PcElement& o) const { return !(*this == o); }
    bool operator<(const PcElement& o) const { return e < o.e; }
};

enum class PcDefKind { None, Image, Power, Comm };

struct PcDefinition {
    PcDefKind kind = PcDefKind::None;
    int a = -1; // Image: fp generator index; Power: a_a^p; Comm: [a_a, a_b]
    int b = -1;
};

class PcGroup {
public:
    PcGroup(int prime, int cls) : p_(prime), cls_(cls) {
        if (prime < 2 || prime > (1 << 15)) throw domain_error("PcGroup: bad prime");
    }

    int p() const { return p_; }
    int pclass() const { return cls_; }
    int ngens() const { return int(weight_.size()); }
    /// log_p of the group order.
    int order_exponent() const { return ngens(); }
    const std::vector<int>& weights() const { return weight_; }
    const std::vector<PcDefinition>& definitions() const { return defs_; }
    const PcElement& power_relation(int i) const { return power_[i]; }
    const PcElement& comm_relation(int j, int i) const { return comm_[j][i]; } // j > i

    /// Number of generators of each weight 1..class.
    std::vector<int> layer_sizes() const;

    int append_generator(int weight, PcDefinition def); // returns index
    void set_power(int i, PcElement v);
    void set_comm(int j, int i, PcElement v);
    void set_class(int c) { cls_ = c; }

    PcElement id() const { return PcElement{std::vector<int>(ngens(), 0)}; }
    PcElement gen(int i) const;
    bool is_identity(const PcElement& x) const;

    PcElement mul(PcElement u, const PcElement& v) const;
    PcElement mul_gen(PcElement u, int g, int e) const; // u * a_g^e, 0 < e < p
    PcElement inv(const PcElement& u) const;
    PcElement pow(const PcElement& u, long e) const;
    PcElement conj(const PcElement& x, const PcElement& h) const; // h^-1 x h
    /// Conjugation by a single generator, using the memoized inverse.
    PcElement conj_by_gen(const PcElement& x, int g) const;
    const PcElement& gen_inverse(int g) const; // memoized a_g^-1
    PcElement commutator(const PcElement& x, const PcElement& y) const;

    /// Evaluate a free-group word under images of its generators.
    PcElement eval_word(const Word& w, const std::vector<PcElement>& images) const;

    /// Collect an arbitrary pc word given as signed letters over pc gens.
    PcElement collect_word(const Word& w) const;

    /// Element order p^t; returns the exponent t.
    int element_order_exp(const PcElement& x) const;
    long element_order(const PcElement& x) const; // p^t as long

    /// Lexicographic rank of the exponent vector; requires p^n <= 2^62.
    std::uint64_t rank(const PcElement& x) const;
    PcElement unrank(std::uint64_t r) const;
    /// p^n as uint64; throws budget_error beyond 2^62.
    std::uint64_t order_u64() const;

    /// Consistency probe: collect associativity and power-overlap test words;
    /// returns a human-readable description of the first failure, empty if
    /// consistent. full=false restricts to the weight filter (sum <= class).
    std::string consistency_failure(bool full) const;

    /// Fills the internal conjugation memo. Element operations are pure, but
    /// the lazy memo is not synchronized; warm it before sharing the group
    /// across threads.
    void warm_caches() const;

    std::string describe() const;

private:
    void check_elem(const PcElement& u) const;
    PcElement conj_gen_by_gen(int i, int g, int e) const; // a_i^(a_g^e), i > g
    const PcElement& conj1(int i, int g) const;           // memoized a_i^(a_g)
    int p_;
    int cls_;
    std::vector<int> weight_;
    std::vector<PcDefinition> defs_;
    std::vector<PcElement> power_;
    std::vector<std::vector<PcElement>> comm_; // comm_[j] has j entries (i < j)
    // single-conjugate memo keyed by j*n+g; rebuilt after any mutation
    mutable std::vector<PcElement> conj1_memo_;
    mutable std::vector<char> conj1_have_;
    mutable std::vector<PcElement> invgen_memo_;
    mutable std::vector<char> invgen_have_;
    void drop_caches() const {
        conj1_memo_.clear();
        conj1_have_.clear();
        invgen_memo_.clear();
        invgen_have_.clear();
    }
};

} // namespace cgt
