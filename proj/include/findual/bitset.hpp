#pragma once

#include <cstdint>
#include <cstddef>
#include <cassert>
#include <bit>
#include <vector>
#include <string>
#include <functional>

namespace findual {

/// Fixed-universe bit set. Universes of at most 64 elements live in a single
/// inline word, so copies in enumeration loops never touch the heap; larger
/// universes (e.g. products of syntactic monoids) spill into a vector.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits) {
        assert(nbits >= 0);
        if (nbits > 64) spill_.assign(word_count(), 0);
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    static Bitset singleton(int nbits, int i) {
        Bitset b(nbits);
        b.set(i);
        return b;
    }

    int universe() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (word(i / 64) >> (i % 64)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        word(i / 64) |= (uint64_t{1} << (i % 64));
    }

    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        word(i / 64) &= ~(uint64_t{1} << (i % 64));
    }

    void clear() {
        if (spilled()) spill_.assign(spill_.size(), 0);
        else inline_ = 0;
    }

    int count() const {
        int c = 0;
        for (size_t w = 0; w < word_count(); ++w) c += std::popcount(word(w));
        return c;
    }

    bool any() const {
        for (size_t w = 0; w < word_count(); ++w)
            if (word(w)) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool operator==(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w)
            if (word(w) != o.word(w)) return false;
        return true;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Deterministic total order (universe-lexicographic); used for canonical
    /// element enumeration and map keys.
    bool operator<(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t w = word_count(); w-- > 0;)
            if (word(w) != o.word(w)) return word(w) < o.word(w);
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w) word(w) |= o.word(w);
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w) word(w) &= o.word(w);
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {  // set difference
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w) word(w) &= ~o.word(w);
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset r(nbits_);
        for (size_t w = 0; w < word_count(); ++w) r.word(w) = ~word(w);
        r.trim();
        return r;
    }

    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w)
            if (word(w) & ~o.word(w)) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t w = 0; w < word_count(); ++w)
            if (word(w) & o.word(w)) return true;
        return false;
    }

    /// Smallest set index, or -1 when empty.
    int first() const {
        for (size_t w = 0; w < word_count(); ++w)
            if (word(w)) return int(w * 64 + std::countr_zero(word(w)));
        return -1;
    }

    /// Next set index strictly after i, or -1.
    int next(int i) const {
        for (int j = i + 1; j < nbits_; ++j) {
            size_t w = size_t(j) / 64;
            uint64_t rest = word(w) >> (j % 64);
            if (rest) return j + std::countr_zero(rest);
            j = int((w + 1) * 64) - 1;
        }
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_el = true;
        for_each([&](int i) {
            if (!first_el) s += ",";
            s += std::to_string(i);
            first_el = false;
        });
        return s + "}";
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(nbits_);
        for (size_t w = 0; w < word_count(); ++w)
            h = h * 1099511628211ull + word(w);
        return h;
    }

    /// Low word; only meaningful for universes of at most 64 bits.
    uint64_t low_word() const { return word(0); }

private:
    size_t word_count() const { return size_t(nbits_ + 63) / 64; }
    bool spilled() const { return nbits_ > 64; }

    uint64_t& word(size_t w) { return spilled() ? spill_[w] : inline_; }
    uint64_t word(size_t w) const { return spilled() ? spill_[w] : inline_; }

    void trim() {
        if (nbits_ % 64 != 0 && word_count() > 0)
            word(word_count() - 1) &= (uint64_t{1} << (nbits_ % 64)) - 1;
        if (nbits_ == 0 && !spilled()) inline_ = 0;
    }

    int nbits_ = 0;
    uint64_t inline_ = 0;
    std::vector<uint64_t> spill_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace findual
