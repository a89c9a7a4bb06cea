#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "findual/bitset.hpp"
#include "findual/errors.hpp"

namespace findual {

/// Finite poset on elements 0..n-1 with the full order matrix.
/// Construction checks reflexivity, antisymmetry and transitivity and throws
/// invariant_error with a witness otherwise.
class Poset {
public:
    Poset() = default;

    /// From a list of (i, j) meaning i <= j. Reflexive pairs are implicit.
    static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                            std::vector<std::string> labels = {});

    /// From a full boolean matrix leq[i][j] = (i <= j).
    static Poset from_matrix(const std::vector<std::vector<bool>>& leq,
                             std::vector<std::string> labels = {});

    static Poset chain(int n);
    static Poset antichain(int n);

    int size() const { return n_; }
    bool leq(int i, int j) const { return above_[size_t(i)].test(j); }
    const Bitset& up(int i) const { return above_[size_t(i)]; }    // {j | i <= j}
    const Bitset& down(int i) const { return below_[size_t(i)]; }  // {j | j <= i}

    const std::vector<std::string>& labels() const { return labels_; }

    bool same_order_as(const Poset& o) const;

    bool is_downset(const Bitset& s) const;
    bool is_upset(const Bitset& s) const;

    Bitset down_closure(const Bitset& seed) const;
    Bitset up_closure(const Bitset& seed) const;

    /// Number of downsets, without materializing them.
    long long count_downsets() const;

    /// All downsets, sorted by (size, universe-lex): index 0 is the empty set,
    /// the last index is the full carrier.
    std::vector<Bitset> downsets() const;

    /// Canonical isomorphism key: the minimal order-matrix encoding over all
    /// permutations of the carrier. Requires n <= 8.
    uint64_t canonical_key() const;

    bool isomorphic_to(const Poset& o) const;

private:
    void init_from_matrix(const std::vector<std::vector<bool>>& leq);

    int n_ = 0;
    std::vector<Bitset> above_;
    std::vector<Bitset> below_;
    std::vector<std::string> labels_;
};

/// Row-major indexing of k-tuples over a base of size n: the first coordinate
/// is most significant. Relation tables serialized through the CLI rely on
/// this being stable.
struct TupleIndex {
    int base = 0;
    int arity = 0;

    long long count() const {
        long long c = 1;
        for (int i = 0; i < arity; ++i) c *= base;
        return c;
    }
    int index(std::span<const int> t) const {
        int idx = 0;
        for (int i = 0; i < arity; ++i) idx = idx * base + t[size_t(i)];
        return idx;
    }
    std::vector<int> tuple(int idx) const {
        std::vector<int> t(size_t(arity));
        for (int i = arity - 1; i >= 0; --i) {
            t[size_t(i)] = idx % base;
            idx /= base;
        }
        return t;
    }
};

/// Product of posets with componentwise order and row-major tuple indexing.
Poset product_poset(std::span<const Poset> factors);

/// k-fold power of one poset (k = 0 gives the one-point poset).
Poset power_poset(const Poset& p, int k);

/// Monotone map between posets, stored as a full table.
class MonotoneMap {
public:
    MonotoneMap() = default;
    MonotoneMap(Poset dom, Poset cod, std::vector<int> table);

    const Poset& dom() const { return dom_; }
    const Poset& cod() const { return cod_; }
    int operator()(int i) const { return table_[size_t(i)]; }
    const std::vector<int>& table() const { return table_; }

    static MonotoneMap identity(const Poset& p);
    MonotoneMap then(const MonotoneMap& g) const;  // this first, then g
    bool operator==(const MonotoneMap& o) const {
        return table_ == o.table_ && dom_.same_order_as(o.dom_) && cod_.same_order_as(o.cod_);
    }

private:
    Poset dom_, cod_;
    std::vector<int> table_;
};

/// Kleisli morphism of the downset monad under the project-wide variance
/// convention: pairs (x, y) with x in dom, y in cod, stable under
/// (x' <= x, x R y, y <= y')  =>  x' R y'.
/// Stored as one cod-mask per dom element; each mask is an upset of cod and
/// masks shrink as the dom element grows.
class OrderRelation {
public:
    OrderRelation() = default;
    OrderRelation(Poset dom, Poset cod, std::vector<Bitset> img);

    static OrderRelation identity(const Poset& p);  // x |-> up-closure of {x}

    const Poset& dom() const { return dom_; }
    const Poset& cod() const { return cod_; }
    const Bitset& at(int x) const { return img_[size_t(x)]; }
    bool related(int x, int y) const { return img_[size_t(x)].test(y); }

    bool operator==(const OrderRelation& o) const {
        return img_ == o.img_ && dom_.same_order_as(o.dom_) && cod_.same_order_as(o.cod_);
    }

    std::vector<std::pair<int, int>> pairs() const;

private:
    Poset dom_, cod_;
    std::vector<Bitset> img_;
};

/// Relational composition (r first, then s); Kleisli composition of the
/// downset monad under the fixed convention.
OrderRelation kleisli_compose(const OrderRelation& r, const OrderRelation& s);

/// Pairing of relations on product posets: (x,x') R (y,y') iff x r y and x' s y'.
OrderRelation kleisli_tensor(const OrderRelation& r, const OrderRelation& s);

/// --- enumeration -----------------------------------------------------------

/// All posets with at most max_n elements, one representative per isomorphism
/// class, ordered by size. Requires max_n <= 8.
std::vector<Poset> all_posets_upto_iso(int max_n);

/// All naturally labeled posets on exactly n elements (order contained in the
/// natural order on indices). Every isomorphism class appears at least once.
std::vector<Poset> naturally_labeled_posets(int n);

/// Naturally labeled posets with at most max_n elements whose downset lattice
/// has at most max_downsets elements (pruned during generation), deduped up to
/// isomorphism.
std::vector<Poset> posets_with_bounded_downsets(int max_n, long long max_downsets);

}  // namespace findual
