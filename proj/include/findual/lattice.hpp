#pragma once

#include <optional>
#include <vector>

#include "findual/poset.hpp"

namespace findual {

/// Finite distributive lattice in canonical Birkhoff form: the lattice IS the
/// downset lattice of its base poset of join-primes. An element is a downset
/// of the base, joins are unions, meets intersections.
class FiniteDistLattice {
public:
    FiniteDistLattice() = default;
    explicit FiniteDistLattice(Poset base) : base_(std::move(base)) {}

    static FiniteDistLattice from_poset(Poset p) { return FiniteDistLattice(std::move(p)); }
    static FiniteDistLattice two() { return FiniteDistLattice(Poset::antichain(1)); }
    static FiniteDistLattice powerset(int n) { return FiniteDistLattice(Poset::antichain(n)); }

    const Poset& base() const { return base_; }
    const Poset& dual_poset() const { return base_; }

    bool same_as(const FiniteDistLattice& o) const { return base_.same_order_as(o.base_); }

    bool is_element(const Bitset& x) const {
        return x.universe() == base_.size() && base_.is_downset(x);
    }

    Bitset bot() const { return Bitset(base_.size()); }
    Bitset top() const { return Bitset::full(base_.size()); }
    Bitset join(const Bitset& a, const Bitset& b) const { return a | b; }
    Bitset meet(const Bitset& a, const Bitset& b) const { return a & b; }
    bool leq(const Bitset& a, const Bitset& b) const { return a.subset_of(b); }

    /// The join-prime with index p, as a lattice element.
    Bitset prime(int p) const { return base_.down(p); }
    int prime_count() const { return base_.size(); }

    /// Whether x is join-prime; if so *p is its base index.
    bool is_prime(const Bitset& x, int* p = nullptr) const;

    long long element_count() const { return base_.count_downsets(); }

    /// Canonical element enumeration (bottom first, top last). Guarded: throws
    /// when the lattice has more than `limit` elements.
    std::vector<Bitset> elements(long long limit = 1 << 20) const;

private:
    Poset base_;
};

/// Ingestion form: an arbitrary finite order that is checked to be a
/// distributive lattice and canonicalized to Birkhoff form.
class AbstractLattice {
public:
    explicit AbstractLattice(Poset order);

    const Poset& order() const { return order_; }
    int size() const { return order_.size(); }
    int join(int a, int b) const { return join_[size_t(a)][size_t(b)]; }
    int meet(int a, int b) const { return meet_[size_t(a)][size_t(b)]; }
    int bot() const { return bot_; }
    int top() const { return top_; }

    /// Indices of join-irreducible (= join-prime, given distributivity) elements.
    std::vector<int> join_primes() const;

private:
    Poset order_;
    std::vector<std::vector<int>> join_, meet_;
    int bot_ = 0, top_ = 0;
};

struct Canonicalization {
    FiniteDistLattice lattice;
    /// to_canonical[i] = the downset of base primes representing abstract element i.
    std::vector<Bitset> to_canonical;
    /// base_element[p] = abstract element that became base prime p.
    std::vector<int> base_element;
};

/// Birkhoff canonicalization; throws invariant_error (not-a-lattice /
/// not-distributive, with witness triple) on bad input.
Canonicalization canonicalize(const AbstractLattice& a);

/// Monotone map between lattices stored as a full element table (element
/// indices refer to the canonical enumerations of dom and cod).
class LatticeMap {
public:
    LatticeMap() = default;
    LatticeMap(FiniteDistLattice dom, FiniteDistLattice cod, std::vector<int> table);

    const FiniteDistLattice& dom() const { return dom_; }
    const FiniteDistLattice& cod() const { return cod_; }
    const std::vector<Bitset>& dom_elements() const { return dome_; }
    const std::vector<Bitset>& cod_elements() const { return code_; }

    int apply_index(int i) const { return table_[size_t(i)]; }
    Bitset apply(const Bitset& x) const;
    int index_of_dom(const Bitset& x) const;
    int index_of_cod(const Bitset& x) const;
    const std::vector<int>& table() const { return table_; }

    bool preserves_joins(std::string* witness = nullptr) const;
    bool preserves_meets(std::string* witness = nullptr) const;
    bool preserves_bot() const;
    bool preserves_top() const;

    static LatticeMap identity(const FiniteDistLattice& l);
    LatticeMap then(const LatticeMap& g) const;
    bool operator==(const LatticeMap& o) const {
        return table_ == o.table_ && dom_.same_as(o.dom_) && cod_.same_as(o.cod_);
    }

private:
    FiniteDistLattice dom_, cod_;
    std::vector<Bitset> dome_, code_;
    std::vector<int> table_;
};

/// Bounded lattice homomorphism (preserves join, meet, bot, top; checked).
class LatticeHom {
public:
    LatticeHom() = default;
    explicit LatticeHom(LatticeMap m);

    const LatticeMap& map() const { return m_; }
    const FiniteDistLattice& dom() const { return m_.dom(); }
    const FiniteDistLattice& cod() const { return m_.cod(); }
    Bitset apply(const Bitset& x) const { return m_.apply(x); }

    static LatticeHom identity(const FiniteDistLattice& l) {
        return LatticeHom(LatticeMap::identity(l));
    }
    LatticeHom then(const LatticeHom& g) const { return LatticeHom(m_.then(g.m_)); }
    bool operator==(const LatticeHom& o) const { return m_ == o.m_; }

private:
    LatticeMap m_;
};

/// f_*(d') = join of { d | f(d) <= d' }; requires f join-preserving.
LatticeMap right_adjoint(const LatticeMap& f);
/// f^*(d') = meet of { d | d' <= f(d) }; requires f meet-preserving.
LatticeMap left_adjoint(const LatticeMap& f);

/// Birkhoff morphism duality: a hom dualizes to the restriction of its left
/// adjoint to join-primes; a monotone map dualizes to preimage on downsets.
MonotoneMap dualize_hom(const LatticeHom& f);
LatticeHom dualize_map(const MonotoneMap& phi);

/// Join-preserving map stored by its values on join-primes; scales to large
/// lattices since elements are never enumerated.
class JoinMap {
public:
    JoinMap() = default;
    JoinMap(FiniteDistLattice dom, FiniteDistLattice cod, std::vector<Bitset> prime_img);

    const FiniteDistLattice& dom() const { return dom_; }
    const FiniteDistLattice& cod() const { return cod_; }
    const Bitset& prime_image(int p) const { return img_[size_t(p)]; }

    Bitset apply(const Bitset& x) const {
        Bitset r(cod_.base().size());
        x.for_each([&](int p) { r |= img_[size_t(p)]; });
        return r;
    }

    static JoinMap identity(const FiniteDistLattice& l);
    JoinMap then(const JoinMap& g) const;
    bool operator==(const JoinMap& o) const {
        return img_ == o.img_ && dom_.same_as(o.dom_) && cod_.same_as(o.cod_);
    }

    /// Right adjoint value: largest x with apply(x) <= y.
    Bitset right_adjoint_at(const Bitset& y) const;

private:
    FiniteDistLattice dom_, cod_;
    std::vector<Bitset> img_;
};

/// The extended-duality pairing on morphisms: a join-preserving f : D -> E
/// corresponds to the order relation  { (q, p) | q in f(prime p) }  from
/// E.base to D.base, and back.
OrderRelation dual_relation_of(const JoinMap& f);
JoinMap joinmap_of_relation(const OrderRelation& r);

}  // namespace findual
