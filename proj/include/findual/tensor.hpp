#pragma once

#include <functional>
#include <span>

#include "findual/lattice.hpp"

namespace findual {

/// Working context for the n-fold semilattice tensor power of a lattice in
/// canonical form: D^(tensor n) is the downset lattice of base^n. Elements are
/// downsets of the product poset (Bitsets over row-major tuple indices).
class TensorSpace {
public:
    TensorSpace(Poset base, int arity);

    const Poset& base() const { return base_; }
    int arity() const { return arity_; }
    const Poset& product() const { return prod_; }
    TupleIndex tuples() const { return TupleIndex{base_.size(), arity_}; }

    FiniteDistLattice lattice() const { return FiniteDistLattice(prod_); }

    bool is_element(const Bitset& t) const {
        return t.universe() == prod_.size() && prod_.is_downset(t);
    }

    Bitset bot() const { return Bitset(prod_.size()); }
    Bitset top() const { return Bitset::full(prod_.size()); }

    /// Pure tensor x1 (x) ... (x) xn of lattice elements (downsets of base):
    /// the set of prime tuples below the components.
    Bitset pure(std::span<const Bitset> xs) const;

    /// Pure tensor of join-primes: the down-closure of one tuple.
    Bitset pure_primes(std::span<const int> ps) const;

private:
    Poset base_;
    int arity_ = 0;
    Poset prod_;
};

/// D^(tensor n) as a lattice (n = 0 yields the 2-element lattice).
FiniteDistLattice tensor_power(const FiniteDistLattice& d, int n);

/// The box-tensor representation D (box) D lives on the same product poset but
/// encodes elements as upsets, ordered by reverse inclusion; omega is the
/// canonical isomorphism fixing the coproduct injections, omega(d (x) 1) = d (box) 0.
struct BoxElement {
    Bitset upset;  // upset of base^2; z <= z' in the box order iff upset(z) >= upset(z')
    bool operator==(const BoxElement& o) const { return upset == o.upset; }
};

/// omega computed by the explicit subset-split formula
///   omega(join_i d_i (x) e_i) = meet_{A subset I} (join_{i in A} d_i) (box) (join_{i not in A} e_i)
/// applied to the canonical rectangle decomposition of t. Requires arity 2 and
/// |t| <= 20 prime pairs.
BoxElement omega_formula(const TensorSpace& ts, const Bitset& t);

/// The unique coproduct-injection-compatible isomorphism, computed directly;
/// used as the independent cross-check for omega_formula.
BoxElement omega_canonical(const TensorSpace& ts, const Bitset& t);

/// Inverse direction, formula and canonical routes.
Bitset omega_inverse_formula(const TensorSpace& ts, const BoxElement& w);
Bitset omega_inverse_canonical(const TensorSpace& ts, const BoxElement& w);

/// Box pure tensor d (box) e: encoded as (P - d) x (Q - e).
BoxElement box_pure(const TensorSpace& ts, const Bitset& d, const Bitset& e);

/// Tensor implications on the tensor square (arity 2):
///   limp(x, t) = join { y | x (x) y <= t },  rimp(t, y) = join { x | x (x) y <= t }.
Bitset limp(const TensorSpace& ts, const Bitset& x, const Bitset& t);
Bitset rimp(const TensorSpace& ts, const Bitset& t, const Bitset& y);

/// f (x) g on tensor squares of join-preserving maps (as a JoinMap between the
/// tensor-square lattices).
JoinMap tensor_of_joinmaps(const JoinMap& f, const JoinMap& g);

/// g (box) g' conjugated action on box elements: both g's must preserve finite
/// meets (passed as element functions on the component lattices).
using MeetMapFn = std::function<Bitset(const Bitset&)>;
BoxElement apply_boxtimes(const TensorSpace& dom, const TensorSpace& cod, const MeetMapFn& g,
                          const MeetMapFn& g2, const BoxElement& w);

}  // namespace findual
