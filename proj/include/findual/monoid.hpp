#pragma once

#include "findual/residuation.hpp"

namespace findual {

/// Finite ordered monoid: poset carrier, associative unital multiplication
/// monotone in both arguments (all checked).
class OrderedMonoid {
public:
    OrderedMonoid() = default;
    OrderedMonoid(Poset carrier, std::vector<int> mult, int unit);

    static OrderedMonoid trivial() { return OrderedMonoid(Poset::antichain(1), {0}, 0); }
    /// Discrete carrier from a bare multiplication table.
    static OrderedMonoid discrete(std::vector<std::vector<int>> table, int unit);

    const Poset& carrier() const { return carrier_; }
    int size() const { return carrier_.size(); }
    int mult(int x, int y) const { return mult_[size_t(x) * size_t(carrier_.size()) + size_t(y)]; }
    int unit() const { return unit_; }
    bool discrete_carrier() const;

    bool operator==(const OrderedMonoid& o) const {
        return mult_ == o.mult_ && unit_ == o.unit_ && carrier_.same_order_as(o.carrier_);
    }

private:
    Poset carrier_;
    std::vector<int> mult_;
    int unit_ = 0;
};

bool monoids_isomorphic(const OrderedMonoid& a, const OrderedMonoid& b);

/// All ordered monoid structures on a fixed carrier poset (backtracking with
/// associativity pruning).
std::vector<OrderedMonoid> ordered_monoid_structures(const Poset& carrier);

/// All ordered monoids with at most max_n elements, one per isomorphism class.
std::vector<OrderedMonoid> all_ordered_monoids_upto_iso(int max_n);

/// The derivation algebra on D(M): mu(down p, down q) = down(p q), unit down 1;
/// its residuals satisfy A \ C = { b | A b <= C } and C / A = { b | b A <= C }.
ResAlgebra monoid_to_derivation(const OrderedMonoid& m);

/// Inverse direction: carrier = join-primes with inherited order, p q =
/// mu(p (x) q) (a join-prime by purity), unit = the prime unit. Requires the
/// algebra to classify as a derivation algebra.
OrderedMonoid derivation_to_monoid(const ResAlgebra& r);

bool is_monoid_hom(const OrderedMonoid& m, const OrderedMonoid& n, const MonotoneMap& f);

/// B |-> f^{-1}[B]; a residuation morphism between the derivation algebras.
LatticeHom dualize_monoid_hom(const OrderedMonoid& m, const OrderedMonoid& n,
                              const MonotoneMap& f);

/// Relational morphism data: per dom element a nonempty upset of the codomain
/// carrier, antitone in the dom element (the Kleisli shape under the
/// project-wide variance convention; on discrete monoids this is the classical
/// total relation).
class RelationalMonoidMorphism {
public:
    RelationalMonoidMorphism() = default;
    RelationalMonoidMorphism(OrderedMonoid dom, OrderedMonoid cod, std::vector<Bitset> images);

    static RelationalMonoidMorphism identity(const OrderedMonoid& m);
    /// The inverse-relation shape of a surjective hom e : N ->> M, i.e.
    /// rho(m) = { n | m <= e(n) }.
    static RelationalMonoidMorphism of_inverse(const OrderedMonoid& m, const OrderedMonoid& n,
                                               const MonotoneMap& e);
    /// Graph of a hom f : M -> N, i.e. rho(m) = up f(m).
    static RelationalMonoidMorphism of_hom(const OrderedMonoid& m, const OrderedMonoid& n,
                                           const MonotoneMap& f);

    const OrderedMonoid& dom() const { return dom_; }
    const OrderedMonoid& cod() const { return cod_; }
    const Bitset& image(int x) const { return img_[size_t(x)]; }

private:
    OrderedMonoid dom_, cod_;
    std::vector<Bitset> img_;
};

struct RelMorphismFlags {
    bool total = false;
    bool lax_square = false;
    bool lax_unit = false;
    bool valid() const { return total && lax_square && lax_unit; }
};

/// Totality, lax multiplication square rho(x) rho(y) <= rho(x y), lax unit.
RelMorphismFlags check_relational_morphism(const RelationalMonoidMorphism& rho);

/// Dual join- and top-preserving map D(N) -> D(M): B |-> { m | rho(m) meets B }.
JoinMap dualize_relational_morphism(const RelationalMonoidMorphism& rho);

/// All Kleisli-shaped maps (upset-valued, antitone, possibly empty images or
/// non-lax) between two ordered monoids; for exhaustive biconditional sweeps.
std::vector<RelationalMonoidMorphism> all_relational_candidates(const OrderedMonoid& m,
                                                                const OrderedMonoid& n);

}  // namespace findual
