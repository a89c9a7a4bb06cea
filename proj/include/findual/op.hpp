#pragma once

#include "findual/tensor.hpp"

namespace findual {

/// (k, n)-ary join-operator on a finite distributive lattice, stored as a
/// monotone table on k-tuples of join-primes with values in the n-th tensor
/// power (downsets of base^n). Preserves joins in each argument by
/// construction of eval.
class Operator {
public:
    Operator() = default;
    Operator(FiniteDistLattice lattice, int k, int n, std::vector<Bitset> table);

    const FiniteDistLattice& lattice() const { return lat_; }
    int arity_in() const { return k_; }
    int arity_out() const { return n_; }
    const Poset& dom_tuples() const { return domp_; }
    const Poset& cod_tuples() const { return codp_; }
    const Bitset& table_at(int kTupleIdx) const { return table_[size_t(kTupleIdx)]; }
    const std::vector<Bitset>& table() const { return table_; }

    /// Join-extension: union of table entries over the prime tuples in t.
    Bitset eval(const Bitset& t) const;

    /// Unary convenience: value on a lattice element (k = n = 1).
    Bitset eval1(const Bitset& x) const;

    bool operator==(const Operator& o) const {
        return k_ == o.k_ && n_ == o.n_ && table_ == o.table_ && lat_.same_as(o.lat_);
    }

    static Operator identity(const FiniteDistLattice& l);
    static Operator constant_bot(const FiniteDistLattice& l, int k, int n);
    /// x -> top for x != bot (unary).
    static Operator top_op(const FiniteDistLattice& l);
    /// Binary meet as a (2,1) operator.
    static Operator meet_op(const FiniteDistLattice& l);
    /// x -> x meet c (unary).
    static Operator meet_with(const FiniteDistLattice& l, const Bitset& c);

private:
    FiniteDistLattice lat_;
    int k_ = 1, n_ = 1;
    Poset domp_, codp_;
    std::vector<Bitset> table_;
};

/// Dual side: relation between base^n and base^k, stable under shrinking the
/// n-side tuple and growing the k-side tuple. Stored as one n-tuple mask per
/// k-tuple.
class DualRelation {
public:
    DualRelation() = default;
    DualRelation(Poset base, int k, int n, std::vector<Bitset> rel);

    const Poset& base() const { return base_; }
    int arity_k() const { return k_; }
    int arity_n() const { return n_; }
    const Bitset& at(int kTupleIdx) const { return rel_[size_t(kTupleIdx)]; }
    bool related(int nTupleIdx, int kTupleIdx) const {
        return rel_[size_t(kTupleIdx)].test(nTupleIdx);
    }

    bool operator==(const DualRelation& o) const {
        return k_ == o.k_ && n_ == o.n_ && rel_ == o.rel_ && base_.same_order_as(o.base_);
    }

    /// As a Kleisli morphism base^n -> base^k under the fixed convention.
    OrderRelation to_order_relation() const;
    static DualRelation from_order_relation(const OrderRelation& r, const Poset& base, int k,
                                            int n);

    static DualRelation empty(const Poset& base, int k, int n);
    static DualRelation full(const Poset& base, int k, int n);

private:
    Poset base_;
    int k_ = 1, n_ = 1;
    Poset domp_, codp_;
    std::vector<Bitset> rel_;
};

/// Goldblatt dualization, prime-tuple form: a R b iff pure(a) <= eval(op, pure(b)).
DualRelation dualize_operator(const Operator& op);

/// Inverse direction: table(b) = { a | a R b }.
Operator dualize_relation(const DualRelation& r);

struct OperatorFlags {
    bool pure = false;
    bool meet_preserving_nonempty = false;
    bool top_preserving = false;
    bool operator==(const OperatorFlags&) const = default;
};

/// Operator-side classification (inequalities of eval).
OperatorFlags classify_operator_side(const Operator& op);
/// Relation-side classification (shape of the images: partial / total / function).
OperatorFlags classify_relation_side(const DualRelation& r);
/// Both routes, cross-asserted; throws cross_check_error on disagreement.
OperatorFlags classify(const Operator& op);

/// g after h (both unary on one lattice).
Operator compose_operators(const Operator& h, const Operator& g);
/// h (x) g as a (k1+k2, n1+n2)-ary operator.
Operator tensor_operators(const Operator& h, const Operator& g);

struct CompositeCheck {
    OrderRelation lhs, rhs;
    bool equal = false;
};

/// dual(g after h) vs kleisli_compose(dual g, dual h).
CompositeCheck dual_compose_check(const Operator& h, const Operator& g);
/// dual(h (x) g) vs kleisli_tensor of the duals.
CompositeCheck dual_tensor_check(const Operator& h, const Operator& g);
/// dual(id) vs the unit order relation.
CompositeCheck dual_identity_check(const FiniteDistLattice& l);

/// Operator-morphism square f o a = b o f on prime tuples (f join-preserving).
bool is_operator_morphism(const JoinMap& f, const Operator& a, const Operator& b);

/// Kleisli-morphism square for the dual relation beta of f:
/// compose(rel_b, beta^k) = compose(beta^n, rel_a).
bool is_relational_operator_morphism(const OrderRelation& beta, const DualRelation& rel_a,
                                     const DualRelation& rel_b);

/// Both routes, cross-asserted.
bool check_operator_morphism_duality(const JoinMap& f, const Operator& a, const Operator& b);

}  // namespace findual
