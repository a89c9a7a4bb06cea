#include "findual/op.hpp"

#include <array>

namespace findual {

Operator::Operator(FiniteDistLattice lattice, int k, int n, std::vector<Bitset> table)
    : lat_(std::move(lattice)),
      k_(k),
      n_(n),
      domp_(power_poset(lat_.base(), k)),
      codp_(power_poset(lat_.base(), n)),
      table_(std::move(table)) {
    if (k < 0 || n < 0) throw std::invalid_argument("operator arities must be >= 0");
    if (int(table_.size()) != domp_.size())
        throw invariant_error("operator: table size mismatch");
    for (const Bitset& v : table_)
        if (v.universe() != codp_.size() || !codp_.is_downset(v))
            throw invariant_error("operator: table value is not a tensor element");
    for (int b = 0; b < domp_.size(); ++b)
        for (int b2 = 0; b2 < domp_.size(); ++b2)
            if (domp_.leq(b2, b) && !table_[size_t(b2)].subset_of(table_[size_t(b)]))
                throw invariant_error("operator: table not monotone between tuples " +
                                      std::to_string(b2) + " and " + std::to_string(b));
}

Bitset Operator::eval(const Bitset& t) const {
    if (t.universe() != domp_.size() || !domp_.is_downset(t))
        throw std::invalid_argument("operator eval: input is not a tensor element");
    Bitset r(codp_.size());
    t.for_each([&](int b) { r |= table_[size_t(b)]; });
    return r;
}

Bitset Operator::eval1(const Bitset& x) const {
    if (k_ != 1 || n_ != 1) throw std::invalid_argument("eval1 requires a (1,1) operator");
    return eval(x);
}

Operator Operator::identity(const FiniteDistLattice& l) {
    std::vector<Bitset> t;
    t.reserve(size_t(l.base().size()));
    for (int p = 0; p < l.base().size(); ++p) t.push_back(l.prime(p));
    return Operator(l, 1, 1, std::move(t));
}

Operator Operator::constant_bot(const FiniteDistLattice& l, int k, int n) {
    Poset dom = power_poset(l.base(), k);
    Poset cod = power_poset(l.base(), n);
    std::vector<Bitset> t(size_t(dom.size()), Bitset(cod.size()));
    return Operator(l, k, n, std::move(t));
}

Operator Operator::top_op(const FiniteDistLattice& l) {
    std::vector<Bitset> t(size_t(l.base().size()), Bitset::full(l.base().size()));
    return Operator(l, 1, 1, std::move(t));
}

Operator Operator::meet_op(const FiniteDistLattice& l) {
    int n = l.base().size();
    std::vector<Bitset> t;
    t.reserve(size_t(n) * size_t(n));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t.push_back(l.prime(p) & l.prime(q));
    return Operator(l, 2, 1, std::move(t));
}

Operator Operator::meet_with(const FiniteDistLattice& l, const Bitset& c) {
    std::vector<Bitset> t;
    t.reserve(size_t(l.base().size()));
    for (int p = 0; p < l.base().size(); ++p) t.push_back(l.prime(p) & c);
    return Operator(l, 1, 1, std::move(t));
}

DualRelation::DualRelation(Poset base, int k, int n, std::vector<Bitset> rel)
    : base_(std::move(base)),
      k_(k),
      n_(n),
      domp_(power_poset(base_, k)),
      codp_(power_poset(base_, n)),
      rel_(std::move(rel)) {
    if (int(rel_.size()) != domp_.size())
        throw invariant_error("dual relation: table size mismatch");
    for (int b = 0; b < domp_.size(); ++b) {
        if (rel_[size_t(b)].universe() != codp_.size() || !codp_.is_downset(rel_[size_t(b)]))
            throw invariant_error("dual relation: stability fails (image of tuple " +
                                  std::to_string(b) + " is not downward closed)");
        for (int b2 = 0; b2 < domp_.size(); ++b2)
            if (domp_.leq(b, b2) && !rel_[size_t(b)].subset_of(rel_[size_t(b2)]))
                throw invariant_error("dual relation: stability fails between tuples " +
                                      std::to_string(b) + " and " + std::to_string(b2));
    }
}

OrderRelation DualRelation::to_order_relation() const {
    std::vector<Bitset> img(size_t(codp_.size()), Bitset(domp_.size()));
    for (int b = 0; b < domp_.size(); ++b)
        rel_[size_t(b)].for_each([&](int a) { img[size_t(a)].set(b); });
    return OrderRelation(codp_, domp_, std::move(img));
}

DualRelation DualRelation::from_order_relation(const OrderRelation& r, const Poset& base, int k,
                                               int n) {
    Poset domp = power_poset(base, k);
    std::vector<Bitset> rel(size_t(domp.size()), Bitset(r.dom().size()));
    for (int a = 0; a < r.dom().size(); ++a)
        r.at(a).for_each([&](int b) { rel[size_t(b)].set(a); });
    return DualRelation(base, k, n, std::move(rel));
}

DualRelation DualRelation::empty(const Poset& base, int k, int n) {
    Poset domp = power_poset(base, k);
    Poset codp = power_poset(base, n);
    return DualRelation(base, k, n,
                        std::vector<Bitset>(size_t(domp.size()), Bitset(codp.size())));
}

DualRelation DualRelation::full(const Poset& base, int k, int n) {
    Poset domp = power_poset(base, k);
    Poset codp = power_poset(base, n);
    return DualRelation(base, k, n,
                        std::vector<Bitset>(size_t(domp.size()), Bitset::full(codp.size())));
}

DualRelation dualize_operator(const Operator& op) {
    const Poset& domp = op.dom_tuples();
    std::vector<Bitset> rel;
    rel.reserve(size_t(domp.size()));
    for (int b = 0; b < domp.size(); ++b) rel.push_back(op.eval(domp.down(b)));
    return DualRelation(op.lattice().base(), op.arity_in(), op.arity_out(), std::move(rel));
}

Operator dualize_relation(const DualRelation& r) {
    std::vector<Bitset> table;
    const Poset& domp = power_poset(r.base(), r.arity_k());
    table.reserve(size_t(domp.size()));
    for (int b = 0; b < domp.size(); ++b) table.push_back(r.at(b));
    return Operator(FiniteDistLattice(r.base()), r.arity_k(), r.arity_n(), std::move(table));
}

OperatorFlags classify_operator_side(const Operator& op) {
    OperatorFlags f;
    const Poset& domp = op.dom_tuples();
    f.top_preserving = op.eval(Bitset::full(domp.size())) ==
                       Bitset::full(op.cod_tuples().size());
    f.meet_preserving_nonempty = true;
    for (int b = 0; b < domp.size() && f.meet_preserving_nonempty; ++b)
        for (int c = 0; c < domp.size(); ++c) {
            Bitset lhs = op.eval(domp.down(b) & domp.down(c));
            if (lhs != (op.table_at(b) & op.table_at(c))) {
                f.meet_preserving_nonempty = false;
                break;
            }
        }
    f.pure = f.meet_preserving_nonempty && f.top_preserving;
    return f;
}

OperatorFlags classify_relation_side(const DualRelation& r) {
    OperatorFlags f;
    OrderRelation o = r.to_order_relation();
    bool total = true, partial = true;
    for (int a = 0; a < o.dom().size(); ++a) {
        const Bitset& img = o.at(a);
        if (img.none()) {
            total = false;
            continue;
        }
        // partial: the image must be a principal upset of the k-tuple poset
        bool principal = false;
        for (int b = img.first(); b >= 0; b = img.next(b))
            if (img == o.cod().up(b)) {
                principal = true;
                break;
            }
        if (!principal) partial = false;
    }
    f.top_preserving = total;
    f.meet_preserving_nonempty = partial;
    f.pure = total && partial;
    return f;
}

OperatorFlags classify(const Operator& op) {
    OperatorFlags a = classify_operator_side(op);
    OperatorFlags b = classify_relation_side(dualize_operator(op));
    if (!(a == b))
        throw cross_check_error("operator classification: operator side and relation side "
                                "disagree");
    return a;
}

Operator compose_operators(const Operator& h, const Operator& g) {
    if (!h.lattice().same_as(g.lattice()))
        throw std::invalid_argument("compose_operators: different lattices");
    if (h.arity_out() != g.arity_in())
        throw std::invalid_argument("compose_operators: arity mismatch");
    std::vector<Bitset> t;
    t.reserve(h.table().size());
    for (const Bitset& v : h.table()) t.push_back(g.eval(v));
    return Operator(h.lattice(), h.arity_in(), g.arity_out(), std::move(t));
}

Operator tensor_operators(const Operator& h, const Operator& g) {
    if (!h.lattice().same_as(g.lattice()))
        throw std::invalid_argument("tensor_operators: different lattices");
    int k = h.arity_in() + g.arity_in();
    int n = h.arity_out() + g.arity_out();
    const FiniteDistLattice& l = h.lattice();
    Poset domp = power_poset(l.base(), k);
    int hk = h.dom_tuples().size();
    int gk = g.dom_tuples().size();
    int hn = h.cod_tuples().size();
    int gn = g.cod_tuples().size();
    (void)hk;
    std::vector<Bitset> t;
    t.reserve(size_t(domp.size()));
    // row-major: a (k1+k2)-tuple index decomposes as b1 * |base|^k2 + b2
    for (int b1 = 0; b1 < h.dom_tuples().size(); ++b1)
        for (int b2 = 0; b2 < gk; ++b2) {
            Bitset v(hn * gn);
            h.table_at(b1).for_each([&](int a1) {
                g.table_at(b2).for_each([&](int a2) { v.set(a1 * gn + a2); });
            });
            t.push_back(v);
        }
    return Operator(l, k, n, std::move(t));
}

CompositeCheck dual_compose_check(const Operator& h, const Operator& g) {
    CompositeCheck c;
    c.lhs = dualize_operator(compose_operators(h, g)).to_order_relation();
    c.rhs = kleisli_compose(dualize_operator(g).to_order_relation(),
                            dualize_operator(h).to_order_relation());
    c.equal = c.lhs == c.rhs;
    return c;
}

CompositeCheck dual_tensor_check(const Operator& h, const Operator& g) {
    CompositeCheck c;
    c.lhs = dualize_operator(tensor_operators(h, g)).to_order_relation();
    OrderRelation rh = dualize_operator(h).to_order_relation();
    OrderRelation rg = dualize_operator(g).to_order_relation();
    OrderRelation prod = kleisli_tensor(rh, rg);
    // kleisli_tensor builds its own product posets; re-index onto base^(n1+n2)
    // and base^(k1+k2), which have identical row-major order. Compare by pairs.
    c.rhs = prod;
    auto lp = c.lhs.pairs();
    auto rp = prod.pairs();
    c.equal = lp == rp && c.lhs.dom().size() == prod.dom().size() &&
              c.lhs.cod().size() == prod.cod().size();
    return c;
}

CompositeCheck dual_identity_check(const FiniteDistLattice& l) {
    CompositeCheck c;
    c.lhs = dualize_operator(Operator::identity(l)).to_order_relation();
    c.rhs = OrderRelation::identity(l.base());
    c.equal = c.lhs == c.rhs;
    return c;
}

namespace {

/// f^(x)m applied to a tensor element over dom.base^m.
Bitset apply_power(const JoinMap& f, int m, const Bitset& t) {
    int nd = f.dom().base().size();
    int ne = f.cod().base().size();
    TupleIndex tid{nd, m};
    TupleIndex tie{ne, m};
    Bitset r(int(tie.count()));
    for (int idx = t.first(); idx >= 0; idx = t.next(idx)) {
        std::vector<int> tup = tid.tuple(idx);
        // product of the component images
        std::vector<int> cur(size_t(m), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == m) {
                r.set(tie.index(cur));
                return;
            }
            f.prime_image(tup[size_t(pos)]).for_each([&](int q) {
                cur[size_t(pos)] = q;
                rec(pos + 1);
            });
        };
        rec(0);
    }
    return r;
}

}  // namespace

bool is_operator_morphism(const JoinMap& f, const Operator& a, const Operator& b) {
    if (!f.dom().same_as(a.lattice()) || !f.cod().same_as(b.lattice()))
        throw std::invalid_argument("is_operator_morphism: lattice mismatch");
    if (a.arity_in() != b.arity_in() || a.arity_out() != b.arity_out())
        throw std::invalid_argument("is_operator_morphism: arity mismatch");
    const Poset& domp = a.dom_tuples();
    for (int t = 0; t < domp.size(); ++t) {
        Bitset lhs = apply_power(f, a.arity_out(), a.table_at(t));
        Bitset rhs = b.eval(apply_power(f, a.arity_in(), domp.down(t)));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

OrderRelation relation_power(const OrderRelation& beta, int m) {
    if (m == 1) return beta;
    OrderRelation acc = beta;
    for (int i = 1; i < m; ++i) acc = kleisli_tensor(acc, beta);
    return acc;
}

}  // namespace

bool is_relational_operator_morphism(const OrderRelation& beta, const DualRelation& rel_a,
                                     const DualRelation& rel_b) {
    int k = rel_a.arity_k(), n = rel_a.arity_n();
    if (rel_b.arity_k() != k || rel_b.arity_n() != n)
        throw std::invalid_argument("relational morphism: arity mismatch");
    OrderRelation rb = rel_b.to_order_relation();  // E^n -> E^k
    OrderRelation ra = rel_a.to_order_relation();  // D^n -> D^k
    OrderRelation bk = relation_power(beta, k);    // E^k -> D^k
    OrderRelation bn = relation_power(beta, n);    // E^n -> D^n
    OrderRelation lhs = kleisli_compose(rb, bk);
    OrderRelation rhs = kleisli_compose(bn, ra);
    return lhs.pairs() == rhs.pairs();
}

bool check_operator_morphism_duality(const JoinMap& f, const Operator& a, const Operator& b) {
    bool alg = is_operator_morphism(f, a, b);
    bool rel = is_relational_operator_morphism(dual_relation_of(f), dualize_operator(a),
                                               dualize_operator(b));
    if (alg != rel)
        throw cross_check_error("operator-morphism duality: the two sides disagree");
    return alg;
}

}  // namespace findual
