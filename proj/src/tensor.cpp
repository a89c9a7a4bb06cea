#include "findual/tensor.hpp"

#include <array>

namespace findual {

TensorSpace::TensorSpace(Poset base, int arity)
    : base_(std::move(base)), arity_(arity), prod_(power_poset(base_, arity)) {
    if (arity < 0) throw std::invalid_argument("tensor arity must be >= 0");
}

Bitset TensorSpace::pure(std::span<const Bitset> xs) const {
    if (int(xs.size()) != arity_) throw std::invalid_argument("pure tensor: arity mismatch");
    for (const Bitset& x : xs)
        if (x.universe() != base_.size() || !base_.is_downset(x))
            throw std::invalid_argument("pure tensor: component is not a lattice element");
    Bitset r(prod_.size());
    TupleIndex ti = tuples();
    std::vector<int> t(size_t(arity_), 0);
    // iterate all tuples; keep those componentwise inside
    long long total = ti.count();
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> tup = ti.tuple(int(idx));
        bool in = true;
        for (int i = 0; i < arity_ && in; ++i) in = xs[size_t(i)].test(tup[size_t(i)]);
        if (in) r.set(int(idx));
    }
    return r;
}

Bitset TensorSpace::pure_primes(std::span<const int> ps) const {
    if (int(ps.size()) != arity_) throw std::invalid_argument("pure tensor: arity mismatch");
    TupleIndex ti = tuples();
    return prod_.down(ti.index(ps));
}

FiniteDistLattice tensor_power(const FiniteDistLattice& d, int n) {
    if (n == 0) return FiniteDistLattice::two();
    return FiniteDistLattice(power_poset(d.base(), n));
}

namespace {

void require_square(const TensorSpace& ts) {
    if (ts.arity() != 2) throw std::invalid_argument("operation requires a tensor square");
}

}  // namespace

BoxElement box_pure(const TensorSpace& ts, const Bitset& d, const Bitset& e) {
    require_square(ts);
    int n = ts.base().size();
    Bitset w(ts.product().size());
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (!d.test(p) && !e.test(q)) w.set(p * n + q);
    return BoxElement{w};
}

BoxElement omega_canonical(const TensorSpace& ts, const Bitset& t) {
    require_square(ts);
    if (!ts.is_element(t)) throw std::invalid_argument("omega: not a tensor element");
    return BoxElement{t.complement()};
}

BoxElement omega_formula(const TensorSpace& ts, const Bitset& t) {
    require_square(ts);
    if (!ts.is_element(t)) throw std::invalid_argument("omega: not a tensor element");
    int n = ts.base().size();
    // canonical rectangle decomposition: t = join over its prime pairs
    std::vector<std::pair<int, int>> idx;
    t.for_each([&](int i) { idx.emplace_back(i / n, i % n); });
    if (idx.size() > 20) throw std::invalid_argument("omega_formula: decomposition too large");
    // meet over A subset I of (join_{i in A} down p_i) box (join_{i notin A} down q_i);
    // meet in the box representation is union of upset encodings
    Bitset acc(ts.product().size());
    uint64_t m = uint64_t{1} << idx.size();
    for (uint64_t a = 0; a < m; ++a) {
        Bitset d(n), e(n);
        for (size_t i = 0; i < idx.size(); ++i) {
            if (a >> i & 1)
                d |= ts.base().down(idx[i].first);
            else
                e |= ts.base().down(idx[i].second);
        }
        acc |= box_pure(ts, d, e).upset;
    }
    return BoxElement{acc};
}

Bitset omega_inverse_canonical(const TensorSpace& ts, const BoxElement& w) {
    require_square(ts);
    Bitset t = w.upset.complement();
    if (!ts.is_element(t)) throw std::invalid_argument("omega_inverse: not a box element");
    return t;
}

Bitset omega_inverse_formula(const TensorSpace& ts, const BoxElement& w) {
    require_square(ts);
    int n = ts.base().size();
    if (!ts.product().is_upset(w.upset))
        throw std::invalid_argument("omega_inverse: not a box element");
    // canonical meet decomposition: w = meet over its pairs of
    // (P - up p) box (Q - up q); then
    // omega^{-1}(meet_i d_i box e_i) = join over A of (meet_{i in A} d_i) (x) (meet_{i notin A} e_i)
    std::vector<std::pair<int, int>> idx;
    w.upset.for_each([&](int i) { idx.emplace_back(i / n, i % n); });
    if (idx.size() > 20) throw std::invalid_argument("omega_inverse_formula: too large");
    Bitset acc(ts.product().size());
    uint64_t m = uint64_t{1} << idx.size();
    for (uint64_t a = 0; a < m; ++a) {
        Bitset d = Bitset::full(n), e = Bitset::full(n);
        for (size_t i = 0; i < idx.size(); ++i) {
            if (a >> i & 1)
                d &= ts.base().up(idx[i].first).complement();
            else
                e &= ts.base().up(idx[i].second).complement();
        }
        std::array<Bitset, 2> comps = {d, e};
        acc |= ts.pure(comps);
    }
    return acc;
}

Bitset limp(const TensorSpace& ts, const Bitset& x, const Bitset& t) {
    require_square(ts);
    int n = ts.base().size();
    Bitset r(n);
    for (int q = 0; q < n; ++q) {
        bool ok = true;
        for (int p = x.first(); ok && p >= 0; p = x.next(p)) ok = t.test(p * n + q);
        if (ok) r.set(q);
    }
    // r is a downset: (p, q') <= (p, q) lies in t whenever (p, q) does
    return r;
}

Bitset rimp(const TensorSpace& ts, const Bitset& t, const Bitset& y) {
    require_square(ts);
    int n = ts.base().size();
    Bitset r(n);
    for (int p = 0; p < n; ++p) {
        bool ok = true;
        for (int q = y.first(); ok && q >= 0; q = y.next(q)) ok = t.test(p * n + q);
        if (ok) r.set(p);
    }
    return r;
}

JoinMap tensor_of_joinmaps(const JoinMap& f, const JoinMap& g) {
    if (!f.dom().same_as(g.dom()) || !f.cod().same_as(g.cod()))
        throw std::invalid_argument("tensor_of_joinmaps: mismatched lattices");
    TensorSpace dom(f.dom().base(), 2);
    TensorSpace cod(f.cod().base(), 2);
    int nd = f.dom().base().size();
    std::vector<Bitset> img;
    img.reserve(size_t(dom.product().size()));
    for (int p = 0; p < nd; ++p)
        for (int q = 0; q < nd; ++q) {
            std::array<Bitset, 2> comps = {f.prime_image(p), g.prime_image(q)};
            img.push_back(cod.pure(comps));
        }
    return JoinMap(dom.lattice(), cod.lattice(), std::move(img));
}

BoxElement apply_boxtimes(const TensorSpace& dom, const TensorSpace& cod, const MeetMapFn& g,
                          const MeetMapFn& g2, const BoxElement& w) {
    require_square(dom);
    require_square(cod);
    int n = dom.base().size();
    if (!dom.product().is_upset(w.upset)) throw std::invalid_argument("apply_boxtimes: not a box element");
    // decompose w as a meet of pure box tensors (P - up p) box (Q - up q)
    Bitset acc(cod.product().size());
    bool first = true;
    for (int i = w.upset.first(); i >= 0; i = w.upset.next(i)) {
        Bitset d = dom.base().up(i / n).complement();
        Bitset e = dom.base().up(i % n).complement();
        Bitset enc = box_pure(cod, g(d), g2(e)).upset;
        if (first) {
            acc = enc;
            first = false;
        } else {
            acc |= enc;  // meet in the box order is union of encodings
        }
    }
    // empty w is the box top (empty meet): top in box order = empty upset
    return BoxElement{acc};
}

}  // namespace findual
