#include "findual/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace findual {

OrderedMonoid::OrderedMonoid(Poset carrier, std::vector<int> mult, int unit)
    : carrier_(std::move(carrier)), mult_(std::move(mult)), unit_(unit) {
    int n = carrier_.size();
    if (int(mult_.size()) != n * n) throw invariant_error("monoid: table size mismatch");
    for (int v : mult_)
        if (v < 0 || v >= n) throw schema_error("monoid: table value out of range");
    if (unit_ < 0 || unit_ >= n) throw schema_error("monoid: unit out of range");
    for (int x = 0; x < n; ++x)
        if (mult(unit_, x) != x || mult(x, unit_) != x)
            throw invariant_error("monoid: unit law fails at " + std::to_string(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mult(mult(x, y), z) != mult(x, mult(y, z)))
                    throw invariant_error("monoid: associativity fails at (" + std::to_string(x) +
                                          "," + std::to_string(y) + "," + std::to_string(z) + ")");
    for (int x = 0; x < n; ++x)
        for (int x2 = 0; x2 < n; ++x2)
            if (carrier_.leq(x, x2))
                for (int y = 0; y < n; ++y)
                    if (!carrier_.leq(mult(x, y), mult(x2, y)) ||
                        !carrier_.leq(mult(y, x), mult(y, x2)))
                        throw invariant_error("monoid: multiplication not monotone");
}

OrderedMonoid OrderedMonoid::discrete(std::vector<std::vector<int>> table, int unit) {
    int n = int(table.size());
    std::vector<int> flat;
    flat.reserve(size_t(n) * size_t(n));
    for (const auto& row : table) {
        if (int(row.size()) != n) throw schema_error("monoid: ragged table");
        for (int v : row) flat.push_back(v);
    }
    return OrderedMonoid(Poset::antichain(n), std::move(flat), unit);
}

bool OrderedMonoid::discrete_carrier() const {
    for (int i = 0; i < size(); ++i)
        if (carrier_.up(i).count() != 1) return false;
    return true;
}

bool monoids_isomorphic(const OrderedMonoid& a, const OrderedMonoid& b) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    std::vector<int> perm(size_t(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[size_t(a.unit())] != b.unit()) continue;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                ok = perm[size_t(a.mult(x, y))] == b.mult(perm[size_t(x)], perm[size_t(y)]) &&
                     (a.carrier().leq(x, y) == b.carrier().leq(perm[size_t(x)], perm[size_t(y)]));
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

void monoid_tables_rec(const Poset& p, std::vector<int>& t, int unit, int pos,
                       std::vector<OrderedMonoid>* out) {
    int n = p.size();
    if (pos == n * n) {
        try {
            out->push_back(OrderedMonoid(p, t, unit));
        } catch (const invariant_error&) {
        }
        return;
    }
    int x = pos / n, y = pos % n;
    if (x == unit) {
        t[size_t(pos)] = y;
        monoid_tables_rec(p, t, unit, pos + 1, out);
        return;
    }
    if (y == unit) {
        t[size_t(pos)] = x;
        monoid_tables_rec(p, t, unit, pos + 1, out);
        return;
    }
    auto get = [&](int a, int b) { return t[size_t(a) * size_t(n) + size_t(b)]; };
    auto filled = [&](int a, int b) { return a * n + b < pos; };
    for (int v = 0; v < n; ++v) {
        t[size_t(pos)] = v;
        bool ok = true;
        // partial associativity: any triple whose required products are filled
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c) {
                    if (!filled(a, b) && !(a == x && b == y)) continue;
                    int ab = (a == x && b == y) ? v : get(a, b);
                    if (!filled(b, c) && !(b == x && c == y)) continue;
                    int bc = (b == x && c == y) ? v : get(b, c);
                    int abc1 = -1, abc2 = -1;
                    if (filled(ab, c) || (ab == x && c == y)) abc1 = (ab == x && c == y) ? v : get(ab, c);
                    if (filled(a, bc) || (a == x && bc == y)) abc2 = (a == x && bc == y) ? v : get(a, bc);
                    if (abc1 >= 0 && abc2 >= 0) ok = abc1 == abc2;
                }
        // monotonicity against filled entries
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (!filled(a, b)) continue;
                int w = get(a, b);
                if (p.leq(a, x) && p.leq(b, y)) ok = p.leq(w, v);
                if (ok && p.leq(x, a) && p.leq(y, b)) ok = p.leq(v, w);
            }
        if (ok) monoid_tables_rec(p, t, unit, pos + 1, out);
    }
}

}  // namespace

std::vector<OrderedMonoid> ordered_monoid_structures(const Poset& carrier) {
    std::vector<OrderedMonoid> out;
    int n = carrier.size();
    if (n == 0) return out;
    for (int unit = 0; unit < n; ++unit) {
        std::vector<int> t(size_t(n) * size_t(n), -1);
        monoid_tables_rec(carrier, t, unit, 0, &out);
    }
    return out;
}

std::vector<OrderedMonoid> all_ordered_monoids_upto_iso(int max_n) {
    std::vector<OrderedMonoid> out;
    for (const Poset& p : all_posets_upto_iso(max_n)) {
        if (p.size() == 0) continue;
        for (const OrderedMonoid& m : ordered_monoid_structures(p)) {
            bool fresh = true;
            for (const OrderedMonoid& seen : out)
                if (monoids_isomorphic(seen, m)) {
                    fresh = false;
                    break;
                }
            if (fresh) out.push_back(m);
        }
    }
    return out;
}

ResAlgebra monoid_to_derivation(const OrderedMonoid& m) {
    int n = m.size();
    FiniteDistLattice lat((m.carrier()));
    std::vector<std::vector<Bitset>> mu(size_t(n), std::vector<Bitset>(size_t(n)));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) mu[size_t(p)][size_t(q)] = m.carrier().down(m.mult(p, q));
    return ResAlgebra(lat, std::move(mu), m.carrier().down(m.unit()));
}

OrderedMonoid derivation_to_monoid(const ResAlgebra& r) {
    ResFlags f = classify(r);
    if (!f.derivation)
        throw invariant_error("derivation_to_monoid: algebra is not a derivation algebra");
    int n = r.base().size();
    std::vector<int> mult(size_t(n) * size_t(n));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            int s = -1;
            if (!r.lattice().is_prime(r.mu_prime(p, q), &s))
                throw cross_check_error("derivation_to_monoid: mu of primes not prime");
            mult[size_t(p) * size_t(n) + size_t(q)] = s;
        }
    std::optional<Bitset> e = r.declared_unit() ? r.declared_unit() : r.find_unit();
    int unit = -1;
    if (!e || !r.lattice().is_prime(*e, &unit))
        throw cross_check_error("derivation_to_monoid: no prime unit");
    return OrderedMonoid(r.base(), std::move(mult), unit);
}

bool is_monoid_hom(const OrderedMonoid& m, const OrderedMonoid& n, const MonotoneMap& f) {
    if (!f.dom().same_order_as(m.carrier()) || !f.cod().same_order_as(n.carrier()))
        return false;
    if (f(m.unit()) != n.unit()) return false;
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (f(m.mult(x, y)) != n.mult(f(x), f(y))) return false;
    return true;
}

LatticeHom dualize_monoid_hom(const OrderedMonoid& m, const OrderedMonoid& n,
                              const MonotoneMap& f) {
    if (!is_monoid_hom(m, n, f))
        throw invariant_error("dualize_monoid_hom: not a monoid homomorphism");
    return dualize_map(f);
}

RelationalMonoidMorphism::RelationalMonoidMorphism(OrderedMonoid dom, OrderedMonoid cod,
                                                   std::vector<Bitset> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), img_(std::move(images)) {
    if (int(img_.size()) != dom_.size())
        throw invariant_error("relational morphism: image table size mismatch");
    for (const Bitset& b : img_)
        if (b.universe() != cod_.size() || !cod_.carrier().is_upset(b))
            throw invariant_error("relational morphism: image is not an upset");
    for (int x = 0; x < dom_.size(); ++x)
        for (int y = 0; y < dom_.size(); ++y)
            if (dom_.carrier().leq(x, y) && !img_[size_t(y)].subset_of(img_[size_t(x)]))
                throw invariant_error("relational morphism: images not antitone");
}

RelationalMonoidMorphism RelationalMonoidMorphism::identity(const OrderedMonoid& m) {
    std::vector<Bitset> img;
    img.reserve(size_t(m.size()));
    for (int x = 0; x < m.size(); ++x) img.push_back(m.carrier().up(x));
    return RelationalMonoidMorphism(m, m, std::move(img));
}

RelationalMonoidMorphism RelationalMonoidMorphism::of_inverse(const OrderedMonoid& m,
                                                              const OrderedMonoid& n,
                                                              const MonotoneMap& e) {
    std::vector<Bitset> img(size_t(m.size()), Bitset(n.size()));
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < n.size(); ++y)
            if (m.carrier().leq(x, e(y))) img[size_t(x)].set(y);
    return RelationalMonoidMorphism(m, n, std::move(img));
}

RelationalMonoidMorphism RelationalMonoidMorphism::of_hom(const OrderedMonoid& m,
                                                          const OrderedMonoid& n,
                                                          const MonotoneMap& f) {
    std::vector<Bitset> img;
    img.reserve(size_t(m.size()));
    for (int x = 0; x < m.size(); ++x) img.push_back(n.carrier().up(f(x)));
    return RelationalMonoidMorphism(m, n, std::move(img));
}

RelMorphismFlags check_relational_morphism(const RelationalMonoidMorphism& rho) {
    RelMorphismFlags f;
    const OrderedMonoid& m = rho.dom();
    const OrderedMonoid& n = rho.cod();
    f.total = true;
    for (int x = 0; x < m.size(); ++x)
        if (rho.image(x).none()) f.total = false;
    f.lax_square = true;
    for (int x = 0; x < m.size() && f.lax_square; ++x)
        for (int y = 0; y < m.size() && f.lax_square; ++y) {
            const Bitset& target = rho.image(m.mult(x, y));
            for (int a = rho.image(x).first(); a >= 0 && f.lax_square; a = rho.image(x).next(a))
                for (int b = rho.image(y).first(); b >= 0; b = rho.image(y).next(b))
                    if (!target.test(n.mult(a, b))) {
                        f.lax_square = false;
                        break;
                    }
        }
    f.lax_unit = rho.image(m.unit()).test(n.unit());
    return f;
}

JoinMap dualize_relational_morphism(const RelationalMonoidMorphism& rho) {
    const OrderedMonoid& m = rho.dom();
    const OrderedMonoid& n = rho.cod();
    FiniteDistLattice dn((n.carrier()));
    FiniteDistLattice dm((m.carrier()));
    std::vector<Bitset> primg(size_t(n.size()), Bitset(m.size()));
    for (int q = 0; q < n.size(); ++q)
        for (int x = 0; x < m.size(); ++x)
            if (rho.image(x).intersects(n.carrier().down(q))) primg[size_t(q)].set(x);
    return JoinMap(dn, dm, std::move(primg));
}

std::vector<RelationalMonoidMorphism> all_relational_candidates(const OrderedMonoid& m,
                                                                const OrderedMonoid& n) {
    // all upsets of the codomain carrier
    std::vector<Bitset> ups;
    for (const Bitset& d : n.carrier().downsets()) ups.push_back(d.complement());
    std::vector<RelationalMonoidMorphism> out;
    std::vector<int> choice(size_t(m.size()), 0);
    std::function<void(int)> rec = [&](int x) {
        if (x == m.size()) {
            std::vector<Bitset> img;
            img.reserve(size_t(m.size()));
            for (int i = 0; i < m.size(); ++i) img.push_back(ups[size_t(choice[size_t(i)])]);
            try {
                out.emplace_back(m, n, std::move(img));
            } catch (const invariant_error&) {
            }
            return;
        }
        for (size_t u = 0; u < ups.size(); ++u) {
            choice[size_t(x)] = int(u);
            rec(x + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace findual
