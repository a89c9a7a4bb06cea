#include "findual/lattice.hpp"

#include <algorithm>
#include <map>

namespace findual {

bool FiniteDistLattice::is_prime(const Bitset& x, int* p) const {
    if (x.none()) return false;
    // a downset is principal iff it has a unique maximal element
    int cand = -1;
    for (int i = x.first(); i >= 0; i = x.next(i))
        if (x.subset_of(base_.down(i))) {
            cand = i;
            break;
        }
    if (cand < 0) return false;
    if (p) *p = cand;
    return true;
}

std::vector<Bitset> FiniteDistLattice::elements(long long limit) const {
    if (element_count() > limit)
        throw std::invalid_argument("lattice too large to enumerate elements");
    return base_.downsets();
}

AbstractLattice::AbstractLattice(Poset order) : order_(std::move(order)) {
    int n = order_.size();
    if (n == 0) throw invariant_error("abstract lattice: empty carrier");
    join_.assign(size_t(n), std::vector<int>(size_t(n), -1));
    meet_.assign(size_t(n), std::vector<int>(size_t(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Bitset ub = order_.up(a) & order_.up(b);
            int lub = -1;
            for (int c = ub.first(); c >= 0; c = ub.next(c))
                if (ub.subset_of(order_.up(c))) {
                    lub = c;
                    break;
                }
            if (lub < 0)
                throw invariant_error("not-a-lattice: no join of (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
            join_[size_t(a)][size_t(b)] = lub;
            Bitset lb = order_.down(a) & order_.down(b);
            int glb = -1;
            for (int c = lb.first(); c >= 0; c = lb.next(c))
                if (lb.subset_of(order_.down(c))) {
                    glb = c;
                    break;
                }
            if (glb < 0)
                throw invariant_error("not-a-lattice: no meet of (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
            meet_[size_t(a)][size_t(b)] = glb;
        }
    for (int c = 0; c < n; ++c) {
        if (order_.up(c).count() == n) bot_ = c;
        if (order_.down(c).count() == n) top_ = c;
    }
    // direct triple scan
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
                    throw invariant_error("not-distributive: witness triple (" +
                                          std::to_string(x) + "," + std::to_string(y) + "," +
                                          std::to_string(z) + ")");
}

std::vector<int> AbstractLattice::join_primes() const {
    int n = order_.size();
    std::vector<int> out;
    for (int p = 0; p < n; ++p) {
        if (p == bot_) continue;
        bool prime = true;
        for (int u = 0; u < n && prime; ++u)
            for (int v = 0; v < n && prime; ++v)
                if (order_.leq(p, join(u, v)) && !order_.leq(p, u) && !order_.leq(p, v))
                    prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

Canonicalization canonicalize(const AbstractLattice& a) {
    std::vector<int> primes = a.join_primes();
    int m = int(primes.size());
    std::vector<std::vector<bool>> leq(size_t(m), std::vector<bool>(size_t(m), false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[size_t(i)][size_t(j)] = a.order().leq(primes[size_t(i)], primes[size_t(j)]);
    Canonicalization c;
    c.lattice = FiniteDistLattice(Poset::from_matrix(leq));
    c.base_element = primes;
    c.to_canonical.reserve(size_t(a.size()));
    for (int x = 0; x < a.size(); ++x) {
        Bitset d(m);
        for (int i = 0; i < m; ++i)
            if (a.order().leq(primes[size_t(i)], x)) d.set(i);
        c.to_canonical.push_back(d);
    }
    // By Birkhoff the map x |-> {p <= x} must be bijective onto downsets; a
    // failure here means the distributivity check above was insufficient.
    std::map<Bitset, int> seen;
    for (int x = 0; x < a.size(); ++x)
        if (!seen.emplace(c.to_canonical[size_t(x)], x).second)
            throw cross_check_error("canonicalize: prime representation not injective");
    if (a.size() != c.lattice.element_count())
        throw cross_check_error("canonicalize: element counts differ");
    return c;
}

LatticeMap::LatticeMap(FiniteDistLattice dom, FiniteDistLattice cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    dome_ = dom_.elements();
    code_ = cod_.elements();
    if (table_.size() != dome_.size()) throw invariant_error("lattice map: table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= int(code_.size()))
            throw schema_error("lattice map: image index out of range");
    for (size_t i = 0; i < dome_.size(); ++i)
        for (size_t j = 0; j < dome_.size(); ++j)
            if (dome_[i].subset_of(dome_[j]) &&
                !code_[size_t(table_[i])].subset_of(code_[size_t(table_[j])]))
                throw invariant_error("lattice map: not monotone");
}

Bitset LatticeMap::apply(const Bitset& x) const {
    return code_[size_t(table_[size_t(index_of_dom(x))])];
}

int LatticeMap::index_of_dom(const Bitset& x) const {
    auto cmp = [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    };
    auto it = std::lower_bound(dome_.begin(), dome_.end(), x, cmp);
    if (it == dome_.end() || !(*it == x))
        throw std::invalid_argument("lattice map: not a dom element");
    return int(it - dome_.begin());
}

int LatticeMap::index_of_cod(const Bitset& x) const {
    auto cmp = [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    };
    auto it = std::lower_bound(code_.begin(), code_.end(), x, cmp);
    if (it == code_.end() || !(*it == x))
        throw std::invalid_argument("lattice map: not a cod element");
    return int(it - code_.begin());
}

bool LatticeMap::preserves_joins(std::string* witness) const {
    for (size_t i = 0; i < dome_.size(); ++i)
        for (size_t j = 0; j < dome_.size(); ++j) {
            Bitset lhs = apply(dome_[i] | dome_[j]);
            Bitset rhs = code_[size_t(table_[i])] | code_[size_t(table_[j])];
            if (lhs != rhs) {
                if (witness)
                    *witness = "join of " + dome_[i].to_string() + " and " + dome_[j].to_string();
                return false;
            }
        }
    if (!preserves_bot()) {
        if (witness) *witness = "bottom";
        return false;
    }
    return true;
}

bool LatticeMap::preserves_meets(std::string* witness) const {
    for (size_t i = 0; i < dome_.size(); ++i)
        for (size_t j = 0; j < dome_.size(); ++j) {
            Bitset lhs = apply(dome_[i] & dome_[j]);
            Bitset rhs = code_[size_t(table_[i])] & code_[size_t(table_[j])];
            if (lhs != rhs) {
                if (witness)
                    *witness = "meet of " + dome_[i].to_string() + " and " + dome_[j].to_string();
                return false;
            }
        }
    if (!preserves_top()) {
        if (witness) *witness = "top";
        return false;
    }
    return true;
}

bool LatticeMap::preserves_bot() const { return apply(dom_.bot()) == cod_.bot(); }
bool LatticeMap::preserves_top() const { return apply(dom_.top()) == cod_.top(); }

LatticeMap LatticeMap::identity(const FiniteDistLattice& l) {
    std::vector<int> t(size_t(l.element_count()));
    for (size_t i = 0; i < t.size(); ++i) t[i] = int(i);
    return LatticeMap(l, l, std::move(t));
}

LatticeMap LatticeMap::then(const LatticeMap& g) const {
    if (!cod_.same_as(g.dom())) throw std::invalid_argument("lattice map composition mismatch");
    std::vector<int> t(table_.size());
    for (size_t i = 0; i < table_.size(); ++i) t[i] = g.apply_index(table_[i]);
    return LatticeMap(dom_, g.cod(), std::move(t));
}

LatticeHom::LatticeHom(LatticeMap m) : m_(std::move(m)) {
    std::string w;
    if (!m_.preserves_joins(&w)) throw invariant_error("lattice hom: joins not preserved at " + w);
    if (!m_.preserves_meets(&w)) throw invariant_error("lattice hom: meets not preserved at " + w);
}

LatticeMap right_adjoint(const LatticeMap& f) {
    std::string w;
    if (!f.preserves_joins(&w))
        throw invariant_error("right_adjoint: map does not preserve joins (witness: " + w + ")");
    const auto& de = f.dom_elements();
    const auto& ce = f.cod_elements();
    std::vector<int> t(ce.size());
    for (size_t y = 0; y < ce.size(); ++y) {
        Bitset acc = f.dom().bot();
        for (size_t x = 0; x < de.size(); ++x)
            if (f.cod_elements()[size_t(f.apply_index(int(x)))].subset_of(ce[y])) acc |= de[x];
        t[y] = f.index_of_dom(acc);
    }
    return LatticeMap(f.cod(), f.dom(), std::move(t));
}

LatticeMap left_adjoint(const LatticeMap& f) {
    std::string w;
    if (!f.preserves_meets(&w))
        throw invariant_error("left_adjoint: map does not preserve meets (witness: " + w + ")");
    const auto& de = f.dom_elements();
    const auto& ce = f.cod_elements();
    std::vector<int> t(ce.size());
    for (size_t y = 0; y < ce.size(); ++y) {
        Bitset acc = f.dom().top();
        for (size_t x = 0; x < de.size(); ++x)
            if (ce[y].subset_of(f.cod_elements()[size_t(f.apply_index(int(x)))])) acc &= de[x];
        t[y] = f.index_of_dom(acc);
    }
    return LatticeMap(f.cod(), f.dom(), std::move(t));
}

MonotoneMap dualize_hom(const LatticeHom& f) {
    LatticeMap star = left_adjoint(f.map());
    const Poset& qbase = f.cod().base();
    const Poset& pbase = f.dom().base();
    std::vector<int> table(size_t(qbase.size()));
    for (int q = 0; q < qbase.size(); ++q) {
        Bitset img = star.apply(f.cod().prime(q));
        int p = -1;
        if (!f.dom().is_prime(img, &p))
            throw cross_check_error("dualize_hom: left adjoint not prime at prime " +
                                    std::to_string(q));
        table[size_t(q)] = p;
    }
    return MonotoneMap(qbase, pbase, std::move(table));
}

LatticeHom dualize_map(const MonotoneMap& phi) {
    FiniteDistLattice dom(phi.cod());
    FiniteDistLattice cod(phi.dom());
    auto de = dom.elements();
    auto ce = cod.elements();
    auto cmp = [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    };
    std::vector<int> t;
    t.reserve(de.size());
    for (const Bitset& s : de) {
        Bitset pre(phi.dom().size());
        for (int x = 0; x < phi.dom().size(); ++x)
            if (s.test(phi(x))) pre.set(x);
        auto it = std::lower_bound(ce.begin(), ce.end(), pre, cmp);
        t.push_back(int(it - ce.begin()));
    }
    return LatticeHom(LatticeMap(dom, cod, std::move(t)));
}

JoinMap::JoinMap(FiniteDistLattice dom, FiniteDistLattice cod, std::vector<Bitset> prime_img)
    : dom_(std::move(dom)), cod_(std::move(cod)), img_(std::move(prime_img)) {
    if (int(img_.size()) != dom_.base().size())
        throw invariant_error("join map: prime table size mismatch");
    for (const Bitset& x : img_)
        if (!cod_.is_element(x)) throw invariant_error("join map: image not a lattice element");
    for (int p = 0; p < dom_.base().size(); ++p)
        for (int q = 0; q < dom_.base().size(); ++q)
            if (dom_.base().leq(p, q) && !img_[size_t(p)].subset_of(img_[size_t(q)]))
                throw invariant_error("join map: prime table not monotone");
}

JoinMap JoinMap::identity(const FiniteDistLattice& l) {
    std::vector<Bitset> img;
    img.reserve(size_t(l.base().size()));
    for (int p = 0; p < l.base().size(); ++p) img.push_back(l.prime(p));
    return JoinMap(l, l, std::move(img));
}

JoinMap JoinMap::then(const JoinMap& g) const {
    if (!cod_.same_as(g.dom())) throw std::invalid_argument("join map composition mismatch");
    std::vector<Bitset> img;
    img.reserve(img_.size());
    for (const Bitset& x : img_) img.push_back(g.apply(x));
    return JoinMap(dom_, g.cod(), std::move(img));
}

Bitset JoinMap::right_adjoint_at(const Bitset& y) const {
    Bitset r(dom_.base().size());
    for (int p = 0; p < dom_.base().size(); ++p)
        if (img_[size_t(p)].subset_of(y)) r.set(p);
    // r is a downset by monotonicity of the prime table
    return r;
}

OrderRelation dual_relation_of(const JoinMap& f) {
    const Poset& e = f.cod().base();
    const Poset& d = f.dom().base();
    std::vector<Bitset> img(size_t(e.size()), Bitset(d.size()));
    for (int q = 0; q < e.size(); ++q)
        for (int p = 0; p < d.size(); ++p)
            if (f.prime_image(p).test(q)) img[size_t(q)].set(p);
    return OrderRelation(e, d, std::move(img));
}

JoinMap joinmap_of_relation(const OrderRelation& r) {
    FiniteDistLattice dom(r.cod());
    FiniteDistLattice cod(r.dom());
    std::vector<Bitset> img(size_t(r.cod().size()), Bitset(r.dom().size()));
    for (int q = 0; q < r.dom().size(); ++q)
        r.at(q).for_each([&](int p) { img[size_t(p)].set(q); });
    return JoinMap(std::move(dom), std::move(cod), std::move(img));
}

}  // namespace findual
