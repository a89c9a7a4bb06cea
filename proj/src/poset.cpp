#include "findual/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace findual {

void Poset::init_from_matrix(const std::vector<std::vector<bool>>& leq) {
    n_ = int(leq.size());
    for (int i = 0; i < n_; ++i)
        if (!leq[size_t(i)][size_t(i)])
            throw invariant_error("poset: not reflexive at " + std::to_string(i));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq[size_t(i)][size_t(j)] && leq[size_t(j)][size_t(i)])
                throw invariant_error("poset: antisymmetry fails at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq[size_t(i)][size_t(j)])
                for (int k = 0; k < n_; ++k)
                    if (leq[size_t(j)][size_t(k)] && !leq[size_t(i)][size_t(k)])
                        throw invariant_error("poset: transitivity fails at (" +
                                              std::to_string(i) + "," + std::to_string(j) +
                                              "," + std::to_string(k) + ")");
    above_.assign(size_t(n_), Bitset(n_));
    below_.assign(size_t(n_), Bitset(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq[size_t(i)][size_t(j)]) {
                above_[size_t(i)].set(j);
                below_[size_t(j)].set(i);
            }
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                        std::vector<std::string> labels) {
    if (n < 0) throw schema_error("poset: negative size");
    std::vector<std::vector<bool>> leq(size_t(n), std::vector<bool>(size_t(n), false));
    for (int i = 0; i < n; ++i) leq[size_t(i)][size_t(i)] = true;
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw schema_error("poset: pair index out of range");
        leq[size_t(i)][size_t(j)] = true;
    }
    Poset p;
    p.init_from_matrix(leq);
    p.labels_ = std::move(labels);
    return p;
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& leq,
                         std::vector<std::string> labels) {
    Poset p;
    p.init_from_matrix(leq);
    p.labels_ = std::move(labels);
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return from_pairs(n, pairs);
}

Poset Poset::antichain(int n) { return from_pairs(n, {}); }

bool Poset::same_order_as(const Poset& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        if (above_[size_t(i)] != o.above_[size_t(i)]) return false;
    return true;
}

bool Poset::is_downset(const Bitset& s) const {
    for (int i = s.first(); i >= 0; i = s.next(i))
        if (!down(i).subset_of(s)) return false;
    return true;
}

bool Poset::is_upset(const Bitset& s) const {
    for (int i = s.first(); i >= 0; i = s.next(i))
        if (!up(i).subset_of(s)) return false;
    return true;
}

Bitset Poset::down_closure(const Bitset& seed) const {
    Bitset r(n_);
    for (int i = seed.first(); i >= 0; i = seed.next(i)) r |= down(i);
    return r;
}

Bitset Poset::up_closure(const Bitset& seed) const {
    Bitset r(n_);
    for (int i = seed.first(); i >= 0; i = seed.next(i)) r |= up(i);
    return r;
}

namespace {

// Shared recursion: walk elements in a fixed linear extension (ascending index
// works when the order respects indices; otherwise sort by |down| first) and
// decide membership. A set is a downset iff adding element i requires down(i)
// already included.
void downsets_rec(const Poset& p, const std::vector<int>& order, size_t pos, Bitset cur,
                  long long* counter, std::vector<Bitset>* out) {
    if (pos == order.size()) {
        if (counter) ++*counter;
        if (out) out->push_back(cur);
        return;
    }
    int e = order[pos];
    downsets_rec(p, order, pos + 1, cur, counter, out);
    Bitset strict = p.down(e);
    strict.reset(e);
    if (strict.subset_of(cur)) {
        cur.set(e);
        downsets_rec(p, order, pos + 1, cur, counter, out);
    }
}

std::vector<int> linear_extension(const Poset& p) {
    std::vector<int> order(size_t(p.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.down(a).count() < p.down(b).count(); });
    return order;
}

}  // namespace

long long Poset::count_downsets() const {
    long long c = 0;
    downsets_rec(*this, linear_extension(*this), 0, Bitset(n_), &c, nullptr);
    return c;
}

std::vector<Bitset> Poset::downsets() const {
    std::vector<Bitset> out;
    downsets_rec(*this, linear_extension(*this), 0, Bitset(n_), nullptr, &out);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

uint64_t Poset::canonical_key() const {
    if (n_ > 8) throw std::invalid_argument("canonical_key: poset too large");
    std::vector<int> perm(size_t(n_));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t key = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                key <<= 1;
                if (leq(perm[size_t(i)], perm[size_t(j)])) key |= 1;
            }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool Poset::isomorphic_to(const Poset& o) const {
    if (n_ != o.n_) return false;
    return canonical_key() == o.canonical_key();
}

Poset product_poset(std::span<const Poset> factors) {
    if (factors.empty()) throw std::invalid_argument("product_poset: empty factor list");
    long long total = 1;
    for (const Poset& f : factors) total *= f.size();
    if (total > 1 << 20) throw std::invalid_argument("product_poset: too large");
    int n = int(total);
    std::vector<std::vector<bool>> leq(size_t(n), std::vector<bool>(size_t(n), false));
    auto decode = [&](int idx) {
        std::vector<int> t(factors.size());
        for (size_t i = factors.size(); i-- > 0;) {
            t[i] = idx % factors[i].size();
            idx /= factors[i].size();
        }
        return t;
    };
    std::vector<std::vector<int>> tuples(size_t(n));
    for (int i = 0; i < n; ++i) tuples[size_t(i)] = decode(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (size_t c = 0; c < factors.size() && le; ++c)
                le = factors[c].leq(tuples[size_t(i)][c], tuples[size_t(j)][c]);
            leq[size_t(i)][size_t(j)] = le;
        }
    return Poset::from_matrix(leq);
}

Poset power_poset(const Poset& p, int k) {
    if (k == 0) return Poset::antichain(1);
    std::vector<Poset> fs(size_t(k), p);
    return product_poset(fs);
}

MonotoneMap::MonotoneMap(Poset dom, Poset cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (int(table_.size()) != dom_.size())
        throw invariant_error("monotone map: table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= cod_.size()) throw schema_error("monotone map: image out of range");
    for (int x = 0; x < dom_.size(); ++x)
        for (int y = 0; y < dom_.size(); ++y)
            if (dom_.leq(x, y) && !cod_.leq(table_[size_t(x)], table_[size_t(y)]))
                throw invariant_error("monotone map: order not preserved at (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
}

MonotoneMap MonotoneMap::identity(const Poset& p) {
    std::vector<int> t(size_t(p.size()));
    std::iota(t.begin(), t.end(), 0);
    return MonotoneMap(p, p, std::move(t));
}

MonotoneMap MonotoneMap::then(const MonotoneMap& g) const {
    if (!cod_.same_order_as(g.dom()))
        throw std::invalid_argument("monotone map composition: poset mismatch");
    std::vector<int> t(table_.size());
    for (size_t i = 0; i < table_.size(); ++i) t[i] = g(table_[i]);
    return MonotoneMap(dom_, g.cod(), std::move(t));
}

OrderRelation::OrderRelation(Poset dom, Poset cod, std::vector<Bitset> img)
    : dom_(std::move(dom)), cod_(std::move(cod)), img_(std::move(img)) {
    if (int(img_.size()) != dom_.size())
        throw invariant_error("order relation: image table size mismatch");
    for (int x = 0; x < dom_.size(); ++x) {
        if (!cod_.is_upset(img_[size_t(x)]))
            throw invariant_error("order relation: image of " + std::to_string(x) +
                                  " is not an upset");
        for (int x2 = 0; x2 < dom_.size(); ++x2)
            if (dom_.leq(x2, x) && !img_[size_t(x)].subset_of(img_[size_t(x2)]))
                throw invariant_error("order relation: stability fails between " +
                                      std::to_string(x2) + " and " + std::to_string(x));
    }
}

OrderRelation OrderRelation::identity(const Poset& p) {
    std::vector<Bitset> img;
    img.reserve(size_t(p.size()));
    for (int i = 0; i < p.size(); ++i) img.push_back(p.up(i));
    return OrderRelation(p, p, std::move(img));
}

std::vector<std::pair<int, int>> OrderRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < dom_.size(); ++x)
        img_[size_t(x)].for_each([&](int y) { out.emplace_back(x, y); });
    return out;
}

OrderRelation kleisli_compose(const OrderRelation& r, const OrderRelation& s) {
    if (!r.cod().same_order_as(s.dom()))
        throw std::invalid_argument("kleisli_compose: poset mismatch");
    std::vector<Bitset> img(size_t(r.dom().size()), Bitset(s.cod().size()));
    for (int x = 0; x < r.dom().size(); ++x)
        r.at(x).for_each([&](int y) { img[size_t(x)] |= s.at(y); });
    return OrderRelation(r.dom(), s.cod(), std::move(img));
}

OrderRelation kleisli_tensor(const OrderRelation& r, const OrderRelation& s) {
    std::array<Poset, 2> doms = {r.dom(), s.dom()};
    std::array<Poset, 2> cods = {r.cod(), s.cod()};
    Poset dom = product_poset(doms);
    Poset cod = product_poset(cods);
    int cn = s.cod().size();
    std::vector<Bitset> img(size_t(dom.size()), Bitset(cod.size()));
    for (int x = 0; x < r.dom().size(); ++x)
        for (int x2 = 0; x2 < s.dom().size(); ++x2) {
            Bitset& m = img[size_t(x * s.dom().size() + x2)];
            r.at(x).for_each([&](int y) {
                s.at(x2).for_each([&](int y2) { m.set(y * cn + y2); });
            });
        }
    return OrderRelation(std::move(dom), std::move(cod), std::move(img));
}

std::vector<Poset> naturally_labeled_posets(int n) {
    std::vector<Poset> acc;
    if (n == 0) {
        acc.push_back(Poset::antichain(0));
        return acc;
    }
    std::vector<Poset> prev = naturally_labeled_posets(n - 1);
    for (const Poset& p : prev) {
        for (const Bitset& d : p.downsets()) {
            // adjoin element n-1 above exactly the downset d
            std::vector<std::vector<bool>> leq(size_t(n), std::vector<bool>(size_t(n), false));
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j) leq[size_t(i)][size_t(j)] = p.leq(i, j);
            for (int i = 0; i < n; ++i) leq[size_t(i)][size_t(i)] = true;
            d.for_each([&](int i) { leq[size_t(i)][size_t(n - 1)] = true; });
            acc.push_back(Poset::from_matrix(leq));
        }
    }
    return acc;
}

std::vector<Poset> all_posets_upto_iso(int max_n) {
    std::vector<Poset> out;
    for (int n = 0; n <= max_n; ++n) {
        std::set<uint64_t> seen;
        for (const Poset& p : naturally_labeled_posets(n)) {
            if (n == 0) {
                out.push_back(p);
                break;
            }
            uint64_t key = p.canonical_key();
            if (seen.insert(key).second) out.push_back(p);
        }
        if (n == 0 && max_n >= 0 && out.empty()) out.push_back(Poset::antichain(0));
    }
    return out;
}

namespace {

void bounded_downset_posets_rec(const Poset& p, int max_n, long long max_downsets,
                                std::map<std::pair<int, uint64_t>, Poset>* seen) {
    long long nd = p.count_downsets();
    if (nd > max_downsets) return;
    seen->emplace(std::make_pair(p.size(), p.size() == 0 ? 0 : p.canonical_key()), p);
    if (p.size() >= max_n) return;
    int n = p.size() + 1;
    for (const Bitset& d : p.downsets()) {
        std::vector<std::vector<bool>> leq(size_t(n), std::vector<bool>(size_t(n), false));
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) leq[size_t(i)][size_t(j)] = p.leq(i, j);
        for (int i = 0; i < n; ++i) leq[size_t(i)][size_t(i)] = true;
        d.for_each([&](int i) { leq[size_t(i)][size_t(n - 1)] = true; });
        bounded_downset_posets_rec(Poset::from_matrix(leq), max_n, max_downsets, seen);
    }
}

}  // namespace

std::vector<Poset> posets_with_bounded_downsets(int max_n, long long max_downsets) {
    std::map<std::pair<int, uint64_t>, Poset> seen;
    bounded_downset_posets_rec(Poset::antichain(0), max_n, max_downsets, &seen);
    std::vector<Poset> out;
    out.reserve(seen.size());
    for (auto& [k, p] : seen) out.push_back(std::move(p));
    return out;
}

}  // namespace findual
