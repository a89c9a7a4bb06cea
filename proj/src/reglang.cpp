#include "findual/reglang.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace findual {

void Dfa::validate() const {
    if (states <= 0) throw schema_error("dfa: needs at least one state");
    if (alphabet.empty()) throw schema_error("dfa: empty alphabet");
    for (size_t i = 0; i < alphabet.size(); ++i)
        for (size_t j = i + 1; j < alphabet.size(); ++j)
            if (alphabet[i] == alphabet[j]) throw schema_error("dfa: repeated letter");
    if (int(delta.size()) != states) throw schema_error("dfa: delta size mismatch");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw schema_error("dfa: delta row size mismatch");
        for (int s : row)
            if (s < 0 || s >= states) throw invariant_error("dfa: transition out of range");
    }
    if (initial < 0 || initial >= states) throw schema_error("dfa: initial out of range");
    if (accepting.universe() != states) throw schema_error("dfa: accepting mask size");
}

int Dfa::letter_index(char c) const {
    size_t i = alphabet.find(c);
    if (i == std::string::npos) throw std::invalid_argument("dfa: letter not in alphabet");
    return int(i);
}

int Dfa::run(int from, const std::string& word) const {
    int s = from;
    for (char c : word) s = delta[size_t(s)][size_t(letter_index(c))];
    return s;
}

bool Dfa::accepts(const std::string& word) const { return accepting.test(run(initial, word)); }

namespace {

// --- tiny regex engine (Thompson NFA with epsilon moves) ---------------------

struct Nfa {
    // states are implicit; transitions (from, letter or -1 for epsilon, to)
    int states = 0;
    std::vector<std::tuple<int, int, int>> edges;
    int start = 0, accept = 0;
};

struct RegexParser {
    const std::string& s;
    const std::string& alphabet;
    size_t pos = 0;
    Nfa nfa;

    explicit RegexParser(const std::string& str, const std::string& alpha)
        : s(str), alphabet(alpha) {}

    int fresh() { return nfa.states++; }

    struct Frag {
        int in, out;
    };

    Frag atom() {
        if (pos >= s.size()) throw schema_error("regex: unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Frag f = alt();
            if (pos >= s.size() || s[pos] != ')') throw schema_error("regex: missing )");
            ++pos;
            return postfix(f);
        }
        if (c == '0') {  // empty language
            ++pos;
            Frag f{fresh(), fresh()};
            return postfix(f);
        }
        if (c == '1') {  // empty word
            ++pos;
            Frag f{fresh(), fresh()};
            nfa.edges.emplace_back(f.in, -1, f.out);
            return postfix(f);
        }
        if (alphabet.find(c) == std::string::npos)
            throw schema_error(std::string("regex: letter '") + c + "' not in alphabet");
        ++pos;
        Frag f{fresh(), fresh()};
        nfa.edges.emplace_back(f.in, int(alphabet.find(c)), f.out);
        return postfix(f);
    }

    Frag postfix(Frag f) {
        while (pos < s.size() && (s[pos] == '*' || s[pos] == '+' || s[pos] == '?')) {
            char op = s[pos++];
            Frag g{fresh(), fresh()};
            nfa.edges.emplace_back(g.in, -1, f.in);
            nfa.edges.emplace_back(f.out, -1, g.out);
            if (op != '?') nfa.edges.emplace_back(f.out, -1, f.in);
            if (op != '+') nfa.edges.emplace_back(g.in, -1, g.out);
            f = g;
        }
        return f;
    }

    Frag seq() {
        Frag f = atom();
        while (pos < s.size() && s[pos] != '|' && s[pos] != ')') {
            Frag g = atom();
            nfa.edges.emplace_back(f.out, -1, g.in);
            f = Frag{f.in, g.out};
        }
        return f;
    }

    Frag alt() {
        Frag f = seq();
        while (pos < s.size() && s[pos] == '|') {
            ++pos;
            Frag g = seq();
            Frag h{fresh(), fresh()};
            nfa.edges.emplace_back(h.in, -1, f.in);
            nfa.edges.emplace_back(h.in, -1, g.in);
            nfa.edges.emplace_back(f.out, -1, h.out);
            nfa.edges.emplace_back(g.out, -1, h.out);
            f = h;
        }
        return f;
    }
};

std::set<int> eps_closure(const Nfa& n, std::set<int> cur) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [a, l, b] : n.edges)
            if (l == -1 && cur.count(a) && !cur.count(b)) {
                cur.insert(b);
                grew = true;
            }
    }
    return cur;
}

}  // namespace

Dfa regex_to_dfa(const std::string& pattern, const std::string& alphabet) {
    RegexParser p(pattern, alphabet);
    std::string src = pattern.empty() ? std::string("1") : pattern;
    RegexParser parser(src, alphabet);
    auto frag = parser.alt();
    if (parser.pos != src.size()) throw schema_error("regex: trailing input");
    parser.nfa.start = frag.in;
    parser.nfa.accept = frag.out;
    const Nfa& n = parser.nfa;

    std::map<std::set<int>, int> id;
    std::vector<std::set<int>> sets;
    std::vector<std::vector<int>> delta;
    std::set<int> start = eps_closure(n, {n.start});
    id[start] = 0;
    sets.push_back(start);
    delta.emplace_back(alphabet.size(), -1);
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (size_t a = 0; a < alphabet.size(); ++a) {
            std::set<int> next;
            for (auto [x, l, y] : n.edges)
                if (l == int(a) && sets[size_t(cur)].count(x)) next.insert(y);
            next = eps_closure(n, std::move(next));
            auto it = id.find(next);
            int tgt;
            if (it == id.end()) {
                tgt = int(sets.size());
                id[next] = tgt;
                sets.push_back(next);
                delta.emplace_back(alphabet.size(), -1);
                work.push(tgt);
            } else {
                tgt = it->second;
            }
            delta[size_t(cur)][a] = tgt;
        }
    }
    Dfa d;
    d.states = int(sets.size());
    d.alphabet = alphabet;
    d.delta = std::move(delta);
    d.initial = 0;
    d.accepting = Bitset(d.states);
    for (int i = 0; i < d.states; ++i)
        if (sets[size_t(i)].count(n.accept)) d.accepting.set(i);
    d.validate();
    return minimize(d);
}

Dfa minimize(const Dfa& d0) {
    d0.validate();
    // reachable part
    std::vector<int> order;
    std::vector<int> newid(size_t(d0.states), -1);
    std::queue<int> work;
    newid[size_t(d0.initial)] = 0;
    order.push_back(d0.initial);
    work.push(d0.initial);
    while (!work.empty()) {
        int s = work.front();
        work.pop();
        for (size_t a = 0; a < d0.alphabet.size(); ++a) {
            int t = d0.delta[size_t(s)][a];
            if (newid[size_t(t)] < 0) {
                newid[size_t(t)] = int(order.size());
                order.push_back(t);
                work.push(t);
            }
        }
    }
    // Moore partition refinement on the reachable part
    int n = int(order.size());
    std::vector<int> cls(size_t(n));
    for (int i = 0; i < n; ++i) cls[size_t(i)] = d0.accepting.test(order[size_t(i)]) ? 1 : 0;
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(size_t(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> key;
            key.push_back(cls[size_t(i)]);
            for (size_t a = 0; a < d0.alphabet.size(); ++a)
                key.push_back(cls[size_t(newid[size_t(d0.delta[size_t(order[size_t(i)])][a])])]);
            auto [it, fresh] = sig.emplace(key, int(sig.size()));
            next[size_t(i)] = it->second;
            (void)fresh;
        }
        if (next != cls) {
            changed = true;
            cls = next;
        }
    }
    int m = 1 + *std::max_element(cls.begin(), cls.end());
    // canonical renumbering by BFS over classes
    std::vector<int> canon(size_t(m), -1);
    int counter = 0;
    std::queue<int> bfs;
    canon[size_t(cls[0])] = counter++;
    bfs.push(cls[0]);
    std::vector<int> rep(size_t(m), -1);
    for (int i = n - 1; i >= 0; --i) rep[size_t(cls[size_t(i)])] = i;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop();
        for (size_t a = 0; a < d0.alphabet.size(); ++a) {
            int t = cls[size_t(newid[size_t(d0.delta[size_t(order[size_t(rep[size_t(c)])])][a])])];
            if (canon[size_t(t)] < 0) {
                canon[size_t(t)] = counter++;
                bfs.push(t);
            }
        }
    }
    Dfa d;
    d.states = m;
    d.alphabet = d0.alphabet;
    d.delta.assign(size_t(m), std::vector<int>(d0.alphabet.size(), 0));
    d.initial = canon[size_t(cls[0])];
    d.accepting = Bitset(m);
    for (int i = 0; i < n; ++i) {
        int c = canon[size_t(cls[size_t(i)])];
        for (size_t a = 0; a < d0.alphabet.size(); ++a)
            d.delta[size_t(c)][a] =
                canon[size_t(cls[size_t(newid[size_t(d0.delta[size_t(order[size_t(i)])][a])])])];
        if (d0.accepting.test(order[size_t(i)])) d.accepting.set(c);
    }
    d.validate();
    return d;
}

bool dfa_isomorphic(const Dfa& a, const Dfa& b) {
    if (a.states != b.states || a.alphabet != b.alphabet) return false;
    // both canonical-minimal: identical tables after minimize
    Dfa ma = minimize(a), mb = minimize(b);
    return ma.states == mb.states && ma.delta == mb.delta && ma.initial == mb.initial &&
           ma.accepting == mb.accepting;
}

SyntacticMonoid::SyntacticMonoid(const Dfa& d) : dfa_(minimize(d)) {
    int n = dfa_.states;
    std::map<std::vector<int>, int> id;
    std::vector<int> idf(size_t(n));
    for (int i = 0; i < n; ++i) idf[size_t(i)] = i;
    id[idf] = 0;
    func_.push_back(idf);
    witness_.push_back("");
    std::queue<int> work;
    work.push(0);
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (size_t a = 0; a < dfa_.alphabet.size(); ++a) {
            std::vector<int> nf(size_t(n));
            for (int i = 0; i < n; ++i)
                nf[size_t(i)] = dfa_.delta[size_t(func_[size_t(cur)][size_t(i)])][a];
            auto it = id.find(nf);
            if (it == id.end()) {
                int fresh = int(func_.size());
                id[nf] = fresh;
                func_.push_back(nf);
                witness_.push_back(witness_[size_t(cur)] + dfa_.alphabet[a]);
                work.push(fresh);
            }
        }
    }
    int m = int(func_.size());
    table_.assign(size_t(m), std::vector<int>(size_t(m), -1));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            std::vector<int> comp(size_t(n));
            for (int i = 0; i < n; ++i)
                comp[size_t(i)] = func_[size_t(y)][size_t(func_[size_t(x)][size_t(i)])];
            auto it = id.find(comp);
            if (it == id.end()) throw cross_check_error("transition monoid not closed");
            table_[size_t(x)][size_t(y)] = it->second;
        }
    unit_ = 0;
    image_ = Bitset(m);
    for (int x = 0; x < m; ++x)
        if (dfa_.accepting.test(func_[size_t(x)][size_t(dfa_.initial)])) image_.set(x);
}

int SyntacticMonoid::class_of(const std::string& word) const {
    int cur = unit_;
    for (char c : word) {
        // multiply by the letter's element
        std::string w(1, c);
        int letter = -1;
        for (int x = 0; x < size(); ++x)
            if (witness_[size_t(x)] == w) letter = x;
        if (letter < 0) {
            // letter elements always exist; find by function
            int n = dfa_.states;
            std::vector<int> lf(size_t(n));
            for (int i = 0; i < n; ++i)
                lf[size_t(i)] = dfa_.delta[size_t(i)][size_t(dfa_.letter_index(c))];
            for (int x = 0; x < size(); ++x)
                if (func_[size_t(x)] == lf) letter = x;
        }
        if (letter < 0) throw cross_check_error("letter element missing from monoid");
        cur = mult(cur, letter);
    }
    return cur;
}

OrderedMonoid SyntacticMonoid::as_monoid() const { return OrderedMonoid::discrete(table_, unit_); }

ResAlgebra SyntacticMonoid::powerset_algebra() const {
    return monoid_to_derivation(as_monoid());
}

Bitset language_left_residual(const SyntacticMonoid& syn, const Bitset& k, const Bitset& l) {
    int m = syn.size();
    Bitset r(m);
    for (int b = 0; b < m; ++b) {
        bool ok = true;
        for (int a = k.first(); ok && a >= 0; a = k.next(a)) ok = l.test(syn.mult(a, b));
        if (ok) r.set(b);
    }
    return r;
}

Bitset language_right_residual(const SyntacticMonoid& syn, const Bitset& l, const Bitset& k) {
    int m = syn.size();
    Bitset r(m);
    for (int b = 0; b < m; ++b) {
        bool ok = true;
        for (int a = k.first(); ok && a >= 0; a = k.next(a)) ok = l.test(syn.mult(b, a));
        if (ok) r.set(b);
    }
    return r;
}

namespace {

std::set<std::pair<int, int>> reachable_pairs(const Dfa& k, const Dfa& l) {
    if (k.alphabet != l.alphabet) throw std::invalid_argument("oracle: alphabet mismatch");
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> work;
    seen.emplace(k.initial, l.initial);
    work.emplace(k.initial, l.initial);
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop();
        for (size_t c = 0; c < k.alphabet.size(); ++c) {
            std::pair<int, int> nx{k.delta[size_t(a)][c], l.delta[size_t(b)][c]};
            if (seen.insert(nx).second) work.push(nx);
        }
    }
    return seen;
}

}  // namespace

bool oracle_Kv_subset_L(const Dfa& k, const Dfa& l, const std::string& v) {
    for (auto [a, b] : reachable_pairs(k, l))
        if (k.accepting.test(a) && !l.accepting.test(l.run(b, v))) return false;
    return true;
}

bool oracle_vK_subset_L(const Dfa& k, const Dfa& l, const std::string& v) {
    int lv = l.run(l.initial, v);
    // pairs reachable from (k initial, lv) by the same word
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> work;
    seen.emplace(k.initial, lv);
    work.emplace(k.initial, lv);
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop();
        if (k.accepting.test(a) && !l.accepting.test(b)) return false;
        for (size_t c = 0; c < k.alphabet.size(); ++c) {
            std::pair<int, int> nx{k.delta[size_t(a)][c], l.delta[size_t(b)][c]};
            if (seen.insert(nx).second) work.push(nx);
        }
    }
    return true;
}

LanguageIdeal residuation_ideal_of(const SyntacticMonoid& syn) {
    ResAlgebra alg = syn.powerset_algebra();
    LanguageIdeal out;
    out.ideal = residuation_ideal(alg, {syn.image_of_language()});
    // direct route: close { h[L] } under m \ X / m' and lattice operations
    std::set<Bitset> direct;
    direct.insert(Bitset(syn.size()));
    direct.insert(Bitset::full(syn.size()));
    direct.insert(syn.image_of_language());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> snap(direct.begin(), direct.end());
        for (const Bitset& x : snap) {
            for (const Bitset& y : snap) {
                if (direct.insert(x | y).second) grew = true;
                if (direct.insert(x & y).second) grew = true;
            }
            for (int m = 0; m < syn.size(); ++m) {
                Bitset sm = Bitset::singleton(syn.size(), m);
                if (direct.insert(language_left_residual(syn, sm, x)).second) grew = true;
                if (direct.insert(language_right_residual(syn, x, sm)).second) grew = true;
            }
        }
    }
    std::vector<Bitset> direct_sorted(direct.begin(), direct.end());
    std::sort(direct_sorted.begin(), direct_sorted.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    if (direct_sorted != out.ideal)
        throw cross_check_error("residuation ideal: generic closure and direct closure differ");
    out.algebra = ideal_as_algebra(alg, out.ideal);
    return out;
}

GammaReport gamma_of_language(const SyntacticMonoid& syn) {
    GammaReport g;
    int m = syn.size();
    const Bitset& l = syn.image_of_language();
    g.formula = Bitset(m * m);
    for (int v = 0; v < m; ++v) {
        Bitset res = language_left_residual(syn, Bitset::singleton(m, v), l);
        res.for_each([&](int w) { g.formula.set(v * m + w); });
    }
    g.adjoint = Bitset(m * m);
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
            if (l.test(syn.mult(v, w))) g.adjoint.set(v * m + w);
    g.equal = g.formula == g.adjoint;
    if (!g.equal)
        throw cross_check_error("gamma(L): formula route and mu-adjoint route disagree");
    return g;
}

std::vector<std::string> words_upto(const std::string& alphabet, int maxlen) {
    std::vector<std::string> out{""};
    size_t lo = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (char c : alphabet) out.push_back(out[i] + c);
        lo = hi;
    }
    return out;
}

}  // namespace findual
