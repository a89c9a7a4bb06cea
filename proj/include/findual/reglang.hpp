#pragma once

#include <string>

#include "findual/monoid.hpp"

namespace findual {

/// Complete DFA over a small alphabet of letters.
struct Dfa {
    int states = 0;
    std::string alphabet;                  // distinct letters, index = column
    std::vector<std::vector<int>> delta;   // delta[state][letter index]
    int initial = 0;
    Bitset accepting;

    void validate() const;
    int letter_index(char c) const;
    int run(int from, const std::string& word) const;
    bool accepts(const std::string& word) const;
};

/// Thompson construction + subset construction; '|' union, juxtaposition
/// concatenation, '*' star, '+' plus, '?' option, '()' grouping, '0' the empty
/// language, '1' the empty word.
Dfa regex_to_dfa(const std::string& pattern, const std::string& alphabet);

/// Language-equivalent minimal DFA: unreachable states removed, equivalent
/// states merged, states renumbered by BFS discovery order (canonical form).
Dfa minimize(const Dfa& d);

bool dfa_isomorphic(const Dfa& a, const Dfa& b);

/// Transition monoid of the minimal DFA, with shortest word witnesses and the
/// image of the language.
class SyntacticMonoid {
public:
    explicit SyntacticMonoid(const Dfa& d);  // minimizes internally

    const Dfa& minimal_dfa() const { return dfa_; }
    int size() const { return int(table_.size()); }
    int unit() const { return unit_; }
    int mult(int a, int b) const { return table_[size_t(a)][size_t(b)]; }
    const std::string& witness(int m) const { return witness_[size_t(m)]; }
    const Bitset& image_of_language() const { return image_; }
    int class_of(const std::string& word) const;

    /// As a discrete ordered monoid (the Boolean/CABA instantiation).
    OrderedMonoid as_monoid() const;

    /// The derivation algebra on the powerset of the monoid.
    ResAlgebra powerset_algebra() const;

private:
    Dfa dfa_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> func_;  // element -> state function
    std::vector<std::string> witness_;
    int unit_ = 0;
    Bitset image_;
};

/// Set residuals inside the monoid: K \ L = { b | K b <= L }, L / K = { b | b K <= L }.
Bitset language_left_residual(const SyntacticMonoid& syn, const Bitset& k, const Bitset& l);
Bitset language_right_residual(const SyntacticMonoid& syn, const Bitset& l, const Bitset& k);

/// Exact word-level oracle for K v <= L (K, L given as DFAs over the same
/// alphabet), via the reachable pair set of the product automaton.
bool oracle_Kv_subset_L(const Dfa& k, const Dfa& l, const std::string& v);
/// Same for v K <= L.
bool oracle_vK_subset_L(const Dfa& k, const Dfa& l, const std::string& v);

struct LanguageIdeal {
    std::vector<Bitset> ideal;   // subsets of the syntactic monoid, canonical order
    IdealAlgebra algebra;        // the ideal as a residuation algebra
};

/// The finite residuation ideal generated by the language image inside the
/// powerset algebra of Syn_L; cross-checked against the generic closure.
LanguageIdeal residuation_ideal_of(const SyntacticMonoid& syn);

struct GammaReport {
    Bitset formula;  // join over classes [v] of [v] (x) ([v] \ L), as a subset of Syn^2
    Bitset adjoint;  // mu-adjoint route { (m, n) | m n in h[L] }
    bool equal = false;
};

/// The comultiplication at L, both routes; disagreement throws.
GammaReport gamma_of_language(const SyntacticMonoid& syn);

/// All words over the alphabet with length <= maxlen (shortlex order).
std::vector<std::string> words_upto(const std::string& alphabet, int maxlen);

}  // namespace findual
