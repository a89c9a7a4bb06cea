#pragma once

#include <optional>

#include "findual/op.hpp"

namespace findual {

/// Finite residuation algebra in canonical form. Internally carried by the
/// multiplication prime table mu(p, q) (a join-bilinear (2,1) operator); the
/// residuals, the comultiplication and the counit are all derived views:
///   y <= x \ z  iff  mu(x (x) y) <= z  iff  x <= z / y  iff  x (x) y <= gamma(z).
class ResAlgebra {
public:
    ResAlgebra() = default;

    /// From the multiplication prime table (validated monotone).
    ResAlgebra(FiniteDistLattice lat, std::vector<std::vector<Bitset>> mu_primes,
               std::optional<Bitset> unit = std::nullopt);

    /// From full residual tables over the canonical element enumeration;
    /// validates the residuation property and the semilattice-morphism
    /// conditions of both residuals (witnesses in the error message), then
    /// cross-checks the derived mu table against the given residuals.
    static ResAlgebra from_residual_tables(const FiniteDistLattice& lat,
                                           const std::vector<std::vector<int>>& lres,
                                           const std::vector<std::vector<int>>& rres);

    const FiniteDistLattice& lattice() const { return lat_; }
    const Poset& base() const { return lat_.base(); }

    const Bitset& mu_prime(int p, int q) const { return mu_[size_t(p)][size_t(q)]; }
    Bitset mu(const Bitset& x, const Bitset& y) const;
    /// Multiplication applied to a tensor-square element.
    Bitset mu_tensor(const Bitset& t) const;

    /// x \ z = { q | mu(x, down q) <= z }  (a downset).
    Bitset lres(const Bitset& x, const Bitset& z) const;
    /// z / y = { p | mu(down p, y) <= z }.
    Bitset rres(const Bitset& z, const Bitset& y) const;

    /// Adjoint route: gamma(z) = largest T with mu(T) <= z = {(p,q) | mu(p,q) <= z}.
    Bitset gamma_adjoint(const Bitset& z) const;
    /// Formula route: gamma(z) = join over primes p of p (x) (p \ z).
    Bitset gamma_formula(const Bitset& z) const;
    /// Both routes, cross-asserted.
    Bitset gamma(const Bitset& z) const;

    /// The multiplication as a (2,1) operator.
    Operator mu_operator() const;

    /// Unit handling. find_unit searches all elements (size-guarded) and
    /// asserts uniqueness; unit() returns the cached/found unit if any.
    std::optional<Bitset> find_unit(long long limit = 1 << 16) const;
    const std::optional<Bitset>& declared_unit() const { return unit_; }

    bool operator==(const ResAlgebra& o) const {
        return mu_ == o.mu_ && lat_.same_as(o.lat_);
    }

private:
    FiniteDistLattice lat_;
    std::vector<std::vector<Bitset>> mu_;
    std::optional<Bitset> unit_;
};

/// Comultiplication in element-table form (for enumerable lattices).
struct Comonoid {
    FiniteDistLattice lattice;
    std::vector<Bitset> elements;      // canonical enumeration
    std::vector<Bitset> gamma_table;   // per element, a downset of base^2
    std::optional<Bitset> counit_left_adjoint;  // the unit element, when counital
};

/// gamma via the join-prime formula; counit = right adjoint of the unit when
/// one exists.
Comonoid gamma_from_residuals(const ResAlgebra& r);

/// Residuals via tensor implication: x \ z = limp(x, gamma(z)), z / y = rimp(gamma(z), y).
ResAlgebra residuals_from_gamma(const Comonoid& c);

struct ResFlags {
    bool pure = false;
    bool associative = false;
    bool unital = false;
    bool prime_unital = false;
    bool derivation = false;
    bool join_preserving_at_primes = false;
    bool operator==(const ResFlags&) const = default;
};

/// Classification with every equivalent characterization computed
/// independently and cross-asserted:
///  pure: gamma join-preserving  ==  residuals join-preserving at primes (all
///        three fin-op-equiv routes)  ==  mu maps prime pairs to primes;
///  associative: residual equation x\(z/y) = (x\z)/y  ==  mu associativity on
///        prime triples;
///  derivation = pure and associative and prime-unital.
ResFlags classify(const ResAlgebra& r);

/// Least sublattice containing seed that is closed under derivatives z\x, x/z
/// for arbitrary z (prime divisors suffice given meet closure). Returns the
/// canonical sorted element list.
std::vector<Bitset> residuation_ideal(const ResAlgebra& r, const std::vector<Bitset>& seed);

/// The ideal as a residuation algebra in its own right (canonicalized).
struct IdealAlgebra {
    ResAlgebra algebra;
    std::vector<Bitset> ideal_elements;   // elements of r's lattice, canonical order
    std::vector<Bitset> to_canonical;     // ideal element -> element of algebra.lattice()
};
IdealAlgebra ideal_as_algebra(const ResAlgebra& r, const std::vector<Bitset>& ideal);

/// Residuation morphisms between prime-unital algebras. Checks the (Open)
/// equations and, independently, Forth/Back/Back'/Unit with witness search;
/// disagreement is a hard failure.
bool is_residuation_morphism(const ResAlgebra& r, const ResAlgebra& s, const LatticeHom& f);

/// Pure coalgebra morphism: (f (x) f) . gamma = gamma' . f plus counit
/// compatibility; cross-asserted against is_residuation_morphism per the
/// morphism-translation proposition.
bool is_pure_coalgebra_morphism(const ResAlgebra& r, const ResAlgebra& s, const LatticeHom& f);

/// Corelational morphism rho: join- and top-preserving with
/// rho(x\z) <= rho(x)\rho(z) and e' <= rho(e); checked directly and via the
/// comonoid lax square, cross-asserted.
bool is_corelational_morphism(const ResAlgebra& r, const ResAlgebra& s, const JoinMap& rho);

/// All residuation algebras on the given lattice, enumerated as monotone mu
/// prime tables.
std::vector<ResAlgebra> enumerate_res_algebras(const FiniteDistLattice& lat);

/// Independent enumeration route: count left-residual tables satisfying the
/// semilattice-morphism invariants directly (no mu involved).
long long count_res_algebras_via_residual_tables(const FiniteDistLattice& lat);

}  // namespace findual
