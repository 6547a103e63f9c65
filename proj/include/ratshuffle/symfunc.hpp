#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ratshuffle/partition.hpp"

namespace ratshuffle {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in q and t with exact integer coefficients; single
// variable use keeps the q exponent at zero.  Zero coefficients are never
// stored.
class CoeffPoly {
public:
    CoeffPoly() = default;
    static CoeffPoly constant(BigInt c);
    static CoeffPoly one() { return constant(1); }
    static CoeffPoly monomial(int q_exp, int t_exp, BigInt c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool nonnegative() const;
    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

    void add_term(int q_exp, int t_exp, const BigInt& c);
    CoeffPoly& operator+=(const CoeffPoly& other);
    CoeffPoly& operator-=(const CoeffPoly& other);
    CoeffPoly times(const BigInt& c) const;
    CoeffPoly shifted(int q_exp, int t_exp) const;  // multiply by q^a t^b
    CoeffPoly with_qt_swapped() const;

    bool operator==(const CoeffPoly&) const = default;

private:
    std::map<std::pair<int, int>, BigInt> terms_;
};

// Partition order used everywhere partitions are listed: (n) first, (1^n)
// last; the first differing part decides.  This refines dominance.
struct RevLexGreater {
    bool operator()(const Partition& a, const Partition& b) const;
};

// Homogeneous degree-n polynomial in z_1..z_N stored monomial by monomial.
class MonomialVector {
public:
    MonomialVector(int degree, int nvars) : degree_(degree), nvars_(nvars) {}

    int degree() const { return degree_; }
    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, CoeffPoly>& coeffs() const { return coeffs_; }

    void add(const std::vector<int>& exponents, const CoeffPoly& c);
    // Accumulate other scaled by q^a t^b.
    void add_scaled(const MonomialVector& other, int q_exp, int t_exp);
    CoeffPoly coeff(const std::vector<int>& exponents) const;
    // Sum of all coefficients with q = t = 1 (total monomial mass).
    BigInt total_mass() const;

    bool operator==(const MonomialVector&) const = default;

private:
    int degree_ = 0;
    int nvars_ = 0;
    std::map<std::vector<int>, CoeffPoly> coeffs_;
};

// Finite Schur expansion of a degree-n symmetric polynomial.
class SchurExpansion {
public:
    explicit SchurExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, CoeffPoly, RevLexGreater>& coeffs() const { return coeffs_; }

    void add(const Partition& lam, const CoeffPoly& c);
    CoeffPoly coeff(const Partition& lam) const;
    SchurExpansion shifted(int q_exp, int t_exp) const;
    SchurExpansion with_qt_swapped() const;
    SchurExpansion& operator+=(const SchurExpansion& other);

    bool operator==(const SchurExpansion&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, CoeffPoly, RevLexGreater> coeffs_;
};

// All partitions of n, listed (n) first.
std::vector<Partition> partitions_of(int n);

// Gessel fundamental quasisymmetric function Q_S truncated to N variables:
// sum of z_{i_1}...z_{i_n} over 1 <= i_1 <= ... <= i_n <= N with i_k < i_{k+1}
// forced exactly when k is in S.
MonomialVector gessel_fundamental(const std::set<int>& S, int n, int N);

// True iff the coefficients are constant on permutation orbits of the
// exponent vectors.
bool is_symmetric(const MonomialVector& v);

// Number of semistandard Young tableaux of shape lam and content mu, by
// enumeration of the horizontal-strip chains; memoized.
long long kostka(const Partition& lam, const Partition& mu);

// Unique expansion v = sum a_lam s_lam, solved along the unitriangular Kostka
// system; requires is_symmetric(v) and N >= degree.  The result is re-expanded
// and compared with v before returning.
SchurExpansion to_schur(const MonomialVector& v);

// Independent Schur-to-monomial expander built on kostka.
MonomialVector schur_to_monomials(const SchurExpansion& e, int N);

// Omega involution: transposes every index partition; on descent sets it is
// complementation inside {1..n-1}.
SchurExpansion omega_involution(const SchurExpansion& e);
std::set<int> omega_on_descents(const std::set<int>& S, int n);

bool is_schur_positive(const SchurExpansion& e);

}  // namespace ratshuffle
