#pragma once

#include <set>
#include <vector>

#include "ratshuffle/partition.hpp"

namespace ratshuffle {

// Element of the affine symmetric group on period n, stored as the window
// (w(1), ..., w(n)).  The defining relation w(x+n) = w(x)+n extends the
// window to all of Z; the normalization sum w(1..n) = n(n+1)/2 is enforced.
class AffinePermutation {
public:
    AffinePermutation(int n, std::vector<long long> window);
    static AffinePermutation identity(int n);

    int period() const { return n_; }
    const std::vector<long long>& window() const { return window_; }
    long long operator()(long long x) const;
    AffinePermutation inverse() const;

    bool operator==(const AffinePermutation&) const = default;

private:
    int n_ = 0;
    std::vector<long long> window_;
};

// True iff w(x+m) > w(x) for all x, i.e. w has no inversions of height m.
bool is_m_stable(const AffinePermutation& w, int m);

// The set {x : w(x) > 0} as a balanced beta set; invariant under +n, and
// under +m as well when w is m-stable.
BetaSet delta_set(const AffinePermutation& w);

// Minimal member of each residue class mod n, ascending; requires the set to
// be invariant under +n.
std::vector<long long> n_generators(const BetaSet& D, int n);

// area(w) = 1 - min(delta_set(w)); requires w m-stable and gcd(m, n) = 1.
long long area(const AffinePermutation& w, int m);

// dinv(w) = (m-1)(n-1)/2 minus the number of inversions (i, j) with
// 1 <= i <= n, i < j < i+m, w(i) > w(j); requires m-stability, gcd(m, n) = 1.
long long dinv(const AffinePermutation& w, int m);

// Descents of the word w^{-1}(1) ... w^{-1}(n), as a subset of [1, n-1].
std::set<int> descents_of_inverse(const AffinePermutation& w);

// All m-stable w with delta_set(w) == D.  Assigning the values {1..n} to the
// n-generators determines w; m-stability is exactly the constraint that a
// generator pair b, b+m carries increasing values.  Output is ordered
// lexicographically by the value assignment along ascending generators.
std::vector<AffinePermutation> enumerate_m_stable_fiber(const BetaSet& D, int m, int n);

// w determined by w(generators[i]) = values[i]; generators must hit every
// residue class mod n exactly once and values must be {1..n}.
AffinePermutation permutation_from_generator_values(
    const std::vector<long long>& generators, const std::vector<int>& values, int n);

}  // namespace ratshuffle
