#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "ratshuffle/affine.hpp"
#include "ratshuffle/partition.hpp"

namespace ratshuffle {

// Standard m-ribbon tableau: an ordered sequence of ribbon moves whose replay
// from beta_from_partition(base) stays inside valid partitions at every
// prefix.  The move order is the tableau order, its contents form c(T).
struct StandardRibbonTableau {
    Partition base;                  // inner shape lambda
    SkewShape shape;                 // nu = outer \ base
    std::vector<RibbonMove> ribbons; // in tableau order

    std::vector<long long> contents() const;
    bool operator==(const StandardRibbonTableau&) const = default;
};

// Same tiling with a weakly increasing level function tau along the standard
// order (ties must carry increasing contents).
struct SemistandardRibbonTableau {
    Partition base;
    std::vector<RibbonMove> tiling;  // one record per ribbon
    std::vector<int> tau;            // level of each ribbon, parallel to tiling

    bool operator==(const SemistandardRibbonTableau&) const = default;
};

// The construction tying a balanced (m,n)-invariant set D to the skew shape
// carrying its ribbon tableaux: lambda is the simultaneous core of D, mu is
// read from D with every n-generator jumped left by m, and nu = mu \ lambda
// with |nu| = mn.
std::tuple<Partition, Partition, SkewShape> construct_shapes(const BetaSet& D, int m, int n);

// Replays the jumps w^{-1}(1), ..., w^{-1}(n) (all n-generators of the delta
// set) and records them; the content sequence is (w^{-1}(k) - 1).
StandardRibbonTableau tableau_of(const AffinePermutation& w, int m);

// Inverse of tableau_of: the k-th moved element is w^{-1}(k).
AffinePermutation permutation_of(const StandardRibbonTableau& T, int m, int n);

// All standard m-ribbon tableaux on the shape of D, i.e. all valid jump
// orders, emitted in lexicographic order of the moved elements.
std::vector<StandardRibbonTableau> enumerate_srt(const BetaSet& D, int m, int n);

// The unique fiber element whose jump order is increasing.
AffinePermutation omega0_of(const BetaSet& D, int m, int n);

// Sum of (height - 1) over the ribbons, computed from the recorded moves.
int spin(const StandardRibbonTableau& T);

// Same statistic from the reconstructed cell geometry (rows spanned per
// ribbon); must always agree with spin().
int spin_geometric(const StandardRibbonTableau& T);

// Cells (row, col) of each ribbon, reconstructed by replaying the moves.
std::vector<std::vector<std::pair<int, int>>> ribbon_cells(const StandardRibbonTableau& T);

// True iff every ribbon starts (at its highest-content cell) from the
// leftmost box of its row within the tiled region.
bool is_official_vertical_strip(const StandardRibbonTableau& T);

// Descents of the content sequence, as a subset of [1, n-1].
std::set<int> content_descents(const StandardRibbonTableau& T);

// Sorts the ribbons by (tau, content) and replays; throws if the result is
// not a valid standard tableau.
StandardRibbonTableau standardize(const SemistandardRibbonTableau& S);

// All semistandard tableaux with values in {1..N} standardizing to T: level
// functions weakly increasing along the tableau order, strictly increasing
// across content descents.
std::vector<SemistandardRibbonTableau> enumerate_fiber_ssrt(const StandardRibbonTableau& T,
                                                            int N);

}  // namespace ratshuffle
