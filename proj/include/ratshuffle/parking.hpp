#pragma once

#include <set>
#include <vector>

#include "ratshuffle/affine.hpp"
#include "ratshuffle/partition.hpp"

namespace ratshuffle {

// Young diagram fitting under the diagonal of the n x m rectangle (width m,
// height n): every cell (row r, col c) satisfies n(c+1) + m(r+1) <= mn.
class DyckPath {
public:
    DyckPath(int m, int n, Partition shape);

    int m() const { return m_; }
    int n() const { return n_; }
    const Partition& shape() const { return shape_; }
    long long delta() const { return static_cast<long long>(m_ - 1) * (n_ - 1) / 2; }
    long long area() const { return delta() - shape_.size(); }

    static bool cell_under_diagonal(int m, int n, int row, int col);
    // Largest admissible length of the given row, floor(m(n-1-row)/n).
    static int max_row_length(int m, int n, int row);

    bool operator==(const DyckPath&) const = default;

private:
    int m_ = 0, n_ = 0;
    Partition shape_;
};

// f : {1..n} -> Z_{>=0} whose sorted values form a valid m/n-Dyck path.
class ParkingFunction {
public:
    ParkingFunction(int m, int n, std::vector<int> values);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int a) const { return values_[a - 1]; }
    long long sum() const;

    bool operator==(const ParkingFunction&) const = default;

private:
    int m_ = 0, n_ = 0;
    std::vector<int> values_;
};

// Labels the plane so that the boxes under the diagonal carry the weights
// [min_weight, ...]; row/column steps change the label by -m and -n.
struct WeightGrid {
    int m = 0;
    int n = 0;
    long long min_weight = 0;

    long long label(long long row, long long col) const {
        return static_cast<long long>(m) * n - m - n + min_weight - m * row - n * col;
    }
};

// All m/n-Dyck paths, sorted by size (area descending) then lexicographically
// by parts.  Requires gcd(m,n) = 1.
std::vector<DyckPath> enumerate_dyck_paths(int m, int n);

// All m/n-parking functions, grouped path by path in enumeration order, each
// group listed in lexicographic value order.
std::vector<ParkingFunction> enumerate_parking_functions(int m, int n);

// Parking functions whose underlying path is D (the distinct rearrangements
// of the padded row-length multiset), in lexicographic value order.
std::vector<ParkingFunction> parking_functions_on_path(const DyckPath& D);

// Underlying path: values sorted decreasingly.
DyckPath path_of(const ParkingFunction& f);

// The (m,n)-invariant balanced set [M, oo) minus the weights of the
// under-diagonal cells outside D, where M = 1 - area(D).
BetaSet delta_from_path(const DyckPath& D);

// Mutually inverse bijection between m/n-Dyck paths and simultaneous
// (m,n)-cores, through delta_from_path and the Maya correspondence.
Partition core_of_path(const DyckPath& D);
DyckPath path_of_core(const Partition& core, int m, int n);

// Anderson map: m-stable affine permutation -> parking function.  The path
// is cut out of the weight grid by delta_set(w); row i of length len gets the
// argument w(a_i) where a_i is the weight of its rightmost box (the column -1
// box for empty rows).
ParkingFunction anderson(const AffinePermutation& w, int m);

// Inverse of the Anderson map; total on parking functions.
AffinePermutation anderson_inverse(const ParkingFunction& f);

// Row labels of the standard-tableau picture of f read in increasing
// generator weight; a permutation of {1..n}.  Computed from f and the weight
// grid alone, without building the affine permutation.
std::vector<int> diagonal_word(const ParkingFunction& f);

// Descent set of diagonal_word(f)^{-1}.
std::set<int> ides(const ParkingFunction& f);

}  // namespace ratshuffle
