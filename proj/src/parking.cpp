#include "ratshuffle/parking.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ratshuffle {

namespace {

void require_coprime(int m, int n, const char* where) {
    if (m <= 0 || n <= 0)
        throw std::invalid_argument(std::string(where) + ": m and n must be positive");
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument(std::string(where) + ": m and n must be coprime");
}

}  // namespace

bool DyckPath::cell_under_diagonal(int m, int n, int row, int col) {
    return static_cast<long long>(n) * (col + 1) + static_cast<long long>(m) * (row + 1) <=
           static_cast<long long>(m) * n;
}

int DyckPath::max_row_length(int m, int n, int row) {
    if (row >= n - 1) return 0;
    return static_cast<int>((static_cast<long long>(m) * (n - 1 - row)) / n);
}

DyckPath::DyckPath(int m, int n, Partition shape)
    : m_(m), n_(n), shape_(std::move(shape)) {
    require_coprime(m_, n_, "dyck path");
    if (shape_.rows() > n_)
        throw std::invalid_argument("dyck path: more than n rows");
    for (int r = 0; r < shape_.rows(); ++r)
        if (!cell_under_diagonal(m_, n_, r, shape_.row(r) - 1))
            throw std::invalid_argument("dyck path: shape crosses the diagonal");
}

ParkingFunction::ParkingFunction(int m, int n, std::vector<int> values)
    : m_(m), n_(n), values_(std::move(values)) {
    require_coprime(m_, n_, "parking function");
    if (static_cast<int>(values_.size()) != n_)
        throw std::invalid_argument("parking function: need exactly n values");
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (int v : sorted)
        if (v < 0) throw std::invalid_argument("parking function: values must be >= 0");
    // The sorted diagram must fit under the diagonal.
    for (int r = 0; r < n_; ++r)
        if (sorted[r] > 0 && !DyckPath::cell_under_diagonal(m_, n_, r, sorted[r] - 1))
            throw std::invalid_argument("parking function: diagram crosses the diagonal");
}

long long ParkingFunction::sum() const {
    long long s = 0;
    for (int v : values_) s += v;
    return s;
}

std::vector<DyckPath> enumerate_dyck_paths(int m, int n) {
    require_coprime(m, n, "enumerate_dyck_paths");
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int row, int maxlen) -> void {
        shapes.push_back(cur);
        if (row >= n) return;
        int cap = std::min(maxlen, DyckPath::max_row_length(m, n, row));
        for (int len = cap; len >= 1; --len) {
            cur.push_back(len);
            self(self, row + 1, len);
            cur.pop_back();
        }
    };
    gen(gen, 0, m);
    // Size ascending (area descending), then lexicographic on row lengths.
    std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
        long long sa = std::accumulate(a.begin(), a.end(), 0LL);
        long long sb = std::accumulate(b.begin(), b.end(), 0LL);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<DyckPath> out;
    out.reserve(shapes.size());
    for (auto& s : shapes) out.emplace_back(m, n, Partition(std::move(s)));
    return out;
}

std::vector<ParkingFunction> parking_functions_on_path(const DyckPath& D) {
    std::vector<int> values(D.n(), 0);
    for (int r = 0; r < D.shape().rows(); ++r) values[r] = D.shape().row(r);
    std::sort(values.begin(), values.end());
    std::vector<ParkingFunction> out;
    do {
        out.emplace_back(D.m(), D.n(), values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

std::vector<ParkingFunction> enumerate_parking_functions(int m, int n) {
    std::vector<ParkingFunction> out;
    for (const DyckPath& D : enumerate_dyck_paths(m, n)) {
        std::vector<ParkingFunction> group = parking_functions_on_path(D);
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

DyckPath path_of(const ParkingFunction& f) {
    std::vector<int> sorted = f.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return DyckPath(f.m(), f.n(), Partition(std::move(sorted)));
}

BetaSet delta_from_path(const DyckPath& D) {
    int m = D.m(), n = D.n();
    WeightGrid grid{m, n, 1 - D.area()};
    std::vector<long long> excluded;  // weights of under-diagonal cells not in D
    for (int r = 0; r < n; ++r)
        for (int c = D.shape().row(r); DyckPath::cell_under_diagonal(m, n, r, c); ++c)
            excluded.push_back(grid.label(r, c));
    long long tail = grid.min_weight;
    for (long long w : excluded) tail = std::max(tail, w + 1);
    std::vector<long long> members;
    std::sort(excluded.begin(), excluded.end());
    for (long long x = grid.min_weight; x < tail; ++x)
        if (!std::binary_search(excluded.begin(), excluded.end(), x)) members.push_back(x);
    BetaSet delta = BetaSet::from_members_with_tail(std::move(members), tail);
    assert(delta.min_member() == grid.min_weight);
    assert(delta.is_invariant_under(m) && delta.is_invariant_under(n));
    return delta;
}

Partition core_of_path(const DyckPath& D) {
    Partition core = partition_from_beta(delta_from_path(D));
    assert(is_m_core(core, D.m()) && is_m_core(core, D.n()));
    return core;
}

DyckPath path_of_core(const Partition& core, int m, int n) {
    require_coprime(m, n, "path_of_core");
    if (!is_m_core(core, m) || !is_m_core(core, n))
        throw std::invalid_argument("path_of_core: not a simultaneous (m,n)-core");
    BetaSet delta = beta_from_partition(core);
    WeightGrid grid{m, n, delta.min_member()};
    std::vector<int> lens;
    for (int r = 0; r < n; ++r) {
        int len = 0;
        while (DyckPath::cell_under_diagonal(m, n, r, len) &&
               delta.contains(grid.label(r, len)))
            ++len;
        // Members give left-justified rows: nothing in delta beyond the cut.
        for (int c = len; DyckPath::cell_under_diagonal(m, n, r, c); ++c)
            assert(!delta.contains(grid.label(r, c)));
        if (len > 0) lens.push_back(len);
    }
    DyckPath D(m, n, Partition(std::move(lens)));
    assert(D.area() == 1 - grid.min_weight);
    return D;
}

ParkingFunction anderson(const AffinePermutation& w, int m) {
    int n = w.period();
    require_coprime(m, n, "anderson");
    if (!is_m_stable(w, m))
        throw std::invalid_argument("anderson: permutation is not m-stable");
    BetaSet delta = delta_set(w);
    WeightGrid grid{m, n, delta.min_member()};
    std::vector<int> values(n, -1);
    long long delta_stat = static_cast<long long>(m - 1) * (n - 1) / 2;
    long long sum = 0;
    for (int r = 0; r < n; ++r) {
        int len = 0;
        while (DyckPath::cell_under_diagonal(m, n, r, len) &&
               delta.contains(grid.label(r, len)))
            ++len;
        long long a = grid.label(r, len - 1);  // rightmost box, col -1 for empty rows
        long long label = w(a);
        assert(label >= 1 && label <= n);
        assert(values[label - 1] == -1);
        values[label - 1] = len;
        sum += len;
    }
    // area three ways: 1 - min, delta - sum of values.
    assert(delta_stat - sum == 1 - grid.min_weight);
    return ParkingFunction(m, n, std::move(values));
}

namespace {

// Row labels of the standard tableau of f: rows of equal length form a column
// of appended boxes whose labels decrease from bottom to top, so the sorted
// row lengths take the arguments of that value in decreasing order.
std::vector<int> row_labels(const ParkingFunction& f, const std::vector<int>& sorted_lens) {
    int n = f.n();
    std::vector<int> labels(n, 0);
    for (int r = 0; r < n;) {
        int len = sorted_lens[r];
        int r2 = r;
        std::vector<int> args;
        for (int a = n; a >= 1; --a)
            if (f(a) == len) args.push_back(a);
        while (r2 < n && sorted_lens[r2] == len) ++r2;
        assert(static_cast<int>(args.size()) == r2 - r);
        for (int i = r; i < r2; ++i) labels[i] = args[i - r];
        r = r2;
    }
    return labels;
}

}  // namespace

AffinePermutation anderson_inverse(const ParkingFunction& f) {
    int m = f.m(), n = f.n();
    DyckPath D = path_of(f);
    WeightGrid grid{m, n, 1 - D.area()};
    std::vector<int> sorted_lens(n, 0);
    for (int r = 0; r < D.shape().rows(); ++r) sorted_lens[r] = D.shape().row(r);
    std::vector<int> labels = row_labels(f, sorted_lens);
    std::vector<long long> gens(n);
    for (int r = 0; r < n; ++r) gens[r] = grid.label(r, sorted_lens[r] - 1);
    AffinePermutation w = permutation_from_generator_values(gens, labels, n);
    assert(is_m_stable(w, m));
    return w;
}

std::vector<int> diagonal_word(const ParkingFunction& f) {
    int m = f.m(), n = f.n();
    DyckPath D = path_of(f);
    WeightGrid grid{m, n, 1 - D.area()};
    std::vector<int> sorted_lens(n, 0);
    for (int r = 0; r < D.shape().rows(); ++r) sorted_lens[r] = D.shape().row(r);
    std::vector<int> labels = row_labels(f, sorted_lens);
    std::vector<std::pair<long long, int>> by_weight;
    for (int r = 0; r < n; ++r)
        by_weight.emplace_back(grid.label(r, sorted_lens[r] - 1), labels[r]);
    std::sort(by_weight.begin(), by_weight.end());
    std::vector<int> word;
    word.reserve(n);
    for (auto& [weight, label] : by_weight) word.push_back(label);
    return word;
}

std::set<int> ides(const ParkingFunction& f) {
    std::vector<int> dw = diagonal_word(f);
    int n = f.n();
    std::vector<int> inv(n, 0);
    for (int k = 0; k < n; ++k) inv[dw[k] - 1] = k + 1;
    std::set<int> des;
    for (int k = 1; k < n; ++k)
        if (inv[k - 1] > inv[k]) des.insert(k);
    return des;
}

}  // namespace ratshuffle
