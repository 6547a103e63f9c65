#include "ratshuffle/ribbon.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ratshuffle {

std::vector<long long> StandardRibbonTableau::contents() const {
    std::vector<long long> c;
    c.reserve(ribbons.size());
    for (const RibbonMove& r : ribbons) c.push_back(r.content);
    return c;
}

std::tuple<Partition, Partition, SkewShape> construct_shapes(const BetaSet& D, int m, int n) {
    if (std::gcd(static_cast<long long>(m), static_cast<long long>(n)) != 1)
        throw std::invalid_argument("construct_shapes: m and n must be coprime");
    if (!D.is_invariant_under(m) || !D.is_invariant_under(n))
        throw std::invalid_argument("construct_shapes: set is not (m,n)-invariant");
    Partition lambda = partition_from_beta(D);
    std::vector<long long> gens = n_generators(D, n);
    // Every generator jumps left by m at once; the set-level result does not
    // depend on the order.
    std::vector<long long> members;
    long long tail = D.tail_start();
    for (long long g : gens) tail = std::max(tail, g + 1);
    // Every x >= tail lies in D and past all generators, hence stays a member.
    for (long long x = D.min_member() - m; x < tail; ++x) {
        bool gen = std::binary_search(gens.begin(), gens.end(), x);
        bool target = std::binary_search(gens.begin(), gens.end(), x + m);
        if ((D.contains(x) && !gen) || target) members.push_back(x);
    }
    Partition mu = partition_from_beta(
        BetaSet::from_members_with_tail(std::move(members), tail));
    assert(m_core(mu, m) == lambda);
    SkewShape nu(mu, lambda);
    assert(nu.size() == static_cast<long long>(m) * n);
    return {std::move(lambda), std::move(mu), std::move(nu)};
}

StandardRibbonTableau tableau_of(const AffinePermutation& w, int m) {
    int n = w.period();
    if (!is_m_stable(w, m))
        throw std::invalid_argument("tableau_of: permutation is not m-stable");
    BetaSet current = delta_set(w);
    Partition lambda = partition_from_beta(current);
    AffinePermutation inv = w.inverse();
    StandardRibbonTableau T;
    T.base = lambda;
    T.ribbons.reserve(n);
    for (int k = 1; k <= n; ++k) {
        auto [next, move] = apply_jump(current, inv.window()[k - 1], m);
        current = std::move(next);
        T.ribbons.push_back(move);
    }
    T.shape = SkewShape(partition_from_beta(current), lambda);
    assert(T.shape.size() == static_cast<long long>(m) * n);
    return T;
}

AffinePermutation permutation_of(const StandardRibbonTableau& T, int m, int n) {
    if (static_cast<int>(T.ribbons.size()) != n)
        throw std::invalid_argument("permutation_of: tableau must have n ribbons");
    BetaSet current = beta_from_partition(T.base);
    std::vector<long long> gens = n_generators(current, n);
    std::vector<long long> moved;
    for (const RibbonMove& r : T.ribbons) {
        current = apply_jump(current, r.element, m).first;  // validates the replay
        moved.push_back(r.element);
    }
    std::vector<long long> sorted_moved = moved;
    std::sort(sorted_moved.begin(), sorted_moved.end());
    if (sorted_moved != gens)
        throw std::invalid_argument("permutation_of: moved elements are not the n-generators");
    std::vector<int> values(n);
    for (int k = 0; k < n; ++k) {
        auto it = std::lower_bound(sorted_moved.begin(), sorted_moved.end(), moved[k]);
        values[it - sorted_moved.begin()] = k + 1;
    }
    AffinePermutation w = permutation_from_generator_values(sorted_moved, values, n);
    assert(is_m_stable(w, m));
    return w;
}

std::vector<StandardRibbonTableau> enumerate_srt(const BetaSet& D, int m, int n) {
    auto [lambda, mu, nu] = construct_shapes(D, m, n);
    std::vector<long long> gens = n_generators(D, n);
    std::vector<StandardRibbonTableau> out;
    std::vector<RibbonMove> moves;
    std::vector<char> done(n, 0);
    auto recurse = [&](auto&& self, const BetaSet& current, int placed) -> void {
        if (placed == n) {
            StandardRibbonTableau T;
            T.base = lambda;
            T.shape = SkewShape(mu, lambda);
            T.ribbons = moves;
            out.push_back(std::move(T));
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (done[i] || current.contains(gens[i] - m)) continue;
            auto [next, move] = apply_jump(current, gens[i], m);
            done[i] = 1;
            moves.push_back(move);
            self(self, next, placed + 1);
            moves.pop_back();
            done[i] = 0;
        }
    };
    recurse(recurse, D, 0);
    return out;
}

AffinePermutation omega0_of(const BetaSet& D, int m, int n) {
    if (std::gcd(static_cast<long long>(m), static_cast<long long>(n)) != 1)
        throw std::invalid_argument("omega0_of: m and n must be coprime");
    std::vector<long long> gens = n_generators(D, n);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    AffinePermutation w = permutation_from_generator_values(gens, values, n);
    assert(is_m_stable(w, m));
    return w;
}

int spin(const StandardRibbonTableau& T) {
    int s = 0;
    for (const RibbonMove& r : T.ribbons) s += r.spin();
    return s;
}

std::vector<std::vector<std::pair<int, int>>> ribbon_cells(const StandardRibbonTableau& T) {
    std::vector<std::vector<std::pair<int, int>>> cells;
    cells.reserve(T.ribbons.size());
    BetaSet current = beta_from_partition(T.base);
    Partition prev = T.base;
    for (const RibbonMove& r : T.ribbons) {
        current = apply_jump(current, r.element, r.ribbon_length).first;
        Partition next = partition_from_beta(current);
        std::vector<std::pair<int, int>> ribbon;
        for (int row = 0; row < next.rows(); ++row)
            for (int col = prev.row(row); col < next.row(row); ++col)
                ribbon.emplace_back(row, col);
        assert(static_cast<int>(ribbon.size()) == r.ribbon_length);
        // The ribbon's top-left end carries its content.
        long long max_content = ribbon.front().first - ribbon.front().second;
        for (auto [row, col] : ribbon)
            max_content = std::max(max_content, static_cast<long long>(row) - col);
        assert(max_content == r.content);
        cells.push_back(std::move(ribbon));
        prev = std::move(next);
    }
    return cells;
}

int spin_geometric(const StandardRibbonTableau& T) {
    int s = 0;
    for (const auto& ribbon : ribbon_cells(T)) {
        std::set<int> rows;
        for (auto [row, col] : ribbon) rows.insert(row);
        s += static_cast<int>(rows.size()) - 1;
    }
    return s;
}

bool is_official_vertical_strip(const StandardRibbonTableau& T) {
    auto cells = ribbon_cells(T);
    std::set<std::pair<int, int>> region;
    for (const auto& ribbon : cells)
        for (auto cell : ribbon) region.insert(cell);
    for (const auto& ribbon : cells) {
        std::pair<int, int> head = ribbon.front();
        for (auto [row, col] : ribbon)
            if (row - col > head.first - head.second) head = {row, col};
        if (region.count({head.first, head.second - 1})) return false;
    }
    return true;
}

std::set<int> content_descents(const StandardRibbonTableau& T) {
    std::set<int> des;
    for (size_t k = 1; k < T.ribbons.size(); ++k)
        if (T.ribbons[k - 1].content > T.ribbons[k].content)
            des.insert(static_cast<int>(k));
    return des;
}

StandardRibbonTableau standardize(const SemistandardRibbonTableau& S) {
    if (S.tiling.size() != S.tau.size())
        throw std::invalid_argument("standardize: tau must label every ribbon");
    for (int v : S.tau)
        if (v < 1) throw std::invalid_argument("standardize: tau values must be positive");
    std::vector<size_t> order(S.tiling.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (S.tau[a] != S.tau[b]) return S.tau[a] < S.tau[b];
        return S.tiling[a].content < S.tiling[b].content;
    });
    for (size_t k = 1; k < order.size(); ++k) {
        const RibbonMove& a = S.tiling[order[k - 1]];
        const RibbonMove& b = S.tiling[order[k]];
        if (S.tau[order[k - 1]] == S.tau[order[k]] && a.content == b.content)
            throw std::invalid_argument("standardize: refinement is not a total order");
    }
    StandardRibbonTableau T;
    T.base = S.base;
    BetaSet current = beta_from_partition(S.base);
    Partition lambda = S.base;
    for (size_t idx : order) {
        const RibbonMove& r = S.tiling[idx];
        try {
            auto [next, move] = apply_jump(current, r.element, r.ribbon_length);
            current = std::move(next);
            T.ribbons.push_back(move);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("standardize: refined order is not a standard tableau");
        }
    }
    T.shape = SkewShape(partition_from_beta(current), lambda);
    return T;
}

std::vector<SemistandardRibbonTableau> enumerate_fiber_ssrt(const StandardRibbonTableau& T,
                                                            int N) {
    if (N <= 0) throw std::invalid_argument("enumerate_fiber_ssrt: N must be positive");
    int n = static_cast<int>(T.ribbons.size());
    std::set<int> des = content_descents(T);
    std::vector<SemistandardRibbonTableau> out;
    std::vector<int> tau(n, 0);
    auto recurse = [&](auto&& self, int k, int lo) -> void {
        if (k == n) {
            out.push_back({T.base, T.ribbons, tau});
            return;
        }
        for (int v = lo; v <= N; ++v) {
            tau[k] = v;
            self(self, k + 1, des.count(k + 1) ? v + 1 : v);
        }
    };
    recurse(recurse, 0, 1);
    return out;
}

}  // namespace ratshuffle
