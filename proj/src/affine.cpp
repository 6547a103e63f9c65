#include "ratshuffle/affine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ratshuffle {

namespace {

inline long long mod_floor(long long a, long long b) {
    long long r = a % b;
    return r < 0 ? r + b : r;
}

inline long long div_floor(long long a, long long b) {
    return (a - mod_floor(a, b)) / b;
}

}  // namespace

AffinePermutation::AffinePermutation(int n, std::vector<long long> window)
    : n_(n), window_(std::move(window)) {
    if (n_ <= 0) throw std::invalid_argument("affine permutation: period must be positive");
    if (static_cast<int>(window_.size()) != n_)
        throw std::invalid_argument("affine permutation: window size must equal the period");
    std::vector<char> seen(n_, 0);
    long long sum = 0;
    for (long long v : window_) {
        long long r = mod_floor(v, n_);
        if (seen[r])
            throw std::invalid_argument("affine permutation: window values collide mod n");
        seen[r] = 1;
        sum += v;
    }
    if (sum != static_cast<long long>(n_) * (n_ + 1) / 2)
        throw std::invalid_argument("affine permutation: window sum must be n(n+1)/2");
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(n, std::move(w));
}

long long AffinePermutation::operator()(long long x) const {
    long long r = mod_floor(x - 1, n_) + 1;  // representative in [1, n]
    return window_[r - 1] + (x - r);
}

AffinePermutation AffinePermutation::inverse() const {
    std::vector<long long> inv(n_);
    for (int i = 1; i <= n_; ++i) {
        long long v = window_[i - 1];
        long long y = mod_floor(v - 1, n_) + 1;  // representative of v in [1, n]
        inv[y - 1] = i + (y - v);
    }
    return AffinePermutation(n_, std::move(inv));
}

bool is_m_stable(const AffinePermutation& w, int m) {
    if (m <= 0) throw std::invalid_argument("is_m_stable: m must be positive");
    for (long long x = 1; x <= w.period(); ++x)
        if (w(x + m) <= w(x)) return false;
    return true;
}

BetaSet delta_set(const AffinePermutation& w) {
    int n = w.period();
    // Minimal member of each residue class: smallest x = r + kn with
    // w(x) = w(r) + kn >= 1.
    std::vector<long long> mins;
    mins.reserve(n);
    for (long long r = 1; r <= n; ++r) {
        long long k = -div_floor(w(r) - 1, n);  // smallest k with w(r) + kn >= 1
        mins.push_back(r + k * n);
    }
    long long tail = *std::max_element(mins.begin(), mins.end());
    std::vector<long long> members;
    for (long long a : mins)
        for (long long x = a; x < tail; x += n) members.push_back(x);
    return BetaSet::from_members_with_tail(std::move(members), tail);
}

std::vector<long long> n_generators(const BetaSet& D, int n) {
    if (n <= 0) throw std::invalid_argument("n_generators: n must be positive");
    if (!D.is_invariant_under(n))
        throw std::invalid_argument("n_generators: set is not invariant under +n");
    std::vector<long long> gens;
    std::vector<char> found(n, 0);
    for (long long x = D.min_member();; ++x) {
        if (!D.contains(x)) continue;
        long long r = mod_floor(x, n);
        if (!found[r]) {
            found[r] = 1;
            gens.push_back(x);
            if (static_cast<int>(gens.size()) == n) break;
        }
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

long long area(const AffinePermutation& w, int m) {
    if (std::gcd(static_cast<long long>(m), static_cast<long long>(w.period())) != 1)
        throw std::invalid_argument("area: m and n must be coprime");
    if (!is_m_stable(w, m)) throw std::invalid_argument("area: permutation is not m-stable");
    return 1 - delta_set(w).min_member();
}

long long dinv(const AffinePermutation& w, int m) {
    int n = w.period();
    if (std::gcd(static_cast<long long>(m), static_cast<long long>(n)) != 1)
        throw std::invalid_argument("dinv: m and n must be coprime");
    if (!is_m_stable(w, m)) throw std::invalid_argument("dinv: permutation is not m-stable");
    long long inversions = 0;
    for (long long i = 1; i <= n; ++i)
        for (long long j = i + 1; j < i + m; ++j)
            if (w(i) > w(j)) ++inversions;
    long long delta = static_cast<long long>(m - 1) * (n - 1) / 2;
    long long d = delta - inversions;
    assert(d >= 0 && d <= delta);
    return d;
}

std::set<int> descents_of_inverse(const AffinePermutation& w) {
    AffinePermutation inv = w.inverse();
    std::set<int> des;
    for (int k = 1; k < w.period(); ++k)
        if (inv.window()[k - 1] > inv.window()[k]) des.insert(k);
    return des;
}

AffinePermutation permutation_from_generator_values(
    const std::vector<long long>& generators, const std::vector<int>& values, int n) {
    if (generators.size() != values.size() ||
        static_cast<int>(generators.size()) != n)
        throw std::invalid_argument("generator/value lists must both have length n");
    std::vector<long long> window(n, 0);
    std::vector<char> filled(n, 0);
    for (int i = 0; i < n; ++i) {
        long long g = generators[i];
        long long r = mod_floor(g - 1, n);  // window slot, 0-based
        if (filled[r])
            throw std::invalid_argument("generators collide mod n");
        filled[r] = 1;
        window[r] = values[i] + ((r + 1) - g);
    }
    return AffinePermutation(n, std::move(window));
}

std::vector<AffinePermutation> enumerate_m_stable_fiber(const BetaSet& D, int m, int n) {
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("enumerate_m_stable_fiber: m, n must be positive");
    if (std::gcd(static_cast<long long>(m), static_cast<long long>(n)) != 1)
        throw std::invalid_argument("enumerate_m_stable_fiber: m and n must be coprime");
    if (!D.is_invariant_under(m) || !D.is_invariant_under(n))
        throw std::invalid_argument("enumerate_m_stable_fiber: set is not (m,n)-invariant");
    std::vector<long long> gens = n_generators(D, n);

    // value[i] < value[j] whenever gens[j] == gens[i] + m.
    std::vector<std::pair<int, int>> constraints;  // (smaller index, larger index)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gens[j] == gens[i] + m) constraints.emplace_back(i, j);

    std::vector<AffinePermutation> fiber;
    std::vector<int> value(n, 0);
    std::vector<char> used(n + 1, 0);
    auto assign = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            AffinePermutation w = permutation_from_generator_values(gens, value, n);
            assert(is_m_stable(w, m));
            assert(delta_set(w) == D);
            fiber.push_back(std::move(w));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            // Positions are filled in ascending order, so only the smaller
            // end of a constraint can already carry a value.
            for (auto [lo, hi] : constraints)
                if (hi == pos && value[lo] > v) { ok = false; break; }
            if (!ok) continue;
            used[v] = 1;
            value[pos] = v;
            self(self, pos + 1);
            value[pos] = 0;
            used[v] = 0;
        }
    };
    assign(assign, 0);
    return fiber;
}

}  // namespace ratshuffle
