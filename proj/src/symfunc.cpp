#include "ratshuffle/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace ratshuffle {

CoeffPoly CoeffPoly::constant(BigInt c) { return monomial(0, 0, std::move(c)); }

CoeffPoly CoeffPoly::monomial(int q_exp, int t_exp, BigInt c) {
    CoeffPoly p;
    if (q_exp < 0 || t_exp < 0)
        throw std::invalid_argument("coefficient polynomial: negative exponent");
    if (c != 0) p.terms_[{q_exp, t_exp}] = std::move(c);
    return p;
}

bool CoeffPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

void CoeffPoly::add_term(int q_exp, int t_exp, const BigInt& c) {
    if (q_exp < 0 || t_exp < 0)
        throw std::invalid_argument("coefficient polynomial: negative exponent");
    auto key = std::make_pair(q_exp, t_exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0) terms_[key] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
    return *this;
}

CoeffPoly CoeffPoly::times(const BigInt& c) const {
    CoeffPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

CoeffPoly CoeffPoly::shifted(int q_exp, int t_exp) const {
    CoeffPoly out;
    for (const auto& [e, v] : terms_)
        out.terms_[{e.first + q_exp, e.second + t_exp}] = v;
    return out;
}

CoeffPoly CoeffPoly::with_qt_swapped() const {
    CoeffPoly out;
    for (const auto& [e, v] : terms_) out.terms_[{e.second, e.first}] = v;
    return out;
}

bool RevLexGreater::operator()(const Partition& a, const Partition& b) const {
    int rows = std::max(a.rows(), b.rows());
    for (int r = 0; r < rows; ++r)
        if (a.row(r) != b.row(r)) return a.row(r) > b.row(r);
    return false;
}

void MonomialVector::add(const std::vector<int>& exponents, const CoeffPoly& c) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("monomial vector: wrong number of variables");
    if (c.is_zero()) return;
    auto it = coeffs_.find(exponents);
    if (it == coeffs_.end()) {
        coeffs_[exponents] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

void MonomialVector::add_scaled(const MonomialVector& other, int q_exp, int t_exp) {
    if (other.nvars_ != nvars_ || other.degree_ != degree_)
        throw std::invalid_argument("monomial vector: shape mismatch");
    for (const auto& [e, c] : other.coeffs_) add(e, c.shifted(q_exp, t_exp));
}

CoeffPoly MonomialVector::coeff(const std::vector<int>& exponents) const {
    auto it = coeffs_.find(exponents);
    return it == coeffs_.end() ? CoeffPoly{} : it->second;
}

BigInt MonomialVector::total_mass() const {
    BigInt total = 0;
    for (const auto& [e, c] : coeffs_)
        for (const auto& [qt, v] : c.terms()) total += v;
    return total;
}

void SchurExpansion::add(const Partition& lam, const CoeffPoly& c) {
    if (lam.size() != degree_)
        throw std::invalid_argument("schur expansion: partition of the wrong degree");
    if (c.is_zero()) return;
    auto it = coeffs_.find(lam);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lam, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

CoeffPoly SchurExpansion::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? CoeffPoly{} : it->second;
}

SchurExpansion SchurExpansion::shifted(int q_exp, int t_exp) const {
    SchurExpansion out(degree_);
    for (const auto& [lam, c] : coeffs_) out.coeffs_.emplace(lam, c.shifted(q_exp, t_exp));
    return out;
}

SchurExpansion SchurExpansion::with_qt_swapped() const {
    SchurExpansion out(degree_);
    for (const auto& [lam, c] : coeffs_) out.coeffs_.emplace(lam, c.with_qt_swapped());
    return out;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("schur expansion: degree mismatch");
    for (const auto& [lam, c] : other.coeffs_) add(lam, c);
    return *this;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto recurse = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

MonomialVector gessel_fundamental(const std::set<int>& S, int n, int N) {
    if (n <= 0 || N <= 0)
        throw std::invalid_argument("gessel_fundamental: n and N must be positive");
    for (int s : S)
        if (s < 1 || s >= n)
            throw std::invalid_argument("gessel_fundamental: descent out of range");
    MonomialVector v(n, N);
    std::vector<int> exponents(N, 0);
    auto recurse = [&](auto&& self, int k, int lo) -> void {
        if (k == n) {
            v.add(exponents, CoeffPoly::one());
            return;
        }
        for (int i = lo; i <= N; ++i) {
            ++exponents[i - 1];
            self(self, k + 1, S.count(k + 1) ? i + 1 : i);
            --exponents[i - 1];
        }
    };
    recurse(recurse, 0, 1);
    return v;
}

namespace {

// Number of distinct rearrangements of the exponent vector.
BigInt orbit_size(const std::vector<int>& sorted_desc, int nvars) {
    std::map<int, int> mult;
    for (int e : sorted_desc) ++mult[e];
    BigInt num = 1;
    for (int i = 1; i <= nvars; ++i) num *= i;
    for (const auto& [e, k] : mult)
        for (int i = 1; i <= k; ++i) num /= i;
    return num;
}

}  // namespace

bool is_symmetric(const MonomialVector& v) {
    std::map<std::vector<int>, std::pair<CoeffPoly, BigInt>> groups;  // rep -> (coeff, count)
    for (const auto& [e, c] : v.coeffs()) {
        std::vector<int> rep = e;
        std::sort(rep.begin(), rep.end(), std::greater<>());
        auto it = groups.find(rep);
        if (it == groups.end()) {
            groups[rep] = {c, 1};
        } else {
            if (!(it->second.first == c)) return false;
            it->second.second += 1;
        }
    }
    for (const auto& [rep, cc] : groups)
        if (cc.second != orbit_size(rep, v.nvars())) return false;
    return true;
}

namespace {

long long kostka_uncached(const Partition& lam, const Partition& mu) {
    // Chains of horizontal strips: peel the letters of mu off lam from the
    // largest letter down.
    std::function<long long(const std::vector<int>&, int)> count =
        [&](const std::vector<int>& shape, int letter) -> long long {
        if (letter < 0) {
            for (int p : shape)
                if (p != 0) return 0;
            return 1;
        }
        int strip = mu.row(letter);
        // Choose new_shape <= shape row-wise with shape[r+1] <= new_shape[r]
        // (horizontal strip) removing exactly `strip` cells.
        long long total = 0;
        std::vector<int> next(shape);
        std::function<void(int, int)> choose = [&](int r, int removed) {
            if (r == static_cast<int>(shape.size())) {
                if (removed == strip) total += count(next, letter - 1);
                return;
            }
            int low = (r + 1 < static_cast<int>(shape.size())) ? shape[r + 1] : 0;
            int high = shape[r];
            int upper = (r > 0) ? next[r - 1] : high;
            for (int v = std::min(high, upper); v >= low; --v) {
                if (removed + (high - v) > strip) continue;
                next[r] = v;
                choose(r + 1, removed + (high - v));
                next[r] = shape[r];
            }
        };
        choose(0, 0);
        return total;
    };
    return count(lam.parts(), mu.rows() - 1);
}

}  // namespace

long long kostka(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("kostka: partitions must have equal size");
    static std::map<std::pair<Partition, Partition>, long long> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({lam, mu});
        if (it != cache.end()) return it->second;
    }
    long long k = kostka_uncached(lam, mu);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(lam, mu), k);
    return k;
}

MonomialVector schur_to_monomials(const SchurExpansion& e, int N) {
    int n = e.degree();
    MonomialVector v(n, N);
    for (const auto& [lam, c] : e.coeffs()) {
        for (const Partition& mu : partitions_of(n)) {
            if (mu.rows() > N) continue;
            long long K = kostka(lam, mu);
            if (K == 0) continue;
            CoeffPoly scaled = c.times(K);
            std::vector<int> exponents(N, 0);
            for (int r = 0; r < mu.rows(); ++r) exponents[r] = mu.row(r);
            std::sort(exponents.begin(), exponents.end());
            do {
                v.add(exponents, scaled);
            } while (std::next_permutation(exponents.begin(), exponents.end()));
        }
    }
    return v;
}

SchurExpansion to_schur(const MonomialVector& v) {
    int n = v.degree();
    if (v.nvars() < n)
        throw std::invalid_argument("to_schur: need at least n variables");
    if (!is_symmetric(v))
        throw std::invalid_argument("to_schur: input is not symmetric");
    SchurExpansion e(n);
    std::vector<Partition> parts = partitions_of(n);  // (n) first, refines dominance
    std::vector<std::pair<Partition, CoeffPoly>> solved;
    for (const Partition& mu : parts) {
        std::vector<int> exponents(v.nvars(), 0);
        for (int r = 0; r < mu.rows(); ++r) exponents[r] = mu.row(r);
        CoeffPoly a = v.coeff(exponents);
        for (const auto& [lam, c] : solved) {
            long long K = kostka(lam, mu);
            if (K != 0) a -= c.times(K);
        }
        if (!a.is_zero()) solved.emplace_back(mu, a);
    }
    for (const auto& [lam, c] : solved) e.add(lam, c);
    if (!(schur_to_monomials(e, v.nvars()) == v))
        throw std::logic_error("to_schur: residual after triangular solve");
    return e;
}

SchurExpansion omega_involution(const SchurExpansion& e) {
    SchurExpansion out(e.degree());
    for (const auto& [lam, c] : e.coeffs()) out.add(transpose(lam), c);
    return out;
}

std::set<int> omega_on_descents(const std::set<int>& S, int n) {
    std::set<int> out;
    for (int k = 1; k < n; ++k)
        if (!S.count(k)) out.insert(k);
    return out;
}

bool is_schur_positive(const SchurExpansion& e) {
    for (const auto& [lam, c] : e.coeffs())
        if (!c.nonnegative()) return false;
    return true;
}

}  // namespace ratshuffle
