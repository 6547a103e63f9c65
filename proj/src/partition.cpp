#include "ratshuffle/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace ratshuffle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    for (int r = 0; r < inner.rows(); ++r)
        if (inner.row(r) > row(r)) return false;
    return true;
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape: inner must fit inside outer");
}

BetaSet BetaSet::from_low_and_gaps(std::vector<long long> low_members,
                                   std::vector<long long> high_gaps) {
    BetaSet b;
    b.low_ = std::move(low_members);
    b.gaps_ = std::move(high_gaps);
    if (!std::is_sorted(b.low_.begin(), b.low_.end()) ||
        std::adjacent_find(b.low_.begin(), b.low_.end()) != b.low_.end())
        throw std::invalid_argument("beta set: low members must be strictly increasing");
    if (!std::is_sorted(b.gaps_.begin(), b.gaps_.end()) ||
        std::adjacent_find(b.gaps_.begin(), b.gaps_.end()) != b.gaps_.end())
        throw std::invalid_argument("beta set: gaps must be strictly increasing");
    if (!b.low_.empty() && b.low_.back() > 0)
        throw std::invalid_argument("beta set: low members must be <= 0");
    if (!b.gaps_.empty() && b.gaps_.front() <= 0)
        throw std::invalid_argument("beta set: gaps must be > 0");
    if (b.low_.size() != b.gaps_.size())
        throw std::invalid_argument("beta set: not balanced");
    return b;
}

BetaSet BetaSet::from_members_with_tail(std::vector<long long> members,
                                        long long tail_start) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("beta set: duplicate member");
    if (!members.empty() && members.back() >= tail_start)
        throw std::invalid_argument("beta set: explicit member beyond tail");
    std::vector<long long> low, gaps;
    for (long long x : members)
        if (x <= 0) low.push_back(x);
    size_t i = 0;
    while (i < members.size() && members[i] <= 0) ++i;
    for (long long p = 1; p < tail_start; ++p) {
        while (i < members.size() && members[i] < p) ++i;
        if (i < members.size() && members[i] == p)
            ++i;
        else
            gaps.push_back(p);
    }
    return from_low_and_gaps(std::move(low), std::move(gaps));
}

bool BetaSet::contains(long long x) const {
    if (x <= 0) return std::binary_search(low_.begin(), low_.end(), x);
    return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

long long BetaSet::min_member() const {
    if (!low_.empty()) return low_.front();
    long long p = 1;
    for (long long g : gaps_) {
        if (g == p)
            ++p;
        else
            break;
    }
    return p;
}

long long BetaSet::members_leq(long long x) const {
    if (x <= 0)
        return std::upper_bound(low_.begin(), low_.end(), x) - low_.begin();
    long long gaps_leq = std::upper_bound(gaps_.begin(), gaps_.end(), x) - gaps_.begin();
    return static_cast<long long>(low_.size()) + x - gaps_leq;
}

long long BetaSet::count_members_between(long long lo, long long hi) const {
    if (hi <= lo + 1) return 0;
    return members_leq(hi - 1) - members_leq(lo);
}

std::vector<long long> BetaSet::members_in(long long lo, long long hi) const {
    std::vector<long long> out;
    for (long long x = lo; x < hi; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

bool BetaSet::is_invariant_under(long long step) const {
    for (long long x : low_)
        if (!contains(x + step)) return false;
    for (long long g : gaps_)
        if (contains(g - step)) return false;
    return true;
}

namespace {

// Membership swap from -> to; the caller guarantees from is a member and to
// is vacant.  Balance of the representation is preserved by any such swap.
BetaSet move_member(const BetaSet& M, long long from, long long to) {
    std::vector<long long> low = M.low_members();
    std::vector<long long> gaps = M.high_gaps();
    if (from <= 0)
        low.erase(std::find(low.begin(), low.end(), from));
    else
        gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), from), from);
    if (to <= 0)
        low.insert(std::upper_bound(low.begin(), low.end(), to), to);
    else
        gaps.erase(std::find(gaps.begin(), gaps.end(), to));
    return BetaSet::from_low_and_gaps(std::move(low), std::move(gaps));
}

}  // namespace

std::pair<BetaSet, RibbonMove> apply_jump(const BetaSet& M, long long x, int m) {
    if (m <= 0) throw std::invalid_argument("apply_jump: ribbon length must be positive");
    if (!M.contains(x))
        throw std::invalid_argument("apply_jump: element not in the set");
    if (M.contains(x - m))
        throw std::invalid_argument("apply_jump: target slot occupied");
    RibbonMove move;
    move.element = x;
    move.ribbon_length = m;
    move.height = 1 + static_cast<int>(M.count_members_between(x - m, x));
    move.content = x - 1;
    return {move_member(M, x, x - m), move};
}

std::pair<BetaSet, RibbonMove> remove_ribbon(const BetaSet& M, long long x, int m) {
    if (m <= 0) throw std::invalid_argument("remove_ribbon: ribbon length must be positive");
    if (!M.contains(x))
        throw std::invalid_argument("remove_ribbon: element not in the set");
    if (M.contains(x + m))
        throw std::invalid_argument("remove_ribbon: target slot occupied");
    BetaSet result = move_member(M, x, x + m);
    RibbonMove move;
    move.element = x + m;
    move.ribbon_length = m;
    move.height = 1 + static_cast<int>(result.count_members_between(x, x + m));
    move.content = x + m - 1;
    return {result, move};
}

BetaSet beta_from_partition(const Partition& lam) {
    // Row r contributes the member r + 1 - lam(r); rows past the last part
    // contribute the tail r + 1, r + 2, ...
    std::vector<long long> members;
    members.reserve(lam.rows());
    for (int r = 0; r < lam.rows(); ++r)
        members.push_back(static_cast<long long>(r) + 1 - lam.row(r));
    return BetaSet::from_members_with_tail(std::move(members),
                                           static_cast<long long>(lam.rows()) + 1);
}

Partition partition_from_beta(const BetaSet& M) {
    std::vector<int> parts;
    long long r = 0;
    for (long long x = M.min_member(); x < M.tail_start(); ++x) {
        if (!M.contains(x)) continue;
        long long len = r + 1 - x;
        assert(len >= 0);
        if (len > 0) parts.push_back(static_cast<int>(len));
        ++r;
    }
    // Members at and beyond the tail give rows of length r + 1 - x which hits
    // zero exactly when the tail is the identity tail; balance ensures it is.
    assert(M.tail_start() == r + 1);
    return Partition(std::move(parts));
}

Partition partition_from_members_with_tail(std::vector<long long> members,
                                           long long tail_start) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("shifted beta set: duplicate member");
    if (!members.empty() && members.back() >= tail_start)
        throw std::invalid_argument("shifted beta set: member beyond tail");
    // Row length = number of vacant slots above the member, a shift-invariant
    // count; the smallest member carries the longest row.
    std::vector<int> parts;
    long long n = static_cast<long long>(members.size());
    for (long long r = 0; r < n; ++r) {
        long long above = n - 1 - r;  // members above members[r]
        long long vacancies = (tail_start - members[r] - 1) - above;
        assert(vacancies >= 0);
        if (vacancies > 0) parts.push_back(static_cast<int>(vacancies));
    }
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lam) {
    std::vector<int> cols;
    if (lam.rows() > 0) cols.assign(lam.row(0), 0);
    for (int r = 0; r < lam.rows(); ++r)
        for (int c = 0; c < lam.row(r); ++c) cols[c] += 1;
    return Partition(std::move(cols));
}

std::vector<int> hook_lengths(const Partition& lam) {
    Partition t = transpose(lam);
    std::vector<int> hooks;
    for (int r = 0; r < lam.rows(); ++r)
        for (int c = 0; c < lam.row(r); ++c)
            hooks.push_back((lam.row(r) - c) + (t.row(c) - r) - 1);
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

bool is_m_core(const Partition& lam, int m) {
    if (m <= 0) throw std::invalid_argument("is_m_core: m must be positive");
    bool by_hooks = true;
    for (int h : hook_lengths(lam))
        if (h == m) by_hooks = false;
    bool by_beta = beta_from_partition(lam).is_invariant_under(m);
    assert(by_hooks == by_beta);
    return by_hooks;
}

Partition m_core(const Partition& lam, int m) {
    if (m <= 0) throw std::invalid_argument("m_core: m must be positive");
    BetaSet M = beta_from_partition(lam);
    for (;;) {
        bool moved = false;
        for (long long x = M.min_member(); x < M.tail_start(); ++x) {
            if (M.contains(x) && !M.contains(x + m)) {
                M = remove_ribbon(M, x, m).first;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    assert(M.is_invariant_under(m));
    return partition_from_beta(M);
}

namespace {

inline long long mod_floor(long long a, long long b) {
    long long r = a % b;
    return r < 0 ? r + b : r;
}

}  // namespace

std::vector<Partition> m_quotient(const Partition& lam, int m) {
    if (m <= 0) throw std::invalid_argument("m_quotient: m must be positive");
    BetaSet M = beta_from_partition(lam);
    long long tail = M.tail_start();
    std::vector<Partition> quots;
    quots.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::vector<long long> rescaled;
        for (long long x = M.min_member(); x < tail; ++x)
            if (M.contains(x) && mod_floor(x, m) == i) rescaled.push_back((x - i) / m);
        long long t = tail + mod_floor(i - tail, m);  // first class element >= tail
        quots.push_back(partition_from_members_with_tail(std::move(rescaled), (t - i) / m));
    }
    return quots;
}

Partition from_core_and_quotient(const Partition& core,
                                 const std::vector<Partition>& quotients, int m) {
    if (m <= 0)
        throw std::invalid_argument("from_core_and_quotient: m must be positive");
    if (static_cast<int>(quotients.size()) != m)
        throw std::invalid_argument("from_core_and_quotient: need exactly m quotients");
    if (!is_m_core(core, m))
        throw std::invalid_argument("from_core_and_quotient: core is not an m-core");

    BetaSet M = beta_from_partition(core);
    // Being an m-core, each residue class of M is {t_i, t_i + m, ...}; the
    // quotient re-punches holes in the class after rescaling by m.
    std::vector<long long> members;
    long long global_tail = std::numeric_limits<long long>::min();
    std::vector<std::pair<long long, long long>> class_tails;  // (residue, first tail elt)
    for (int i = 0; i < m; ++i) {
        long long t_i = 0;
        for (long long x = M.min_member();; ++x) {
            if (M.contains(x) && mod_floor(x, m) == i) {
                t_i = x;
                break;
            }
        }
        long long s_i = (t_i - i) / m;
        BetaSet q = beta_from_partition(quotients[i]);
        long long shift = s_i - 1;  // canonical tail of q starts at 1
        long long q_tail = q.tail_start() + shift;
        for (long long y = q.min_member(); y < q.tail_start(); ++y)
            if (q.contains(y)) members.push_back(m * (y + shift) + i);
        class_tails.emplace_back(i, m * q_tail + i);
        global_tail = std::max(global_tail, m * q_tail + i);
    }
    for (auto [i, start] : class_tails)
        for (long long x = start; x < global_tail; x += m) members.push_back(x);
    return partition_from_beta(
        BetaSet::from_members_with_tail(std::move(members), global_tail));
}

}  // namespace ratshuffle
