#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace ratshuffle {

// Integer partition with weakly decreasing positive parts.  Diagrams are in
// French notation: row 0 is the longest row and sits at the bottom, row and
// column indices are 0-based.  The content of the cell (row r, col c) is r-c.
class Partition {
public:
    Partition() = default;
    // Accepts trailing zeros (they are stripped); throws if parts increase
    // or contain a negative entry.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    // Length of row r, 0 when r >= rows().
    int row(int r) const { return r < rows() ? parts_[r] : 0; }
    long long size() const;
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Skew shape outer\inner; throws unless inner fits inside outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    long long size() const { return outer.size() - inner.size(); }
    bool operator==(const SkewShape&) const = default;
};

// Cofinite-up subset of Z (Maya diagram of a partition) in the balanced
// normalization: the set agrees with Z_{>0} outside a finite symmetric
// difference, stored as the members <= 0 and the missing positives.  The
// balance |low_members| == |high_gaps| pins the shift so that the empty
// partition corresponds to Z_{>0} and membership swaps track box contents.
class BetaSet {
public:
    // Z_{>0}, the beta set of the empty partition.
    BetaSet() = default;

    static BetaSet positive_integers() { return BetaSet{}; }
    // Throws unless both lists are strictly increasing, correctly signed and
    // of equal length.
    static BetaSet from_low_and_gaps(std::vector<long long> low_members,
                                     std::vector<long long> high_gaps);
    // Set whose members below tail_start are exactly `members` and which
    // contains every integer >= tail_start.  Throws if unbalanced.
    static BetaSet from_members_with_tail(std::vector<long long> members,
                                          long long tail_start);

    bool contains(long long x) const;
    long long min_member() const;
    // All integers >= tail_start() are members.
    long long tail_start() const { return gaps_.empty() ? 1 : gaps_.back() + 1; }
    // Number of members y with lo < y < hi.
    long long count_members_between(long long lo, long long hi) const;
    // Members in [lo, hi), ascending.
    std::vector<long long> members_in(long long lo, long long hi) const;
    // True iff x in M implies x+step in M (step > 0).
    bool is_invariant_under(long long step) const;

    const std::vector<long long>& low_members() const { return low_; }
    const std::vector<long long>& high_gaps() const { return gaps_; }

    bool operator==(const BetaSet&) const = default;

private:
    long long members_leq(long long x) const;

    std::vector<long long> low_;   // members <= 0, ascending
    std::vector<long long> gaps_;  // non-members > 0, ascending
};

// One m-ribbon recorded as a beta-set move: `element` jumps to element-m.
// height = 1 + number of members strictly between the two slots at the time
// of the move; content = element - 1 = largest cell content of the ribbon.
struct RibbonMove {
    long long element = 0;
    int ribbon_length = 0;
    int height = 0;
    long long content = 0;

    int spin() const { return height - 1; }
    bool operator==(const RibbonMove&) const = default;
};

// Adds an m-ribbon: moves x to x-m.  Requires x in M and x-m not in M,
// throws std::invalid_argument otherwise.
std::pair<BetaSet, RibbonMove> apply_jump(const BetaSet& M, long long x, int m);

// Removes an m-ribbon: moves x to x+m (requires x in M, x+m not in M).  The
// returned move describes the removed ribbon, i.e. applying it to the result
// restores M.
std::pair<BetaSet, RibbonMove> remove_ribbon(const BetaSet& M, long long x, int m);

BetaSet beta_from_partition(const Partition& lam);
Partition partition_from_beta(const BetaSet& M);

// Partition read from an arbitrarily shifted beta set: `members` are the
// members below tail_start, all integers >= tail_start being members.  Used
// for quotient components whose natural normalization is not balanced.
Partition partition_from_members_with_tail(std::vector<long long> members,
                                           long long tail_start);

Partition transpose(const Partition& lam);

// Multiset of hook lengths, sorted ascending.
std::vector<int> hook_lengths(const Partition& lam);

// True iff no hook length equals m; computed both from hook lengths and from
// m-invariance of the beta set, the two routes are cross-asserted.
bool is_m_core(const Partition& lam, int m);

// m-core obtained by exhausting rightward m-jumps, leftmost movable first.
Partition m_core(const Partition& lam, int m);

// m-tuple of quotient partitions indexed by residue class 0..m-1.
std::vector<Partition> m_quotient(const Partition& lam, int m);

// Inverse of (m_core, m_quotient); rejects a core that is not an m-core or a
// quotient list of the wrong length.
Partition from_core_and_quotient(const Partition& core,
                                 const std::vector<Partition>& quotients, int m);

}  // namespace ratshuffle
