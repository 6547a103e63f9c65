#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "ratshuffle/partition.hpp"

using namespace ratshuffle;

namespace {

std::vector<Partition> all_partitions_up_to(int max_size) {
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
    for (int n = 0; n <= max_size; ++n) recurse(recurse, n, n);
    return out;
}

}  // namespace

TEST_CASE("beta set of basic shapes") {
    CHECK(beta_from_partition(Partition{}) == BetaSet::positive_integers());

    // single row of 7: {-6} with 1 missing
    BetaSet row = beta_from_partition(Partition({7}));
    CHECK(row.low_members() == std::vector<long long>{-6});
    CHECK(row.high_gaps() == std::vector<long long>{1});

    // single column of 7: [0,6] plus the tail from 8 on
    BetaSet col = beta_from_partition(Partition({1, 1, 1, 1, 1, 1, 1}));
    CHECK(col.low_members() == std::vector<long long>{0});
    CHECK(col.high_gaps() == std::vector<long long>{7});
    CHECK(col.contains(6));
    CHECK(!col.contains(7));
    CHECK(col.contains(8));
}

TEST_CASE("partition from beta set") {
    CHECK(partition_from_beta(BetaSet::positive_integers()) == Partition{});
    CHECK(partition_from_beta(BetaSet::from_low_and_gaps({0}, {1})) == Partition({1}));

    // the (7,5)-invariant set of the running example
    BetaSet example = BetaSet::from_members_with_tail({-6, -1, 1, 3, 4, 5, 6}, 8);
    CHECK(partition_from_beta(example) == Partition({7, 3, 2, 1, 1, 1, 1}));
}

TEST_CASE("beta set round trip") {
    for (const Partition& p : all_partitions_up_to(20))
        CHECK(partition_from_beta(beta_from_partition(p)) == p);
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(Partition{}).empty());
    CHECK(hook_lengths(Partition({1})) == std::vector<int>{1});
    CHECK(hook_lengths(Partition({2, 1})) == std::vector<int>{1, 1, 3});
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    CHECK(transpose(Partition({3, 2})) == Partition({2, 2, 1}));
    for (const Partition& p : all_partitions_up_to(12))
        CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("m-core predicate") {
    CHECK(is_m_core(Partition{}, 1));
    CHECK(is_m_core(Partition{}, 5));
    Partition core75({7, 3, 2, 1, 1, 1, 1});
    CHECK(is_m_core(core75, 7));
    CHECK(is_m_core(core75, 5));
    CHECK(!is_m_core(Partition({2, 1}), 3));
    // hook route and beta route are cross-asserted inside is_m_core
    for (const Partition& p : all_partitions_up_to(20))
        for (int m = 1; m <= 8; ++m) (void)is_m_core(p, m);
}

TEST_CASE("m-core computation") {
    CHECK(m_core(Partition({7}), 7) == Partition{});
    CHECK(m_core(Partition({2, 1}), 3) == Partition{});
    Partition core75({7, 3, 2, 1, 1, 1, 1});
    CHECK(m_core(core75, 7) == core75);
    CHECK(m_core(core75, 5) == core75);
    for (const Partition& p : all_partitions_up_to(14))
        for (int m = 2; m <= 5; ++m) CHECK(is_m_core(m_core(p, m), m));
}

TEST_CASE("m-core is independent of the jump order") {
    // rightmost-movable-first must land on the same core as leftmost-first
    auto core_rightmost = [](const Partition& p, int m) {
        BetaSet M = beta_from_partition(p);
        for (;;) {
            bool moved = false;
            for (long long x = M.tail_start() - 1; x >= M.min_member(); --x) {
                if (M.contains(x) && !M.contains(x + m)) {
                    M = remove_ribbon(M, x, m).first;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        return partition_from_beta(M);
    };
    for (const Partition& p : all_partitions_up_to(14))
        for (int m = 2; m <= 4; ++m) CHECK(m_core(p, m) == core_rightmost(p, m));
}

TEST_CASE("m-quotient") {
    for (int m = 2; m <= 4; ++m) {
        auto q = m_quotient(Partition{}, m);
        REQUIRE(static_cast<int>(q.size()) == m);
        for (const Partition& part : q) CHECK(part == Partition{});
    }
    for (int m = 2; m <= 5; ++m) {
        auto q = m_quotient(Partition({m}), m);
        int nonempty = 0;
        for (const Partition& part : q)
            if (!part.empty()) {
                ++nonempty;
                CHECK(part == Partition({1}));
            }
        CHECK(nonempty == 1);
    }
}

TEST_CASE("core and quotient size bookkeeping") {
    for (const Partition& p : all_partitions_up_to(14)) {
        for (int m = 2; m <= 4; ++m) {
            long long quot = 0;
            for (const Partition& part : m_quotient(p, m)) quot += part.size();
            CHECK(p.size() == m_core(p, m).size() + m * quot);
        }
    }
}

TEST_CASE("core and quotient round trip") {
    std::mt19937 rng(271828);
    auto pool = all_partitions_up_to(20);
    for (int trial = 0; trial < 50; ++trial) {
        const Partition& p = pool[rng() % pool.size()];
        for (int m = 2; m <= 4; ++m) {
            Partition rebuilt = from_core_and_quotient(m_core(p, m), m_quotient(p, m), m);
            CHECK(rebuilt == p);
        }
    }
    CHECK(from_core_and_quotient(Partition{}, {Partition{}, Partition{}}, 2) == Partition{});
    CHECK(from_core_and_quotient(Partition{}, m_quotient(Partition({3}), 3), 3) ==
          Partition({3}));
    Partition core75({7, 3, 2, 1, 1, 1, 1});
    CHECK(from_core_and_quotient(core75, std::vector<Partition>(7), 7) == core75);
    CHECK_THROWS_AS(from_core_and_quotient(Partition({2, 1}), std::vector<Partition>(3), 3),
                    std::invalid_argument);
}

TEST_CASE("single jumps on the abacus") {
    // one m-ribbon on the empty shape, head at content i-1, height i
    for (int m : {3, 7}) {
        for (int i = 1; i <= m; ++i) {
            auto [M, move] = apply_jump(BetaSet::positive_integers(), i, m);
            CHECK(move.height == i);
            CHECK(move.spin() == i - 1);
            CHECK(move.content == i - 1);
            Partition p = partition_from_beta(M);
            CHECK(p.size() == m);
            CHECK(p == Partition([&] {
                      std::vector<int> parts{m - i + 1};
                      for (int k = 1; k < i; ++k) parts.push_back(1);
                      return parts;
                  }()));
        }
    }
    auto [row, move_row] = apply_jump(BetaSet::positive_integers(), 1, 7);
    CHECK(row.low_members() == std::vector<long long>{-6});
    CHECK(move_row.height == 1);
    auto [col, move_col] = apply_jump(BetaSet::positive_integers(), 7, 7);
    CHECK(col.low_members() == std::vector<long long>{0});
    CHECK(move_col.height == 7);

    CHECK_THROWS_AS(apply_jump(BetaSet::positive_integers(), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(apply_jump(BetaSet::positive_integers(), 5, 3), std::invalid_argument);
}

TEST_CASE("jumps preserve balance and add m cells") {
    std::mt19937 rng(31415);
    auto pool = all_partitions_up_to(12);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition& p = pool[rng() % pool.size()];
        int m = 2 + static_cast<int>(rng() % 5);
        BetaSet M = beta_from_partition(p);
        // pick any movable element
        for (long long x = M.min_member(); x < M.tail_start() + m; ++x) {
            if (M.contains(x) && !M.contains(x - m)) {
                auto [next, move] = apply_jump(M, x, m);
                CHECK(next.low_members().size() == next.high_gaps().size());
                CHECK(partition_from_beta(next).size() == p.size() + m);
                CHECK(move.spin() == move.height - 1);
                break;
            }
        }
    }
}

TEST_CASE("remove_ribbon undoes apply_jump") {
    BetaSet M = beta_from_partition(Partition({4, 2, 1}));
    auto [jumped, move] = apply_jump(M, 2, 3);
    auto [restored, removed] = remove_ribbon(jumped, -1, 3);
    CHECK(restored == M);
    CHECK(removed.element == move.element);
    CHECK(removed.height == move.height);
}

TEST_CASE("skew shape validation") {
    CHECK(SkewShape(Partition({3, 2}), Partition({2})).size() == 3);
    CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
}
