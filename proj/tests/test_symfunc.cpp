#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ratshuffle/symfunc.hpp"

using namespace ratshuffle;

namespace {

// Brute-force enumeration straight from the defining inequalities, kept
// independent of the recursive generator in the library.
MonomialVector gessel_brute(const std::set<int>& S, int n, int N) {
    MonomialVector v(n, N);
    std::vector<int> seq(n, 1);
    for (;;) {
        bool ok = true;
        for (int k = 1; k < n; ++k) {
            if (seq[k - 1] > seq[k]) ok = false;
            if (S.count(k) && seq[k - 1] == seq[k]) ok = false;
        }
        if (ok) {
            std::vector<int> exponents(N, 0);
            for (int i : seq) ++exponents[i - 1];
            v.add(exponents, CoeffPoly::one());
        }
        int pos = n - 1;
        while (pos >= 0 && seq[pos] == N) --pos;
        if (pos < 0) break;
        ++seq[pos];
        for (int k = pos + 1; k < n; ++k) seq[k] = 1;
    }
    return v;
}

long long binomial(int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

TEST_CASE("coefficient polynomial arithmetic") {
    CoeffPoly p = CoeffPoly::monomial(1, 0);  // q
    p += CoeffPoly::monomial(0, 1);           // + t
    CHECK(p.with_qt_swapped() == p);
    CHECK(p.nonnegative());
    p -= CoeffPoly::monomial(1, 0, 2);
    CHECK(!p.nonnegative());
    p += CoeffPoly::monomial(1, 0);
    CHECK(p == CoeffPoly::monomial(0, 1));  // cancelled back to t
    CHECK(CoeffPoly{}.is_zero());
    CHECK(p.shifted(2, 1) == CoeffPoly::monomial(2, 2));
}

TEST_CASE("gessel fundamental basics") {
    // Q_empty at n=2, N=2 is the complete homogeneous h_2
    MonomialVector h2 = gessel_fundamental({}, 2, 2);
    CHECK(h2.coeff({2, 0}) == CoeffPoly::one());
    CHECK(h2.coeff({1, 1}) == CoeffPoly::one());
    CHECK(h2.coeff({0, 2}) == CoeffPoly::one());
    CHECK(h2.coeffs().size() == 3);

    // full descent set forces the strictly increasing chain
    MonomialVector e4 = gessel_fundamental({1, 2, 3}, 4, 4);
    CHECK(e4.coeffs().size() == 1);
    CHECK(e4.coeff({1, 1, 1, 1}) == CoeffPoly::one());

    CHECK(gessel_fundamental({2, 4}, 5, 5) == gessel_brute({2, 4}, 5, 5));
    CHECK(gessel_fundamental({1, 3}, 5, 5) == gessel_brute({1, 3}, 5, 5));
    CHECK(gessel_fundamental({}, 4, 6) == gessel_brute({}, 4, 6));
}

TEST_CASE("monomial count sanity") {
    for (int n = 2; n <= 6; ++n) {
        MonomialVector hn = gessel_fundamental({}, n, n);
        CHECK(static_cast<long long>(hn.coeffs().size()) == binomial(2 * n - 1, n));
    }
}

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric(gessel_fundamental({}, 4, 4)));
    CHECK(!is_symmetric(gessel_fundamental({1}, 3, 3)));

    MonomialVector sum = gessel_fundamental({1}, 3, 3);
    sum.add_scaled(gessel_fundamental({2}, 3, 3), 0, 0);
    CHECK(is_symmetric(sum));  // Q_1 + Q_2 = s_21
}

TEST_CASE("kostka numbers") {
    std::vector<Partition> parts = partitions_of(5);
    for (const Partition& lam : parts) {
        CHECK(kostka(lam, lam) == 1);
        CHECK(kostka(Partition({5}), lam) == 1);
    }
    CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(kostka(Partition({3, 2}), Partition({2, 2, 1})) == 2);
    CHECK(kostka(Partition({2, 2}), Partition({3, 1})) == 0);  // dominance
    CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("schur conversion") {
    SchurExpansion h5 = to_schur(gessel_fundamental({}, 5, 5));
    CHECK(h5.coeffs().size() == 1);
    CHECK(h5.coeff(Partition({5})) == CoeffPoly::one());

    MonomialVector q12 = gessel_fundamental({1}, 3, 3);
    q12.add_scaled(gessel_fundamental({2}, 3, 3), 0, 0);
    SchurExpansion s21 = to_schur(q12);
    CHECK(s21.coeffs().size() == 1);
    CHECK(s21.coeff(Partition({2, 1})) == CoeffPoly::one());

    // the five descent sets of the standard tableaux of (3,2)
    MonomialVector v(5, 5);
    for (const std::set<int>& S : std::vector<std::set<int>>{
             {1, 3}, {1, 4}, {2, 4}, {2}, {3}})
        v.add_scaled(gessel_fundamental(S, 5, 5), 0, 0);
    SchurExpansion s32 = to_schur(v);
    CHECK(s32.coeffs().size() == 1);
    CHECK(s32.coeff(Partition({3, 2})) == CoeffPoly::one());

    CHECK_THROWS_AS(to_schur(gessel_fundamental({1}, 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(to_schur(gessel_fundamental({}, 3, 2)), std::invalid_argument);
}

TEST_CASE("schur round trip on random expansions") {
    std::mt19937 rng(909090);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Partition> parts = partitions_of(n);
        SchurExpansion e(n);
        for (const Partition& lam : parts)
            if (rng() % 2)
                e.add(lam, CoeffPoly::monomial(static_cast<int>(rng() % 3),
                                               static_cast<int>(rng() % 3),
                                               1 + static_cast<int>(rng() % 7)));
        MonomialVector v = schur_to_monomials(e, n);
        if (e.coeffs().empty()) continue;
        CHECK(to_schur(v) == e);
    }
}

TEST_CASE("omega involution") {
    SchurExpansion s5(5);
    s5.add(Partition({5}), CoeffPoly::one());
    SchurExpansion flipped = omega_involution(s5);
    CHECK(flipped.coeff(Partition({1, 1, 1, 1, 1})) == CoeffPoly::one());

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        SchurExpansion e(n);
        for (const Partition& lam : partitions_of(n))
            if (rng() % 2) e.add(lam, CoeffPoly::monomial(0, static_cast<int>(rng() % 4)));
        CHECK(omega_involution(omega_involution(e)) == e);
    }

    CHECK(omega_on_descents({2, 4}, 5) == std::set<int>{1, 3});
    CHECK(omega_on_descents({}, 4) == std::set<int>{1, 2, 3});
}

TEST_CASE("omega exchanges complementary descent sums") {
    // sum of Q over some descent sets vs the complemented sum, at n = 4
    std::vector<std::set<int>> family{{1}, {2}, {3}};  // expands to s_31
    MonomialVector lhs(4, 4), rhs(4, 4);
    for (const std::set<int>& S : family) {
        lhs.add_scaled(gessel_fundamental(S, 4, 4), 0, 0);
        rhs.add_scaled(gessel_fundamental(omega_on_descents(S, 4), 4, 4), 0, 0);
    }
    CHECK(to_schur(rhs) == omega_involution(to_schur(lhs)));
}

TEST_CASE("schur positivity") {
    SchurExpansion pos(5);
    pos.add(Partition({5}), CoeffPoly::one());
    CHECK(is_schur_positive(pos));
    SchurExpansion mixed = pos;
    mixed.add(Partition({4, 1}), CoeffPoly::monomial(0, 0, -1));
    CHECK(!is_schur_positive(mixed));
}

TEST_CASE("partition listing order") {
    std::vector<Partition> parts = partitions_of(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0] == Partition({4}));
    CHECK(parts[1] == Partition({3, 1}));
    CHECK(parts[2] == Partition({2, 2}));
    CHECK(parts[3] == Partition({2, 1, 1}));
    CHECK(parts[4] == Partition({1, 1, 1, 1}));
}
