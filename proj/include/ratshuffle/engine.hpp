#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratshuffle/parking.hpp"
#include "ratshuffle/ribbon.hpp"
#include "ratshuffle/symfunc.hpp"

namespace ratshuffle {

// Thrown when a requested computation would enumerate more than the
// configured number of parking functions.
class budget_error : public std::runtime_error {
public:
    budget_error(long long required, long long budget);
    long long required() const { return required_; }

private:
    long long required_ = 0;
};

inline constexpr long long kDefaultBudget = 20000;

// Everything computed for one Dyck path.  twice_e = delta + dinv(omega_0) is
// twice the exponent shift e(D) of the spin route; e(D) itself may be a half
// integer, the per-tableau exponents (twice_e - spin)/2 are always integers.
struct PathReport {
    DyckPath path;
    long long area = 0;
    long long twice_e = 0;
    long long fiber_size = 0;
    SchurExpansion f;  // coefficients are polynomials in t

    PathReport(DyckPath p, SchurExpansion expansion)
        : path(std::move(p)), f(std::move(expansion)) {}
};

// F(D;t) computed by two independent routes and certified:
//   route A: sum over the m-stable fiber of t^dinv(w) Q_{des(w^{-1})},
//   route B: sum over SRT(nu,m) of t^{(twice_e - spin(T))/2} Q_{des(c(T))}.
// The two monomial vectors must agree before the Schur conversion; a mismatch
// throws std::logic_error.  The result is checked symmetric and Schur
// positive.
PathReport f_of_path(const DyckPath& D);

// F_{m/n}(q,t) = sum over paths of q^{area(D)} F(D;t).
SchurExpansion f_of_mn(int m, int n, long long budget = kDefaultBudget);

struct CheckResult {
    std::string name;
    long long pass = 0;
    long long fail = 0;
};

struct VerifyReport {
    int m = 0, n = 0;
    long long paths_checked = 0;
    long long fiber_total = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> failures;  // human-readable descriptions

    bool all_passed() const;
    CheckResult& check(const std::string& name);
};

struct VerifyOptions {
    long long budget = kDefaultBudget;
    // When positive, verify only this many paths, sampled with a fixed seed.
    int sample_paths = 0;
    unsigned seed = 917504;
};

// Runs the identity suite path by path: the spin/dinv relations
// 2(delta - dinv(w)) = spin(T(w)) + spin(T(w0)) and
// spin(T(w)) = delta + dinv(w0) - 2 dinv(w), descent agreement between the
// permutation and tableau routes, ides via the diagonal word, Anderson and
// tableau round trips, cardinality matches, officiality of the
// increasing-order tableau, spin parity, the semistandard expansion of Q at
// N = n, route A vs route B and the Schur certificates.  Failures are
// recorded, never thrown.
VerifyReport verify_identities(int m, int n, const VerifyOptions& options = {});

struct SymmetryReport {
    int m = 0, n = 0;
    bool qt_symmetric = false;        // q <-> t invariance of both F_{m/n} and F_{n/m}
    bool coeff_multisets_equal = false;  // Schur coefficient multisets of m/n and n/m
    bool catalan_coeffs_equal = false;   // coefficient of the one-row Schur function
};

// Observational m <-> n and q <-> t comparisons; never gating.  The two
// expansions have different degrees, so they are compared through their
// coefficient data: the multiset of nonzero Schur coefficients and the
// coefficient of the single-row Schur function.
SymmetryReport exploratory_symmetries(int m, int n, long long budget = kDefaultBudget);

// m^(n-1), guarded against the budget.
long long parking_function_count(int m, int n, long long budget);

}  // namespace ratshuffle
