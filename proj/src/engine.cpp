#include "ratshuffle/engine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <sstream>

namespace ratshuffle {

budget_error::budget_error(long long required, long long budget)
    : std::runtime_error("budget exceeded: computation needs " + std::to_string(required) +
                         " parking functions, budget is " + std::to_string(budget)),
      required_(required) {}

long long parking_function_count(int m, int n, long long budget) {
    long long total = 1;
    for (int i = 1; i < n; ++i) {
        total *= m;
        if (total > budget) throw budget_error(total, budget);
    }
    return total;
}

namespace {

MonomialVector route_a(const std::vector<AffinePermutation>& fiber, int m, int n) {
    MonomialVector v(n, n);
    for (const AffinePermutation& w : fiber) {
        std::set<int> des = descents_of_inverse(w);
        v.add_scaled(gessel_fundamental(des, n, n), 0,
                     static_cast<int>(dinv(w, m)));
    }
    return v;
}

MonomialVector route_b(const std::vector<StandardRibbonTableau>& tableaux, long long twice_e,
                       int n) {
    MonomialVector v(n, n);
    for (const StandardRibbonTableau& T : tableaux) {
        long long numerator = twice_e - spin(T);
        if (numerator < 0 || numerator % 2 != 0)
            throw std::logic_error("route B: non-integral or negative t exponent");
        v.add_scaled(gessel_fundamental(content_descents(T), n, n), 0,
                     static_cast<int>(numerator / 2));
    }
    return v;
}

}  // namespace

PathReport f_of_path(const DyckPath& D) {
    int m = D.m(), n = D.n();
    BetaSet delta = delta_from_path(D);
    std::vector<AffinePermutation> fiber = enumerate_m_stable_fiber(delta, m, n);
    AffinePermutation w0 = omega0_of(delta, m, n);
    long long twice_e = D.delta() + dinv(w0, m);

    MonomialVector va = route_a(fiber, m, n);
    MonomialVector vb = route_b(enumerate_srt(delta, m, n), twice_e, n);
    if (!(va == vb))
        throw std::logic_error("f_of_path: permutation and ribbon routes disagree");

    if (!is_symmetric(va))
        throw std::logic_error("f_of_path: expansion is not symmetric");
    SchurExpansion f = to_schur(va);
    if (!is_schur_positive(f))
        throw std::logic_error("f_of_path: expansion is not Schur positive");

    PathReport report(D, std::move(f));
    report.area = D.area();
    report.twice_e = twice_e;
    report.fiber_size = static_cast<long long>(fiber.size());
    return report;
}

SchurExpansion f_of_mn(int m, int n, long long budget) {
    parking_function_count(m, n, budget);
    SchurExpansion total(n);
    for (const DyckPath& D : enumerate_dyck_paths(m, n)) {
        PathReport report = f_of_path(D);
        total += report.f.shifted(static_cast<int>(report.area), 0);
    }
    return total;
}

bool VerifyReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.fail > 0) return false;
    return true;
}

CheckResult& VerifyReport::check(const std::string& name) {
    for (CheckResult& c : checks)
        if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
}

namespace {

void record(VerifyReport& report, const std::string& name, bool ok,
            const std::string& detail) {
    CheckResult& c = report.check(name);
    if (ok) {
        ++c.pass;
    } else {
        ++c.fail;
        if (report.failures.size() < 100)
            report.failures.push_back(name + ": " + detail);
    }
}

std::string path_tag(const DyckPath& D) {
    std::ostringstream os;
    os << "m=" << D.m() << " n=" << D.n() << " path=[";
    for (int r = 0; r < D.shape().rows(); ++r)
        os << (r ? "," : "") << D.shape().row(r);
    os << "]";
    return os.str();
}

// Jumped-over elements of each move classified as in the pair-count argument:
// already moved generators, not yet moved generators, and the stable rest.
struct JumpClasses {
    long long moved = 0;     // landed slots of earlier jumps
    long long unmoved = 0;   // generators still waiting
    long long stable = 0;    // elements that never move
};

JumpClasses classify_jumps(const AffinePermutation& w, int m, const BetaSet& delta) {
    int n = w.period();
    std::vector<long long> gens = n_generators(delta, n);
    AffinePermutation inv = w.inverse();
    JumpClasses counts;
    BetaSet current = delta;
    std::set<long long> landed;
    std::set<long long> waiting(gens.begin(), gens.end());
    for (int k = 1; k <= n; ++k) {
        long long x = inv.window()[k - 1];
        waiting.erase(x);
        for (long long y : current.members_in(x - m + 1, x)) {
            if (landed.count(y))
                ++counts.moved;
            else if (waiting.count(y))
                ++counts.unmoved;
            else
                ++counts.stable;
        }
        current = apply_jump(current, x, m).first;
        landed.insert(x - m);
    }
    return counts;
}

void verify_path(VerifyReport& report, const DyckPath& D) {
    int m = D.m(), n = D.n();
    long long delta_stat = D.delta();
    std::string tag = path_tag(D);

    BetaSet delta = delta_from_path(D);
    std::vector<AffinePermutation> fiber = enumerate_m_stable_fiber(delta, m, n);
    std::vector<StandardRibbonTableau> tableaux = enumerate_srt(delta, m, n);
    std::vector<ParkingFunction> pfs = parking_functions_on_path(D);
    report.fiber_total += static_cast<long long>(fiber.size());

    AffinePermutation w0 = omega0_of(delta, m, n);
    StandardRibbonTableau t0 = tableau_of(w0, m);
    long long spin0 = spin(t0);
    long long dinv0 = dinv(w0, m);

    record(report, "spin_omega0_from_dinv", spin0 == delta_stat - dinv0, tag);
    record(report, "officiality_of_omega0", is_official_vertical_strip(t0), tag);
    record(report, "cardinality_fiber_srt_pf",
           fiber.size() == tableaux.size() && fiber.size() == pfs.size(), tag);

    int parity = spin0 % 2 == 0 ? 0 : 1;
    bool parity_ok = true;
    for (const StandardRibbonTableau& T : tableaux) {
        if (spin(T) % 2 != parity) parity_ok = false;
        record(report, "spin_routes_agree", spin(T) == spin_geometric(T), tag);
    }
    record(report, "spin_parity_constant", parity_ok, tag);

    for (const AffinePermutation& w : fiber) {
        StandardRibbonTableau T = tableau_of(w, m);
        long long s = spin(T);
        long long d = dinv(w, m);
        record(report, "spin_dinv_relation", 2 * (delta_stat - d) == s + spin0, tag);
        record(report, "spin_from_dinv_pair", s == delta_stat + dinv0 - 2 * d, tag);
        record(report, "descent_agreement", descents_of_inverse(w) == content_descents(T), tag);
        record(report, "tableau_roundtrip", permutation_of(T, m, n) == w, tag);
        record(report, "area_constant_on_fiber", area(w, m) == D.area(), tag);

        ParkingFunction f = anderson(w, m);
        record(report, "anderson_roundtrip_w", anderson_inverse(f) == w, tag);

        JumpClasses counts = classify_jumps(w, m, delta);
        record(report, "pair_counts_symmetric", counts.moved == counts.unmoved, tag);
        record(report, "spin_equals_jump_classes",
               s == counts.moved + counts.unmoved + counts.stable, tag);
        record(report, "dinv_from_jump_classes",
               d == delta_stat - counts.unmoved - counts.stable, tag);
    }

    for (const ParkingFunction& f : pfs) {
        AffinePermutation w = anderson_inverse(f);
        record(report, "anderson_roundtrip_f", anderson(w, m) == f, tag);
        record(report, "ides_matches_inverse_descents",
               ides(f) == descents_of_inverse(w), tag);
    }

    for (const StandardRibbonTableau& T : tableaux) {
        MonomialVector lhs = gessel_fundamental(content_descents(T), n, n);
        MonomialVector rhs(n, n);
        for (const SemistandardRibbonTableau& S : enumerate_fiber_ssrt(T, n)) {
            std::vector<int> exponents(n, 0);
            for (int v : S.tau) ++exponents[v - 1];
            rhs.add(exponents, CoeffPoly::one());
        }
        record(report, "semistandard_expansion", lhs == rhs, tag);
    }

    long long twice_e = delta_stat + dinv0;
    MonomialVector va = route_a(fiber, m, n);
    bool routes_equal = false;
    bool exponents_ok = true;
    try {
        MonomialVector vb = route_b(tableaux, twice_e, n);
        routes_equal = va == vb;
    } catch (const std::logic_error&) {
        exponents_ok = false;
    }
    record(report, "route_a_equals_route_b", exponents_ok && routes_equal, tag);
    record(report, "f_symmetric", is_symmetric(va), tag);
    if (is_symmetric(va))
        record(report, "f_schur_positive", is_schur_positive(to_schur(va)), tag);
    else
        record(report, "f_schur_positive", false, tag);
}

}  // namespace

VerifyReport verify_identities(int m, int n, const VerifyOptions& options) {
    VerifyReport report;
    report.m = m;
    report.n = n;
    long long expected_total = parking_function_count(m, n, options.budget);

    std::vector<DyckPath> paths = enumerate_dyck_paths(m, n);
    bool sampled = options.sample_paths > 0 &&
                   options.sample_paths < static_cast<int>(paths.size());
    if (sampled) {
        // Fixed-seed Fisher-Yates so the sampled sweep is reproducible.
        std::mt19937 rng(options.seed);
        for (size_t i = paths.size() - 1; i > 0; --i) {
            size_t j = rng() % (i + 1);
            std::swap(paths[i], paths[j]);
        }
        paths.erase(paths.begin() + options.sample_paths, paths.end());
    }

    for (const DyckPath& D : paths) verify_path(report, D);
    report.paths_checked = static_cast<long long>(paths.size());

    if (!sampled) {
        record(report, "total_parking_functions", report.fiber_total == expected_total,
               "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    return report;
}

SymmetryReport exploratory_symmetries(int m, int n, long long budget) {
    SymmetryReport report;
    report.m = m;
    report.n = n;
    SchurExpansion fwd = f_of_mn(m, n, budget);
    SchurExpansion rev = f_of_mn(n, m, budget);

    // both orientations are in hand, so certify q <-> t on both
    report.qt_symmetric = fwd.with_qt_swapped() == fwd && rev.with_qt_swapped() == rev;

    std::vector<CoeffPoly> a, b;
    for (const auto& [lam, c] : fwd.coeffs()) a.push_back(c);
    for (const auto& [lam, c] : rev.coeffs()) b.push_back(c);
    auto poly_less = [](const CoeffPoly& x, const CoeffPoly& y) {
        return x.terms() < y.terms();
    };
    std::sort(a.begin(), a.end(), poly_less);
    std::sort(b.begin(), b.end(), poly_less);
    report.coeff_multisets_equal = a == b;

    report.catalan_coeffs_equal =
        fwd.coeff(Partition({n})) == rev.coeff(Partition({m}));
    return report;
}

}  // namespace ratshuffle
