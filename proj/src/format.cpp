#include "ratshuffle/format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ratshuffle {

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < p.rows(); ++r) os << (r ? "," : "") << p.row(r);
    os << "]";
    return os.str();
}

namespace {

std::string monomial_string(int q_exp, int t_exp, const BigInt& c) {
    std::ostringstream os;
    bool need_star = false;
    if (c != 1 || (q_exp == 0 && t_exp == 0)) {
        os << c.str();
        need_star = true;
    }
    if (q_exp > 0) {
        if (need_star) os << "*";
        os << "q";
        if (q_exp > 1) os << "^" << q_exp;
        need_star = true;
    }
    if (t_exp > 0) {
        if (need_star) os << "*";
        os << "t";
        if (t_exp > 1) os << "^" << t_exp;
    }
    return os.str();
}

}  // namespace

std::string to_string(const CoeffPoly& p) {
    if (p.is_zero()) return "0";
    // q exponent descending, then t descending.
    std::vector<std::pair<std::pair<int, int>, BigInt>> terms(p.terms().begin(),
                                                              p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second > b.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << (c < 0 ? "-" : "+");
        BigInt abs_c = first ? c : (c < 0 ? BigInt(-c) : c);
        os << monomial_string(e.first, e.second, abs_c);
        first = false;
    }
    return os.str();
}

std::string to_string(const SchurExpansion& e) {
    if (e.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : e.coeffs()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = to_string(c);
        if (cs == "1") {
            // coefficient 1 is left implicit
        } else if (c.terms().size() == 1 && cs.find('-') == std::string::npos) {
            os << cs << "*";
        } else {
            os << "(" << cs << ")*";
        }
        os << "s" << to_string(lam);
    }
    return os.str();
}

}  // namespace ratshuffle
