// Command line front end: enumeration, the two-route computation of F(D;t)
// and F_{m/n}(q,t), the identity verification sweep and the observational
// symmetry report, with text, json and csv output.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ratshuffle/engine.hpp"
#include "ratshuffle/format.hpp"

using nlohmann::ordered_json;
using namespace ratshuffle;

namespace {

struct RunConfig {
    int m = 0;
    int n = 0;
    std::string command;
    std::string format = "text";
    long long budget = kDefaultBudget;
    std::string path_arg;  // comma separated parts, "" or "-" for the empty path
    std::string out;
    bool has_path = false;
};

Partition parse_path_arg(const std::string& arg) {
    if (arg.empty() || arg == "-" || arg == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad path component: " + item);
        if (v != 0) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

ordered_json coeff_to_json(const CoeffPoly& c) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, v] : c.terms()) {
        ordered_json term;
        term["q"] = e.first;
        term["t"] = e.second;
        term["coeff"] = v.str();  // arbitrary precision, keep as string
        terms.push_back(term);
    }
    return terms;
}

ordered_json schur_to_json(const SchurExpansion& e) {
    ordered_json out = ordered_json::array();
    for (const auto& [lam, c] : e.coeffs()) {
        ordered_json entry;
        entry["partition"] = lam.parts();
        entry["terms"] = coeff_to_json(c);
        out.push_back(entry);
    }
    return out;
}

ordered_json result_json(const PathReport* report, const SchurExpansion& e) {
    ordered_json r;
    if (report) {
        r["path"] = report->path.shape().parts();
        r["area"] = report->area;
    } else {
        r["path"] = nullptr;
        r["area"] = nullptr;
    }
    r["schur"] = schur_to_json(e);
    return r;
}

void emit_schur_csv(std::ostream& os, const std::string& path, const std::string& area,
                    const SchurExpansion& e) {
    for (const auto& [lam, c] : e.coeffs())
        for (const auto& [qt, v] : c.terms())
            os << "\"" << path << "\"," << area << ",\"" << to_string(lam) << "\","
               << qt.first << "," << qt.second << "," << v.str() << "\n";
}

std::string fraction_string(long long twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

int run_compute_fd(const RunConfig& cfg, std::ostream& os) {
    parking_function_count(cfg.m, cfg.n, cfg.budget);
    std::vector<DyckPath> paths;
    if (cfg.has_path)
        paths.emplace_back(cfg.m, cfg.n, parse_path_arg(cfg.path_arg));
    else
        paths = enumerate_dyck_paths(cfg.m, cfg.n);

    std::vector<PathReport> reports;
    reports.reserve(paths.size());
    for (const DyckPath& D : paths) reports.push_back(f_of_path(D));

    if (cfg.format == "text") {
        for (const PathReport& r : reports)
            os << "path=" << to_string(r.path.shape()) << " area=" << r.area
               << " fiber=" << r.fiber_size << " e=" << fraction_string(r.twice_e)
               << " F = " << to_string(r.f) << "\n";
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["results"] = ordered_json::array();
        for (const PathReport& r : reports) doc["results"].push_back(result_json(&r, r.f));
        os << doc.dump(2) << "\n";
    } else {
        os << "path,area,partition,q,t,coeff\n";
        for (const PathReport& r : reports)
            emit_schur_csv(os, to_string(r.path.shape()), std::to_string(r.area), r.f);
    }
    return 0;
}

int run_compute_fmn(const RunConfig& cfg, std::ostream& os) {
    SchurExpansion total = f_of_mn(cfg.m, cfg.n, cfg.budget);
    if (cfg.format == "text") {
        os << to_string(total) << "\n";
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["results"] = ordered_json::array();
        doc["results"].push_back(result_json(nullptr, total));
        os << doc.dump(2) << "\n";
    } else {
        os << "path,area,partition,q,t,coeff\n";
        emit_schur_csv(os, "", "", total);
    }
    return 0;
}

int run_paths(const RunConfig& cfg, std::ostream& os) {
    std::vector<DyckPath> paths = enumerate_dyck_paths(cfg.m, cfg.n);
    if (cfg.format == "text") {
        for (const DyckPath& D : paths)
            os << "path=" << to_string(D.shape()) << " area=" << D.area()
               << " cells=" << D.shape().size() << "\n";
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["results"] = ordered_json::array();
        for (const DyckPath& D : paths) {
            ordered_json r;
            r["path"] = D.shape().parts();
            r["area"] = D.area();
            doc["results"].push_back(r);
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "path,area,cells\n";
        for (const DyckPath& D : paths)
            os << "\"" << to_string(D.shape()) << "\"," << D.area() << ","
               << D.shape().size() << "\n";
    }
    return 0;
}

std::string set_string(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : s) {
        if (!first) os << ",";
        first = false;
        os << v;
    }
    os << "}";
    return os.str();
}

int run_parkfns(const RunConfig& cfg, std::ostream& os) {
    parking_function_count(cfg.m, cfg.n, cfg.budget);
    std::vector<ParkingFunction> fs = enumerate_parking_functions(cfg.m, cfg.n);
    if (cfg.format == "text") {
        for (const ParkingFunction& f : fs) {
            AffinePermutation w = anderson_inverse(f);
            os << "f=(";
            for (int a = 1; a <= f.n(); ++a) os << (a > 1 ? "," : "") << f(a);
            os << ") path=" << to_string(path_of(f).shape()) << " area=" << area(w, f.m())
               << " dinv=" << dinv(w, f.m()) << " ides=" << set_string(ides(f)) << "\n";
        }
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["results"] = ordered_json::array();
        for (const ParkingFunction& f : fs) {
            AffinePermutation w = anderson_inverse(f);
            ordered_json r;
            r["values"] = f.values();
            r["path"] = path_of(f).shape().parts();
            r["area"] = area(w, f.m());
            r["dinv"] = dinv(w, f.m());
            r["ides"] = ides(f);
            doc["results"].push_back(r);
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "values,path,area,dinv,ides\n";
        for (const ParkingFunction& f : fs) {
            AffinePermutation w = anderson_inverse(f);
            os << "\"";
            for (int a = 1; a <= f.n(); ++a) os << (a > 1 ? "," : "") << f(a);
            os << "\",\"" << to_string(path_of(f).shape()) << "\"," << area(w, f.m()) << ","
               << dinv(w, f.m()) << ",\"" << set_string(ides(f)) << "\"\n";
        }
    }
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
    VerifyOptions options;
    options.budget = cfg.budget;
    VerifyReport report = verify_identities(cfg.m, cfg.n, options);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["paths_checked"] = report.paths_checked;
        doc["fiber_total"] = report.fiber_total;
        doc["checks"] = ordered_json::array();
        for (const CheckResult& c : report.checks) {
            ordered_json entry;
            entry["name"] = c.name;
            entry["pass"] = c.pass;
            entry["fail"] = c.fail;
            doc["checks"].push_back(entry);
        }
        doc["failures"] = report.failures;
        doc["all_passed"] = report.all_passed();
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "check,pass,fail\n";
        for (const CheckResult& c : report.checks)
            os << c.name << "," << c.pass << "," << c.fail << "\n";
    } else {
        os << "verify m=" << cfg.m << " n=" << cfg.n
           << " paths=" << report.paths_checked << " fiber=" << report.fiber_total << "\n";
        for (const CheckResult& c : report.checks)
            os << "  check " << c.name << ": pass=" << c.pass << " fail=" << c.fail << "\n";
        for (const std::string& f : report.failures) os << "  FAIL " << f << "\n";
        os << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

int run_symmetries(const RunConfig& cfg, std::ostream& os) {
    SymmetryReport report = exploratory_symmetries(cfg.m, cfg.n, cfg.budget);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["m"] = cfg.m;
        doc["n"] = cfg.n;
        doc["command"] = cfg.command;
        doc["qt_symmetric"] = report.qt_symmetric;
        doc["coeff_multisets_equal"] = report.coeff_multisets_equal;
        doc["catalan_coeffs_equal"] = report.catalan_coeffs_equal;
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "observation,value\n";
        os << "qt_symmetric," << (report.qt_symmetric ? 1 : 0) << "\n";
        os << "coeff_multisets_equal," << (report.coeff_multisets_equal ? 1 : 0) << "\n";
        os << "catalan_coeffs_equal," << (report.catalan_coeffs_equal ? 1 : 0) << "\n";
    } else {
        os << "symmetries m=" << cfg.m << " n=" << cfg.n << "\n";
        os << "  q<->t symmetric: " << (report.qt_symmetric ? "yes" : "no") << "\n";
        os << "  m/n vs n/m coefficient multisets equal: "
           << (report.coeff_multisets_equal ? "yes" : "no") << "\n";
        os << "  one-row (Catalan) coefficients equal: "
           << (report.catalan_coeffs_equal ? "yes" : "no") << "\n";
    }
    return 0;  // observational, never gating
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact engine for rational parking function expansions"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_path) {
        sub->add_option("--m", cfg.m, "first parameter (ribbon length)")->required();
        sub->add_option("--n", cfg.n, "second parameter (degree)")->required();
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--budget", cfg.budget, "largest admissible m^(n-1)");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        if (with_path)
            sub->add_option("--path", cfg.path_arg,
                            "restrict to one path, comma separated row lengths")
                ->each([&](const std::string&) { cfg.has_path = true; });
    };
    add_common(app.add_subcommand("paths", "enumerate m/n-Dyck paths"), false);
    add_common(app.add_subcommand("parkfns", "enumerate m/n-parking functions"), false);
    add_common(app.add_subcommand("compute-fd", "compute F(D;t) per path"), true);
    add_common(app.add_subcommand("compute-fmn", "compute F_{m/n}(q,t)"), false);
    add_common(app.add_subcommand("verify", "run the identity sweep"), false);
    add_common(app.add_subcommand("symmetries", "observational symmetry report"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.m <= 0 || cfg.n <= 0)
            throw std::invalid_argument("m and n must be positive");
        if (std::gcd(cfg.m, cfg.n) != 1)
            throw std::invalid_argument("m and n must be coprime");

        std::ofstream file;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
        }
        std::ostream& os = cfg.out.empty() ? std::cout : file;

        if (cfg.command == "paths") return run_paths(cfg, os);
        if (cfg.command == "parkfns") return run_parkfns(cfg, os);
        if (cfg.command == "compute-fd") return run_compute_fd(cfg, os);
        if (cfg.command == "compute-fmn") return run_compute_fmn(cfg, os);
        if (cfg.command == "verify") return run_verify(cfg, os);
        if (cfg.command == "symmetries") return run_symmetries(cfg, os);
        throw std::invalid_argument("unknown command: " + cfg.command);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
