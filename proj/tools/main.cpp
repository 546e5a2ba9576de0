// ehrhart-lab: command-line front end for the lattice/Ehrhart workbench.
//
// Exit codes: 0 success, 1 verification or solver failure, 2 usage error,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehrlab/ehrlab.hpp"

namespace {

using namespace ehrlab;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

bool is_dual(Family f) { return f == Family::AStar || f == Family::CStar; }

HPolytope build_dual(Family f, int d) {
    return f == Family::AStar ? build_a_star(d) : build_c_star(d);
}

// "1,-2,0" -> LatticePoint; anything unparseable is a usage error.
LatticePoint parse_point(const std::string& text) {
    LatticePoint x;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::size_t used = 0;
        try {
            x.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            throw std::invalid_argument("--point: cannot parse coordinate '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("--point: cannot parse coordinate '" + item + "'");
        pos = comma + 1;
    }
    return x;
}

std::string method_or_default(const std::string& method, Family family) {
    if (!method.empty()) return method;
    return is_dual(family) ? "both" : "formula";
}

struct CountArgs {
    Family family = Family::CStar;
    int dim = 1;
    Int scale = 1;
    std::string method;
};

int run_count(const CountArgs& a, std::uint64_t budget) {
    const std::string method = method_or_default(a.method, a.family);
    if (method != "formula" && method != "enumerate" && method != "both")
        throw std::invalid_argument("--method must be formula, enumerate, or both");
    if (method != "formula" && !is_dual(a.family))
        throw std::invalid_argument("enumeration requires a dual polytope (Astar or Cstar)");
    std::optional<Rational> f_total, f_boundary;
    if (method != "enumerate") {
        f_total = eval_closed_form(a.family, a.dim, a.scale);
        f_boundary = a.scale == 0
                         ? Rational(0)
                         : *f_total - eval_closed_form(a.family, a.dim, a.scale - 1);
    }
    std::optional<CountResult> seen;
    if (method != "formula") seen = count(build_dual(a.family, a.dim), a.scale, budget);
    if (f_total && seen &&
        (Rational(seen->total) != *f_total || Rational(seen->boundary) != *f_boundary)) {
        std::cerr << "MISMATCH polytope=" << to_string(a.family) << " d=" << a.dim
                  << " k=" << a.scale << ": formula count=" << to_decimal_string(*f_total)
                  << " boundary=" << to_decimal_string(*f_boundary)
                  << ", enumeration count=" << seen->total.str()
                  << " boundary=" << seen->boundary.str() << "\n";
        return kExitVerification;
    }
    const std::string total = seen ? seen->total.str() : to_decimal_string(*f_total);
    const std::string boundary = seen ? seen->boundary.str() : to_decimal_string(*f_boundary);
    const char* source = method == "both" ? "formula+enumeration"
                         : method == "formula" ? "formula" : "enumeration";
    std::cout << "polytope=" << to_string(a.family) << " d=" << a.dim << " k=" << a.scale
              << " count=" << total << " boundary=" << boundary << " source=" << source
              << "\n";
    return kExitOk;
}

struct PolyArgs {
    Family family = Family::CStar;
    int dim = 1;
    std::string method;
};

void print_poly(const EhrhartPolynomial& p, Family family, const char* source) {
    std::cout << "polytope=" << to_string(family) << " d=" << p.dim
              << " coefficients(k^0..k^" << p.dim << ")=";
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << to_decimal_string(p.coeffs[i]);
    }
    std::cout << " source=" << source << "\n";
}

int run_poly(const PolyArgs& a, std::uint64_t budget) {
    const std::string method = method_or_default(a.method, a.family);
    if (method != "formula" && method != "interpolate" && method != "both")
        throw std::invalid_argument("--method must be formula, interpolate, or both");
    if (method != "formula" && !is_dual(a.family))
        throw std::invalid_argument("interpolation requires a dual polytope (Astar or Cstar)");
    std::optional<EhrhartPolynomial> formula, fitted;
    if (method != "interpolate") formula = closed_form_polynomial(a.family, a.dim);
    if (method != "formula") {
        const HPolytope P = build_dual(a.family, a.dim);
        std::vector<std::pair<Int, BigInt>> nodes;
        for (Int k = 0; k <= a.dim; ++k) nodes.emplace_back(k, count_points(P, k, budget));
        fitted = interpolate(nodes, a.dim);
    }
    if (formula && fitted && !(*formula == *fitted)) {
        std::cerr << "MISMATCH polytope=" << to_string(a.family) << " d=" << a.dim
                  << ": interpolated coefficients disagree with the closed form\n";
        print_poly(*formula, a.family, "closed-form");
        print_poly(*fitted, a.family, "interpolated");
        return kExitVerification;
    }
    if (fitted) print_poly(*fitted, a.family, formula ? "closed-form+interpolated" : "interpolated");
    else print_poly(*formula, a.family, "closed-form");
    return kExitOk;
}

struct RootsArgs {
    Family family = Family::CStar;
    int dim = 1;
    bool closed_form = false;
    double tol = kDefaultClTol;
};

int run_roots(const RootsArgs& a) {
    std::vector<Complex> roots;
    if (a.closed_form) {
        if (a.family != Family::CStar)
            throw std::invalid_argument("--closed-form roots exist for Cstar only");
        for (const CanonicalRoot& r : closed_form_roots(a.dim)) roots.push_back(r.value());
    } else {
        roots = numeric_roots(closed_form_polynomial(a.family, a.dim));
    }
    std::cout << "re,im\n";
    for (const Complex& z : roots)
        std::cout << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
    const ClVerdict cl = cl_check(roots, a.tol);
    std::cout << "cl=" << (cl.on_line ? "yes" : "no")
              << " max_re_dev=" << format_double(cl.max_deviation)
              << " tol=" << format_double(a.tol) << "\n";
    return kExitOk;
}

struct BijectionArgs {
    int dim = 1;
    Int scale = 1;
    std::string point;
};

int run_bijection(const BijectionArgs& a, std::uint64_t budget) {
    if (a.point.empty()) {
        const BijectionReport rep = verify_bijection(a.dim, a.scale, budget);
        std::cout << "d=" << rep.dim << " k=" << rep.scale << " |A|=" << rep.a_size.str()
                  << " |B|=" << rep.b_size().str() << " shell=" << rep.b_shell.str()
                  << " interior=" << rep.b_interior.str() << " failures=" << rep.failures
                  << (rep.ok() ? " OK" : " FAIL") << "\n";
        if (!rep.ok()) {
            for (const std::string& s : rep.failure_samples) std::cerr << "  " << s << "\n";
            return kExitVerification;
        }
        return kExitOk;
    }
    const LatticePoint x = parse_point(a.point);
    if (static_cast<int>(x.size()) != a.dim)
        throw std::invalid_argument("--point must have --dim coordinates");
    const TaggedBoundaryElement e = project_f(x, a.scale);  // invalid point -> usage error
    const ReconstructionWitness w = lift_witness(e, a.dim, a.scale);
    std::cout << "point=" << a.point << " k=" << a.scale << "\n";
    std::cout << "f: prefix=(";
    for (std::size_t i = 0; i < e.point.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << e.point[i];
    }
    std::cout << ") tag=" << to_string(e.tag) << "\n";
    std::cout << "case=" << to_string(w.case_id);
    if (w.i0) std::cout << " i0=" << *w.i0;
    if (w.j0) std::cout << " j0=" << *w.j0;
    if (w.p) std::cout << " p=" << *w.p;
    if (w.q) std::cout << " q=" << *w.q;
    std::cout << " alpha_d=" << w.alpha_d << "\n";
    const LatticePoint back = lift_g(e, a.dim, a.scale);
    std::cout << "g: roundtrip=" << (back == x ? "ok" : "MISMATCH") << "\n";
    return back == x ? kExitOk : kExitVerification;
}

int run_interlace(int max_d) {
    if (max_d < 2) throw std::invalid_argument("--max-d must be at least 2");
    std::cout << "d,d_next,strict,nonstrict\n";
    bool all_ok = true;
    for (int d = 1; d + 1 <= max_d; ++d) {
        const InterlacingReport rep = interlace_check(d);
        std::cout << d << "," << d + 1 << "," << (rep.strict ? "true" : "false") << ","
                  << (rep.nonstrict ? "true" : "false") << "\n";
        all_ok = all_ok && rep.nonstrict;
    }
    return all_ok ? kExitOk : kExitVerification;
}

struct ReportArgs {
    int max_d = 4;
    Int max_k = 3;
    std::string out;
    std::string format = "csv";
};

int run_report(const ReportArgs& a, std::uint64_t budget) {
    SweepOptions opt;
    opt.max_d = a.max_d;
    opt.max_k = a.max_k;
    opt.budget = budget;
    const SweepReport rep = run_sweep(opt);
    const std::string text = a.format == "json" ? to_json_text(rep) : to_csv(rep);
    if (!write_text_file(a.out, text)) {
        std::cerr << "error: cannot write " << a.out << "\n";
        return kExitUsage;
    }
    std::cout << "report: " << rep.rows.size() << " rows, " << rep.failures
              << " failures -> " << a.out << "\n";
    return rep.failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-point counts, Ehrhart polynomials, boundary bijection and "
                 "root spectra for the dual root polytopes A*_d and C*_d"};
    app.require_subcommand(1);

    std::uint64_t budget = kDefaultBudget;
    app.add_option("--budget", budget,
                   "max membership tests per enumeration (env: EHRHART_LAB_BUDGET)")
        ->envname("EHRHART_LAB_BUDGET")
        ->check(CLI::PositiveNumber);

    const std::map<std::string, Family> family_names{
        {"A", Family::A}, {"C", Family::C}, {"Astar", Family::AStar}, {"Cstar", Family::CStar}};

    CountArgs count_args;
    CLI::App* cmd_count = app.add_subcommand("count", "lattice-point and boundary counts");
    cmd_count->fallthrough();  // let --budget after the subcommand reach the app option
    cmd_count->add_option("--polytope", count_args.family, "family: A, C, Astar, Cstar")
        ->required()
        ->transform(CLI::CheckedTransformer(family_names));
    cmd_count->add_option("--dim", count_args.dim, "dimension d")->required()->check(CLI::Range(1, 10000));
    cmd_count->add_option("--scale", count_args.scale, "dilation factor k")
        ->required()
        ->check(CLI::Range(Int(0), Int(1) << 40));
    cmd_count->add_option("--method", count_args.method,
                          "formula | enumerate | both (default: both for duals, formula for A/C)");

    PolyArgs poly_args;
    CLI::App* cmd_poly = app.add_subcommand("poly", "Ehrhart polynomial coefficients");
    cmd_poly->fallthrough();
    cmd_poly->add_option("--polytope", poly_args.family, "family: A, C, Astar, Cstar")
        ->required()
        ->transform(CLI::CheckedTransformer(family_names));
    cmd_poly->add_option("--dim", poly_args.dim, "dimension d")->required()->check(CLI::Range(1, 10000));
    cmd_poly->add_option("--method", poly_args.method,
                         "formula | interpolate | both (default: both for duals, formula for A/C)");

    RootsArgs roots_args;
    CLI::App* cmd_roots = app.add_subcommand("roots", "Ehrhart root spectrum with line verdict");
    cmd_roots->fallthrough();
    cmd_roots->add_option("--polytope", roots_args.family, "family: A, C, Astar, Cstar")
        ->transform(CLI::CheckedTransformer(family_names));
    cmd_roots->add_option("--dim", roots_args.dim, "dimension d")->required()->check(CLI::Range(1, 10000));
    cmd_roots->add_flag("--closed-form", roots_args.closed_form,
                        "tabulate the closed-form roots instead of solving numerically");
    cmd_roots->add_option("--tol", roots_args.tol, "line-verdict tolerance on |Re(z)+1/2|")
        ->check(CLI::PositiveNumber);

    BijectionArgs bijection_args;
    CLI::App* cmd_bijection =
        app.add_subcommand("bijection", "boundary-shell bijection check or single-point trace");
    cmd_bijection->fallthrough();
    cmd_bijection->add_option("--dim", bijection_args.dim, "dimension d")
        ->required()
        ->check(CLI::Range(1, 10000));
    cmd_bijection->add_option("--scale", bijection_args.scale, "dilation factor k")
        ->required()
        ->check(CLI::Range(Int(1), Int(1) << 40));
    cmd_bijection->add_option("--point", bijection_args.point,
                              "comma-separated point on the shell of k C*_d to trace");

    int interlace_max_d = 2;
    CLI::App* cmd_interlace =
        app.add_subcommand("interlace", "interlacing table for consecutive spectra");
    cmd_interlace->fallthrough();
    cmd_interlace->add_option("--max-d", interlace_max_d, "largest dimension (>= 2)")
        ->required()
        ->check(CLI::Range(2, 100000));

    ReportArgs report_args;
    CLI::App* cmd_report = app.add_subcommand("report", "full verification sweep to a file");
    cmd_report->fallthrough();
    cmd_report->add_option("--max-d", report_args.max_d, "largest dimension")
        ->required()
        ->check(CLI::Range(1, 60));
    cmd_report->add_option("--max-k", report_args.max_k, "largest dilation factor")
        ->required()
        ->check(CLI::Range(Int(1), Int(1) << 20));
    cmd_report->add_option("--out", report_args.out, "output path")->required();
    cmd_report->add_option("--format", report_args.format, "csv | json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_count->parsed()) return run_count(count_args, budget);
        if (cmd_poly->parsed()) return run_poly(poly_args, budget);
        if (cmd_roots->parsed()) return run_roots(roots_args);
        if (cmd_bijection->parsed()) return run_bijection(bijection_args, budget);
        if (cmd_interlace->parsed()) return run_interlace(interlace_max_d);
        if (cmd_report->parsed()) return run_report(report_args, budget);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
