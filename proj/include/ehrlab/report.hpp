#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bijection.hpp"
#include "ehrhart.hpp"
#include "roots.hpp"

namespace ehrlab {

/// One verification row of a sweep. `count`/`boundary` are set for counting
/// rows only; everything non-tabular rides in `detail` as key=value pairs.
struct ReportRow {
    std::string kind;      // count | bijection | roots | interlace
    std::string polytope;  // Astar | Cstar | empty when not applicable
    int d = 0;
    std::optional<Int> k;
    std::optional<BigInt> count;
    std::optional<BigInt> boundary;
    std::string source;
    bool pass = true;
    std::string detail;
};

struct SweepOptions {
    int max_d = 4;
    Int max_k = 3;
    std::uint64_t budget = kDefaultBudget;
    double cl_tol = kDefaultClTol;
    double match_tol = kDefaultMatchTol;
};

struct SweepReport {
    SweepOptions options;
    std::vector<ReportRow> rows;
    std::uint64_t failures = 0;
};

/// Fixed-precision float formatting (12 significant digits) so that report
/// files are byte-identical across runs.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Runs the full verification sweep:
///   - counts: formula vs. enumeration for A*_d and C*_d, d <= max_d, k <= max_k
///   - bijection round trips for C*_d, k = 1..max_k
///   - numeric roots vs. closed-form roots (with the line check) per degree
///   - interlacing of consecutive closed-form spectra
/// Budget overruns propagate as BudgetError; nothing else throws on a mere
/// verification failure — failed rows are recorded and counted.
inline SweepReport run_sweep(const SweepOptions& opt = {}) {
    if (opt.max_d < 1) throw std::invalid_argument("run_sweep: max_d must be positive");
    if (opt.max_k < 1) throw std::invalid_argument("run_sweep: max_k must be positive");
    SweepReport rep;
    rep.options = opt;
    auto push = [&rep](ReportRow row) {
        if (!row.pass) ++rep.failures;
        rep.rows.push_back(std::move(row));
    };
    for (const Family family : {Family::AStar, Family::CStar}) {
        for (int d = 1; d <= opt.max_d; ++d) {
            const HPolytope P =
                family == Family::AStar ? build_a_star(d) : build_c_star(d);
            for (Int k = 0; k <= opt.max_k; ++k) {
                const CountResult seen = count(P, k, opt.budget);
                const Rational total_cf = eval_closed_form(family, d, k);
                const Rational bnd_cf =
                    k == 0 ? Rational(0) : total_cf - eval_closed_form(family, d, k - 1);
                ReportRow row{"count", to_string(family), d, k,
                              seen.total, seen.boundary, "formula+enumeration", true, ""};
                if (Rational(seen.total) != total_cf || Rational(seen.boundary) != bnd_cf) {
                    row.pass = false;
                    row.detail = "formula_count=" + to_decimal_string(total_cf) +
                                 ";formula_boundary=" + to_decimal_string(bnd_cf);
                }
                push(std::move(row));
            }
        }
    }
    for (int d = 1; d <= opt.max_d; ++d) {
        for (Int k = 1; k <= opt.max_k; ++k) {
            const BijectionReport b = verify_bijection(d, k, opt.budget);
            ReportRow row{"bijection", "Cstar", d, k, b.a_size, std::nullopt,
                          "roundtrip", b.ok(), "b_size=" + b.b_size().str()};
            if (b.failures != 0 && !b.failure_samples.empty())
                row.detail += ";first=" + b.failure_samples.front();
            push(std::move(row));
        }
    }
    for (int d = 1; d <= opt.max_d && d <= kMaxNumericDegree; ++d) {
        const std::vector<CanonicalRoot> closed = closed_form_roots(d);
        const std::vector<Complex> numeric =
            numeric_roots(closed_form_polynomial(Family::CStar, d));
        double root_dev = 0;
        for (std::size_t i = 0; i < closed.size(); ++i)
            root_dev = std::max(root_dev, std::abs(numeric[i] - closed[i].value()));
        const ClVerdict cl = cl_check(numeric, opt.cl_tol);
        ReportRow row{"roots", "Cstar", d, std::nullopt, std::nullopt, std::nullopt,
                      "numeric+closed-form",
                      root_dev <= opt.match_tol && cl.on_line,
                      "root_dev=" + format_double(root_dev) +
                          ";re_dev=" + format_double(cl.max_deviation)};
        push(std::move(row));
    }
    for (int d = 1; d + 1 <= opt.max_d; ++d) {
        const InterlacingReport il = interlace_check(d);
        ReportRow row{"interlace", "Cstar", d, std::nullopt, std::nullopt, std::nullopt,
                      "closed-form", il.nonstrict,
                      std::string("upper=") + std::to_string(d + 1) +
                          ";strict=" + (il.strict ? "true" : "false")};
        push(std::move(row));
    }
    return rep;
}

namespace detail {

inline void csv_cell(std::string& out, const std::string& v, bool last = false) {
    out += v;
    out += last ? '\n' : ',';
}

}  // namespace detail

/// CSV with a fixed header, LF line endings, counts as decimal strings.
inline std::string to_csv(const SweepReport& rep) {
    std::string out = "kind,polytope,d,k,count,boundary,source,pass,detail\n";
    for (const ReportRow& r : rep.rows) {
        detail::csv_cell(out, r.kind);
        detail::csv_cell(out, r.polytope);
        detail::csv_cell(out, std::to_string(r.d));
        detail::csv_cell(out, r.k ? std::to_string(*r.k) : "");
        detail::csv_cell(out, r.count ? r.count->str() : "");
        detail::csv_cell(out, r.boundary ? r.boundary->str() : "");
        detail::csv_cell(out, r.source);
        detail::csv_cell(out, r.pass ? "PASS" : "FAIL");
        detail::csv_cell(out, r.detail, true);
    }
    return out;
}

/// JSON mirror of the CSV: insertion-ordered keys, counts as decimal
/// strings (they outgrow every native JSON integer width).
inline std::string to_json_text(const SweepReport& rep) {
    nlohmann::ordered_json j;
    j["max_d"] = rep.options.max_d;
    j["max_k"] = rep.options.max_k;
    j["failures"] = rep.failures;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& r : rep.rows) {
        nlohmann::ordered_json row;
        row["kind"] = r.kind;
        row["polytope"] = r.polytope;
        row["d"] = r.d;
        if (r.k) row["k"] = *r.k; else row["k"] = nullptr;
        if (r.count) row["count"] = r.count->str(); else row["count"] = nullptr;
        if (r.boundary) row["boundary"] = r.boundary->str(); else row["boundary"] = nullptr;
        row["source"] = r.source;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

/// Writes content through a temporary sibling and renames it into place, so
/// a failure never leaves a truncated report behind. Returns false on any
/// I/O error.
inline bool write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return false;
    const bool wrote = std::fwrite(content.data(), 1, content.size(), f) == content.size();
    const bool closed = std::fclose(f) == 0;
    if (!wrote || !closed) {
        std::remove(tmp.c_str());
        return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        return false;
    }
    return true;
}

}  // namespace ehrlab
