// pellmat command-line front end: Pell sequences through either route,
// determinants of N(n), Laplace expansion traces, identity sweeps and
// engine benchmarks. JSON by default; csv/text for other consumers.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <pellmat/json_io.hpp>
#include <pellmat/pell.hpp>

using namespace pellmat;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kIdentityFailure = 1, kBadConfig = 2, kGuardTrip = 3 };

std::uint64_t expansion_limit() {
    if (const char* env = std::getenv("PELLMAT_MAX_EXPANSION")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultExpansionLimit;
}

int cmd_pell(unsigned long n_max, const std::string& via, const std::string& format) {
    for (unsigned long n = 0; n <= n_max; ++n) {
        // pell_via_det(n-1) yields P_n; N(0) is empty, so P_0 and P_1
        // always come from the recurrence.
        mpz_class p = (via == "det" && n >= 2) ? pell_via_det(n - 1) : pell(n);
        if (format == "json") {
            std::cout << json{{"n", n}, {"pell", p.get_str()}}.dump() << "\n";
        } else if (format == "csv") {
            std::cout << n << "," << p.get_str() << "\n";
        } else {
            std::cout << "P_" << n << " = " << p.get_str() << "\n";
        }
    }
    return kOk;
}

int cmd_det(unsigned long n, const std::string& engine, const std::string& format) {
    GaussInt det;
    if (engine == "continuant") {
        det = det_continuant(build_pell_matrix(n));
    } else {
        DenseMatrix a = materialize(build_pell_matrix(n));
        if (engine == "permutation") {
            if (n > 9) {
                std::cerr << "permutation oracle capped at n = 9\n";
                return kGuardTrip;
            }
            det = det_permutation(a);
        } else {
            det = det_bareiss(a);
        }
    }
    UnitPhase m = unit_multiplier(n);
    GaussInt corrected = as_gauss(m) * det;
    if (format == "json") {
        std::cout << json{{"n", n},
                          {"engine", engine},
                          {"det", to_json(det)},
                          {"unit", unit_str(m)},
                          {"pell_next", corrected.re.get_str()}}
                         .dump()
                  << "\n";
    } else if (format == "csv") {
        std::cout << n << "," << engine << "," << det.str() << "," << unit_str(m) << ","
                  << corrected.re.get_str() << "\n";
    } else {
        std::cout << "det N(" << n << ") = " << det.str() << "   m = " << unit_str(m)
                  << "   m*det = P_" << n + 1 << " = " << corrected.re.get_str() << "\n";
    }
    return kOk;
}

int cmd_expand(unsigned long n, const std::vector<std::size_t>& rows, bool show_zero,
               const std::string& format) {
    DenseMatrix a = materialize(build_pell_matrix(n));
    RowExpansion ex;
    try {
        ex = laplace_expand(a, IndexSet(rows), show_zero, expansion_limit());
    } catch (const ExpansionTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kGuardTrip;
    }
    if (format == "json") {
        std::cout << to_json(ex).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "cols,block,cofactor,product\n";
        for (const auto& t : ex.terms) {
            std::cout << "\"";
            for (std::size_t i = 0; i < t.cols.size(); ++i)
                std::cout << (i ? " " : "") << t.cols[i];
            std::cout << "\"," << t.block_det.str() << "," << t.cofactor.str() << ","
                      << t.signed_product.str() << "\n";
        }
        std::cout << "total,,," << ex.total.str() << "\n";
    } else {
        std::cout << "expansion of N(" << n << ") along rows [";
        for (std::size_t i = 0; i < ex.rows.size(); ++i)
            std::cout << (i ? "," : "") << ex.rows[i];
        std::cout << "]: " << ex.terms.size() << " term(s)\n";
        for (const auto& t : ex.terms) {
            std::cout << "  cols [";
            for (std::size_t i = 0; i < t.cols.size(); ++i)
                std::cout << (i ? "," : "") << t.cols[i];
            std::cout << "]  block = " << t.block_det.str()
                      << "  cofactor = " << t.cofactor.str()
                      << "  product = " << t.signed_product.str() << "\n";
        }
        std::cout << "total = " << ex.total.str() << "\n";
    }
    return kOk;
}

struct SweepResult {
    unsigned long total = 0;
    std::vector<IdentityReport> failures;      // genuine identity failures
    std::vector<IdentityReport> discrepancies; // cofactor-table mismatches
};

void emit_report(const IdentityReport& r, const std::string& format, SweepResult& acc) {
    ++acc.total;
    if (!r.verdict) {
        if (r.id == IdentityId::CofactorTable)
            acc.discrepancies.push_back(r);
        else
            acc.failures.push_back(r);
    }
    if (format == "json") {
        std::cout << to_json(r).dump() << "\n";
    } else if (format == "csv") {
        std::cout << identity_str(r.id) << ",";
        for (auto it = r.params.begin(); it != r.params.end(); ++it)
            std::cout << (it == r.params.begin() ? "" : ";") << it->first << "="
                      << it->second;
        std::cout << "," << r.lhs.str() << "," << r.rhs.str() << "," << engine_str(r.engine)
                  << "," << (r.verdict ? "true" : "false") << "\n";
    }
    // text mode prints only the trailing summary
}

int cmd_verify(const std::string& suite, unsigned long from, unsigned long to,
               const std::string& format) {
    SweepResult acc;
    auto lo = [&](unsigned long floor_n) { return std::max(from, floor_n); };

    if (suite == "convolution" || suite == "all") {
        for (unsigned long n = lo(1); n <= to; ++n)
            for (unsigned long k = 1; k <= n; ++k)
                emit_report(verify_convolution(n, static_cast<long long>(k)), format, acc);
    }
    if (suite == "doubling" || suite == "all") {
        for (unsigned long n = lo(1); n <= to; ++n)
            emit_report(verify_doubling(n), format, acc);
    }
    if (suite == "det-equation" || suite == "all") {
        for (unsigned long n = lo(2); n <= to; ++n)
            emit_report(verify_det_equation(n), format, acc);
    }
    if (suite == "cofactor-tables" || suite == "all") {
        for (unsigned long n = lo(2); n <= to; ++n) {
            if (n >= 4) {
                for (auto& r : verify_cofactor_tables(n, CofactorTable::FirstRow))
                    emit_report(r, format, acc);
                for (auto& r : verify_cofactor_tables(n, CofactorTable::TwoRow))
                    emit_report(r, format, acc);
            }
            if (n >= 5)
                for (auto& r : verify_cofactor_tables(n, CofactorTable::ThreeRow))
                    emit_report(r, format, acc);
            for (auto& r : verify_cofactor_tables(n, CofactorTable::DoublingBlocks))
                emit_report(r, format, acc);
        }
    }

    json summary{{"suite", suite},
                 {"reports", acc.total},
                 {"failures", acc.failures.size()},
                 {"paper_discrepancies", acc.discrepancies.size()}};
    if (format == "json") {
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "suite " << suite << ": " << acc.total << " reports, "
                  << acc.failures.size() << " failure(s), " << acc.discrepancies.size()
                  << " paper discrepancy(ies)\n";
    }
    if (!acc.discrepancies.empty()) {
        std::cout << "paper-discrepancy section:\n";
        for (const auto& r : acc.discrepancies)
            std::cout << "  " << to_json(r).dump() << "\n";
    }
    if (!acc.failures.empty()) {
        for (const auto& r : acc.failures)
            std::cerr << "FAIL " << to_json(r).dump() << "\n";
        return kIdentityFailure;
    }
    return kOk;
}

int cmd_bench(const std::vector<unsigned long>& sizes,
              const std::vector<std::string>& engines, const std::string& format) {
    if (format == "csv") std::cout << "engine,n,ms,digits\n";
    for (unsigned long n : sizes) {
        for (const std::string& eng : engines) {
            bool skipped = false;
            GaussInt det;
            double ms = 0.0;
            if (eng == "permutation" && n > 9) {
                skipped = true;
            } else {
                auto t0 = std::chrono::steady_clock::now();
                if (eng == "continuant") {
                    det = det_continuant(build_pell_matrix(n));
                } else {
                    DenseMatrix a = materialize(build_pell_matrix(n));
                    if (eng == "permutation")
                        det = det_permutation(a);
                    else if (eng == "laplace")
                        det = laplace_expand(a, IndexSet({1}), false, expansion_limit())
                                  .total;
                    else
                        det = det_bareiss(a);
                }
                ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
            }
            std::size_t digits = 0;
            if (!skipped) {
                const mpz_class& big = det.is_real() ? det.re : det.im;
                digits = mpz_sizeinbase(big.get_mpz_t(), 10);
            }
            if (format == "json") {
                json row{{"engine", eng}, {"n", n}};
                if (skipped) {
                    row["skipped"] = true;
                } else {
                    row["ms"] = ms;
                    row["digits"] = digits;
                    row["det"] = to_json(det);
                }
                std::cout << row.dump() << "\n";
            } else if (format == "csv") {
                if (skipped)
                    std::cout << eng << "," << n << ",skipped,\n";
                else
                    std::cout << eng << "," << n << "," << ms << "," << digits << "\n";
            } else {
                if (skipped)
                    std::cout << eng << " n=" << n << "  skipped (guard)\n";
                else
                    std::cout << eng << " n=" << n << "  " << ms << " ms  " << digits
                              << " digits\n";
            }
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pell-number determinant toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    unsigned long pell_max = 0;
    std::string pell_via = "recurrence";
    auto* sc_pell = app.add_subcommand("pell", "Emit P_0..P_max");
    sc_pell->add_option("--max", pell_max, "Largest index")->required();
    sc_pell->add_option("--via", pell_via, "Route")
        ->check(CLI::IsMember({"recurrence", "det"}));

    unsigned long det_n = 1;
    std::string det_engine = "continuant";
    auto* sc_det = app.add_subcommand("det", "Determinant of N(n)");
    sc_det->add_option("--n", det_n, "Matrix order")->required()->check(CLI::PositiveNumber);
    sc_det->add_option("--engine", det_engine, "Engine")
        ->check(CLI::IsMember({"continuant", "bareiss", "permutation"}));

    unsigned long ex_n = 1;
    std::string ex_rows;
    bool ex_zero = false;
    auto* sc_expand = app.add_subcommand("expand", "Laplace expansion trace of N(n)");
    sc_expand->add_option("--n", ex_n, "Matrix order")->required()->check(CLI::PositiveNumber);
    sc_expand->add_option("--rows", ex_rows, "Comma-separated 1-based row set")->required();
    sc_expand->add_flag("--show-zero-terms", ex_zero, "Keep zero-block terms");

    std::string vf_suite = "all";
    unsigned long vf_from = 1, vf_to = 10;
    auto* sc_verify = app.add_subcommand("verify", "Identity verification sweep");
    sc_verify->add_option("--suite", vf_suite, "Which identities")
        ->check(CLI::IsMember(
            {"convolution", "doubling", "det-equation", "cofactor-tables", "all"}));
    sc_verify->add_option("--from", vf_from, "Sweep start");
    sc_verify->add_option("--to", vf_to, "Sweep end")->required();

    std::string bn_sizes, bn_engines = "continuant,bareiss";
    auto* sc_bench = app.add_subcommand("bench", "Engine timing on N(n)");
    sc_bench->add_option("--sizes", bn_sizes, "Comma-separated matrix orders")->required();
    sc_bench->add_option("--engines", bn_engines, "Comma-separated engine list");

    // lets --format appear after the subcommand name
    for (auto* sc : {sc_pell, sc_det, sc_expand, sc_verify, sc_bench}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kBadConfig;
    }

    auto split_sizes = [](const std::string& s) {
        std::vector<unsigned long> out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            out.push_back(std::stoul(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return out;
    };
    auto split_names = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            out.push_back(s.substr(pos, comma - pos));
            pos = comma + 1;
        }
        return out;
    };

    try {
        if (sc_pell->parsed()) return cmd_pell(pell_max, pell_via, format);
        if (sc_det->parsed()) return cmd_det(det_n, det_engine, format);
        if (sc_expand->parsed())
            return cmd_expand(ex_n, split_sizes(ex_rows), ex_zero, format);
        if (sc_verify->parsed()) {
            if (vf_to < vf_from) {
                std::cerr << "empty sweep range\n";
                return kBadConfig;
            }
            return cmd_verify(vf_suite, vf_from, vf_to, format);
        }
        if (sc_bench->parsed()) {
            auto sizes = split_sizes(bn_sizes);
            auto engines = split_names(bn_engines);
            for (const auto& e : engines)
                if (e != "continuant" && e != "bareiss" && e != "permutation" &&
                    e != "laplace") {
                    std::cerr << "unknown engine: " << e << "\n";
                    return kBadConfig;
                }
            return cmd_bench(sizes, engines, format);
        }
    } catch (const ExpansionTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kGuardTrip;
    } catch (const TooLargeForOracle& e) {
        std::cerr << e.what() << "\n";
        return kGuardTrip;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kBadConfig;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kBadConfig;
    }
    return kBadConfig;
}
