// orderk -- k sequences of generalized order-k numbers, four ways:
// exact recurrence, Hessenberg determinants, Hessenberg permanents, and
// root-based closed forms, cross-validated against each other.

#include <orderk/binet.hpp>
#include <orderk/families.hpp>
#include <orderk/hessenberg.hpp>
#include <orderk/sequence.hpp>
#include <orderk/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using orderk::BigInt;
using orderk::Gaussian;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_rel_err(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
}

bool color_enabled() {
    return ::isatty(::fileno(stderr)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string colorize(const std::string& text, bool good) {
    if (!color_enabled()) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

// ---------------------------------------------------------------------------
// seq

struct SeqConfig {
    int k = 0;
    long long lambda = 0;
    int i = 0;
    bool has_i = false;
    int n_max = 0;
    std::string format = "csv";
};

void run_seq(const SeqConfig& cfg) {
    check_format(cfg.format);
    std::vector<int> i_set;
    if (cfg.has_i) {
        i_set.push_back(cfg.i);
    } else {
        orderk::validate({cfg.k, cfg.lambda});
        for (int i = 1; i <= cfg.k; ++i) i_set.push_back(i);
    }
    const auto table = orderk::seq_table({cfg.k, cfg.lambda}, i_set, cfg.n_max);

    if (cfg.format == "csv") {
        std::string header = "n";
        for (int i : table.i_set) header += ",i=" + std::to_string(i);
        std::cout << header << "\n";
        for (int n = table.n_min; n <= table.n_max; ++n) {
            std::cout << n;
            for (int i : table.i_set) std::cout << "," << table.at(n, i).str();
            std::cout << "\n";
        }
        return;
    }
    json out;
    out["params"] = {{"k", cfg.k},     {"lambda", cfg.lambda},   {"i_set", table.i_set},
                     {"n_min", table.n_min}, {"n_max", table.n_max}};
    out["rows"] = json::array();
    for (int n = table.n_min; n <= table.n_max; ++n) {
        json values = json::array();
        for (int i : table.i_set) values.push_back(table.at(n, i).str());
        out["rows"].push_back({{"n", n}, {"values", values}});
    }
    std::cout << out.dump() << "\n";
}

// ---------------------------------------------------------------------------
// matrix / det / perm

struct MatrixConfig {
    std::string family;
    int k = 0;
    int n = 0;
    long long lambda = 0;
    int i = 0;
    bool has_i = false;
    std::string method = "band";
    std::string format = "csv";
};

orderk::FamilySpec to_spec(const MatrixConfig& cfg) {
    orderk::FamilySpec spec;
    spec.family = orderk::parse_family(cfg.family);
    spec.k = cfg.k;
    spec.n = cfg.n;
    spec.lambda = cfg.lambda;
    if (cfg.has_i) spec.border = cfg.i;
    return spec;
}

json entry_json(const BigInt& v) { return v.str(); }
json entry_json(const Gaussian<BigInt>& v) { return {{"re", v.re.str()}, {"im", v.im.str()}}; }

void run_matrix(const MatrixConfig& cfg) {
    check_format(cfg.format);
    const auto spec = to_spec(cfg);
    const auto matrix = orderk::build(spec);

    if (cfg.format == "csv") {
        std::visit(
            [&](const auto& m) {
                std::string header;
                for (int t = 0; t < m.dim(); ++t)
                    header += (t == 0 ? "c" : ",c") + std::to_string(t + 1);
                std::cout << header << "\n";
                for (int s = 0; s < m.dim(); ++s) {
                    for (int t = 0; t < m.dim(); ++t)
                        std::cout << (t == 0 ? "" : ",") << m.at(s, t).str();
                    std::cout << "\n";
                }
            },
            matrix);
        return;
    }
    json out;
    out["params"] = {{"family", cfg.family}, {"k", cfg.k}, {"n", cfg.n}, {"lambda", cfg.lambda}};
    if (cfg.has_i) out["params"]["i"] = cfg.i;
    out["rows"] = json::array();
    std::visit(
        [&](const auto& m) {
            for (int s = 0; s < m.dim(); ++s) {
                json row = json::array();
                for (int t = 0; t < m.dim(); ++t) row.push_back(entry_json(m.at(s, t)));
                out["rows"].push_back(std::move(row));
            }
        },
        matrix);
    std::cout << out.dump() << "\n";
}

BigInt evaluate(const orderk::FamilyMatrix& matrix, bool permanent, const std::string& method) {
    if (method == "band") return permanent ? orderk::family_perm(matrix) : orderk::family_det(matrix);
    if (method != "naive")
        throw std::invalid_argument("unknown method '" + method + "' (expected band or naive)");
    return std::visit(
        [&](const auto& m) {
            const auto dense = m.to_dense();
            using Ring = std::decay_t<decltype(m.at(0, 0))>;
            const Ring value = permanent ? orderk::perm_naive(dense) : orderk::det_naive(dense);
            if constexpr (std::is_same_v<Ring, Gaussian<BigInt>>)
                return orderk::require_real(value);
            else
                return value;
        },
        matrix);
}

void run_det_or_perm(const MatrixConfig& cfg, bool permanent) {
    check_format(cfg.format);
    const BigInt value = evaluate(orderk::build(to_spec(cfg)), permanent, cfg.method);
    if (cfg.format == "csv") {
        std::cout << "family,k,n,lambda,i,method,value\n";
        std::cout << cfg.family << "," << cfg.k << "," << cfg.n << "," << cfg.lambda << ","
                  << (cfg.has_i ? std::to_string(cfg.i) : "") << "," << cfg.method << ","
                  << value.str() << "\n";
        return;
    }
    json out;
    out["params"] = {{"family", cfg.family}, {"k", cfg.k}, {"n", cfg.n}, {"lambda", cfg.lambda}};
    if (cfg.has_i) out["params"]["i"] = cfg.i;
    out["rows"] = json::array({{{"method", cfg.method}, {"value", value.str()}}});
    std::cout << out.dump() << "\n";
}

// ---------------------------------------------------------------------------
// binet

struct BinetConfig {
    int k = 0;
    long long lambda = 0;
    int n = 0;
    int i = 0;
    bool has_i = false;
    std::string format = "csv";
};

void run_binet(const BinetConfig& cfg) {
    check_format(cfg.format);
    const int i = cfg.has_i ? cfg.i : cfg.k;
    const double estimate = orderk::binet_ith(cfg.k, cfg.lambda, i, cfg.n);
    const BigInt exact = orderk::seq_value({cfg.k, cfg.lambda}, i, cfg.n);
    const double rel_err = std::abs(estimate - exact.to_double()) / std::abs(exact.to_double());

    if (cfg.format == "csv") {
        std::cout << "k,lambda,i,n,estimate,exact,rel_err\n";
        std::cout << cfg.k << "," << cfg.lambda << "," << i << "," << cfg.n << ","
                  << format_double(estimate) << "," << exact.str() << "," << format_rel_err(rel_err)
                  << "\n";
        return;
    }
    json out;
    out["params"] = {{"k", cfg.k}, {"lambda", cfg.lambda}, {"i", i}, {"n", cfg.n}};
    out["rows"] = json::array(
        {{{"estimate", estimate}, {"exact", exact.str()}, {"rel_err", rel_err}}});
    std::cout << out.dump() << "\n";
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    int k_max = 5;
    int n_max = 20;
    std::string lambdas = "1,2,3";
    double tolerance = 1e-9;
    std::string format = "csv";
};

std::vector<long long> parse_lambda_list(const std::string& text) {
    std::vector<long long> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad lambda list entry '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("lambda list is empty");
    return values;
}

int run_verify_cmd(const VerifyConfig& cfg) {
    check_format(cfg.format);
    orderk::VerifyOptions opts;
    opts.k_max = cfg.k_max;
    opts.n_max = cfg.n_max;
    opts.lambdas = parse_lambda_list(cfg.lambdas);
    opts.tolerance = cfg.tolerance;
    const auto report = orderk::run_verify(opts);

    if (cfg.format == "csv") {
        std::cout << "k,lambda,i,n,method,expected,actual,rel_err,status\n";
        for (const auto& row : report.rows) {
            std::cout << row.k << "," << row.lambda << "," << row.i << "," << row.n << ","
                      << row.method << "," << row.expected << "," << row.actual << ","
                      << (std::isnan(row.rel_err) ? "" : format_rel_err(row.rel_err)) << ","
                      << (row.pass ? "ok" : "FAIL") << "\n";
        }
    } else {
        json out;
        out["params"] = {{"k_max", cfg.k_max},
                         {"n_max", cfg.n_max},
                         {"lambda", opts.lambdas},
                         {"tolerance", cfg.tolerance}};
        out["rows"] = json::array();
        for (const auto& row : report.rows) {
            json item = {{"k", row.k},           {"lambda", row.lambda}, {"i", row.i},
                         {"n", row.n},           {"method", row.method}, {"expected", row.expected},
                         {"actual", row.actual}, {"status", row.pass ? "ok" : "FAIL"}};
            if (!std::isnan(row.rel_err)) item["rel_err"] = row.rel_err;
            out["rows"].push_back(std::move(item));
        }
        out["status"] = report.all_pass ? "PASS" : "FAIL";
        std::cout << out.dump() << "\n";
    }

    std::cerr << "verify: " << colorize(report.all_pass ? "PASS" : "FAIL", report.all_pass) << " ("
              << report.rows.size() << " checks)\n";
    return report.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

struct BenchConfig {
    int k = 0;
    long long lambda = 0;
    std::string n_list;
    std::string methods = "recurrence,det-B";
    int repeats = 5;
    std::string format = "csv";
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

struct BenchMethod {
    std::string name;
    bool naive = false;
    bool closed_form = false;
    std::function<std::string(int)> run;  // returns the computed value as text
};

int run_bench(const BenchConfig& cfg) {
    check_format(cfg.format);
    if (cfg.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    orderk::validate({cfg.k, cfg.lambda});

    std::vector<int> dims;
    for (const auto& item : split_list(cfg.n_list)) {
        std::size_t used = 0;
        const int n = std::stoi(item, &used);
        if (used != item.size() || n < 1) throw std::invalid_argument("bad n-list entry '" + item + "'");
        dims.push_back(n);
    }
    if (dims.empty()) throw std::invalid_argument("n-list is empty");

    const int k = cfg.k;
    const long long lambda = cfg.lambda;
    const auto methods = split_list(cfg.methods);
    if (methods.empty()) throw std::invalid_argument("methods list is empty");

    const auto make = [&](const std::string& name) -> BenchMethod {
        if (name == "recurrence")
            return {name, false, false,
                    [=](int n) { return orderk::seq_value({k, lambda}, k, n + 1).str(); }};
        if (name == "det-Q")
            return {name, false, false, [=](int n) {
                        return orderk::require_real(det_hessenberg(orderk::build_q(k, n, lambda))).str();
                    }};
        if (name == "det-B")
            return {name, false, false,
                    [=](int n) { return det_hessenberg(orderk::build_b(k, n, lambda)).str(); }};
        if (name == "per-H")
            return {name, false, false, [=](int n) {
                        return orderk::require_real(perm_hessenberg(orderk::build_h(k, n, lambda))).str();
                    }};
        if (name == "per-D")
            return {name, false, false,
                    [=](int n) { return perm_hessenberg(orderk::build_d(k, n, lambda)).str(); }};
        if (name == "det-naive")
            return {name, true, false, [=](int n) {
                        return orderk::det_naive(orderk::build_b(k, n, lambda).to_dense()).str();
                    }};
        if (name == "per-naive")
            return {name, true, false, [=](int n) {
                        return orderk::perm_naive(orderk::build_d(k, n, lambda).to_dense()).str();
                    }};
        if (name == "binet")
            return {name, false, true,
                    [=](int n) { return format_double(orderk::binet_kth(k, lambda, n)); }};
        throw std::invalid_argument("unknown method '" + name + "'");
    };

    std::vector<BenchMethod> plan;
    for (const auto& name : methods) plan.push_back(make(name));

    for (const auto& method : plan)
        for (int n : dims) {
            if (method.naive && n > 9)
                throw std::invalid_argument("method " + method.name + " is capped at n <= 9");
            if (method.closed_form && n < k)
                throw std::invalid_argument("method binet requires n >= k");
        }

    struct BenchRow {
        int n;
        std::string method;
        long long median_ns;
        std::string value;
    };
    std::vector<BenchRow> rows;

    for (int n : dims) {
        const BigInt exact = orderk::seq_value({k, lambda}, k, n + 1);
        // cross-check every method before timing anything at this size
        std::vector<std::string> values;
        for (const auto& method : plan) {
            const std::string value = method.run(n);
            if (method.closed_form) {
                const double estimate = std::stod(value);
                if (!std::isfinite(estimate))
                    throw std::invalid_argument("binet estimate is not finite at n=" +
                                                std::to_string(n));
                const double rel =
                    std::abs(estimate - exact.to_double()) / std::abs(exact.to_double());
                if (rel > 1e-9)
                    throw std::runtime_error("cross-check failed: binet off by " +
                                             format_rel_err(rel) + " at n=" + std::to_string(n));
            } else if (value != exact.str()) {
                throw std::runtime_error("cross-check failed: " + method.name + " != recurrence at n=" +
                                         std::to_string(n));
            }
            values.push_back(value);
        }
        for (std::size_t m = 0; m < plan.size(); ++m) {
            std::vector<long long> samples;
            samples.reserve(static_cast<std::size_t>(cfg.repeats));
            long long sink = 0;
            for (int rep = 0; rep < cfg.repeats; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const std::string value = plan[m].run(n);
                const auto stop = std::chrono::steady_clock::now();
                sink += static_cast<long long>(value.size());
                samples.push_back(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
            }
            if (sink == 0) std::cerr << "";  // keep the timed calls observable
            std::sort(samples.begin(), samples.end());
            rows.push_back({n, plan[m].name, samples[samples.size() / 2], values[m]});
        }
    }

    if (cfg.format == "csv") {
        std::cout << "k,lambda,n,method,median_ns,value\n";
        for (const auto& row : rows)
            std::cout << k << "," << lambda << "," << row.n << "," << row.method << ","
                      << row.median_ns << "," << row.value << "\n";
    } else {
        json out;
        out["params"] = {{"k", k}, {"lambda", lambda}, {"repeats", cfg.repeats}};
        out["rows"] = json::array();
        for (const auto& row : rows)
            out["rows"].push_back({{"n", row.n},
                                   {"method", row.method},
                                   {"median_ns", row.median_ns},
                                   {"value", row.value}});
        std::cout << out.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k sequences of generalized order-k numbers: exact recurrences, Hessenberg "
                 "determinant/permanent representations and root-based closed forms"};
    app.require_subcommand(1);

    SeqConfig seq_cfg;
    auto* seq_cmd = app.add_subcommand("seq", "print a table of sequence values");
    seq_cmd->add_option("--k", seq_cfg.k, "order k (>= 2)")->required();
    seq_cmd->add_option("--lambda", seq_cfg.lambda, "weight lambda (>= 1)")->required();
    auto* seq_i = seq_cmd->add_option("--i", seq_cfg.i, "single sequence index (default: all)");
    seq_cmd->add_option("--n-max", seq_cfg.n_max, "largest n (table starts at n = 1-k)")->required();
    seq_cmd->add_option("--format", seq_cfg.format, "csv or json");

    MatrixConfig matrix_cfg;
    auto* matrix_cmd = app.add_subcommand("matrix", "emit a family matrix");
    matrix_cmd->add_option("--family", matrix_cfg.family, "Q, B, H or D")->required();
    matrix_cmd->add_option("--k", matrix_cfg.k, "order k")->required();
    matrix_cmd->add_option("--n", matrix_cfg.n, "dimension n")->required();
    matrix_cmd->add_option("--lambda", matrix_cfg.lambda, "weight lambda")->required();
    auto* matrix_i = matrix_cmd->add_option("--i", matrix_cfg.i, "border index (bordered variant)");
    matrix_cmd->add_option("--format", matrix_cfg.format, "csv or json");

    MatrixConfig det_cfg;
    auto* det_cmd = app.add_subcommand("det", "determinant of a family matrix");
    det_cmd->add_option("--family", det_cfg.family, "Q, B, H or D")->required();
    det_cmd->add_option("--k", det_cfg.k, "order k")->required();
    det_cmd->add_option("--n", det_cfg.n, "dimension n")->required();
    det_cmd->add_option("--lambda", det_cfg.lambda, "weight lambda")->required();
    auto* det_i = det_cmd->add_option("--i", det_cfg.i, "border index");
    det_cmd->add_option("--method", det_cfg.method, "band (O(n*k) recursion) or naive (n <= 9)");
    det_cmd->add_option("--format", det_cfg.format, "csv or json");

    MatrixConfig perm_cfg;
    auto* perm_cmd = app.add_subcommand("perm", "permanent of a family matrix");
    perm_cmd->add_option("--family", perm_cfg.family, "Q, B, H or D")->required();
    perm_cmd->add_option("--k", perm_cfg.k, "order k")->required();
    perm_cmd->add_option("--n", perm_cfg.n, "dimension n")->required();
    perm_cmd->add_option("--lambda", perm_cfg.lambda, "weight lambda")->required();
    auto* perm_i = perm_cmd->add_option("--i", perm_cfg.i, "border index");
    perm_cmd->add_option("--method", perm_cfg.method, "band or naive");
    perm_cmd->add_option("--format", perm_cfg.format, "csv or json");

    BinetConfig binet_cfg;
    auto* binet_cmd = app.add_subcommand("binet", "closed-form estimate of a^i_{k,n}");
    binet_cmd->add_option("--k", binet_cfg.k, "order k")->required();
    binet_cmd->add_option("--lambda", binet_cfg.lambda, "weight lambda")->required();
    binet_cmd->add_option("--n", binet_cfg.n, "sequence index n")->required();
    auto* binet_i = binet_cmd->add_option("--i", binet_cfg.i, "sequence index i (default k)");
    binet_cmd->add_option("--format", binet_cfg.format, "csv or json");

    VerifyConfig verify_cfg;
    auto* verify_cmd =
        app.add_subcommand("verify", "cross-check all methods against the exact recurrence");
    verify_cmd->add_option("--k-max", verify_cfg.k_max, "largest order (default 5)");
    verify_cmd->add_option("--n-max", verify_cfg.n_max, "largest dimension (default 20)");
    verify_cmd->add_option("--lambda", verify_cfg.lambdas, "comma-separated lambdas (default 1,2,3)");
    verify_cmd->add_option("--tolerance", verify_cfg.tolerance,
                           "relative tolerance for closed forms (default 1e-9)");
    verify_cmd->add_option("--format", verify_cfg.format, "csv or json");

    BenchConfig bench_cfg;
    auto* bench_cmd = app.add_subcommand("bench", "time the methods (values cross-checked first)");
    bench_cmd->add_option("--k", bench_cfg.k, "order k")->required();
    bench_cmd->add_option("--lambda", bench_cfg.lambda, "weight lambda")->required();
    bench_cmd->add_option("--n-list", bench_cfg.n_list, "comma-separated dimensions")->required();
    bench_cmd->add_option("--methods", bench_cfg.methods,
                          "comma-separated: recurrence,det-Q,det-B,per-H,per-D,det-naive,per-naive,"
                          "binet (default recurrence,det-B)");
    bench_cmd->add_option("--repeats", bench_cfg.repeats, "timing repeats, median reported (default 5)");
    bench_cmd->add_option("--format", bench_cfg.format, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    seq_cfg.has_i = seq_i->count() > 0;
    matrix_cfg.has_i = matrix_i->count() > 0;
    det_cfg.has_i = det_i->count() > 0;
    perm_cfg.has_i = perm_i->count() > 0;
    binet_cfg.has_i = binet_i->count() > 0;

    try {
        if (*seq_cmd) {
            run_seq(seq_cfg);
        } else if (*matrix_cmd) {
            run_matrix(matrix_cfg);
        } else if (*det_cmd) {
            run_det_or_perm(det_cfg, /*permanent=*/false);
        } else if (*perm_cmd) {
            run_det_or_perm(perm_cfg, /*permanent=*/true);
        } else if (*binet_cmd) {
            run_binet(binet_cfg);
        } else if (*verify_cmd) {
            return run_verify_cmd(verify_cfg);
        } else if (*bench_cmd) {
            return run_bench(bench_cfg);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
