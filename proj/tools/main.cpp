#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/closedform.hpp"
#include "permstat/counting.hpp"
#include "permstat/errors.hpp"
#include "permstat/montecarlo.hpp"
#include "permstat/oracle.hpp"
#include "permstat/permutation.hpp"
#include "permstat/rational.hpp"
#include "permstat/sampler.hpp"

using nlohmann::json;
using namespace permstat;

namespace {

enum class Format { text, csv, json_ };

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::text;
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json_;
    throw CLI::ValidationError("--format", "expected one of text, csv, json");
}

std::uint64_t parse_seed(const std::string& text) {
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    const std::string digits = hex ? text.substr(2) : text;
    if (digits.empty())
        throw CLI::ValidationError("--seed", "expected a decimal or 0x-hex 64-bit value");
    std::uint64_t value = 0;
    for (char c : digits) {
        std::uint64_t digit = 0;
        if (c >= '0' && c <= '9')
            digit = static_cast<std::uint64_t>(c - '0');
        else if (hex && c >= 'a' && c <= 'f')
            digit = static_cast<std::uint64_t>(c - 'a') + 10;
        else if (hex && c >= 'A' && c <= 'F')
            digit = static_cast<std::uint64_t>(c - 'A') + 10;
        else
            throw CLI::ValidationError("--seed", "expected a decimal or 0x-hex 64-bit value");
        const std::uint64_t base = hex ? 16 : 10;
        if (value > (UINT64_MAX - digit) / base)
            throw CLI::ValidationError("--seed", "seed does not fit in 64 bits");
        value = value * base + digit;
    }
    return value;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw DomainError("cannot open output file '" + out_path + "'");
    out << body;
}

// Expected inversions with the n < 3 sizes served by enumeration.
std::pair<Rational, const char*> expected_inversions_any(long long n, long long k) {
    if (n >= 3)
        return {expected_inversions({n, k}), "formula"};
    return {oracle_expected_inversions(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k))
                .expected_inversions,
            "oracle"};
}

std::pair<Rational, const char*> precedence_any(long long n, long long k, long long i, long long j) {
    if (n >= 3)
        return {precedence_probability({n, k, i, j}), "formula"};
    return {oracle_precedence(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k),
                              static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)),
            "oracle"};
}

struct ValueOutput {
    json query;
    Rational value;
    const char* source;
};

std::string render_value(const ValueOutput& result, Format format, const std::string& csv_header,
                         const std::string& csv_prefix, const std::string& text_prefix,
                         const std::string& text_key) {
    const std::string fraction = to_fraction_string(result.value);
    const std::string decimal = to_decimal_string(result.value);
    switch (format) {
    case Format::csv:
        return csv_header + "\n" + csv_prefix + fraction + "," + decimal + "," + result.source + "\n";
    case Format::json_: {
        json object;
        object["query"] = result.query;
        object["value_rational"] = fraction;
        object["value_decimal"] = decimal;
        object["source"] = result.source;
        return object.dump(2) + "\n";
    }
    case Format::text:
    default:
        return text_prefix + text_key + "=" + fraction + " decimal=" + decimal +
               " source=" + result.source + "\n";
    }
}

int run_exact(long long n, long long k, Format format, const std::string& out_path) {
    const auto [value, source] = expected_inversions_any(n, k);
    ValueOutput result{json{{"command", "exact"}, {"n", n}, {"k", k}}, value, source};
    emit(render_value(result, format, "n,k,value,decimal,source",
                      std::to_string(n) + "," + std::to_string(k) + ",",
                      "n=" + std::to_string(n) + " k=" + std::to_string(k) + " ", "exact"),
         out_path);
    return 0;
}

int run_prob(long long n, long long k, long long i, long long j, Format format,
             const std::string& out_path) {
    const auto [value, source] = precedence_any(n, k, i, j);
    ValueOutput result{json{{"command", "prob"}, {"n", n}, {"k", k}, {"i", i}, {"j", j}}, value, source};
    emit(render_value(result, format, "n,k,i,j,value,decimal,source",
                      std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(i) + "," +
                          std::to_string(j) + ",",
                      "n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " ",
                      "prob"),
         out_path);
    return 0;
}

int run_table(long long n_min, long long n_max, long long k_min, long long k_max, Format format,
              const std::string& out_path) {
    struct Row {
        long long n, k;
        Rational main, correction, exact;
    };
    std::vector<Row> rows;
    for (long long nn = n_min; nn <= n_max; ++nn)
        for (long long kk = std::max<long long>(0, k_min); kk <= std::min(k_max, nn); ++kk) {
            if (kk == nn - 1)
                continue; // empty class
            rows.push_back({nn, kk, expected_inversions_main({nn, kk}), inversion_correction({nn, kk}),
                            expected_inversions({nn, kk})});
        }

    std::string body;
    switch (format) {
    case Format::csv:
        body = "n,k,main,correction,exact,decimal\n";
        for (const Row& row : rows)
            body += std::to_string(row.n) + "," + std::to_string(row.k) + "," +
                    to_fraction_string(row.main) + "," + to_fraction_string(row.correction) + "," +
                    to_fraction_string(row.exact) + "," + to_decimal_string(row.exact) + "\n";
        break;
    case Format::json_: {
        json object;
        object["query"] = {{"command", "table"}, {"n_min", n_min}, {"n_max", n_max},
                           {"k_min", k_min}, {"k_max", k_max}};
        object["source"] = "formula";
        object["rows"] = json::array();
        for (const Row& row : rows)
            object["rows"].push_back({{"n", row.n},
                                      {"k", row.k},
                                      {"main", to_fraction_string(row.main)},
                                      {"correction", to_fraction_string(row.correction)},
                                      {"exact", to_fraction_string(row.exact)},
                                      {"decimal", to_decimal_string(row.exact)}});
        body = object.dump(2) + "\n";
        break;
    }
    case Format::text:
    default:
        body = "n k main correction exact decimal\n";
        for (const Row& row : rows)
            body += std::to_string(row.n) + " " + std::to_string(row.k) + " " +
                    to_fraction_string(row.main) + " " + to_fraction_string(row.correction) + " " +
                    to_fraction_string(row.exact) + " " + to_decimal_string(row.exact) + "\n";
        break;
    }
    emit(body, out_path);
    return 0;
}

int run_sample(long long n, std::optional<long long> k, long long count, std::uint64_t seed,
               Format format, const std::string& out_path) {
    RngState rng(seed);
    std::vector<std::string> words;
    words.reserve(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) {
        const Permutation sigma = k ? sample_class(static_cast<std::int32_t>(n),
                                                   static_cast<std::int32_t>(*k), rng)
                                    : sample_uniform(static_cast<std::int32_t>(n), rng);
        words.push_back(sigma.to_string());
    }

    std::string body;
    switch (format) {
    case Format::csv:
        body = "index,permutation\n";
        for (std::size_t t = 0; t < words.size(); ++t)
            body += std::to_string(t) + "," + words[t] + "\n";
        break;
    case Format::json_: {
        json object;
        object["query"] = {{"command", "sample"}, {"n", n}, {"count", count}, {"seed", seed}};
        if (k)
            object["query"]["k"] = *k;
        object["samples"] = words;
        object["source"] = "sampler";
        body = object.dump(2) + "\n";
        break;
    }
    case Format::text:
    default:
        for (const std::string& word : words)
            body += word + "\n";
        break;
    }
    emit(body, out_path);
    return 0;
}

int run_verify(long long max_n, Format format, const std::string& out_path) {
    struct Mismatch {
        long long n, k, i, j; // i = j = 0 marks an expectation row
        std::string formula, oracle;
    };
    std::vector<Mismatch> mismatches;
    long long comparisons = 0;
    std::string text_log;

    for (long long n = 3; n <= max_n; ++n) {
        long long classes = 0;
        for (long long k = 0; k <= n; ++k) {
            if (k == n - 1)
                continue;
            const Rational formula = expected_inversions({n, k});
            const Rational oracle =
                oracle_expected_inversions(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k))
                    .expected_inversions;
            ++comparisons;
            ++classes;
            if (formula != oracle)
                mismatches.push_back({n, k, 0, 0, to_fraction_string(formula), to_fraction_string(oracle)});
        }
        text_log += "n=" + std::to_string(n) + " expectations checked (" + std::to_string(classes) +
                    " classes)\n";
    }

    const long long precedence_cap = std::min<long long>(max_n, 7);
    for (long long n = 3; n <= precedence_cap; ++n) {
        long long pairs = 0;
        for (long long k = 0; k <= n; ++k) {
            if (k == n - 1)
                continue;
            for (long long i = 1; i < n; ++i)
                for (long long j = i + 1; j <= n; ++j) {
                    const Rational formula = precedence_probability({n, k, i, j});
                    const Rational oracle =
                        oracle_precedence(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k),
                                          static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
                    ++comparisons;
                    ++pairs;
                    if (formula != oracle)
                        mismatches.push_back(
                            {n, k, i, j, to_fraction_string(formula), to_fraction_string(oracle)});
                }
        }
        text_log += "n=" + std::to_string(n) + " precedence checked (" + std::to_string(pairs) +
                    " comparisons)\n";
    }

    const bool pass = mismatches.empty();
    std::string body;
    switch (format) {
    case Format::csv:
        body = "n,k,i,j,formula,oracle\n";
        for (const Mismatch& m : mismatches)
            body += std::to_string(m.n) + "," + std::to_string(m.k) + "," + std::to_string(m.i) + "," +
                    std::to_string(m.j) + "," + m.formula + "," + m.oracle + "\n";
        break;
    case Format::json_: {
        json object;
        object["query"] = {{"command", "verify"}, {"max_n", max_n}};
        object["comparisons"] = comparisons;
        object["pass"] = pass;
        object["mismatches"] = json::array();
        for (const Mismatch& m : mismatches)
            object["mismatches"].push_back({{"n", m.n},
                                            {"k", m.k},
                                            {"i", m.i},
                                            {"j", m.j},
                                            {"formula", m.formula},
                                            {"oracle", m.oracle}});
        body = object.dump(2) + "\n";
        break;
    }
    case Format::text:
    default:
        body = text_log;
        for (const Mismatch& m : mismatches)
            body += "MISMATCH n=" + std::to_string(m.n) + " k=" + std::to_string(m.k) +
                    " i=" + std::to_string(m.i) + " j=" + std::to_string(m.j) + " formula=" + m.formula +
                    " oracle=" + m.oracle + "\n";
        body += pass ? "verify: PASS (" + std::to_string(comparisons) + " comparisons)\n"
                     : "verify: FAIL (" + std::to_string(mismatches.size()) + " mismatches)\n";
        break;
    }
    emit(body, out_path);
    return pass ? 0 : 1;
}

int run_mc(long long n, long long k, std::optional<long long> i, std::optional<long long> j,
           std::uint64_t trials, std::uint64_t seed, Format format, const std::string& out_path) {
    Estimate estimate;
    std::pair<Rational, const char*> target;
    if (i) {
        estimate = estimate_precedence(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k),
                                       static_cast<std::int32_t>(*i), static_cast<std::int32_t>(*j),
                                       trials, seed);
        target = precedence_any(n, k, *i, *j);
    } else {
        estimate = estimate_expected_inversions(static_cast<std::int32_t>(n),
                                                static_cast<std::int32_t>(k), trials, seed);
        target = expected_inversions_any(n, k);
    }
    estimate.target = target.first;
    const double target_value = to_double(target.first);
    const double sigmas =
        estimate.std_error > 0
            ? std::abs(estimate.mean - target_value) / estimate.std_error
            : (estimate.mean == target_value ? 0.0 : std::numeric_limits<double>::infinity());

    std::string body;
    const std::string i_text = i ? std::to_string(*i) : "";
    const std::string j_text = j ? std::to_string(*j) : "";
    switch (format) {
    case Format::csv:
        body = "n,k,i,j,mean,std_error,trials,seed,target_rational,target_decimal\n" +
               std::to_string(n) + "," + std::to_string(k) + "," + i_text + "," + j_text + "," +
               format_double(estimate.mean) + "," + format_double(estimate.std_error) + "," +
               std::to_string(estimate.trials) + "," + std::to_string(seed) + "," +
               to_fraction_string(target.first) + "," + to_decimal_string(target.first) + "\n";
        break;
    case Format::json_: {
        json object;
        object["query"] = {{"command", "mc"}, {"n", n}, {"k", k}, {"trials", trials}, {"seed", seed}};
        if (i) {
            object["query"]["i"] = *i;
            object["query"]["j"] = *j;
        }
        object["estimate"] = {{"mean", estimate.mean},
                              {"std_error", estimate.std_error},
                              {"trials", estimate.trials},
                              {"seed", estimate.seed}};
        object["target_rational"] = to_fraction_string(target.first);
        object["target_decimal"] = to_decimal_string(target.first);
        object["sigmas"] = sigmas;
        object["source"] = target.second;
        body = object.dump(2) + "\n";
        break;
    }
    case Format::text:
    default:
        body = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (i)
            body += " i=" + i_text + " j=" + j_text;
        body += " mean=" + format_double(estimate.mean) + " se=" + format_double(estimate.std_error) +
                " trials=" + std::to_string(estimate.trials) + " seed=" + std::to_string(seed) +
                " target=" + to_decimal_string(target.first) + " sigmas=" + format_double(sigmas) +
                " source=" + std::string(target.second) + "\n";
        break;
    }
    emit(body, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact inversion statistics of permutations with a prescribed number of fixed points"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string out_path;
    std::string seed_text = "0";
    long long n = 0, k = 0, i = 0, j = 0;
    long long n_min = 0, n_max = 0, k_min = 0, k_max = 0;
    long long count = 1;
    std::uint64_t trials = 0;
    long long max_n = 7;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, csv or json")
            ->default_str("text");
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* exact = app.add_subcommand(
        "exact", "expected number of inversions over the class with exactly k fixed points");
    exact->add_option("--n", n, "permutation size")->required();
    exact->add_option("--k", k, "number of fixed points")->required();
    add_common(exact);

    CLI::App* prob = app.add_subcommand(
        "prob", "probability that value i precedes value j in the class with k fixed points");
    prob->add_option("--n", n, "permutation size")->required();
    prob->add_option("--k", k, "number of fixed points")->required();
    prob->add_option("--i", i, "left label (1-based)")->required();
    prob->add_option("--j", j, "right label (1-based)")->required();
    add_common(prob);

    CLI::App* table = app.add_subcommand(
        "table", "main term, correction and exact expected inversions over ranges of n and k");
    table->add_option("--n", n, "single n (shorthand for --n-min/--n-max)");
    table->add_option("--n-min", n_min, "smallest n (>= 3)");
    table->add_option("--n-max", n_max, "largest n");
    table->add_option("--k", k, "single k (shorthand for --k-min/--k-max)");
    table->add_option("--k-min", k_min, "smallest k");
    table->add_option("--k-max", k_max, "largest k");
    add_common(table);

    CLI::App* sample =
        app.add_subcommand("sample", "draw random permutations (uniform, or with --k fixed points)");
    sample->add_option("--n", n, "permutation size")->required();
    CLI::Option* sample_k = sample->add_option("--k", k, "number of fixed points (omit for uniform)");
    sample->add_option("--count", count, "number of samples")->default_val(1);
    sample->add_option("--seed", seed_text, "RNG seed, decimal or 0x-hex")->default_str("0");
    add_common(sample);

    CLI::App* verify = app.add_subcommand(
        "verify", "compare the closed forms against exhaustive enumeration, exit 0 only on exact match");
    verify->add_option("--max-n", max_n, "verify n = 3..max-n (<= 10)")->default_val(7);
    add_common(verify);

    CLI::App* mc = app.add_subcommand(
        "mc", "Monte Carlo estimate (expected inversions, or precedence with --i/--j) vs the exact value");
    mc->add_option("--n", n, "permutation size")->required();
    mc->add_option("--k", k, "number of fixed points")->required();
    CLI::Option* mc_i = mc->add_option("--i", i, "left label");
    CLI::Option* mc_j = mc->add_option("--j", j, "right label");
    mc->add_option("--trials", trials, "number of trials (>= 2)")->required();
    mc->add_option("--seed", seed_text, "RNG seed, decimal or 0x-hex")->default_str("0");
    add_common(mc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_name);
        const std::uint64_t seed = parse_seed(seed_text);

        if (exact->parsed())
            return run_exact(n, k, format, out_path);
        if (prob->parsed())
            return run_prob(n, k, i, j, format, out_path);
        if (table->parsed()) {
            if (table->count("--n")) {
                n_min = n;
                n_max = n;
            }
            if (table->count("--k")) {
                k_min = k;
                k_max = k;
            }
            if (n_min < 3 || n_max < n_min || k_min < 0 || k_max < k_min) {
                std::cerr << "usage: table needs 3 <= n-min <= n-max and 0 <= k-min <= k-max\n";
                return 2;
            }
            return run_table(n_min, n_max, k_min, k_max, format, out_path);
        }
        if (sample->parsed()) {
            if (count < 1) {
                std::cerr << "usage: --count must be >= 1\n";
                return 2;
            }
            return run_sample(n, sample_k->count() ? std::optional<long long>(k) : std::nullopt, count,
                              seed, format, out_path);
        }
        if (verify->parsed()) {
            if (max_n < 3 || max_n > 10) {
                std::cerr << "usage: --max-n must lie in 3..10\n";
                return 2;
            }
            return run_verify(max_n, format, out_path);
        }
        if (mc->parsed()) {
            if (mc_i->count() != mc_j->count()) {
                std::cerr << "usage: --i and --j must be given together\n";
                return 2;
            }
            const bool precedence = mc_i->count() > 0;
            return run_mc(n, k, precedence ? std::optional<long long>(i) : std::nullopt,
                          precedence ? std::optional<long long>(j) : std::nullopt, trials, seed, format,
                          out_path);
        }
        return 2; // unreachable: require_subcommand(1)
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& err) {
        if (format_name == "json") {
            json object;
            object["error"] = {{"code", err.code_name()}, {"message", err.what()}};
            std::cout << object.dump(2) << "\n";
        } else {
            std::cerr << "error: " << err.code_name() << ": " << err.what() << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
