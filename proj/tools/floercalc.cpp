// Command-line front end: exact invariants of Seifert fibered homology
// spheres and torus-knot d-invariants, with machine-readable output and the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error, 64 usage.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "floercalc/dedekind.hpp"
#include "floercalc/invariants.hpp"
#include "floercalc/report.hpp"
#include "floercalc/sampling.hpp"
#include "floercalc/torus_knot.hpp"

namespace {

using floercalc::Json;

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FLOER_CALC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Ordered parallel map: results land by index, so output order never depends
// on scheduling.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f)
    -> std::vector<decltype(f(items.front()))> {
    using R = decltype(f(items.front()));
    std::vector<R> out(items.size());
    const unsigned threads =
        std::min<size_t>(thread_budget(), items.size() ? items.size() : 1);
    if (threads <= 1) {
        for (size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                try {
                    out[i] = f(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(items.size());
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

void emit(const std::string& payload, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw floercalc::range_error("cannot open output file " + out_file);
    f << payload;
}

struct CommonOpts {
    std::string format = "json";
    std::string out_file;
    bool timing = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

floercalc::MuBarMethod parse_mu_method(const std::string& name) {
    if (name == "dedekind") return floercalc::MuBarMethod::kDedekind;
    if (name == "plumbing") return floercalc::MuBarMethod::kPlumbing;
    if (name == "trig") return floercalc::MuBarMethod::kTrig;
    throw floercalc::arity_error("unknown mu-bar method: " + name);
}

int cmd_invariants(const std::vector<long long>& seifert, const CommonOpts& opts,
                   const std::string& mu_method, bool check_additivity,
                   bool dump_plumbing) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto data = floercalc::normalize(seifert);
    if (dump_plumbing) {
        emit(floercalc::plumbing_dump(data), opts.out_file);
        return 0;
    }
    const auto report = floercalc::assemble_report(data, parse_mu_method(mu_method));
    Json j = floercalc::to_json(report);
    if (check_additivity) {
        Json add = Json::object();
        for (int jj = 2; jj <= data.n() - 2; ++jj)
            add[std::to_string(jj)] = floercalc::additivity_check(data, jj);
        j["additivity"] = add;
    }
    if (opts.timing) j["timing_ms"] = elapsed_ms(t0);
    emit(j.dump(2) + "\n", opts.out_file);
    return 0;
}

int cmd_dinv(const std::vector<long long>& torus, const CommonOpts& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (torus.size() != 2)
        throw floercalc::arity_error("--torus expects exactly p,q");
    const auto report = floercalc::assemble_torus_report(torus[0], torus[1]);
    Json j = floercalc::to_json(report);
    if (opts.timing) j["timing_ms"] = elapsed_ms(t0);
    emit(j.dump(2) + "\n", opts.out_file);
    return 0;
}

int cmd_table(int arity, long long max_a, const CommonOpts& opts) {
    const auto tuples = floercalc::coprime_tuples_up_to(arity, max_a);
    const auto reports = parallel_map(tuples, [](const std::vector<long long>& t) {
        return floercalc::assemble_report(floercalc::normalize(t));
    });
    std::string payload;
    if (opts.format == "csv") {
        payload += floercalc::csv_header(arity) + "\n";
        for (const auto& r : reports) payload += floercalc::csv_row(r) + "\n";
    } else if (opts.format == "jsonl") {
        for (const auto& r : reports) payload += floercalc::to_json(r).dump() + "\n";
    } else {
        throw floercalc::arity_error("table format must be csv or jsonl");
    }
    emit(payload, opts.out_file);
    return 0;
}

struct SuiteResult {
    long long checked = 0;
    long long failed = 0;
};

SuiteResult suite_reciprocity(long long limit) {
    SuiteResult res;
    for (long long p = 1; p <= limit; ++p)
        for (long long q = 1; q <= limit; ++q) {
            if (std::gcd(p, q) != 1) continue;
            using floercalc::Rational;
            const Rational lhs =
                floercalc::dedekind_sum(p, q) + floercalc::dedekind_sum(q, p);
            const Rational rhs = Rational(-1, 4) +
                                 (Rational(p, q) + Rational(q, p) +
                                  Rational(1, p * q)) / Rational(12);
            ++res.checked;
            if (lhs != rhs) ++res.failed;
        }
    return res;
}

SuiteResult suite_fourier(long long limit) {
    SuiteResult res;
    for (long long p = 1; p <= limit; p += 2)
        for (long long h = 1; h <= p; ++h) {
            if (std::gcd(h, p) != 1) continue;
            ++res.checked;
            if (!floercalc::cot_sum_identity_check(h, p)) ++res.failed;
            ++res.checked;
            if (!floercalc::csc_sum_identity_check(h, p)) ++res.failed;
        }
    return res;
}

SuiteResult suite_mu_routes(long long limit) {
    const auto triples = floercalc::coprime_tuples_up_to(3, limit);
    const auto oks = parallel_map(triples, [](const std::vector<long long>& t) {
        const auto d = floercalc::normalize(t);
        const long long ded = floercalc::mu_bar_dedekind(d);
        if (floercalc::mu_bar_plumbing(d) != ded) return false;
        if (d.a_is_odd() && floercalc::mu_bar_trig(d) != ded) return false;
        return true;
    });
    SuiteResult res;
    res.checked = static_cast<long long>(oks.size());
    for (bool ok : oks)
        if (!ok) ++res.failed;
    return res;
}

SuiteResult suite_additivity(long long count, uint64_t seed) {
    floercalc::DeterministicRng rng(seed);
    std::vector<std::vector<long long>> tuples;
    for (long long i = 0; i < count; ++i)
        tuples.push_back(
            floercalc::random_coprime_tuple(rng, i % 2 == 0 ? 4 : 5, 1000000));
    const auto oks = parallel_map(tuples, [](const std::vector<long long>& t) {
        const auto d = floercalc::normalize(t);
        for (int j = 2; j <= d.n() - 2; ++j)
            if (!floercalc::additivity_check(d, j)) return false;
        return true;
    });
    SuiteResult res;
    res.checked = static_cast<long long>(oks.size());
    for (bool ok : oks)
        if (!ok) ++res.failed;
    return res;
}

SuiteResult suite_dinv_routes(long long limit) {
    SuiteResult res;
    for (long long p = 2; p <= limit; ++p)
        for (long long q = p + 1; q <= limit; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++res.checked;
            try {
                const auto r = floercalc::assemble_torus_report(p, q);
                if (!r.arf_consistent || r.d >= 0) ++res.failed;
            } catch (const floercalc::error&) {
                ++res.failed;
            }
        }
    return res;
}

SuiteResult suite_lemmas(long long limit) {
    SuiteResult res;
    for (long long n = 1; n <= limit; ++n) {
        for (long long j = 1; j <= limit; ++j) {
            ++res.checked;
            if (!floercalc::composition_identity_holds(n, j)) ++res.failed;
        }
        for (long long k = 0; k <= limit; ++k) {
            ++res.checked;
            if (!floercalc::alternating_identity_holds(n, k)) ++res.failed;
        }
    }
    return res;
}

int cmd_verify(const std::string& suite, long long limit, uint64_t seed,
               const CommonOpts& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    long long effective = limit;
    if (suite == "reciprocity") {
        if (effective <= 0) effective = 200;
        res = suite_reciprocity(effective);
    } else if (suite == "fourier") {
        if (effective <= 0) effective = 99;
        res = suite_fourier(effective);
    } else if (suite == "mu-routes") {
        if (effective <= 0) effective = 10000;
        res = suite_mu_routes(effective);
    } else if (suite == "additivity") {
        if (effective <= 0) effective = 50;
        res = suite_additivity(effective, seed);
    } else if (suite == "dinv-routes") {
        if (effective <= 0) effective = 60;
        res = suite_dinv_routes(effective);
    } else if (suite == "lemmas") {
        if (effective <= 0) effective = 12;
        res = suite_lemmas(effective);
    } else {
        std::cerr << floercalc::error_document("usage", "unknown suite: " + suite)
                         .dump(2)
                  << "\n";
        return 64;
    }
    Json j;
    j["schema_version"] = floercalc::kSchemaVersion;
    j["kind"] = "verify_summary";
    j["suite"] = suite;
    j["limit"] = effective;
    j["seed"] = seed;
    j["checked"] = res.checked;
    j["failed"] = res.failed;
    j["status"] = res.failed == 0 ? "pass" : "fail";
    if (opts.timing) j["timing_ms"] = elapsed_ms(t0);
    emit(j.dump(2) + "\n", opts.out_file);
    return res.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of Seifert fibered homology spheres and "
                 "torus-knot d-invariants"};
    app.require_subcommand(1);

    CommonOpts inv_opts, dinv_opts, table_opts, verify_opts;

    auto* inv = app.add_subcommand("invariants",
                                   "invariant octet of Sigma(a1,...,an)");
    std::vector<long long> seifert;
    std::string mu_method = "dedekind";
    bool check_additivity = false, dump_plumbing = false;
    inv->add_option("--seifert", seifert, "multiplicities a1,a2,...")
        ->required()
        ->delimiter(',');
    inv->add_option("--format", inv_opts.format, "json")
        ->check(CLI::IsMember({"json"}));
    inv->add_option("--mu-method", mu_method, "reported mu-bar route")
        ->check(CLI::IsMember({"dedekind", "plumbing", "trig"}));
    inv->add_flag("--check-additivity", check_additivity,
                  "verify splice additivity for every admissible j");
    inv->add_flag("--dump-plumbing", dump_plumbing,
                  "print the plumbing graph as plain text instead of a report");
    inv->add_option("--out", inv_opts.out_file, "write output to FILE");
    inv->add_flag("--timing", inv_opts.timing, "include timing_ms in the report");

    auto* dinv = app.add_subcommand("dinv", "d-invariant of the torus knot T(p,q)");
    std::vector<long long> torus;
    dinv->add_option("--torus", torus, "p,q")->required()->delimiter(',');
    dinv->add_option("--format", dinv_opts.format, "json")
        ->check(CLI::IsMember({"json"}));
    dinv->add_option("--out", dinv_opts.out_file, "write output to FILE");
    dinv->add_flag("--timing", dinv_opts.timing, "include timing_ms in the report");

    auto* table = app.add_subcommand("table", "tabulate all tuples with product <= N");
    int arity = 3;
    long long max_a = 0;
    table_opts.format = "csv";
    table->add_option("--n", arity, "tuple arity")->check(CLI::IsMember({3, 4, 5}));
    table->add_option("--max-a", max_a, "product bound")->required();
    table->add_option("--format", table_opts.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    table->add_option("--out", table_opts.out_file, "write output to FILE");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    long long limit = 0;
    long long seed = 1;
    verify->add_option("--suite", suite,
                       "reciprocity|fourier|mu-routes|additivity|dinv-routes|lemmas")
        ->required();
    verify->add_option("--limit", limit, "suite scale (suite-specific default)");
    verify->add_option("--seed", seed, "seed for sampled suites");
    verify->add_option("--out", verify_opts.out_file, "write output to FILE");
    verify->add_flag("--timing", verify_opts.timing, "include timing_ms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (inv->parsed())
            return cmd_invariants(seifert, inv_opts, mu_method, check_additivity,
                                  dump_plumbing);
        if (dinv->parsed()) return cmd_dinv(torus, dinv_opts);
        if (table->parsed()) return cmd_table(arity, max_a, table_opts);
        if (verify->parsed())
            return cmd_verify(suite, limit, static_cast<uint64_t>(seed), verify_opts);
    } catch (const floercalc::invariant_violation& e) {
        std::cerr << floercalc::error_document(e.kind(), e.what()).dump(2) << "\n";
        return 1;
    } catch (const floercalc::error& e) {
        std::cerr << floercalc::error_document(e.kind(), e.what()).dump(2) << "\n";
        return 2;
    }
    return 64;
}
