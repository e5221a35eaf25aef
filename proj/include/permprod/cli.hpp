#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "closed_forms.hpp"
#include "error.hpp"
#include "multiset.hpp"
#include "oracle.hpp"
#include "results_io.hpp"
#include "search.hpp"
#include "solve.hpp"

namespace permprod::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t default_workers() {
    if (const char* env = std::getenv("PERMPROD_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) throw usage_error("PERMPROD_THREADS must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    const auto hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Throttled progress lines on the diagnostic stream.
class ProgressReporter {
public:
    explicit ProgressReporter(std::ostream& err) : err_(err) {}

    void operator()(const SearchProgress& p) {
        std::lock_guard lock(mutex_);
        const auto now = std::chrono::steady_clock::now();
        if (now - last_ < std::chrono::seconds(1)) return;
        last_ = now;
        const double pct = p.total ? 100.0 * static_cast<double>(p.done) / static_cast<double>(p.total) : 100.0;
        err_ << "progress: pass " << p.pass << ' ' << p.done << '/' << p.total << " nodes (" << std::fixed
             << std::setprecision(1) << pct << "%)\n"
             << std::flush;
    }

private:
    std::ostream& err_;
    std::mutex mutex_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Options {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t workers = 1;
    std::uint64_t cap = 1'000'000;
    std::string store = "permprod-results.jsonl";
    bool no_store = false;
    bool quiet = false;
    bool all = false;
    std::string quantity = "vmin";
    std::size_t table_n = 0;
    std::size_t table_k = 0;
    std::uint64_t max_nodes = 0;
    std::string seq;
    std::size_t terms = 0;
    std::string reference;
    std::string direction = "n-ascending";
    std::string output;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err)
        : opt_(opt), out_(out), err_(err), progress_(err) {}

    SearchConfig config() {
        SearchConfig cfg;
        cfg.workers = opt_.workers;
        cfg.completion_cap = opt_.cap;
        if (!opt_.quiet) {
            cfg.checkpoint_interval = std::uint64_t{1} << 22;
            cfg.on_progress = [this](const SearchProgress& p) { progress_(p); };
        }
        return cfg;
    }

    void keep(const Solution& s, Quantity q) {
        if (opt_.no_store) return;
        store_append(make_record(s, q), opt_.store);
    }

    void keep(const ResultRecord& r) {
        if (!opt_.no_store) store_append(r, opt_.store);
    }

    void emit(const std::string& text) {
        if (opt_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.output, std::ios::binary);
        if (!f) throw error(errc::io_failure, "cannot write " + opt_.output);
        f << text;
    }

    Value vmin_cell(std::size_t n, std::size_t k) {
        const auto s = solve_vmin(n, k, config());
        keep(s, Quantity::VMin);
        return s.v_min;
    }

    int vmin() {
        out_ << to_string(vmin_cell(opt_.n, opt_.k)) << '\n';
        return exit_ok;
    }

    int vmax() {
        ResultRecord r;
        r.n = opt_.n;
        r.k = opt_.k;
        r.quantity = Quantity::VMax;
        r.value = to_string(permprod::vmax(opt_.n, opt_.k));
        r.method = Method::ClosedForm;
        r.created_at = utc_timestamp();
        keep(r);
        out_ << r.value << '\n';
        return exit_ok;
    }

    int count() {
        const auto s = solve_count(opt_.n, opt_.k, config());
        keep(s, Quantity::NMin);
        out_ << *s.n_min << '\n';
        return exit_ok;
    }

    int minimizers() {
        const auto s = solve_minimizers(opt_.n, opt_.k, opt_.all, config());
        keep(s, Quantity::VMin);
        keep(s, Quantity::NMin);
        if (opt_.all) {
            for (const auto& m : s.minimizers) out_ << to_string(m) << '\n';
        } else {
            out_ << to_string(*s.lex_min_set) << '\n';
        }
        return exit_ok;
    }

    int oracle_check() {
        const auto oracle = brute_force_oracle(opt_.n, opt_.k);
        const auto fast = solve_minimizers(opt_.n, opt_.k, false, config());
        auto summary = [](Value v, std::optional<std::uint64_t> count, const std::optional<KSet>& lex) {
            return "v_min=" + to_string(v) + " n_min=" + (count ? std::to_string(*count) : "?") +
                   " lex_min=" + (lex ? to_string(*lex) : "?");
        };
        if (oracle.v_min == fast.v_min && oracle.n_min == fast.n_min && oracle.lex_min_set == fast.lex_min_set) {
            Solution s = fast;
            keep(s, Quantity::VMin);
            keep(s, Quantity::NMin);
            out_ << "OK v_min=" << to_string(fast.v_min) << " n_min=" << *fast.n_min << '\n';
            return exit_ok;
        }
        out_ << "MISMATCH search(" << summary(fast.v_min, fast.n_min, fast.lex_min_set) << ") oracle("
             << summary(oracle.v_min, oracle.n_min, oracle.lex_min_set) << ")\n";
        return exit_failure;
    }

    int table() {
        Quantity q;
        if (opt_.quantity == "vmin") q = Quantity::VMin;
        else if (opt_.quantity == "vmax") q = Quantity::VMax;
        else if (opt_.quantity == "nmin") q = Quantity::NMin;
        else if (opt_.quantity == "nmax") q = Quantity::NMax;
        else throw usage_error("--quantity must be one of vmin, vmax, nmin, nmax");

        std::vector<ResultRecord> records;
        for (std::size_t n = 1; n <= opt_.table_n; ++n) {
            for (std::size_t k = 1; k <= opt_.table_k; ++k) {
                if (q == Quantity::VMax || q == Quantity::NMax) {
                    ResultRecord r;
                    r.n = n;
                    r.k = k;
                    r.quantity = q;
                    r.value = q == Quantity::VMax ? to_string(permprod::vmax(n, k)) : std::to_string(nmax(n, k));
                    r.method = Method::ClosedForm;
                    r.created_at = utc_timestamp();
                    records.push_back(r);
                    continue;
                }
                const bool closed = q == Quantity::VMin ? vmin_closed(n, k).has_value() : nmin_trivial(n, k).has_value();
                if (!closed && opt_.max_nodes && sweep_size(n, k) > opt_.max_nodes) continue;
                const auto s = q == Quantity::VMin ? solve_vmin(n, k, config()) : solve_count(n, k, config());
                records.push_back(make_record(s, q));
            }
        }
        for (const auto& r : records) keep(r);
        emit(render_table(records, q));
        return exit_ok;
    }

    SequenceRecord sequence(std::size_t terms) {
        const auto& info = sequence_info(opt_.seq);
        SequenceRecord seq{std::string(info.oeis_id), info.offset, {}};
        if (info.kind == SequenceKind::Column) {
            for (std::size_t n = 1; n <= terms; ++n) seq.values.push_back(to_string(vmin_cell(n, info.k)));
            return seq;
        }
        Direction dir;
        if (opt_.direction == "n-ascending") dir = Direction::NAscending;
        else if (opt_.direction == "n-descending") dir = Direction::NDescending;
        else throw usage_error("--direction must be n-ascending or n-descending");
        const std::size_t depth = antidiagonal_depth_for(terms);
        CellTable cells;
        for (std::size_t n = 1; n <= depth; ++n)
            for (std::size_t k = 1; n + k <= depth + 1; ++k) cells[{n, k}] = vmin_cell(n, k);
        seq = antidiagonal_sequence(cells, depth, dir);
        seq.values.resize(terms);
        return seq;
    }

    int bfile() {
        if (opt_.terms == 0) throw usage_error("--terms must be positive");
        emit(emit_bfile(sequence(opt_.terms)));
        return exit_ok;
    }

    int verify() {
        std::ifstream in(opt_.reference, std::ios::binary);
        if (!in) throw error(errc::io_failure, "cannot read reference " + opt_.reference);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        std::size_t terms = opt_.terms;
        if (terms == 0) {
            const auto& info = sequence_info(opt_.seq);
            for (const auto& [index, value] : parse_bfile_terms(text))
                if (index >= info.offset) terms = std::max(terms, static_cast<std::size_t>(index - info.offset + 1));
        }
        if (terms == 0) {
            out_ << "OK 0 compared\n";
            return exit_ok;
        }
        const auto report = verify_against_reference(sequence(terms), text);
        out_ << (report.ok() ? "OK " : "MISMATCH ") << describe(report) << '\n';
        return report.ok() ? exit_ok : exit_failure;
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    ProgressReporter progress_;
};

} // namespace detail

/// Entry point for the permprod command line.  Results go to `out`, one
/// value per line; diagnostics and progress go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    CLI::App app{"Exhaustive search for extremal sums of products of permutations"};
    app.require_subcommand(1);

    try {
        opt.workers = detail::default_workers();
    } catch (const detail::usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("--workers", opt.workers, "Worker threads (default: PERMPROD_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--store", opt.store, "Results store (JSON lines)");
        sub->add_flag("--no-store", opt.no_store, "Do not append results to the store");
        sub->add_flag("--quiet", opt.quiet, "Suppress progress output");
        sub->add_option("--cap", opt.cap, "Completion cap when counting minimizers")->check(CLI::PositiveNumber);
    };
    auto nk = [&](CLI::App* sub) {
        sub->add_option("n", opt.n, "Permutation degree")->required()->check(CLI::Range(1, 15));
        sub->add_option("k", opt.k, "Number of permutations")->required()->check(CLI::PositiveNumber);
        common(sub);
    };

    auto* vmin = app.add_subcommand("vmin", "Minimum of v(n,k)");
    nk(vmin);
    auto* vmax = app.add_subcommand("vmax", "Maximum of v(n,k)");
    nk(vmax);
    auto* count = app.add_subcommand("count", "Number of nonequivalent minimizing k-sets");
    nk(count);
    auto* minimizers = app.add_subcommand("minimizers", "Smallest canonical minimizing k-set");
    nk(minimizers);
    minimizers->add_flag("--all", opt.all, "Print every canonical minimizer");
    auto* oracle = app.add_subcommand("oracle-check", "Compare search against brute-force enumeration");
    nk(oracle);

    auto* table = app.add_subcommand("table", "CSV table of a quantity over n and k");
    table->add_option("--quantity", opt.quantity, "vmin, vmax, nmin or nmax")->required();
    table->add_option("--nmax", opt.table_n, "Largest n")->required()->check(CLI::Range(1, 15));
    table->add_option("--kmax", opt.table_k, "Largest k")->required()->check(CLI::PositiveNumber);
    table->add_option("--max-nodes", opt.max_nodes, "Leave cells needing larger searches empty (0: no limit)");
    table->add_option("--output", opt.output, "Write to a file instead of stdout");
    common(table);

    auto* bfile = app.add_subcommand("bfile", "Emit a sequence as an OEIS b-file");
    bfile->add_option("--seq", opt.seq, "Sequence id, e.g. A070735")->required();
    bfile->add_option("--terms", opt.terms, "Number of terms")->required();
    bfile->add_option("--direction", opt.direction, "Antidiagonal order: n-ascending or n-descending");
    bfile->add_option("--output", opt.output, "Write to a file instead of stdout");
    common(bfile);

    auto* verify = app.add_subcommand("verify", "Compare computed terms against a reference b-file");
    verify->add_option("--seq", opt.seq, "Sequence id, e.g. A070735")->required();
    verify->add_option("--reference", opt.reference, "Reference b-file path")->required();
    verify->add_option("--terms", opt.terms, "Terms to compute (default: as many as the reference has)");
    verify->add_option("--direction", opt.direction, "Antidiagonal order: n-ascending or n-descending");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    detail::Runner runner(opt, out, err);
    try {
        if (*vmin) return runner.vmin();
        if (*vmax) return runner.vmax();
        if (*count) return runner.count();
        if (*minimizers) return runner.minimizers();
        if (*oracle) return runner.oracle_check();
        if (*table) return runner.table();
        if (*bfile) return runner.bfile();
        if (*verify) return runner.verify();
    } catch (const detail::usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace permprod::cli
