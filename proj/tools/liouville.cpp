#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <liouville.hpp>

namespace fs = std::filesystem;
using namespace liouville;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts plain integers and scientific forms such as 1e8 or 2.5e3.
u64 parse_count(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        if (s.find_first_of("eE.") == std::string::npos) {
            const u64 n = std::stoull(s, &used);
            if (used != s.size() || s.front() == '-') throw UsageError("bad number '" + s + "'");
            return n;
        }
        v = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw UsageError("bad number '" + s + "'");
    }
    if (used != s.size() || !(v >= 0) || v > 1e18 || std::floor(v) != v)
        throw UsageError("'" + s + "' is not a non-negative integer");
    return static_cast<u64>(v);
}

std::vector<u64> parse_grid(const std::string& spec) {
    std::vector<u64> xs;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        const u64 lo = parse_count(spec.substr(0, colon)), hi = parse_count(spec.substr(colon + 1));
        if (lo == 0 || lo > hi) throw UsageError("grid range needs 0 < A <= B");
        for (u64 x = lo; x <= hi; x *= 10) {
            xs.push_back(x);
            if (x > hi / 10) break;
        }
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) xs.push_back(parse_count(item));
    }
    return xs;
}

std::string join(const std::vector<u64>& xs) {
    std::string s;
    for (u64 x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

bool is_power_of_ten(u64 x) {
    while (x >= 10 && x % 10 == 0) x /= 10;
    return x == 1;
}

fs::path checkpoint_path() { return cache_dir() / "L_checkpoint.csv"; }

void load_checkpoint(SummatoryCache& L) {
    const fs::path path = checkpoint_path();
    if (!fs::exists(path)) return;
    try {
        for (auto [x, v] : read_checkpoint(path)) L.seed(x, v);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring checkpoint " << path << ": " << e.what() << '\n';
    }
}

void save_checkpoint(SummatoryCache& L, const std::vector<u64>& xs) {
    std::map<u64, i64> values;
    const fs::path path = checkpoint_path();
    try {
        if (fs::exists(path)) values = read_checkpoint(path);
    } catch (const std::exception&) {
        values.clear();
    }
    for (u64 x : xs)
        if (is_power_of_ten(x)) values[x] = L(x);
    try {
        fs::create_directories(cache_dir());
        write_checkpoint(path, values);
    } catch (const std::exception& e) {
        std::cerr << "warning: checkpoint not saved: " << e.what() << '\n';
    }
}

struct SieveArgs {
    std::string fn = "lambda";
    std::string lo, hi, out;
};

int cmd_sieve(const SieveArgs& a) {
    const ArithFn fn = a.fn == "mobius" ? ArithFn::mobius : ArithFn::liouville;
    const u64 lo = parse_count(a.lo), hi = parse_count(a.hi);
    if (lo == 0) throw UsageError("--lo must be >= 1");
    if (hi < lo) throw UsageError("--hi must be >= --lo");

    fs::path out = a.out;
    if (out.empty()) {
        out = cache_dir() / (std::string(to_string(fn)) + "_" + std::to_string(lo) + "_" + std::to_string(hi) + ".lamb");
        fs::create_directories(out.parent_path());
    }
    TableFileWriter writer(out, lo, hi - lo + 1);
    SegmentedSieve sieve(fn, hi);
    sieve.for_each_block(lo, hi, [&](u64, std::span<const std::int8_t> vals) { writer.append(vals); });
    writer.close();

    char sum[19];
    std::snprintf(sum, sizeof sum, "%016llx", static_cast<unsigned long long>(writer.checksum()));
    std::cout << "fn=" << to_string(fn) << " lo=" << lo << " hi=" << hi << " count=" << (hi - lo + 1)
              << " checksum=fnv1a:" << sum << " path=" << out.string() << '\n';
    return exit_ok;
}

struct VerifyArgs {
    std::string suite;
    std::string n_max = "1000";
    u64 seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
    const VerifyResult r = run_verify(a.suite, parse_count(a.n_max), a.seed);
    std::cout << r.summary() << '\n';
    return r.ok() ? exit_ok : exit_failure;
}

struct ClaimArgs {
    std::string claim;
    std::string grid = "1e3:1e8";
    std::string a = "square";
    std::string a_file;
    std::string out;
    std::string format = "csv";
    double s = 2.0;
    std::string X = "1e5";
    u64 seed = 1;
    double epsilon = 0.25;
    double delta = 0.25;
};

ASpec load_a(const ClaimArgs& a) {
    if (a.a_file.empty()) return ASpec::from_name(a.a);
    std::ifstream in(a.a_file);
    if (!in) throw UsageError("cannot open --a-file " + a.a_file);
    return ASpec::custom(read_a_table_csv(in), fs::path(a.a_file).filename().string());
}

void emit(const ClaimRun& run, const ClaimArgs& a, const ReportHeader& header) {
    if (!a.out.empty()) {
        const ReportPaths p = write_claim_outputs(a.out, run, header);
        std::cout << "csv " << p.csv.string() << '\n' << "fit " << p.json.string() << '\n'
                  << "plot " << p.plot.string() << '\n';
    }
    if (a.format == "json")
        std::cout << fit_json(run, header).dump(2) << '\n';
    else if (a.out.empty())
        write_claim_csv(std::cout, run, header);
}

int cmd_claim(const ClaimArgs& a) {
    GridSpec grid;
    grid.epsilon = a.epsilon;
    grid.delta = a.delta;

    if (a.claim == "zeta") {
        const u64 X = parse_count(a.X);
        const ZetaCheck c = run_zeta_check(a.s, X);
        std::cout << "lhs=" << format_g17(c.lhs) << " rhs=" << format_g17(c.rhs)
                  << " tail_bound=" << format_g17(c.tail_bound) << '\n';
        ClaimRun run("zeta");
        run.rows.push_back(make_report(ClaimId::zeta_ratio, X, c.lhs - c.rhs, 0.0, Tier::unconditional));
        if (!a.out.empty())
            write_claim_outputs(a.out, run,
                                {version, a.seed, "X=" + std::to_string(X) + ",s=" + format_g17(a.s), "none"});
        return exit_ok;
    }

    grid.xs = parse_grid(a.grid);
    try {
        grid.validate();
    } catch (const domain_error& e) {
        throw UsageError(e.what());
    }

    const bool uses_a = a.claim == "thm2" || a.claim == "mobius";
    const ASpec spec = uses_a ? load_a(a) : ASpec::square();
    const ReportHeader header{version, a.seed, join(grid.xs), uses_a ? spec.name() : "none"};

    Workspace ws(grid.max());
    load_checkpoint(ws.L());

    ClaimRun run;
    if (a.claim == "m") run = run_lower_quotient_sum(grid, ws);
    else if (a.claim == "en1") run = run_small_range_integral(grid, ws);
    else if (a.claim == "lemma-a") run = run_upper_quotient_sum(grid, ws);
    else if (a.claim == "lemma-b") run = run_quotient_residual(grid, ws);
    else if (a.claim == "lemma-c") run = run_tail_sums(grid);
    else if (a.claim == "lemma-d") run = run_weighted_partials(grid);
    else if (a.claim == "thm2") run = run_h_weighted_integral(spec, grid, ws);
    else if (a.claim == "mobius") run = run_mobius_variant(spec, grid, ws);
    else if (a.claim == "remark1") run = run_sqrt_floor_sum(grid);
    else if (a.claim == "remark2") run = run_square_indicator_study(grid);
    else throw UsageError("unknown claim '" + a.claim + "'");

    run.canonicalize();
    emit(run, a, header);
    save_checkpoint(ws.L(), grid.xs);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Liouville and Mobius summatory toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    SieveArgs sieve_args;
    auto* sieve = app.add_subcommand("sieve", "Sieve lambda or mu over [lo, hi] into a binary cache file");
    sieve->add_option("--fn", sieve_args.fn)->check(CLI::IsMember({"lambda", "mobius"}));
    sieve->add_option("--lo", sieve_args.lo, "First n (>= 1)")->required();
    sieve->add_option("--hi", sieve_args.hi, "Last n")->required();
    sieve->add_option("--out", sieve_args.out, "Output file (default: cache directory)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run an exact-identity suite");
    std::vector<std::string> suites(std::begin(verify_suites), std::end(verify_suites));
    verify->add_option("suite", verify_args.suite)->required()->check(CLI::IsMember(suites));
    verify->add_option("--n-max", verify_args.n_max, "Largest n or x checked");
    verify->add_option("--seed", verify_args.seed);

    ClaimArgs claim_args;
    auto* claim = app.add_subcommand("claim", "Run an experiment over a grid and write CSV and fit JSON");
    claim->add_option("claim", claim_args.claim)
        ->required()
        ->check(CLI::IsMember({"m", "en1", "lemma-a", "lemma-b", "lemma-c", "lemma-d", "thm2", "mobius", "remark1",
                               "remark2", "zeta"}));
    claim->add_option("--grid", claim_args.grid, "A:B for decades, or a comma list");
    claim->add_option("--a", claim_args.a)
        ->check(CLI::IsMember({"square", "unit-at-1", "unit", "powers-of-2", "pow2", "all-ones"}));
    claim->add_option("--a-file", claim_args.a_file, "CSV table n,value with |value| <= 1");
    claim->add_option("--out", claim_args.out, "Output directory");
    claim->add_option("--format", claim_args.format)->check(CLI::IsMember({"csv", "json"}));
    claim->add_option("--s", claim_args.s, "Exponent for the zeta check");
    claim->add_option("--X", claim_args.X, "Upper limit for the zeta check");
    claim->add_option("--seed", claim_args.seed);
    claim->add_option("--epsilon", claim_args.epsilon);
    claim->add_option("--delta", claim_args.delta);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sieve) return cmd_sieve(sieve_args);
        if (*verify) return cmd_verify(verify_args);
        if (*claim) return cmd_claim(claim_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violated: " << e.what() << '\n';
        return exit_failure;
    } catch (const assertion_failure& e) {
        std::cerr << "assertion failed: " << e.what() << '\n';
        return exit_failure;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
