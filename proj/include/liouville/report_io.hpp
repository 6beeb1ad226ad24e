#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "liouville/errors.hpp"
#include "liouville/experiments.hpp"

namespace liouville {

/// Metadata written as '#' comment lines above the CSV header.
struct ReportHeader {
    std::string version;
    u64 seed = 0;
    std::string grid;
    std::string a_spec;
};

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_claim_csv(std::ostream& out, const ClaimRun& run, const ReportHeader& header) {
    out << "# version=" << header.version << '\n'
        << "# seed=" << header.seed << '\n'
        << "# grid=" << header.grid << '\n'
        << "# a_spec=" << header.a_spec << '\n'
        << "claim,x,raw,scale_exp,scaled,tier\n";
    for (const auto& r : run.rows)
        out << to_string(r.claim) << ',' << r.x << ',' << format_g17(r.raw) << ',' << format_g17(r.scale_exp) << ','
            << format_g17(r.scaled) << ',' << to_string(r.tier) << '\n';
}

inline nlohmann::ordered_json fit_json(const ClaimRun& run, const ReportHeader& header) {
    nlohmann::ordered_json j;
    j["claim"] = std::string(to_string(run.fit_claim));
    if (run.fit) {
        j["slope"] = run.fit->slope;
        j["intercept"] = run.fit->intercept;
        j["r2"] = run.fit->r2;
        j["n_points"] = run.fit->n_points;
    } else {
        j["slope"] = nullptr;
        j["intercept"] = nullptr;
        j["r2"] = nullptr;
        j["n_points"] = 0;
    }
    j["dropped_zeros"] = run.fit_dropped_zeros;
    j["meta"] = {{"version", header.version}, {"seed", header.seed}, {"grid", header.grid}, {"a_spec", header.a_spec}};
    return j;
}

/// log10(x), log10(|scaled|) per row of `id`; zero rows are skipped.
inline void write_plot_data(std::ostream& out, const ClaimRun& run, ClaimId id) {
    for (const auto* r : run.rows_for(id)) {
        if (r->scaled == 0.0) continue;
        out << format_g17(std::log10(static_cast<double>(r->x))) << ' ' << format_g17(std::log10(std::abs(r->scaled)))
            << '\n';
    }
}

struct ReportPaths {
    std::filesystem::path csv, json, plot;
};

/// Writes <name>.csv, <name>.fit.json and <name>.plot.dat into dir.
inline ReportPaths write_claim_outputs(const std::filesystem::path& dir, const ClaimRun& run,
                                       const ReportHeader& header) {
    std::filesystem::create_directories(dir);
    ReportPaths p{dir / (run.name + ".csv"), dir / (run.name + ".fit.json"), dir / (run.name + ".plot.dat")};
    auto open = [](const std::filesystem::path& path) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        return f;
    };
    {
        auto f = open(p.csv);
        write_claim_csv(f, run, header);
    }
    {
        auto f = open(p.json);
        f << fit_json(run, header).dump(2) << '\n';
    }
    {
        auto f = open(p.plot);
        write_plot_data(f, run, run.fit_claim);
    }
    return p;
}

} // namespace liouville
