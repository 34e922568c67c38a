// Copyright 2026 The qcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOH_CLI_HPP
#define QCOH_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcoh/measures.hpp"
#include "qcoh/sampler.hpp"
#include "qcoh/state.hpp"
#include "qcoh/state_json.hpp"
#include "qcoh/theorems.hpp"

namespace qcoh::cli {

inline constexpr int schema_version = 1;
inline constexpr double containment_slack = 1e-9;

/// Exit codes: 0 success, 1 verification failure, 2 usage/input error.
enum exit_code : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2 };

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Family parse_family(std::string name) {
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "mnms") return Family::mnms;
    if (name == "mems") return Family::mems;
    if (name == "exc") return Family::exc;
    if (name == "werner") return Family::werner;
    if (name == "gen-werner") return Family::gen_werner;
    if (name == "pure-schmidt") return Family::pure_schmidt;
    throw qcoh::domain_error("unknown family \"" + name +
                             "\" (expected mnms, mems, exc, werner, gen-werner, pure-schmidt)");
}

/// "--param" values: a single number, or "p,k1" for gen-werner.
struct FamilyParam {
    double first = 0.0;
    std::optional<double> second;
};

inline double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw qcoh::domain_error(what + ": \"" + s + "\" is not a number");
    }
}

inline FamilyParam parse_param(const std::string& s) {
    FamilyParam p;
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        p.first = parse_double(s, "--param");
    } else {
        p.first = parse_double(s.substr(0, comma), "--param");
        p.second = parse_double(s.substr(comma + 1), "--param");
    }
    return p;
}

inline DensityMatrix state_from_family(Family f, const FamilyParam& p) {
    if (p.second && f != Family::gen_werner) {
        throw qcoh::domain_error("--param: a second value is only accepted for gen-werner");
    }
    if (f == Family::gen_werner && p.second) return gen_werner(p.first, *p.second);
    return make_family(f, p.first);
}

/// One grid point of a family sweep: measures of the original state next
/// to the closed-form extremes of its unitary orbit.
struct SweepRow {
    std::string family;
    double param;
    double purity;
    double d_sq_orig;
    double bmax_orig;
    double d2_max;
    double bmax_upper;
    double bmax_lower;
    double c_bd;
    double c_max;
    double s_min;
    double s_max;
};

inline SweepRow sweep_row(Family f, double param, double k1) {
    const DensityMatrix rho =
        f == Family::gen_werner ? gen_werner(param, k1) : make_family(f, param);
    const auto c = coherence(rho);
    const auto bs = bounds(spectral(rho).lambdas);
    SweepRow row;
    row.family = family_name(f);
    row.param = param;
    row.purity = purity(rho);
    row.d_sq_orig = c.d_sq;
    row.bmax_orig = bmax(rho);
    row.d2_max = bs.d2_max;
    row.bmax_upper = bs.bmax_upper;
    row.bmax_lower = bs.bmax_lower;
    row.c_bd = bs.c_bd;
    row.c_max = bs.c_max;
    row.s_min = bs.s_min;
    row.s_max = bs.s_max;
    return row;
}

struct Range {
    double start;
    double stop;
    double step;
};

inline Range parse_range(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw qcoh::domain_error("--range: expected start:stop:step, got \"" + s + "\"");
    }
    Range r;
    r.start = parse_double(s.substr(0, c1), "--range start");
    r.stop = parse_double(s.substr(c1 + 1, c2 - c1 - 1), "--range stop");
    r.step = parse_double(s.substr(c2 + 1), "--range step");
    if (!(r.step > 0.0)) throw qcoh::domain_error("--range: step must be > 0");
    if (!(r.start <= r.stop)) throw qcoh::domain_error("--range: start must be <= stop");
    return r;
}

inline std::vector<double> grid_points(const Range& r) {
    std::vector<double> pts;
    const auto n = static_cast<std::size_t>(std::floor((r.stop - r.start) / r.step + 1e-9));
    pts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double v = r.start + static_cast<double>(i) * r.step;
        // Snap rounding residue onto the domain endpoints.
        if (std::abs(v) < 1e-12) v = 0.0;
        if (std::abs(v - 1.0) < 1e-12) v = 1.0;
        pts.push_back(v);
    }
    return pts;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "family,param,purity,d_sq_orig,bmax_orig,d2_max,bmax_upper,bmax_lower,"
          "c_bd,c_max,s_min,s_max\n";
    for (const auto& r : rows) {
        os << r.family << ',' << fmt17(r.param) << ',' << fmt17(r.purity) << ','
           << fmt17(r.d_sq_orig) << ',' << fmt17(r.bmax_orig) << ',' << fmt17(r.d2_max) << ','
           << fmt17(r.bmax_upper) << ',' << fmt17(r.bmax_lower) << ',' << fmt17(r.c_bd) << ','
           << fmt17(r.c_max) << ',' << fmt17(r.s_min) << ',' << fmt17(r.s_max) << '\n';
    }
}

inline nlohmann::json to_json(const BoundSet& b) {
    return {{"d2_max", b.d2_max},         {"bmax_upper", b.bmax_upper},
            {"bmax_lower", b.bmax_lower}, {"c_bd", b.c_bd},
            {"c_max", b.c_max},           {"s_min", b.s_min},
            {"s_max", b.s_max},           {"tcal_lower", b.tcal_lower},
            {"tcal_upper", b.tcal_upper}};
}

inline nlohmann::json to_json(const CoherenceReport& r) {
    return {{"d_a", r.d_a},
            {"d_b", r.d_b},
            {"d_sq", r.d_sq},
            {"purity", r.purity},
            {"bmax", r.bmax},
            {"concurrence", r.concurrence},
            {"tcal", r.tcal},
            {"s_a", r.s_a},
            {"s_b", r.s_b},
            {"s_comb", r.s_comb},
            {"t",
             {{r.t[0][0], r.t[0][1], r.t[0][2]},
              {r.t[1][0], r.t[1][1], r.t[1][2]},
              {r.t[2][0], r.t[2][1], r.t[2][2]}}}};
}

inline nlohmann::json to_json(const SweepRow& r) {
    return {{"family", r.family},         {"param", r.param},
            {"purity", r.purity},         {"d_sq_orig", r.d_sq_orig},
            {"bmax_orig", r.bmax_orig},   {"d2_max", r.d2_max},
            {"bmax_upper", r.bmax_upper}, {"bmax_lower", r.bmax_lower},
            {"c_bd", r.c_bd},             {"c_max", r.c_max},
            {"s_min", r.s_min},           {"s_max", r.s_max}};
}

inline nlohmann::json analyze_document(const DensityMatrix& rho) {
    const auto sd = spectral(rho);
    nlohmann::json doc;
    doc["schema_version"] = schema_version;
    doc["eigenvalues"] = sd.lambdas;
    doc["report"] = to_json(report(rho));
    doc["bounds"] = to_json(bounds(sd.lambdas));
    return doc;
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        if (!text.empty() && text.back() != '\n') fallback << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw qcoh::error("cannot open output file: " + path);
    f << text;
}

/// Containment check of one exploration against the closed-form bounds.
struct ContainmentFailure {
    std::size_t index;
    SamplePoint point;
    std::string reason;
};

inline std::optional<ContainmentFailure> check_containment(const ExplorationResult& res,
                                                           const BoundSet& bs) {
    const double s = containment_slack;
    for (std::size_t i = 0; i < res.points.size(); ++i) {
        const auto& p = res.points[i];
        if (p.d_sq < -s || p.d_sq > bs.d2_max + s)
            return ContainmentFailure{i, p, "d_sq outside [0, d2_max]"};
        if (p.bmax < bs.bmax_lower - s || p.bmax > bs.bmax_upper + s)
            return ContainmentFailure{i, p, "bmax outside [bmax_lower, bmax_upper]"};
        if (p.s_comb < bs.s_min - s || p.s_comb > bs.s_max + s)
            return ContainmentFailure{i, p, "s_comb outside [s_min, s_max]"};
    }
    return std::nullopt;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-qubit coherence and CHSH analysis toolkit"};
    app.name("qcoh");
    app.require_subcommand(0, 1);

    std::string tolerance_override;
    app.add_option("--tolerance", tolerance_override,
                   "rejected: tolerances are part of the contract")
        ->group("");

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "print measures, spectrum and attainable-region bounds of a state");
    std::string an_file, an_family, an_param, an_out;
    analyze->add_option("state_file", an_file, "state JSON file (object with a \"rho\" key)");
    analyze->add_option("--family", an_family, "named family instead of a file");
    analyze->add_option("--param", an_param, "family parameter (p,k1 for gen-werner)");
    analyze->add_option("--out", an_out, "output path (default: stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "tabulate a family over a parameter grid");
    std::string sw_family, sw_range, sw_out, sw_format = "csv", sw_param;
    sweep->add_option("--family", sw_family, "family to sweep")->required();
    sweep->add_option("--range", sw_range, "parameter grid start:stop:step")->required();
    sweep->add_option("--out", sw_out, "output path")->required();
    sweep->add_option("--format", sw_format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--param", sw_param, "fixed k1 for gen-werner (default 1/sqrt(2))");

    // transform
    auto* transform = app.add_subcommand(
        "transform", "apply the coherence-extremizing unitary and report before/after");
    std::string tr_file, tr_family, tr_param, tr_mode, tr_out;
    transform->add_option("state_file", tr_file, "state JSON file");
    transform->add_option("--family", tr_family, "named family instead of a file");
    transform->add_option("--param", tr_param, "family parameter");
    transform->add_option("--mode", tr_mode, "min-coherence or max-coherence")
        ->required()
        ->check(CLI::IsMember({"min-coherence", "max-coherence"}));
    transform->add_option("--out", tr_out, "output path (default: stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Monte Carlo sweep of random unitaries, checked against the bounds");
    std::string ve_family, ve_param, ve_out, ve_measure = "haar";
    std::string ve_samples = "10000";
    std::uint64_t ve_seed = 42;
    verify->add_option("--family", ve_family, "family of the source state")->required();
    verify->add_option("--param", ve_param, "family parameter")->required();
    verify->add_option("--samples", ve_samples, "number of random unitaries (default 10000)");
    verify->add_option("--seed", ve_seed, "RNG seed (default 42)");
    verify->add_option("--measure", ve_measure, "haar or jarlskog (default haar)")
        ->check(CLI::IsMember({"haar", "jarlskog"}));
    verify->add_option("--out", ve_out, "output path (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcoh");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);  // prints the contextual help text
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (!tolerance_override.empty()) {
            throw qcoh::domain_error(
                "--tolerance is rejected: tolerances are part of the contract");
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return exit_ok;
        }

        auto input_state = [](const std::string& file, const std::string& family,
                              const std::string& param) -> DensityMatrix {
            if (!file.empty() && !family.empty()) {
                throw qcoh::domain_error("give either a state file or --family, not both");
            }
            if (!file.empty()) return load_state_file(file);
            if (family.empty()) {
                throw qcoh::domain_error("no input: give a state file or --family/--param");
            }
            if (param.empty()) throw qcoh::domain_error("--family requires --param");
            return state_from_family(parse_family(family), parse_param(param));
        };

        if (app.got_subcommand(analyze)) {
            const DensityMatrix rho = input_state(an_file, an_family, an_param);
            write_text(an_out, analyze_document(rho).dump(2), out);
            return exit_ok;
        }

        if (app.got_subcommand(sweep)) {
            const Family f = parse_family(sw_family);
            if (!sw_param.empty() && f != Family::gen_werner) {
                throw qcoh::domain_error("--param is only accepted for gen-werner sweeps");
            }
            const double k1 = sw_param.empty() ? std::numbers::sqrt2 / 2
                                               : parse_double(sw_param, "--param");
            std::vector<SweepRow> rows;
            for (double v : grid_points(parse_range(sw_range))) {
                rows.push_back(sweep_row(f, v, k1));
            }
            if (sw_format == "csv") {
                std::ostringstream os;
                write_sweep_csv(os, rows);
                write_text(sw_out, os.str(), out);
            } else {
                nlohmann::json doc;
                doc["schema_version"] = schema_version;
                doc["family"] = family_name(f);
                doc["rows"] = nlohmann::json::array();
                for (const auto& r : rows) doc["rows"].push_back(to_json(r));
                write_text(sw_out, doc.dump(2), out);
            }
            return exit_ok;
        }

        if (app.got_subcommand(transform)) {
            const DensityMatrix rho = input_state(tr_file, tr_family, tr_param);
            const TransformResult tr =
                tr_mode == "min-coherence" ? min_coherence_transform(rho)
                                           : max_coherence_transform(rho);
            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["mode"] = tr_mode;
            doc["rho"] = matrix_to_json(tr.state.matrix());
            doc["unitary"] = matrix_to_json(tr.u);
            doc["before"] = to_json(report(rho));
            doc["after"] = to_json(report(tr.state));
            write_text(tr_out, doc.dump(2), out);
            return exit_ok;
        }

        if (app.got_subcommand(verify)) {
            const Family f = parse_family(ve_family);
            const FamilyParam fp = parse_param(ve_param);
            const DensityMatrix rho = state_from_family(f, fp);
            const auto n = static_cast<long long>(parse_double(ve_samples, "--samples"));
            if (n < 1) throw qcoh::domain_error("--samples must be >= 1");
            const Measure measure =
                ve_measure == "haar" ? Measure::haar : Measure::jarlskog;

            unsigned threads = 1;
            if (n >= 20000) {
                threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
            }
            const auto res =
                explore(rho, static_cast<std::size_t>(n), ve_seed, measure, threads);
            const auto bs = bounds(spectral(rho).lambdas);
            const auto failure = check_containment(res, bs);

            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["family"] = family_name(f);
            doc["param"] = fp.first;
            if (fp.second) doc["param2"] = *fp.second;
            doc["n_samples"] = res.n_samples;
            doc["seed"] = res.seed;
            doc["measure"] = ve_measure;
            doc["bounds"] = to_json(bs);
            doc["observed"] = {{"d2_max", res.observed_d2_max},
                               {"d2_min", res.observed_d2_min},
                               {"bmax_max", res.observed_bmax_max},
                               {"bmax_min", res.observed_bmax_min}};
            doc["contained"] = !failure.has_value();
            nlohmann::json pts = nlohmann::json::array();
            for (const auto& p : res.points) pts.push_back({p.d_sq, p.bmax, p.s_comb});
            doc["points"] = std::move(pts);
            write_text(ve_out, doc.dump(), out);

            if (failure) {
                err << "containment violation at sample " << failure->index << ": "
                    << failure->reason << " (d_sq=" << fmt17(failure->point.d_sq)
                    << ", bmax=" << fmt17(failure->point.bmax)
                    << ", s_comb=" << fmt17(failure->point.s_comb) << ")\n";
                return exit_verify_failed;
            }
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace qcoh::cli

#endif  // QCOH_CLI_HPP
