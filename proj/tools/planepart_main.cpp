// Command-line front end: enumeration dumps, identity verification,
// bijection runs, and static rendering of component structure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "planepart/bijections.hpp"
#include "planepart/components.hpp"
#include "planepart/enumerate.hpp"
#include "planepart/errors.hpp"
#include "planepart/genfun.hpp"
#include "planepart/json_io.hpp"
#include "planepart/render.hpp"

namespace {

using namespace planepart;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct RunConfig {
    int rows = 3;
    int cols = 3;
    int smax = 8;
    int qtmax = 4;
    bool qtmax_set = false;
    EnumerationLimits limits;
    bool json = false;
    bool strict = false;
    std::string render = "ascii";
    std::string input;
    bool inverse = false;
    bool trace = false;
    int random_count = 0;
    unsigned seed = 1;
};

void add_limit_flags(CLI::App* cmd, RunConfig& cfg) {
    if (const char* env = std::getenv("PLANEPART_WEIGHT_CAP"))
        cfg.limits.max_weight_cap = std::atoi(env);
    if (const char* env = std::getenv("PLANEPART_COUNT_CAP"))
        cfg.limits.max_count = std::atoll(env);
    cmd->add_option("--weight-cap", cfg.limits.max_weight_cap,
                    "largest allowed enumeration weight");
    cmd->add_option("--count-cap", cfg.limits.max_count, "largest allowed enumeration count");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

int cmd_enumerate(const RunConfig& cfg) {
    std::vector<PlanePartition> items;
    try {
        items = cfg.strict ? enumerate_spp(cfg.rows, cfg.cols, cfg.smax, cfg.limits)
                           : enumerate_pp(cfg.rows, cfg.cols, cfg.smax, cfg.limits);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    }
    if (cfg.json) {
        Json out = Json::array();
        for (const PlanePartition& p : items) {
            const auto analysis = analyze(p);
            std::string factored = "1";
            if (!analysis.a_factors().empty()) {
                factored.clear();
                for (const auto& [level, n] : analysis.a_factors()) {
                    if (!factored.empty()) factored += " ";
                    factored += "(1-t";
                    if (level > 1) factored += "^" + std::to_string(level);
                    factored += ")^" + std::to_string(n);
                }
            }
            out.push_back({{"rows", p.rows()},
                           {"weight", p.weight()},
                           {"trace", p.trace()},
                           {"k", analysis.k},
                           {"a_factored", factored}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < items.size(); ++i) {
            const PlanePartition& p = items[i];
            const auto analysis = analyze(p);
            std::cout << "#" << i << " weight=" << p.weight() << " trace=" << p.trace()
                      << " k=" << analysis.k << " A=";
            if (analysis.a_factors().empty()) {
                std::cout << "1";
            } else {
                bool first = true;
                for (const auto& [level, n] : analysis.a_factors()) {
                    if (!first) std::cout << " ";
                    first = false;
                    std::cout << "(1-t";
                    if (level > 1) std::cout << "^" << level;
                    std::cout << ")^" << n;
                }
            }
            std::cout << " rows=" << p.to_string() << "\n";
        }
        std::cout << "total " << items.size() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& identity, const RunConfig& cfg) {
    VerificationReport report;
    try {
        report = verify(identity, cfg.rows, cfg.cols, cfg.smax,
                        cfg.qtmax_set ? std::optional<int>(cfg.qtmax) : std::nullopt,
                        cfg.limits);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (cfg.json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << "identity " << report.identity << " rows=" << report.rows
                  << " cols=" << report.cols << " smax=" << report.smax;
        if (report.qtmax) std::cout << " qtmax=" << *report.qtmax;
        std::cout << "\n";
        for (const auto& d : report.degrees) {
            std::cout << "  s^" << d.degree << ": " << (d.match ? "match" : "MISMATCH") << "\n";
            if (!d.match) std::cout << "    lhs = " << d.lhs << "\n    rhs = " << d.rhs << "\n";
        }
        std::cout << (report.ok() ? "OK" : "FAILED") << "\n";
        std::cerr << "elapsed " << report.duration_ms << " ms\n";
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_show(const RunConfig& cfg) {
    PlanePartition p;
    try {
        p = plane_partition_from_json(read_json_file(cfg.input));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto analysis = analyze(p);
    if (cfg.json)
        std::cout << to_json(analysis).dump(2) << "\n";
    else if (cfg.render == "svg")
        std::cout << render_svg(p, analysis);
    else if (cfg.render == "none")
        std::cout << "k=" << analysis.k << "\n";
    else
        std::cout << render_ascii(p, analysis);
    return kExitOk;
}

int cmd_bijection_pi(const RunConfig& cfg) {
    try {
        const Json j = read_json_file(cfg.input);
        if (cfg.inverse) {
            const ShiftedTableau s = tableau_from_json(j.at("S"));
            const ShiftedTableau t = tableau_from_json(j.at("T"));
            std::cout << to_json(pi_backward(s, t)).dump(2) << "\n";
        } else {
            const PlanePartition p = plane_partition_from_json(j);
            const auto [s, t] = pi_forward(p);
            Json out{{"S", to_json(s)},
                     {"T", to_json(t)},
                     {"weight", p.weight()},
                     {"trace", p.trace()},
                     {"k", analyze(p).k}};
            std::cout << out.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int knuth_random_sweep(const RunConfig& cfg) {
    std::mt19937 rng(cfg.seed);
    for (int trial = 0; trial < cfg.random_count; ++trial) {
        MarkedMatrix a(cfg.rows, cfg.cols);
        for (int i = 1; i <= cfg.rows; ++i) {
            for (int j = 1; j <= cfg.cols; ++j) {
                const int pick = static_cast<int>(rng() % 7);
                if (pick > 0) a.set(i, j, {(pick + 1) / 2, pick % 2 == 0});
            }
        }
        const auto [s, t] = knuth_forward(a);
        if (knuth_backward(s, t, cfg.rows, cfg.cols) != a) {
            std::cout << "roundtrip FAILED on\n" << a.to_string() << "\n";
            return kExitMismatch;
        }
    }
    std::cout << "roundtrip ok on " << cfg.random_count << " random matrices\n";
    return kExitOk;
}

int cmd_bijection_knuth(const RunConfig& cfg) {
    try {
        if (cfg.random_count > 0) return knuth_random_sweep(cfg);
        const Json j = read_json_file(cfg.input);
        if (cfg.inverse) {
            const MarkedShiftedTableau s = marked_tableau_from_json(j.at("S"));
            const MarkedShiftedTableau t = marked_tableau_from_json(j.at("T"));
            std::cout << to_json(knuth_backward(s, t)).dump(2) << "\n";
        } else {
            const MarkedMatrix a = matrix_from_json(j);
            std::vector<InsertionRecord> log;
            const auto [s, t] = knuth_forward(a, &log);
            if (cfg.trace) {
                const TwoLineArray e = knuth_encode(a);
                std::cout << "E top:   ";
                for (int v : e.top) std::cout << v << " ";
                std::cout << "\nE bottom:";
                for (const MarkedValue& v : e.bottom) std::cout << " " << v.to_string();
                std::cout << "\n";
                for (const auto& rec : log)
                    std::cout << "insert " << rec.inserted.to_string() << " -> cell ("
                              << rec.cell.first << "," << rec.cell.second << ")"
                              << (rec.primed ? " primed" : "") << " records " << rec.recorded
                              << "\n";
            }
            Json out{{"S", to_json(s)}, {"T", to_json(t)}};
            std::cout << out.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const InvalidPair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact plane-partition statistics and identity checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* enumerate = app.add_subcommand("enumerate", "list plane partitions in a box");
    enumerate->add_option("--rows", cfg.rows);
    enumerate->add_option("--cols", cfg.cols);
    enumerate->add_option("--smax", cfg.smax, "largest weight");
    enumerate->add_flag("--strict", cfg.strict, "strict plane partitions only");
    enumerate->add_flag("--json", cfg.json);
    add_limit_flags(enumerate, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "check an identity at finite truncation");
    std::string identity;
    verify_cmd->add_option("identity", identity, "one of: theorem-a, theorem-b, "
                           "shifted-macmahon, hl-q0-consistency, corollary-2.1, corollary-2.5")
        ->required();
    verify_cmd->add_option("--rows", cfg.rows);
    verify_cmd->add_option("--cols", cfg.cols);
    verify_cmd->add_option("--smax", cfg.smax, "s-truncation degree");
    verify_cmd->add_option("--qtmax", cfg.qtmax, "(q,t) total-degree truncation")
        ->each([&cfg](const std::string&) { cfg.qtmax_set = true; });
    verify_cmd->add_flag("--json", cfg.json);
    add_limit_flags(verify_cmd, cfg);

    auto* show = app.add_subcommand("show", "render components and levels of a plane partition");
    show->add_option("--input", cfg.input, "plane partition JSON file")->required();
    show->add_option("--render", cfg.render, "ascii|svg|none");
    show->add_flag("--json", cfg.json, "emit the analysis report as JSON");

    auto* bijection = app.add_subcommand("bijection", "run one of the bijections");
    bijection->require_subcommand(1);
    auto* pi_cmd = bijection->add_subcommand("pi", "slicing correspondence");
    pi_cmd->add_option("--input", cfg.input)->required();
    pi_cmd->add_flag("--inverse", cfg.inverse);
    auto* knuth_cmd = bijection->add_subcommand("knuth", "shifted Knuth correspondence");
    knuth_cmd->add_option("--input", cfg.input);
    knuth_cmd->add_flag("--inverse", cfg.inverse);
    knuth_cmd->add_flag("--trace", cfg.trace, "print the encoding and each insertion");
    knuth_cmd->add_option("--random", cfg.random_count, "run N random roundtrips instead");
    knuth_cmd->add_option("--seed", cfg.seed, "seed for the random sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (verify_cmd->parsed()) return cmd_verify(identity, cfg);
    if (show->parsed()) return cmd_show(cfg);
    if (bijection->parsed()) {
        if (pi_cmd->parsed()) return cmd_bijection_pi(cfg);
        if (knuth_cmd->parsed()) {
            if (cfg.random_count == 0 && cfg.input.empty()) {
                std::cerr << "error: knuth needs --input or --random\n";
                return kExitUsage;
            }
            return cmd_bijection_knuth(cfg);
        }
    }
    return kExitUsage;
}
