#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "siegel/rep/tables.hpp"
#include "siegel/verify/suites.hpp"

#ifndef SIEGEL_SOURCE_DIR
#define SIEGEL_SOURCE_DIR "."
#endif

using nlohmann::ordered_json;
namespace fs = std::filesystem;
namespace sv = siegel::verify;

namespace {

constexpr const char* kSchemaVersion = "1.0.0";

std::set<std::string> load_findings(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open findings manifest " + path);
    ordered_json j = ordered_json::parse(in);
    std::set<std::string> out;
    for (const auto& f : j.at("findings")) out.insert(f.at("name").get<std::string>());
    return out;
}

ordered_json report_json(const sv::SuiteReport& r, const sv::Options& o) {
    ordered_json j;
    j["schemaVersion"] = kSchemaVersion;
    j["engineVersion"] = sv::engine_version();
    j["suite"] = r.suite;
    j["config"] = {{"tol", o.tol},     {"seed", o.seed},         {"jobs", o.jobs},
                   {"k", o.k},         {"timings", o.timings},   {"goldensDir", o.goldensDir}};
    j["summary"] = {{"pass", r.count(sv::Status::Pass)},
                    {"fail", r.count(sv::Status::Fail)},
                    {"finding", r.count(sv::Status::Finding)}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json x;
        x["name"] = c.name;
        x["status"] = sv::status_name(c.status);
        x["citation"] = c.citation;
        x["lhs"] = c.lhs;
        x["rhs"] = c.rhs;
        x["residual"] = c.residual;
        x["elapsedMs"] = c.elapsedMs ? ordered_json(*c.elapsedMs) : ordered_json(nullptr);
        checks.push_back(std::move(x));
    }
    j["checks"] = std::move(checks);
    return j;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(p.string() + ": " + std::strerror(errno));
    out << content;
    out.close();
    if (!out) throw std::runtime_error(p.string() + ": " + std::strerror(errno));
}

std::string one_line(const std::string& s, std::size_t max = 100) {
    std::string t;
    for (char c : s) t += c == '\n' ? ' ' : c;
    if (t.size() > max) t = t.substr(0, max) + "...";
    return t;
}

ordered_json tables_json() {
    using namespace siegel::rep;
    ordered_json j;
    ordered_json cands = ordered_json::array();
    std::set<Weight> chars;
    for (const auto& c : langlands_enumerate()) {
        cands.push_back({{"parabolic", c.parabolic},
                         {"lambda", c.lambda.str()},
                         {"sigma", c.sigma},
                         {"nu", c.nu},
                         {"constraints", c.citations},
                         {"assumption", c.assumption}});
        chars.insert(c.lambda);
    }
    j["langlands"] = cands;
    ordered_json inf = ordered_json::array();
    for (const auto& w : chars) inf.push_back(w.str());
    j["infinitesimalCharacters"] = inf;
    ordered_json scan = ordered_json::array();
    for (const auto& r : ktype_scan({3, 3}, 2, 50))
        scan.push_back({{"L1", r.l1}, {"minimalKType", r.k.str()}, {"contains33", r.occurs}});
    j["ktypeScan"] = scan;
    M0Result m = m0_check();
    j["m0"] = {{"det", m.det.str()}, {"det3", m.det3.str()}, {"norm", m.norm.str()}, {"inK", m.inK}};
    return j;
}

std::string tables_text() {
    using namespace siegel::rep;
    std::string s = "parabolic  Lambda   sigma / nu\n";
    for (const auto& c : langlands_enumerate()) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-10s %-8s %s / %s\n", c.parabolic.c_str(), c.lambda.str().c_str(),
                      c.sigma.c_str(), c.nu.c_str());
        s += buf;
    }
    s += "\nK-type (3,3) in the Delta1+ cone for Lambda = (L1,1):";
    for (const auto& r : ktype_scan({3, 3}, 2, 50))
        if (r.occurs) s += " L1=" + std::to_string(r.l1);
    M0Result m = m0_check();
    s += "\nm0: det(Ci+D) = " + m.det.str() + ", cubed = " + m.det3.str() + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the genus-two weight-three identities"};
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list", list, "List suites and exit");

    sv::Options opt;
    opt.goldensDir = std::string(SIEGEL_SOURCE_DIR) + "/goldens";
    std::string findingsPath = std::string(SIEGEL_SOURCE_DIR) + "/data/findings_manifest.json";
    std::string suite, suiteFlag, jsonPath;

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("name", suite, "Suite name (same as --suite)");
    verify->add_option("--suite", suiteFlag, "Suite name");
    verify->add_option("--json", jsonPath, "Write the JSON report to this path");
    verify->add_option("--tol", opt.tol, "Relative tolerance for numeric checks")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "Seed for randomized property checks");
    verify->add_option("--jobs", opt.jobs, "Suites run concurrently")->check(CLI::Range(1u, 64u));
    verify->add_option("--k", opt.k, "Weights k for the Sturm limit checks")->check(CLI::Range(1, 5));
    verify->add_option("--goldens", opt.goldensDir, "Golden file directory");
    verify->add_option("--findings", findingsPath, "Findings manifest");
    verify->add_flag("--timings", opt.timings, "Record per-check wall time");

    std::string kind, path;
    bool update = false;
    auto* dump = app.add_subcommand("dump", "Write golden files or representation tables");
    dump->add_option("kind", kind, "goldens or tables")->required()->check(CLI::IsMember({"goldens", "tables"}));
    dump->add_option("path", path, "Output directory")->required();
    dump->add_flag("--update-goldens", update, "Allow overwriting golden files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return e.get_exit_code() == 0 ? rc : 2;
    }

    if (list) {
        for (const auto& n : sv::suite_names()) std::cout << n << "\n";
        std::cout << "all\n";
        return 0;
    }

    if (*verify) {
        if (!suite.empty() && !suiteFlag.empty() && suite != suiteFlag) {
            std::cerr << "conflicting suite names\n";
            return 2;
        }
        if (suite.empty()) suite = suiteFlag;
        if (suite.empty()) suite = "all";
        if (!sv::is_suite(suite)) {
            std::cerr << "unknown suite '" << suite << "' (see --list)\n";
            return 2;
        }
        try {
            opt.findings = load_findings(findingsPath);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        sv::SuiteReport r = sv::run_suite(suite, opt);
        for (const auto& c : r.checks) {
            std::cout << (c.status == sv::Status::Pass ? "PASS   " : c.status == sv::Status::Fail ? "FAIL   " : "FINDING") << " "
                      << c.name;
            if (c.status != sv::Status::Pass) std::cout << "  residual: " << one_line(c.residual);
            std::cout << "\n";
        }
        std::cout << r.count(sv::Status::Pass) << " pass, " << r.count(sv::Status::Finding) << " finding, "
                  << r.count(sv::Status::Fail) << " fail\n";
        if (!jsonPath.empty()) {
            try {
                write_file(jsonPath, report_json(r, opt).dump(2) + "\n");
            } catch (const std::exception& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
        }
        return r.failed() ? 1 : 0;
    }

    if (*dump) {
        try {
            fs::path dir(path);
            if (kind == "goldens") {
                if (!update) {
                    std::cerr << "dump goldens overwrites reference files; pass --update-goldens\n";
                    return 2;
                }
                fs::create_directories(dir);
                for (const auto& [name, content] : sv::golden_files()) write_file(dir / name, content);
            } else {
                fs::create_directories(dir);
                write_file(dir / "tables.json", tables_json().dump(2) + "\n");
                write_file(dir / "tables.txt", tables_text());
            }
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        return 0;
    }

    std::cout << app.help();
    return 2;
}
