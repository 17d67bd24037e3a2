#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace siegel::verify {

enum class Status { Pass, Fail, Finding };
const char* status_name(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string citation;
    std::string lhs, rhs, residual;
    std::optional<double> elapsedMs;
};

struct Options {
    double tol = 1e-6;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::vector<long> k{1, 2, 3, 4, 5};
    std::string goldensDir;
    bool timings = false;
    std::set<std::string> findings;  // check names allowed to disagree with the displayed source
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;  // sorted by name
    bool failed() const;
    std::size_t count(Status s) const;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);         // includes "all"
SuiteReport run_suite(const std::string& name, const Options& opt);

std::string engine_version();

// canonical serializations guarded by golden files: file name -> content
std::map<std::string, std::string> golden_files();

}  // namespace siegel::verify
