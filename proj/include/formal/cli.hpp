#ifndef FORMAL_CLI_HPP
#define FORMAL_CLI_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

namespace formal::cli
{

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int
{
	kOk = 0,
	kViolation = 1,
	kInputError = 2,
	kUnknown = 3,
};

/// Defaults for job options; a job's own "options" override them.
struct Options
{
	int order = 10;
	int degree_bound = 64;
	std::uint64_t seed = 1;
};

struct Report
{
	nlohmann::json document;
	int exit_code;
};

/// Run one parsed job document.
Report run(nlohmann::json const &job, Options const &defaults);
/// Read and run a job file; unreadable or malformed files give exit code 2.
Report run_file(std::string const &path, Options const &defaults);
/// Run the invariant suites on random inputs drawn from `seed`.
Report self_test(Options const &options);
/// Deterministic text form: sorted keys, two-space indent, trailing newline.
std::string render(Report const &report);

} // namespace formal::cli

#endif
