// Batch front end: runs one JSON job and prints its report.
#include <iostream>

#include "CLI11.hpp"
#include "formal/cli.hpp"

int main(int argc, char **argv)
{
	CLI::App app{"Formal group and localised regular quotient toolkit"};
	formal::cli::Options options;
	std::string job;
	bool self_test = false;
	app.add_option("job", job, "JSON job file");
	app.add_option("--order", options.order, "Truncation order when the job does not set one")
	    ->check(CLI::Range(1, 64));
	app.add_option("--degree-bound", options.degree_bound, "Bound on minimal polynomial degrees in the field case")
	    ->check(CLI::PositiveNumber);
	app.add_option("--seed", options.seed, "Seed for random sampling in self-test mode");
	app.add_flag("--self-test", self_test, "Run the invariant suites instead of a job");
	try
	{
		app.parse(argc, argv);
		if (self_test == !job.empty())
			throw CLI::ValidationError("give exactly one of a job file or --self-test");
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : formal::cli::kInputError;
	}
	auto report = self_test ? formal::cli::self_test(options) : formal::cli::run_file(job, options);
	std::cout << formal::cli::render(report);
	return report.exit_code;
}
