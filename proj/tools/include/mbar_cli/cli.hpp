#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mbar/chi_recursion.hpp"

namespace mbar::cli {

enum ExitCode { Ok = 0, CheckFailed = 1, UsageError = 2, BudgetError = 3 };

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& suite_names();
// Prints one PASS/FAIL line per check and returns true iff all pass. Throws
// DomainError for an unknown suite.
bool run_suite(const std::string& name, ChiTable& table, std::ostream& out);

// Table cache as JSON: {"entries": [{"g", "n", "kpoly", "provenance"}]}.
void load_cache(const std::string& path, ChiTable& table);
void save_cache(const std::string& path, const ChiTable& table);

}  // namespace mbar::cli
