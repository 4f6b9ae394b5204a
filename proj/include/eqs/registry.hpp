#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eqs/report.hpp"

namespace eqs {

using Bounds = std::map<std::string, long long>;

struct SuiteBound {
  std::string name;
  long long value;
  long long limit;  // larger values raise CapExceeded
  std::string help;
};

struct SuiteSpec {
  std::string id;
  std::string summary;
  std::vector<SuiteBound> bounds;  // defaults
  std::function<Report(const Bounds&)> run;
};

// Every verification suite, each under exactly one id, in a fixed order.
const std::vector<SuiteSpec>& suite_registry();
const SuiteSpec* find_suite(std::string_view id);
// Runs with the defaults replaced by overrides; throws DomainError for a bound the suite lacks.
Report run_suite(const SuiteSpec& spec, const Bounds& overrides = {});

}  // namespace eqs
