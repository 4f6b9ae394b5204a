#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqs/mpoly.hpp"

namespace eqs {

enum class Status { Pass, Fail, Verified, Counterexample };
const char* status_name(Status s);

using Params = std::vector<std::pair<std::string, std::string>>;

struct ReportItem {
  std::string id;
  Params params;
  Status status = Status::Pass;
  std::string witness;  // first disagreement, empty when the item holds
  std::string detail;
};

struct Report {
  std::string suite;
  std::string note;
  std::vector<ReportItem> items;

  explicit Report(std::string name = {}) : suite(std::move(name)) {}

  bool ok() const;
  const ReportItem* first_failure() const;
  ReportItem& add(std::string id, Params params, bool holds, std::string witness = {});
  void merge(const Report& other);
};

// Describes the first exponent at which two polynomials differ; empty when equal.
std::string poly_diff(const MPoly& lhs, const MPoly& rhs);

ReportItem& check_poly(Report& rep, std::string id, Params params, const MPoly& lhs, const MPoly& rhs);

}  // namespace eqs
