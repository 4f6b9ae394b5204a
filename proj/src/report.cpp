#include "eqs/report.hpp"

namespace eqs {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Verified: return "verified to bound";
    case Status::Counterexample: return "counterexample";
  }
  return "?";
}

bool Report::ok() const { return first_failure() == nullptr; }

const ReportItem* Report::first_failure() const {
  for (const auto& it : items)
    if (it.status == Status::Fail || it.status == Status::Counterexample) return &it;
  return nullptr;
}

ReportItem& Report::add(std::string id, Params params, bool holds, std::string witness) {
  ReportItem item;
  item.id = std::move(id);
  item.params = std::move(params);
  item.status = holds ? Status::Pass : Status::Fail;
  item.witness = std::move(witness);
  items.push_back(std::move(item));
  return items.back();
}

void Report::merge(const Report& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

std::string poly_diff(const MPoly& lhs, const MPoly& rhs) {
  MPoly d = lhs - rhs;
  if (d.is_zero()) return {};
  const auto& [e, c] = *d.terms().begin();
  MPoly mono = MPoly::monomial(e, 1);
  return "coefficient of " + mono.str() + ": lhs " + lhs.coeff(e).get_str() + ", rhs " +
         rhs.coeff(e).get_str();
}

ReportItem& check_poly(Report& rep, std::string id, Params params, const MPoly& lhs, const MPoly& rhs) {
  std::string w = poly_diff(lhs, rhs);
  return rep.add(std::move(id), std::move(params), w.empty(), w);
}

}  // namespace eqs
