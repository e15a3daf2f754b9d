#pragma once

#include <string>
#include <utility>
#include <vector>

namespace walg {

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s);

// Outcome of a verification: inputs, verdict, witnesses rendered in the term
// grammar, and a ledger of weights or levels.  Nested items carry sub-checks.
struct Report {
  using KV = std::pair<std::string, std::string>;

  std::string check;
  std::vector<KV> inputs;
  Status status = Status::Pass;
  std::vector<KV> witness;
  std::vector<KV> ledger;
  std::vector<Report> items;

  Report() = default;
  explicit Report(std::string id) : check(std::move(id)) {}

  bool passed() const { return status == Status::Pass; }
  Report& input(std::string k, std::string v);
  Report& note(std::string k, std::string v);
  Report& record(std::string k, std::string v);
  // Marks a failed sub-condition.
  Report& fail(std::string k, std::string v);
  // Records a sub-condition, failing the report when ok is false.
  Report& expect(bool ok, std::string k, std::string v);
  // Appends a sub-report; a failing child fails the parent.
  Report& add(Report child);
  // Sorts items by check id, recursively.
  void canonicalize();
};

std::string to_json(const Report& r, int indent = 2);
std::string to_json(const std::vector<Report>& rs, int indent = 2);

}  // namespace walg
