#include "walg/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace walg {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "fail";
}

Report& Report::input(std::string k, std::string v) {
  inputs.emplace_back(std::move(k), std::move(v));
  return *this;
}

Report& Report::note(std::string k, std::string v) {
  witness.emplace_back(std::move(k), std::move(v));
  return *this;
}

Report& Report::record(std::string k, std::string v) {
  ledger.emplace_back(std::move(k), std::move(v));
  return *this;
}

Report& Report::fail(std::string k, std::string v) {
  status = Status::Fail;
  return note(std::move(k), std::move(v));
}

Report& Report::expect(bool ok, std::string k, std::string v) {
  if (!ok) return fail(std::move(k), std::move(v));
  return *this;
}

Report& Report::add(Report child) {
  if (child.status == Status::Fail) status = Status::Fail;
  items.push_back(std::move(child));
  return *this;
}

void Report::canonicalize() {
  for (auto& i : items) i.canonicalize();
  std::stable_sort(items.begin(), items.end(),
                   [](const Report& a, const Report& b) { return a.check < b.check; });
}

namespace {

nlohmann::ordered_json kv_object(const std::vector<Report::KV>& kvs) {
  nlohmann::ordered_json o = nlohmann::ordered_json::object();
  for (const auto& [k, v] : kvs) o[k] = v;
  return o;
}

nlohmann::ordered_json encode(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["inputs"] = kv_object(r.inputs);
  j["status"] = status_name(r.status);
  j["witness"] = kv_object(r.witness);
  j["ledger"] = kv_object(r.ledger);
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& i : r.items) items.push_back(encode(i));
  j["items"] = items;
  return j;
}

}  // namespace

std::string to_json(const Report& r, int indent) { return encode(r).dump(indent); }

std::string to_json(const std::vector<Report>& rs, int indent) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rs) a.push_back(encode(r));
  return a.dump(indent);
}

}  // namespace walg
