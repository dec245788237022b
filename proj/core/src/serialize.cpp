#include "piset/serialize.hpp"

#include <json.hpp>

namespace piset {

namespace {

using Json = nlohmann::ordered_json;

Json natural(Natural v) {
  if (v <= UINT64_MAX) return static_cast<std::uint64_t>(v);
  return piset::to_string(v);
}

Json spectrum(const SpectrumSet& s) {
  Json out = Json::array();
  for (Natural v : s.values()) out.push_back(natural(v));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const SpectrumQuery& query) {
  Json j;
  j["group"] = query.group;
  j["method"] = query.method;
  j["formula"] = query.formula ? spectrum(*query.formula) : Json(nullptr);
  j["enumerated"] = query.enumerated ? spectrum(*query.enumerated) : Json(nullptr);
  j["order"] = query.order ? Json(*query.order) : Json(nullptr);
  j["match"] = (query.formula && query.enumerated) ? Json(query.matches()) : Json(nullptr);
  return dump(j);
}

std::string to_json(const SolvableQuery& query) {
  Json j;
  j["group"] = query.group;
  j["solvable"] = query.report.solvable;
  j["series_orders"] = query.report.series_orders;
  return dump(j);
}

std::string to_json(const IESVerdict& verdict) {
  Json j;
  j["set"] = verdict.set.values();
  j["ies"] = verdict.is_ies;
  j["basis"] = verdict.is_ies ? Json(verdict.basis) : Json(nullptr);
  j["witness"] = verdict.witness ? Json(verdict.witness->to_string()) : Json(nullptr);
  j["witness_spectrum"] = verdict.witness_spectrum ? spectrum(*verdict.witness_spectrum) : Json::array();
  Json scanned = Json::array();
  for (const GroupSpec& s : verdict.scanned) scanned.push_back(s.to_string());
  j["scanned"] = std::move(scanned);
  return dump(j);
}

std::string to_json(const EmpiricalReport& report) {
  Json j;
  j["set"] = report.set.values();
  j["ies"] = report.classified_ies;
  Json entries = Json::array();
  for (const CorpusEntry& e : report.entries) {
    Json row;
    row["group"] = e.name;
    row["order"] = e.order;
    row["skipped"] = e.skipped;
    if (e.skipped) {
      row["note"] = e.note;
    } else {
      row["spectrum"] = spectrum(*e.spectrum);
      row["disjoint"] = e.disjoint;
      row["solvable"] = e.solvable;
    }
    entries.push_back(std::move(row));
  }
  j["corpus"] = std::move(entries);
  j["violations"] = report.violations;
  return dump(j);
}

std::string to_json(const VerifyReport& report) {
  Json j;
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json row;
    row["name"] = c.name;
    row["status"] = to_string(c.status);
    row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  j["passed"] = report.count(CheckStatus::Pass);
  j["failed"] = report.count(CheckStatus::Fail);
  j["skipped"] = report.count(CheckStatus::Skip);
  j["ok"] = report.all_passed();
  return dump(j);
}

}  // namespace piset
