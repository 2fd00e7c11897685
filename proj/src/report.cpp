#include "jordanian/report.hpp"

#include <algorithm>

namespace jordanian {

void VerificationReport::add_residual(std::string identity, const ParamMatrix& residual, std::string detail) {
  IdentityCheck check{std::move(identity), residual.is_zero(), std::nullopt, std::move(detail)};
  if (!check.pass) check.residual = residual;
  checks_.push_back(std::move(check));
}

void VerificationReport::add(std::string identity, bool pass, std::string detail) {
  checks_.push_back({std::move(identity), pass, std::nullopt, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (auto check : other.checks_) {
    check.identity = prefix + check.identity;
    checks_.push_back(std::move(check));
  }
}

bool VerificationReport::all_pass() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const IdentityCheck& c) { return !c.pass; }));
}

const IdentityCheck* VerificationReport::find(const std::string& identity) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const IdentityCheck& c) { return c.identity == identity; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {{"identity", c.identity},
                            {"status", c.pass ? "pass" : "fail"},
                            {"residual", c.residual ? jordanian::to_json(*c.residual) : nlohmann::json(nullptr)}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace jordanian
