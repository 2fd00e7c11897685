#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "jordanian/param_matrix.hpp"

namespace jordanian {

struct IdentityCheck {
  std::string identity;
  bool pass = false;
  std::optional<ParamMatrix> residual;  // kept only for failing matrix identities
  std::string detail;
};

// Ordered list of identity checks. A failing entry never stops the checks
// that follow it.
class VerificationReport {
 public:
  // Passes iff the residual is the zero matrix.
  void add_residual(std::string identity, const ParamMatrix& residual, std::string detail = {});
  void add(std::string identity, bool pass, std::string detail = {});
  void append(const VerificationReport& other, const std::string& prefix = {});

  bool all_pass() const noexcept;
  std::size_t size() const noexcept { return checks_.size(); }
  std::size_t failures() const noexcept;
  const std::vector<IdentityCheck>& checks() const noexcept { return checks_; }
  const IdentityCheck* find(const std::string& identity) const;

  // [{ "identity": ..., "status": "pass"|"fail", "residual": matrix|null, "detail"?: ... }]
  nlohmann::json to_json() const;

 private:
  std::vector<IdentityCheck> checks_;
};

}  // namespace jordanian
