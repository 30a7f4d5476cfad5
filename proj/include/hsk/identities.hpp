#pragma once

// Replay of the complete list of symbolic identities and ideal memberships
// behind the classification, computed with this library's own engine.

#include <string>
#include <vector>

namespace hsk {

struct IdentityEntry {
  std::string check;      // stable identifier
  std::string paper_ref;  // the claim being certified, in formula form
  bool passed = false;
  double millis = 0;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;
  double total_millis = 0;
  bool all_passed() const;
};

struct IdentityOptions {
  /// Run only the named checks (all when empty).
  std::vector<std::string> only;
  /// Also replay the quartic memberships under a second monomial order.
  bool alt_order_check = true;
};

/// Names in report order.
std::vector<std::string> identity_check_names();

IdentityReport verify_identity_suite(const IdentityOptions& options = {});

}  // namespace hsk
