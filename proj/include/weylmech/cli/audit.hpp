#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylmech::cli {

struct AuditRow {
  std::string identity;
  int instances = 0;
  int failures = 0;
  std::string first_failure;  // operands of the first failing instance, empty on pass

  [[nodiscard]] bool passed() const { return instances > 0 && failures == 0; }
};

/// A fixed product with its independently derived value and a published value.
struct AuditRecord {
  std::string expression;
  std::string computed;
  std::string oracle;
  std::string published;

  [[nodiscard]] bool matches_oracle() const { return computed == oracle; }
  [[nodiscard]] bool matches_published() const { return computed == published; }
};

struct AuditReport {
  std::vector<AuditRow> rows;
  std::vector<AuditRecord> records;

  /// Every identity row passes and every record matches its oracle. A mismatch with
  /// the published value is reported but is not a failure.
  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::string csv() const;
  [[nodiscard]] std::string json() const;
};

/// Exact identity checks on seeded random polynomials with total degree ≤ max_degree.
AuditReport symbolic_audit(std::uint64_t seed, int instances, int max_degree = 4);

}  // namespace weylmech::cli
