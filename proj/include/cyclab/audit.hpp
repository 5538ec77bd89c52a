#pragma once

#include <string>
#include <vector>

namespace cyclab {

/* One failed law instance, with enough context to replay it by hand. */
struct AuditFailure {
  std::string law;
  std::string detail;
};

/* Outcome of an exhaustive or sampled law audit.  Audits never throw on a
   failed law; they count every instance and collect the failures. */
struct AuditReport {
  std::string subject;
  long long checked = 0;
  std::vector<AuditFailure> failures;

  bool passed() const { return failures.empty(); }

  /* Counts one instance; records a failure when ok is false. */
  void check(bool ok, const std::string& law, const std::string& detail = "") {
    ++checked;
    if (!ok) failures.push_back({law, detail});
  }

  void absorb(const AuditReport& sub) {
    checked += sub.checked;
    failures.insert(failures.end(), sub.failures.begin(), sub.failures.end());
  }

  std::string summary() const {
    std::string s = subject + ": checked " + std::to_string(checked) +
                    " instances, " + std::to_string(failures.size()) +
                    " failures";
    const std::size_t shown = failures.size() < 5 ? failures.size() : 5;
    for (std::size_t i = 0; i < shown; ++i) {
      s += "\n  [" + failures[i].law + "] " + failures[i].detail;
    }
    if (failures.size() > shown) s += "\n  ...";
    return s;
  }
};

}  // namespace cyclab
