#ifndef CORINGS_REPORT_HPP
#define CORINGS_REPORT_HPP

// Machine-readable verification reports: one named item per axiom or law,
// each pass / fail / vacuous / flagged, with a concrete witness on failure.
// Field order is fixed so identical inputs yield byte-identical output.

#include <string>
#include <vector>

namespace corings {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, vacuous, flagged };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // basis tuple / element vector for fail or flagged
};

struct Report {
  std::string subject;  // what was verified, e.g. "algebra R[C2] over Z/4"
  std::vector<CheckItem> items;

  void add(std::string name, bool ok, std::string witness = "") {
    items.push_back({std::move(name),
                     ok ? CheckStatus::pass : CheckStatus::fail,
                     ok ? std::string() : std::move(witness)});
  }
  void add_status(std::string name, CheckStatus s, std::string witness = "") {
    items.push_back({std::move(name), s, std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix) {
    for (const auto& it : other.items)
      items.push_back({prefix + "." + it.name, it.status, it.witness});
  }

  // Flagged and vacuous items do not count as failures.
  bool ok() const {
    for (const auto& it : items)
      if (it.status == CheckStatus::fail) return false;
    return true;
  }

  std::string to_text() const {
    std::string out = subject + "\n";
    for (const auto& it : items) {
      out += "  [" + std::string(to_string(it.status)) + "] " + it.name;
      if (!it.witness.empty()) out += "  -- " + it.witness;
      out += "\n";
    }
    out += ok() ? "OK\n" : "FAILED\n";
    return out;
  }
};

}  // namespace corings

#endif  // CORINGS_REPORT_HPP
