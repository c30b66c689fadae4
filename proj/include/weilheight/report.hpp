#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weilheight/exact_arith.hpp"

namespace weilheight {

/// Outcome of checking one bound on one instance.
///
/// passed <=> hypotheses_ok && measured <= bound + slack. A report whose
/// hypotheses do not hold is informational; `failed()` is false for it.
struct BoundReport {
  std::string name;
  bool hypotheses_ok = true;
  std::vector<std::pair<std::string, bool>> hypotheses;
  double bound = 0.0;
  double measured = 0.0;
  bool passed = false;
  std::string inputs_digest;
  std::string note;

  static BoundReport make(std::string name, std::vector<std::pair<std::string, bool>> hypotheses, double bound,
                          double measured, std::string digest) {
    BoundReport r;
    r.name = std::move(name);
    r.hypotheses = std::move(hypotheses);
    for (const auto& [_, ok] : r.hypotheses) r.hypotheses_ok = r.hypotheses_ok && ok;
    r.bound = bound;
    r.measured = measured;
    r.passed = r.hypotheses_ok && leq_with_slack(measured, bound);
    r.inputs_digest = std::move(digest);
    return r;
  }

  /// Exact check reported as measured = 0 (holds) or 1 (violated) against bound 0.
  static BoundReport identity(std::string name, bool holds, std::string digest) {
    return make(std::move(name), {}, 0.0, holds ? 0.0 : 1.0, std::move(digest));
  }

  bool failed() const { return hypotheses_ok && !passed; }
};

inline void to_json(nlohmann::json& j, const BoundReport& r) {
  nlohmann::json hyps = nlohmann::json::object();
  for (const auto& [k, v] : r.hypotheses) hyps[k] = v;
  j = nlohmann::json{{"name", r.name},         {"hypotheses_ok", r.hypotheses_ok}, {"hypotheses", hyps},
                     {"bound", r.bound},       {"measured", r.measured},           {"passed", r.passed},
                     {"inputs_digest", r.inputs_digest}};
  if (!r.note.empty()) j["note"] = r.note;
}

/// FNV-1a over labelled fields, rendered as 16 hex digits.
class Digest {
 public:
  Digest& add(std::string_view label, std::string_view value) {
    feed(label);
    feed("=");
    feed(value);
    feed(";");
    return *this;
  }
  Digest& add(std::string_view label, long value) { return add(label, std::to_string(value)); }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
    return buf;
  }

 private:
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
  }

  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace weilheight
