#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xgroup/group.hpp"
#include "xgroup/xcheck.hpp"

namespace xgroup {

struct Evidence {
  std::string fact;
  bool verified = false;
};

/// Case label "1.1" ... "4.2", or "NotX" (then `witness` is set).
struct TheoremCase {
  std::string label;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Evidence> evidence;
  std::optional<Witness> witness;
  /// "brute" when the brute-force checker agreed, "structural-only" above the cap.
  std::string confirmation;
};

struct ClassifyOptions {
  std::size_t brute_cap = kDefaultBruteCap;
  /// Run the brute-force checker on positive labels within the cap.
  bool confirm = true;
};

/// Errors: Unclassified (no case matches and the brute checker says IsX or
/// cannot run), CapExceeded, InternalInvariantViolation on a brute
/// disagreement during confirmation.
TheoremCase classify(const Group& G, const ClassifyOptions& options = {});

/// The evidence chain as text, one fact per line.
std::string explain(const TheoremCase& tc);

enum class CrossStatus { Match, Mismatch, Warn };
std::string_view to_string(CrossStatus s);

struct CrossCheck {
  std::string label;
  std::optional<XResult> brute;  // absent above the brute cap
  CrossStatus status = CrossStatus::Match;
  std::string note;
};

/// Classify (without internal confirmation) and compare with the brute
/// checker. Never throws: failures are reported as Mismatch.
CrossCheck cross_check(const Group& G, std::size_t brute_cap = kDefaultBruteCap);

}  // namespace xgroup
