#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detourlab/search.hpp"

namespace detourlab {

enum class Tier { kQuick, kFull, kExtended };

std::string_view to_string(Tier t);
/// Throws kInvalidParameter for anything but quick, full or extended.
Tier tier_from_string(std::string_view s);

struct CheckOutcome {
  /// Acceptance criterion number; 0 for supporting checks.
  int criterion = 0;
  std::string id;
  bool passed = false;
  std::string detail;
  std::chrono::nanoseconds elapsed{0};
};

// Instance checks. Each one is self-contained and exact.
CheckOutcome check_petersen();
CheckOutcome check_pr();
CheckOutcome check_flower_snarks();
CheckOutcome check_j7_splits();
CheckOutcome check_coxeter();
/// Every vertex split of Petersen, J5, J7, J9 and Coxeter is detour-saturated
/// with detour order equal to the order of the base.
CheckOutcome check_split_lemma();

/// Triangle-free, no degree-2 vertex at the final order, orders 1..12.
SearchSpec theorem2_spec(int threads);
/// Girth exactly 4, orders 1..order_max.
SearchSpec theorem1_spec(int order_max, int threads);

CheckOutcome judge_theorem2(const SearchOutcome& out);
CheckOutcome judge_theorem1_partial(const SearchOutcome& out);
/// Same hits and counts for each pair of runs.
CheckOutcome judge_determinism(const std::vector<std::pair<SearchOutcome, SearchOutcome>>& runs, int threads);
/// Orders 13 and 14 of the girth-4 search: none, then exactly one hit with
/// tau 13 that survives full recomputation.
CheckOutcome judge_theorem1_extended(const SearchOutcome& out);

struct VerifyOptions {
  /// Threads for the searches; the determinism check compares against 1.
  int threads = 1;
  /// Directory for the extended tier's checkpoint file.
  std::optional<std::string> checkpoint_dir;
  std::function<void(const CheckOutcome&)> on_check;
};

/// Runs every check of the tier (each tier includes the lower ones).
std::vector<CheckOutcome> verify_paper(Tier tier, const VerifyOptions& options = {});

}  // namespace detourlab
