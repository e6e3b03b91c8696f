#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace elicit {

/// Process-matrix score in [0,1] held as exact hundredths, so comparisons at
/// the 0.50 boundary never see binary rounding.
class Score {
 public:
  constexpr Score() = default;

  /// Throws Range when `hundredths` is outside [0, 100].
  static Score from_hundredths(int hundredths);

  /// Accepts "0", "1", "0.5", "0.75", "1.00": at most two fraction digits.
  /// Throws Parse on malformed text and Range outside [0,1].
  static Score parse(std::string_view text);

  constexpr int hundredths() const noexcept { return hundredths_; }
  constexpr double value() const noexcept { return hundredths_ / 100.0; }

  /// Always two fraction digits: "0.50".
  std::string str() const;

  friend constexpr auto operator<=>(const Score&, const Score&) = default;

 private:
  constexpr explicit Score(int hundredths) : hundredths_(hundredths) {}
  int hundredths_ = 0;

  friend struct ScoreConstants;
};

struct ScoreConstants {
  static constexpr Score half() { return Score(50); }
};

/// Selection threshold used when a dataset header does not override it.
inline constexpr Score kDefaultThreshold = ScoreConstants::half();

/// A process-matrix cell selects its technique iff score >= threshold; the
/// boundary itself is selected.
bool is_process_selected(Score score, Score threshold = kDefaultThreshold);

/// Real-valued form. Throws Range when `score` is outside [0,1] or NaN.
bool is_process_selected(double score, Score threshold = kDefaultThreshold);

}  // namespace elicit
