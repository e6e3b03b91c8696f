#include "elicit/score.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "elicit/error.hpp"

namespace elicit {

Score Score::from_hundredths(int hundredths) {
  if (hundredths < 0 || hundredths > 100) {
    throw Error(ErrorCode::Range, "score",
                "score " + std::to_string(hundredths) + "/100 is outside [0,1]");
  }
  return Score(hundredths);
}

Score Score::parse(std::string_view text) {
  const std::string shown(text);
  auto malformed = [&] {
    return Error(ErrorCode::Parse, "score",
                 "'" + shown + "' is not a decimal with at most two fraction digits");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() || whole.size() > 6) throw malformed();
  if (dot != std::string_view::npos && (frac.empty() || frac.size() > 2)) throw malformed();

  int units = 0;
  auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
  if (ec != std::errc{} || p != whole.data() + whole.size()) throw malformed();

  int fraction = 0;
  if (!frac.empty()) {
    auto [q, ec2] = std::from_chars(frac.data(), frac.data() + frac.size(), fraction);
    if (ec2 != std::errc{} || q != frac.data() + frac.size()) throw malformed();
    if (frac.size() == 1) fraction *= 10;
  }

  const int total = units * 100 + fraction;
  if (negative && total != 0) {
    throw Error(ErrorCode::Range, "score", "score " + shown + " is outside [0,1]");
  }
  if (total > 100) {
    throw Error(ErrorCode::Range, "score", "score " + shown + " is outside [0,1]");
  }
  return Score(total);
}

std::string Score::str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d.%02d", hundredths_ / 100, hundredths_ % 100);
  return buf;
}

bool is_process_selected(Score score, Score threshold) {
  return score >= threshold;
}

bool is_process_selected(double score, Score threshold) {
  if (std::isnan(score) || score < 0.0 || score > 1.0) {
    throw Error(ErrorCode::Range, "score", "score " + std::to_string(score) + " is outside [0,1]");
  }
  // Compare in the integer domain when the input sits on the hundredths grid.
  const double scaled = score * 100.0;
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) < 1e-9) {
    return static_cast<int>(nearest) >= threshold.hundredths();
  }
  return score >= threshold.value();
}

}  // namespace elicit
