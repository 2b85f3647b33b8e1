#pragma once

namespace squeeze {

/// Work caps shared by the series evaluator and the certifier.
struct Limits {
  unsigned depth_cap = 200;   // max series index N
  unsigned bisect_cap = 12;   // width halvings per undecided bisection midpoint

  /// Defaults overridden by SQUEEZE_DEPTH_CAP / SQUEEZE_BISECT_CAP when set.
  /// Throws ParseError on a non-numeric value.
  static Limits from_environment();

  unsigned bernoulli_cap() const;
};

}  // namespace squeeze
