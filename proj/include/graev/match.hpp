#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

/// Noncrossing partial matching of word positions: an involution theta with
/// no i < j < theta(i) < theta(j). theta(i) = i marks a fixed point.
struct Match {
  std::vector<int> partner;

  int length() const { return static_cast<int>(partner.size()); }
  int operator()(int i) const { return partner[static_cast<size_t>(i)]; }

  static Match identity(int n) {
    Match m;
    m.partner.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) m.partner[static_cast<size_t>(i)] = i;
    return m;
  }

  friend bool operator==(const Match&, const Match&) = default;
};

/// True iff theta is an involution with no crossing pattern. Entries out of
/// range throw argument_error.
bool is_match(const Match& theta);

/// w^theta: position i becomes x_i if theta(i) > i, the identity symbol if
/// theta(i) = i, and x_{theta(i)}^-1 if theta(i) < i. Output length equals
/// the input length, and always reduces to the identity.
RawWord apply_match(const RawWord& w, const Match& theta);
RawWord apply_match(const Word& w, const Match& theta);

/// rho(w,v) = max over positions of the alphabet distance of the symbols.
/// Words must have equal length.
Value rho(const RawWord& w, const RawWord& v, const AlphabetMetric& am);

/// Cost of a match directly from the pairing: position i contributes
/// d(x_i,e) when fixed, d(x_i, x_{theta(i)}^-1) when theta(i) < i, nothing
/// when theta(i) > i. Equal to rho(w, w^theta) by construction.
Value match_cost(const Word& w, const Match& theta, const AlphabetMetric& am);

/// Enumeration cap for the oracle; reads GRAEV_ORACLE_CAP (positive integer)
/// from the environment, defaulting to 14.
int default_oracle_cap();

/// Visits every match on {0,..,n-1} exactly once, in deterministic order:
/// the first position stays fixed, then pairs with each later partner in
/// ascending order, recursing on the two noncrossing segments. The number of
/// matches is the n-th Motzkin number. Throws cap_error when n exceeds the
/// cap (pass cap = 0 to use default_oracle_cap()).
void enumerate_matches(int n, const std::function<void(const Match&)>& visit,
                       int cap = 0);

/// For a trivial raw word (one reducing to the identity) returns the match
/// that pairs each letter with the partner that cancels it during stack
/// reduction; identity symbols become fixed points. Satisfies
/// x_{theta(i)} = x_i^-1 at every position. Returns nullopt iff the word is
/// not trivial.
std::optional<Match> cancellation_match(const RawWord& w);

/// Partner-pair rendering, e.g. "(0 3)(1 2)"; fixed points are omitted and
/// a match with no pairs renders as "()".
std::string format_match(const Match& theta);

}  // namespace graev
