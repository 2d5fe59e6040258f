#include "graev/graev_metric.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace graev {

namespace {

GraevResult oracle_distance(const Word& w, const AlphabetMetric& am, int cap) {
  const int n = w.length();
  std::optional<Value> best;
  Match best_theta;
  enumerate_matches(
      n,
      [&](const Match& theta) {
        const Value c = match_cost(w, theta, am);
        if (!best || c < *best) {
          best = c;
          best_theta = theta;
        }
      },
      cap);
  return {*best, best_theta};
}

// ---------------------------------------------------------------------------
// Serial reference: the interval recurrence computed directly on Values.
// ---------------------------------------------------------------------------

GraevResult reference_distance(const Word& w, const AlphabetMetric& am) {
  const int n = w.length();
  const size_t un = static_cast<size_t>(n);
  std::vector<Value> table(un * un);  // table[i*n+j] = D[i..j]; empty = 0
  const auto cell = [&](int i, int j) -> Value& {
    return table[static_cast<size_t>(i) * un + static_cast<size_t>(j)];
  };
  const auto fixed_cost = [&](int i) -> const Value& {
    return am.to_identity(w.letter(i).point);
  };
  const auto pair_cost = [&](int i, int k) {
    return am.dist(w.letter(k), w.letter(i).inverse());
  };

  for (int len = 1; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len - 1;
      Value best = fixed_cost(i);
      if (i < j) best = max(best, cell(i + 1, j));
      for (int k = i + 1; k <= j; ++k) {
        Value cand = pair_cost(i, k);
        if (k > i + 1) cand = max(cand, cell(i + 1, k - 1));
        if (k < j) cand = max(cand, cell(k + 1, j));
        best = min(best, cand);
      }
      cell(i, j) = best;
    }
  }

  // Backtrack with the deterministic tie-break: fixed point first, then the
  // smallest pairing partner.
  Match witness;
  witness.partner.resize(un);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i > j) continue;
    const Value target = cell(i, j);
    Value fixed_branch = fixed_cost(i);
    if (i < j) fixed_branch = max(fixed_branch, cell(i + 1, j));
    if (fixed_branch == target) {
      witness.partner[static_cast<size_t>(i)] = i;
      stack.emplace_back(i + 1, j);
      continue;
    }
    bool found = false;
    for (int k = i + 1; k <= j; ++k) {
      Value cand = pair_cost(i, k);
      if (k > i + 1) cand = max(cand, cell(i + 1, k - 1));
      if (k < j) cand = max(cand, cell(k + 1, j));
      if (cand == target) {
        witness.partner[static_cast<size_t>(i)] = k;
        witness.partner[static_cast<size_t>(k)] = i;
        stack.emplace_back(i + 1, k - 1);
        stack.emplace_back(k + 1, j);
        found = true;
        break;
      }
    }
    if (!found) throw error("graev dp: backtrack failed (internal bug)");
  }
  return {cell(0, n - 1), witness};
}

// ---------------------------------------------------------------------------
// Parallel kernel: distances interned into dense rank codes (uint16), rows of
// equal interval length filled concurrently. Rank coding is order-isomorphic
// to Value comparison, so values, minima and tie-breaks match the reference
// exactly.
// ---------------------------------------------------------------------------

struct CodedProblem {
  int n = 0;
  int symbols = 0;                    // 2 * points
  std::vector<Value> codes;           // code -> Value, ascending; codes[0] = 0
  std::vector<std::uint16_t> fixed;   // per position: code of d(x_i, e)
  std::vector<std::uint16_t> pair;    // [sym_i * symbols + sym_k] = code of d(x_k, x_i^-1)
  std::vector<int> sym;               // per position: 2*point + (sign < 0)
};

CodedProblem build_coded(const Word& w, const AlphabetMetric& am) {
  CodedProblem p;
  p.n = w.length();
  const int points = am.base().size();
  p.symbols = 2 * points;
  p.codes = am.symbol_values();
  const auto code_of = [&](const Value& v) {
    const auto it = std::lower_bound(p.codes.begin(), p.codes.end(), v);
    return static_cast<std::uint16_t>(it - p.codes.begin());
  };
  const auto letter_of = [](int s) {
    return Letter{s / 2, (s % 2 == 0) ? +1 : -1};
  };
  p.pair.resize(static_cast<size_t>(p.symbols) * p.symbols);
  for (int a = 0; a < p.symbols; ++a)
    for (int b = 0; b < p.symbols; ++b)
      p.pair[static_cast<size_t>(a) * p.symbols + b] =
          code_of(am.dist(letter_of(b), letter_of(a).inverse()));
  p.sym.resize(static_cast<size_t>(p.n));
  p.fixed.resize(static_cast<size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    const Letter& l = w.letter(i);
    p.sym[static_cast<size_t>(i)] = 2 * l.point + (l.sign < 0 ? 1 : 0);
    p.fixed[static_cast<size_t>(i)] = code_of(am.to_identity(l.point));
  }
  return p;
}

GraevResult coded_distance(const Word& w, const AlphabetMetric& am) {
  const CodedProblem p = build_coded(w, am);
  const int n = p.n;
  const size_t un = static_cast<size_t>(n);
  std::vector<std::uint16_t> dp(un * un, 0);   // dp[i*n+j] = D[i..j]
  std::vector<std::uint16_t> dpt(un * un, 0);  // dpt[j*n+i] = D[i..j]

  for (int i = 0; i < n; ++i) {
    dp[static_cast<size_t>(i) * un + static_cast<size_t>(i)] =
        p.fixed[static_cast<size_t>(i)];
    dpt[static_cast<size_t>(i) * un + static_cast<size_t>(i)] =
        p.fixed[static_cast<size_t>(i)];
  }

  for (int len = 2; len <= n; ++len) {
    const int rows = n - len + 1;
    const bool parallel_worthwhile =
        static_cast<long>(rows) * len >= 32768;
#pragma omp parallel for schedule(static) if (parallel_worthwhile)
    for (int i = 0; i < rows; ++i) {
      const int j = i + len - 1;
      const std::uint16_t* row_below = &dp[static_cast<size_t>(i + 1) * un];
      const std::uint16_t* col_right = &dpt[static_cast<size_t>(j) * un];
      const std::uint16_t* pair_row =
          &p.pair[static_cast<size_t>(p.sym[static_cast<size_t>(i)]) *
                  p.symbols];
      std::uint16_t best =
          std::max(p.fixed[static_cast<size_t>(i)], row_below[j]);
      for (int k = i + 1; k <= j; ++k) {
        std::uint16_t cand = pair_row[p.sym[static_cast<size_t>(k)]];
        if (k > i + 1) cand = std::max(cand, row_below[k - 1]);
        if (k < j) cand = std::max(cand, col_right[k + 1]);
        best = std::min(best, cand);
        if (best == 0) break;
      }
      dp[static_cast<size_t>(i) * un + static_cast<size_t>(j)] = best;
      dpt[static_cast<size_t>(j) * un + static_cast<size_t>(i)] = best;
    }
  }

  const auto cell = [&](int i, int j) {
    return dp[static_cast<size_t>(i) * un + static_cast<size_t>(j)];
  };
  Match witness;
  witness.partner.resize(un);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i > j) continue;
    const std::uint16_t target = cell(i, j);
    const std::uint16_t fixed_branch =
        (i < j) ? std::max(p.fixed[static_cast<size_t>(i)], cell(i + 1, j))
                : p.fixed[static_cast<size_t>(i)];
    if (fixed_branch == target) {
      witness.partner[static_cast<size_t>(i)] = i;
      stack.emplace_back(i + 1, j);
      continue;
    }
    const std::uint16_t* pair_row =
        &p.pair[static_cast<size_t>(p.sym[static_cast<size_t>(i)]) * p.symbols];
    bool found = false;
    for (int k = i + 1; k <= j; ++k) {
      std::uint16_t cand = pair_row[p.sym[static_cast<size_t>(k)]];
      if (k > i + 1) cand = std::max(cand, cell(i + 1, k - 1));
      if (k < j) cand = std::max(cand, cell(k + 1, j));
      if (cand == target) {
        witness.partner[static_cast<size_t>(i)] = k;
        witness.partner[static_cast<size_t>(k)] = i;
        stack.emplace_back(i + 1, k - 1);
        stack.emplace_back(k + 1, j);
        found = true;
        break;
      }
    }
    if (!found) throw error("graev dp: backtrack failed (internal bug)");
  }
  return {p.codes[cell(0, n - 1)], witness};
}

void check_word(const Word& w, const AlphabetMetric& am) {
  if (w.alphabet_size() != am.base().size())
    throw argument_error("graev: word alphabet does not match the space");
}

}  // namespace

GraevResult graev_identity_distance(const Word& w, const AlphabetMetric& am,
                                    DistanceMethod method, int oracle_cap) {
  check_word(w, am);
  if (w.is_identity()) return {Value(0), Match{}};
  if (method == DistanceMethod::oracle)
    return oracle_distance(w, am, oracle_cap);
  return coded_distance(w, am);
}

GraevResult graev_identity_distance_reference(const Word& w,
                                              const AlphabetMetric& am) {
  check_word(w, am);
  if (w.is_identity()) return {Value(0), Match{}};
  return reference_distance(w, am);
}

GraevResult graev_distance(const Word& v, const Word& w,
                           const AlphabetMetric& am, DistanceMethod method,
                           int oracle_cap) {
  check_word(v, am);
  check_word(w, am);
  return graev_identity_distance(multiply(inverse(v), w), am, method,
                                 oracle_cap);
}

}  // namespace graev
