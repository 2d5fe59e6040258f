#include "graev/match.hpp"

#include <cstdlib>

namespace graev {

bool is_match(const Match& theta) {
  const int n = theta.length();
  for (int i = 0; i < n; ++i)
    if (theta(i) < 0 || theta(i) >= n)
      throw argument_error("is_match: partner " + std::to_string(theta(i)) +
                           " out of range at position " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    if (theta(theta(i)) != i) return false;
  // crossing: i < j < theta(i) < theta(j)
  for (int i = 0; i < n; ++i) {
    if (theta(i) <= i) continue;
    for (int j = i + 1; j < theta(i); ++j)
      if (theta(j) > theta(i)) return false;
  }
  return true;
}

RawWord apply_match(const RawWord& w, const Match& theta) {
  const int n = w.length();
  if (theta.length() != n)
    throw argument_error("apply_match: match size " +
                         std::to_string(theta.length()) + " != word length " +
                         std::to_string(n));
  RawWord out;
  out.alphabet_size = w.alphabet_size;
  out.symbols.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int p = theta(i);
    if (p > i)
      out.symbols[static_cast<size_t>(i)] = w.symbols[static_cast<size_t>(i)];
    else if (p == i)
      out.symbols[static_cast<size_t>(i)] = std::nullopt;
    else
      out.symbols[static_cast<size_t>(i)] =
          symbol_inverse(w.symbols[static_cast<size_t>(p)]);
  }
  return out;
}

RawWord apply_match(const Word& w, const Match& theta) {
  return apply_match(w.raw(), theta);
}

Value rho(const RawWord& w, const RawWord& v, const AlphabetMetric& am) {
  if (w.length() != v.length())
    throw argument_error("rho: length mismatch (" + std::to_string(w.length()) +
                         " vs " + std::to_string(v.length()) + ")");
  Value acc(0);
  for (size_t i = 0; i < w.symbols.size(); ++i)
    acc = max(acc, am.dist(w.symbols[i], v.symbols[i]));
  return acc;
}

Value match_cost(const Word& w, const Match& theta, const AlphabetMetric& am) {
  const int n = w.length();
  if (theta.length() != n)
    throw argument_error("match_cost: match size " +
                         std::to_string(theta.length()) + " != word length " +
                         std::to_string(n));
  Value acc(0);
  for (int i = 0; i < n; ++i) {
    const int p = theta(i);
    if (p > i) continue;
    if (p == i)
      acc = max(acc, am.to_identity(w.letter(i).point));
    else
      acc = max(acc, am.dist(w.letter(i), w.letter(p).inverse()));
  }
  return acc;
}

int default_oracle_cap() {
  if (const char* env = std::getenv("GRAEV_ORACLE_CAP")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return 14;
}

namespace {

// Fills positions i..j of theta in every valid way, calling cont() at each
// completion. Position i pairs with itself first, then with each k in
// ascending order; pairing at k confines the rest to the two noncrossing
// segments (i, k) and (k, j].
void fill_segment(std::vector<int>& theta, int i, int j,
                  const std::function<void()>& cont) {
  if (i > j) {
    cont();
    return;
  }
  theta[static_cast<size_t>(i)] = i;
  fill_segment(theta, i + 1, j, cont);
  for (int k = i + 1; k <= j; ++k) {
    theta[static_cast<size_t>(i)] = k;
    theta[static_cast<size_t>(k)] = i;
    fill_segment(theta, i + 1, k - 1,
                 [&theta, k, j, &cont] { fill_segment(theta, k + 1, j, cont); });
  }
}

}  // namespace

void enumerate_matches(int n, const std::function<void(const Match&)>& visit,
                       int cap) {
  if (cap <= 0) cap = default_oracle_cap();
  if (n < 1) throw argument_error("enumerate_matches: n must be >= 1");
  if (n > cap)
    throw cap_error("enumerate_matches: n = " + std::to_string(n) +
                    " exceeds the oracle cap " + std::to_string(cap));
  Match theta;
  theta.partner.resize(static_cast<size_t>(n));
  fill_segment(theta.partner, 0, n - 1, [&] { visit(theta); });
}

std::optional<Match> cancellation_match(const RawWord& w) {
  const int n = w.length();
  Match theta;
  theta.partner.resize(static_cast<size_t>(n));
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    const Symbol& s = w.symbols[static_cast<size_t>(i)];
    if (!s) {
      theta.partner[static_cast<size_t>(i)] = i;
      continue;
    }
    if (!stack.empty() &&
        w.symbols[static_cast<size_t>(stack.back())] == Symbol(s->inverse())) {
      const int top = stack.back();
      stack.pop_back();
      theta.partner[static_cast<size_t>(top)] = i;
      theta.partner[static_cast<size_t>(i)] = top;
    } else {
      stack.push_back(i);
    }
  }
  if (!stack.empty()) return std::nullopt;
  return theta;
}

std::string format_match(const Match& theta) {
  std::string out;
  for (int i = 0; i < theta.length(); ++i) {
    if (theta(i) <= i) continue;
    out += "(" + std::to_string(i) + " " + std::to_string(theta(i)) + ")";
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace graev
