#include "graev/words.hpp"

#include <sstream>
#include <unordered_map>

#include "graev/space.hpp"

namespace graev {

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.point < 0 || l.point >= alphabet_size_)
      throw argument_error("Word: letter point out of range");
    if (l.sign != 1 && l.sign != -1)
      throw argument_error("Word: letter sign must be +1 or -1");
    if (i > 0 && letters_[i - 1] == l.inverse())
      throw argument_error("Word: not reduced (adjacent inverse pair at " +
                           std::to_string(i - 1) + ")");
  }
}

RawWord Word::raw() const {
  RawWord r;
  r.alphabet_size = alphabet_size_;
  r.symbols.reserve(letters_.size());
  for (const Letter& l : letters_) r.symbols.emplace_back(l);
  return r;
}

Word reduce(const RawWord& w) {
  std::vector<Letter> out;
  out.reserve(w.symbols.size());
  for (const Symbol& s : w.symbols) {
    if (!s) continue;
    if (!out.empty() && out.back() == s->inverse())
      out.pop_back();
    else
      out.push_back(*s);
  }
  return Word(std::move(out), w.alphabet_size);
}

Word multiply(const Word& v, const Word& w) {
  if (v.alphabet_size() != w.alphabet_size())
    throw argument_error("multiply: alphabet mismatch");
  std::vector<Letter> out = v.letters();
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out), v.alphabet_size());
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(w.length()));
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out), w.alphabet_size());
}

Word conjugate(const Word& u, const Word& w) {
  return multiply(multiply(u, w), inverse(u));
}

int alpha(const Word& w) {
  int sum = 0;
  for (const Letter& l : w.letters()) sum += l.sign;
  return sum;
}

Word map_word(const Word& w, const Partition& p) {
  if (w.alphabet_size() != p.size())
    throw argument_error("map_word: partition is over a different point set");
  RawWord relabeled;
  relabeled.alphabet_size = p.num_classes();
  relabeled.symbols.reserve(static_cast<size_t>(w.length()));
  for (const Letter& l : w.letters())
    relabeled.symbols.emplace_back(Letter{p.class_index(l.point), l.sign});
  return reduce(relabeled);
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

RawWord parse_raw_word(const std::string& text,
                       const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i)
    index.emplace(names[i], static_cast<int>(i));

  RawWord out;
  out.alphabet_size = static_cast<int>(names.size());
  const auto tokens = split_tokens(text);
  for (size_t t = 0; t < tokens.size(); ++t) {
    std::string tok = tokens[t];
    if (tok == "e") {
      out.symbols.emplace_back(std::nullopt);
      continue;
    }
    int sign = +1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    const auto it = index.find(tok);
    if (it == index.end())
      throw argument_error("parse_word: unknown point name '" + tok +
                           "' (token " + std::to_string(t + 1) + ")");
    out.symbols.emplace_back(Letter{it->second, sign});
  }
  return out;
}

Word parse_word(const std::string& text,
                const std::vector<std::string>& names) {
  return reduce(parse_raw_word(text, names));
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int i = 0; i < w.length(); ++i) {
    if (i > 0) out += ' ';
    const Letter& l = w.letter(i);
    out += names[static_cast<size_t>(l.point)];
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string print_raw_word(const RawWord& w,
                           const std::vector<std::string>& names) {
  if (w.symbols.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.symbols.size(); ++i) {
    if (i > 0) out += ' ';
    const Symbol& s = w.symbols[i];
    if (!s) {
      out += 'e';
      continue;
    }
    out += names[static_cast<size_t>(s->point)];
    if (s->sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace graev
