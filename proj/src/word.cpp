#include "orbit/word.hpp"

#include <charconv>
#include <cstdlib>

#include "orbit/errors.hpp"

namespace orbit {

GeneratorSymbol GeneratorSymbol::rho(int j, int i) {
  if (j < 1 || i < 0 || i > 2 * j - 2)
    throw InvalidArg("r(" + std::to_string(j) + "," + std::to_string(i) +
                     ") out of range: need j>=1 and 0<=i<=2j-2");
  return {Family::Rho, static_cast<std::int16_t>(j), static_cast<std::int16_t>(i)};
}

GeneratorSymbol GeneratorSymbol::artin(int i, int j) {
  if (i < 1 || i >= j)
    throw InvalidArg("A(" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range: need 1<=i<j");
  return {Family::Artin, static_cast<std::int16_t>(i), static_cast<std::int16_t>(j)};
}

GeneratorSymbol GeneratorSymbol::surface(int j) {
  if (j < 1) throw InvalidArg("p(" + std::to_string(j) + ") out of range: need j>=1");
  return {Family::Surface, static_cast<std::int16_t>(j), 0};
}

Word::Word(GeneratorSymbol s, int exponent) {
  const auto sign = static_cast<std::int8_t>(exponent < 0 ? -1 : 1);
  for (int k = 0; k < std::abs(exponent); ++k) letters_.push_back({s, sign});
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& x : raw) {
    if (!w.letters_.empty() && w.letters_.back() == x.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long t = 0; t < std::labs(k); ++t) out = out * base;
  return out;
}

Word operator*(const Word& u, const Word& v) {
  // Only the junction can cancel since both factors are reduced.
  std::size_t cancel = 0;
  while (cancel < u.size() && cancel < v.size() &&
         u.letters_[u.size() - 1 - cancel] == v.letters_[cancel].inverse())
    ++cancel;
  Word w;
  w.letters_.reserve(u.size() + v.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), u.letters_.begin(),
                    u.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  w.letters_.insert(w.letters_.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(cancel),
                    v.letters_.end());
  return w;
}

Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }
Word concat(const Word& u, const Word& v) { return u * v; }
Word invert(const Word& w) { return w.inverse(); }

long exponent_sum(const Word& w, GeneratorSymbol s) {
  long total = 0;
  for (const Letter& x : w.letters())
    if (x.symbol == s) total += x.exponent;
  return total;
}

Word product(std::initializer_list<Word> factors) {
  Word out;
  for (const Word& f : factors) out = out * f;
  return out;
}

Word conjugate(const Word& x, const Word& w) { return x * w * x.inverse(); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word apply_homomorphism(const Word& w,
                        const std::function<const Word&(const Letter&)>& image_of_letter) {
  std::vector<Letter> raw;
  for (const Letter& x : w.letters()) {
    const Word& img = image_of_letter(x);
    if (x.exponent > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        raw.push_back(it->inverse());
    }
  }
  return Word::reduce(raw);
}

Word apply_homomorphism(const Word& w, const Substitution& images) {
  return apply_homomorphism(w, [&](const Letter& x) -> const Word& {
    auto it = images.find(x.symbol);
    if (it == images.end()) throw MissingImage("no image for " + to_string(x.symbol));
    return it->second;
  });
}

std::string to_string(GeneratorSymbol s) {
  switch (s.family) {
    case Family::Rho:
      return "r(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
    case Family::Artin:
      return "A(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
    case Family::Surface:
      return "p(" + std::to_string(s.first) + ")";
  }
  return "?";
}

std::string to_string(const Letter& l) {
  return l.exponent < 0 ? to_string(l.symbol) + "^-1" : to_string(l.symbol);
}

std::string to_string(const Word& w) {
  std::string out;
  for (const Letter& x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

std::string to_display_string(const Word& w) { return w.empty() ? "1" : to_string(w); }

namespace {

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace

GeneratorSymbol parse_symbol(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')' || open != 1)
    throw ParseError("bad generator symbol '" + std::string(text) + "'");
  const std::string_view args = text.substr(2, text.size() - 3);
  const char tag = text.front();
  if (tag == 'p') return GeneratorSymbol::surface(parse_int(args, text));
  const auto comma = args.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected two indices in '" + std::string(text) + "'");
  const int a = parse_int(args.substr(0, comma), text);
  const int b = parse_int(args.substr(comma + 1), text);
  if (tag == 'r') return GeneratorSymbol::rho(a, b);
  if (tag == 'A') return GeneratorSymbol::artin(a, b);
  throw ParseError("unknown generator family in '" + std::string(text) + "'");
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "1") continue;

    const auto caret = token.find('^');
    const GeneratorSymbol s = parse_symbol(token.substr(0, caret));
    int k = 1;
    if (caret != std::string_view::npos) {
      k = parse_int(token.substr(caret + 1), token);
      if (k == 0) throw ParseError("zero exponent in '" + std::string(token) + "'");
    }
    const auto sign = static_cast<std::int8_t>(k < 0 ? -1 : 1);
    for (int t = 0; t < std::abs(k); ++t) raw.push_back({s, sign});
  }
  return Word::reduce(raw);
}

}  // namespace orbit
