#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbit {

enum class Family : std::uint8_t {
  Rho,      // ρ_{j,i}, generators of the orbit configuration braid group
  Artin,    // A_{i,j}, Artin generators of the pure braid group
  Surface,  // ρ_j, the extra surface generators of P_n(RP^2)
};

/// A generator symbol of one of the indexed alphabets.
///
/// Index meaning depends on the family: `Rho` stores (j, i) with
/// 0 <= i <= 2j-2, `Artin` stores (i, j) with 1 <= i < j, and `Surface`
/// stores (j, 0).
struct GeneratorSymbol {
  Family family = Family::Rho;
  std::int16_t first = 1;
  std::int16_t second = 0;

  static GeneratorSymbol rho(int j, int i);
  static GeneratorSymbol artin(int i, int j);
  static GeneratorSymbol surface(int j);

  /// Tower level the symbol belongs to (j for ρ_{j,i}, A_{i,j} and ρ_j).
  int level() const noexcept { return family == Family::Artin ? second : first; }

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Letter {
  GeneratorSymbol symbol;
  std::int8_t exponent = 1;

  Letter inverse() const noexcept { return {symbol, static_cast<std::int8_t>(-exponent)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Immutable once built; every operation returns a
/// fresh value.
class Word {
 public:
  Word() = default;
  explicit Word(GeneratorSymbol s, int exponent = 1);

  /// Freely reduces `raw`.
  static Word reduce(std::span<const Letter> raw);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word power(long k) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
long exponent_sum(const Word& w, GeneratorSymbol s);

/// Product of the words in order.
Word product(std::initializer_list<Word> factors);

/// x·w·x^{-1}
Word conjugate(const Word& x, const Word& w);

/// [a,b] = a·b·a^{-1}·b^{-1}
Word commutator(const Word& a, const Word& b);

using Substitution = std::map<GeneratorSymbol, Word>;

/// Letter-wise substitution followed by free reduction. Throws MissingImage
/// when a symbol of `w` has no image.
Word apply_homomorphism(const Word& w, const Substitution& images);

/// Same, with a lookup function instead of a map (used by the combing
/// engine, whose images are computed lazily).
Word apply_homomorphism(const Word& w,
                        const std::function<const Word&(const Letter&)>& image_of_letter);

std::string to_string(GeneratorSymbol s);
std::string to_string(const Letter& l);
/// Canonical text form; the identity prints as the empty string.
std::string to_string(const Word& w);
/// Same, but the identity prints as "1".
std::string to_display_string(const Word& w);

GeneratorSymbol parse_symbol(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace orbit
