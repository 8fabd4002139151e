#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbit/presentation.hpp"
#include "orbit/word.hpp"

namespace orbit {

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// Combed representative w_n w_{n-1} ... w_1, kernel first. `levels[0]`
/// is the top level n.
struct NormalForm {
  std::vector<Word> levels;

  int top_level() const noexcept { return static_cast<int>(levels.size()); }
  const Word& level(int k) const { return levels.at(levels.size() - static_cast<std::size_t>(k)); }
  Word flatten() const;
  /// `level k: <word>` lines, highest level first, identity as `1`.
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Element of SL(2, Z/p) with p = 2^61 - 1.
struct Sl2Mod {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;

  friend Sl2Mod operator*(const Sl2Mod& x, const Sl2Mod& y);
  Sl2Mod inverse() const;
  friend bool operator==(const Sl2Mod&, const Sl2Mod&) = default;
};

inline constexpr std::size_t kFingerprintMaps = 4;

/// Images of a free-group word under several seeded random homomorphisms
/// into SL(2, Z/p). Equal words always have equal fingerprints; distinct
/// freely reduced words of length L collide with probability about
/// (2L/p)^kFingerprintMaps.
using Fingerprint = std::array<Sl2Mod, kFingerprintMaps>;

/// Level-wise fingerprints of a normal form, top level first.
struct NormalFormDigest {
  std::vector<Fingerprint> levels;
  friend bool operator==(const NormalFormDigest&, const NormalFormDigest&) = default;
};

/// Combing engine for one tower. Copies share the action cache, which is
/// filled lazily and safe to use from several threads.
class Comber {
 public:
  explicit Comber(TowerSpec tower, std::size_t word_cap = kDefaultWordCap);
  /// Throws InvalidArg when `p` has no tower.
  static Comber for_presentation(const Presentation& p, std::size_t word_cap = kDefaultWordCap);

  const TowerSpec& tower() const noexcept { return tower_; }
  std::size_t word_cap() const noexcept { return cap_; }

  /// actor·target·actor^-1 as a reduced word over the target's level.
  Word conjugation_action(const Letter& actor, const Letter& target) const;

  /// The automorphism y -> actor·y·actor^-1 of the level-k free group, on
  /// every level-k generator.
  const Substitution& action(const Letter& actor, int k) const;

  NormalForm comb(const Word& w) const;

  /// Fingerprint of every level of comb(w), computed without expanding the
  /// level words, so it stays linear in |w| where comb(w) is exponential.
  NormalFormDigest digest(const Word& w) const;
  Fingerprint fingerprint(const Word& level_word) const;
  NormalFormDigest digest_of(const NormalForm& nf) const;
  bool words_equal(const Word& u, const Word& v) const;
  bool is_identity(const Word& w) const;

 private:
  struct Cache;

  const Fingerprint& letter_fingerprint(GeneratorSymbol s) const;

  void check_size(std::size_t length) const;

  TowerSpec tower_;
  std::size_t cap_;
  std::shared_ptr<Cache> cache_;
  // Fingerprint images of the generators, by level then level index.
  std::vector<std::vector<Fingerprint>> letter_prints_;
};

/// Deletes the letters of level n.
Word project_qn(int n, const Word& w);
/// The inclusion of G_{n-1} (symbols unchanged); checks that w lives below n.
Word section_sn(int n, const Word& w);
/// r(n-1,0) -> r(n-1,0) r(n,0); every other symbol fixed.
Word section_sprime(int n, const Word& w);

struct ThetaSplit {
  long exponent = 0;
  Word remainder;
};

/// w = Theta^exponent · remainder with remainder in the kernel of the
/// r(1,0) exponent-sum functional.
ThetaSplit theta_decompose(const Comber& engine, const Word& w);

struct CenterEntry {
  GeneratorSymbol generator;
  bool commutes_with_theta = false;
  bool theta_power = false;
  std::optional<GeneratorSymbol> witness;  // non-commuting generator, if found
};

struct CenterReport {
  int n = 0;
  std::vector<CenterEntry> entries;
  /// Theta central and every non-Theta-power generator has a witness.
  bool ok() const;
};

/// Checks that Theta_n commutes with every generator and searches, among the
/// first `witness_budget` generators, a non-commuting partner for each one.
CenterReport center_check(const Comber& engine, std::size_t witness_budget = 1'000'000);

}  // namespace orbit
