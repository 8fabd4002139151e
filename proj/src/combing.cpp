#include "orbit/combing.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "orbit/automorphism.hpp"
#include "orbit/errors.hpp"
#include "orbit/sampling.hpp"

namespace orbit {

Word NormalForm::flatten() const {
  Word w;
  for (const Word& part : levels) w = w * part;
  return w;
}

std::string NormalForm::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < levels.size(); ++t)
    out += "level " + std::to_string(levels.size() - t) + ": " + to_display_string(levels[t]) +
           "\n";
  return out;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kFingerprintSeed = 0x6f72626974ULL;

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) {
  const unsigned __int128 z = static_cast<unsigned __int128>(x) * y;
  std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t add_mod(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = x + y;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t neg_mod(std::uint64_t x) { return x == 0 ? 0 : kPrime - x; }

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, x = mul_mod(x, x))
    if (e & 1) r = mul_mod(r, x);
  return r;
}

Sl2Mod random_sl2(std::uint64_t seed) {
  std::uint64_t s = seed;
  auto next = [&] { return (s = split_seed(s, 1)) % kPrime; };
  Sl2Mod m;
  do m.a = next(); while (m.a == 0);
  m.b = next();
  m.c = next();
  m.d = mul_mod(add_mod(1, mul_mod(m.b, m.c)), pow_mod(m.a, kPrime - 2));
  return m;
}

void multiply_into(Fingerprint& acc, const Fingerprint& x, bool inverse) {
  for (std::size_t t = 0; t < kFingerprintMaps; ++t)
    acc[t] = acc[t] * (inverse ? x[t].inverse() : x[t]);
}

}  // namespace

Sl2Mod operator*(const Sl2Mod& x, const Sl2Mod& y) {
  return {add_mod(mul_mod(x.a, y.a), mul_mod(x.b, y.c)), add_mod(mul_mod(x.a, y.b), mul_mod(x.b, y.d)),
          add_mod(mul_mod(x.c, y.a), mul_mod(x.d, y.c)), add_mod(mul_mod(x.c, y.b), mul_mod(x.d, y.d))};
}

Sl2Mod Sl2Mod::inverse() const { return {d, neg_mod(b), neg_mod(c), a}; }

struct Comber::Cache {
  std::mutex mutex;
  // (actor symbol, actor exponent, target level) -> automorphism
  std::map<std::tuple<GeneratorSymbol, int, int>, std::unique_ptr<const Substitution>> actions;
};

Comber::Comber(TowerSpec tower, std::size_t word_cap)
    : tower_(tower), cap_(word_cap), cache_(std::make_shared<Cache>()) {
  if (tower_.n < 1) throw InvalidArg("tower needs n>=1");
  if (cap_ < 1) throw InvalidArg("word cap must be positive");
  letter_prints_.resize(static_cast<std::size_t>(tower_.n) + 1);
  for (int j = 1; j <= tower_.n; ++j)
    for (int t = 0; t < tower_.kernel_rank(j); ++t) {
      Fingerprint f;
      for (std::size_t m = 0; m < kFingerprintMaps; ++m)
        f[m] = random_sl2(split_seed(kFingerprintSeed, (static_cast<std::uint64_t>(j) << 32) +
                                                           (static_cast<std::uint64_t>(t) << 8) + m));
      letter_prints_[static_cast<std::size_t>(j)].push_back(f);
    }
}

const Fingerprint& Comber::letter_fingerprint(GeneratorSymbol s) const {
  const int t = tower_.index_in_level(s);
  if (t < 0) throw InvalidArg(to_string(s) + " is not a generator of the tower");
  return letter_prints_[static_cast<std::size_t>(s.level())][static_cast<std::size_t>(t)];
}

Fingerprint Comber::fingerprint(const Word& level_word) const {
  Fingerprint f{};
  for (const Letter& x : level_word.letters())
    multiply_into(f, letter_fingerprint(x.symbol), x.exponent < 0);
  return f;
}

NormalFormDigest Comber::digest_of(const NormalForm& nf) const {
  NormalFormDigest d;
  for (const Word& w : nf.levels) d.levels.push_back(fingerprint(w));
  return d;
}

NormalFormDigest Comber::digest(const Word& w) const {
  for (const Letter& x : w.letters())
    if (!tower_.contains(x.symbol))
      throw InvalidArg(to_string(x.symbol) + " is not a generator of the tower");

  NormalFormDigest out;
  out.levels.resize(static_cast<std::size_t>(tower_.n));
  std::vector<Letter> rest(w.letters().begin(), w.letters().end());

  for (int k = tower_.n; k >= 1; --k) {
    // Same scan as comb(), with prefix_prints[t][y] the fingerprint of the
    // image of the y-th level-k generator under the first t letters of Q.
    const auto alphabet = tower_.level_alphabet(k);
    Fingerprint kernel{};
    std::vector<Letter> lower;
    std::vector<std::vector<Fingerprint>> prefix_prints;

    for (const Letter& x : rest) {
      if (x.symbol.level() != k) {
        if (!lower.empty() && lower.back() == x.inverse()) {
          lower.pop_back();
          if (prefix_prints.size() > lower.size() + 1) prefix_prints.resize(lower.size() + 1);
        } else {
          lower.push_back(x);
        }
        continue;
      }
      if (prefix_prints.empty()) {
        std::vector<Fingerprint> id;
        for (const auto& y : alphabet) id.push_back(letter_fingerprint(y));
        prefix_prints.push_back(std::move(id));
      }
      while (prefix_prints.size() <= lower.size()) {
        const std::size_t t = prefix_prints.size() - 1;
        const Substitution& step = action(lower[t], k);
        std::vector<Fingerprint> next;
        next.reserve(alphabet.size());
        for (const auto& y : alphabet) {
          Fingerprint f{};
          for (const Letter& z : step.at(y).letters())
            multiply_into(f, prefix_prints[t][static_cast<std::size_t>(tower_.index_in_level(z.symbol))],
                          z.exponent < 0);
          next.push_back(f);
        }
        prefix_prints.push_back(std::move(next));
      }
      multiply_into(kernel,
                    prefix_prints[lower.size()][static_cast<std::size_t>(tower_.index_in_level(x.symbol))],
                    x.exponent < 0);
    }
    out.levels[static_cast<std::size_t>(tower_.n - k)] = kernel;
    rest = std::move(lower);
  }
  return out;
}

Comber Comber::for_presentation(const Presentation& p, std::size_t word_cap) {
  if (!p.tower) throw InvalidArg("presentation has no tower to comb along");
  return Comber(*p.tower, word_cap);
}

void Comber::check_size(std::size_t length) const {
  if (length > cap_) throw WordSizeExceeded(length, cap_);
}

const Substitution& Comber::action(const Letter& actor, int k) const {
  if (!tower_.contains(actor.symbol))
    throw InvalidArg(to_string(actor.symbol) + " is not a generator of the tower");
  const int j = actor.symbol.level();
  if (j >= k || k > tower_.n)
    throw InvalidArg("actor level " + std::to_string(j) + " must lie below target level " +
                     std::to_string(k));
  const auto key = std::make_tuple(actor.symbol, static_cast<int>(actor.exponent), k);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->actions.find(key); it != cache_->actions.end()) return *it->second;
  }

  // The relation tables give one direction; the other one is its inverse.
  const bool tabulated = (tower_.kind == GroupKind::Orbit) == (actor.exponent > 0);
  Substitution images;
  if (tabulated) {
    const auto alphabet = tower_.level_alphabet(k);
    for (const auto& y : alphabet) {
      images[y] = tower_.kind == GroupKind::Orbit
                      ? orbit_action_image(j, actor.symbol.second, k, y.second, tower_.text)
                      : artin_inverse_action_image(actor.symbol.first, j, y.first, k);
    }
  } else {
    const auto alphabet = tower_.level_alphabet(k);
    images = invert_automorphism(action(actor.inverse(), k), alphabet);
  }

  std::lock_guard lock(cache_->mutex);
  auto [it, fresh] =
      cache_->actions.emplace(key, std::make_unique<const Substitution>(std::move(images)));
  return *it->second;
}

Word Comber::conjugation_action(const Letter& actor, const Letter& target) const {
  if (!tower_.contains(target.symbol))
    throw InvalidArg(to_string(target.symbol) + " is not a generator of the tower");
  return apply_homomorphism(Word::reduce(std::span(&target, 1)),
                            action(actor, target.symbol.level()));
}

NormalForm Comber::comb(const Word& w) const {
  for (const Letter& x : w.letters())
    if (!tower_.contains(x.symbol))
      throw InvalidArg(to_string(x.symbol) + " is not a generator of the tower");
  check_size(w.size());

  NormalForm nf;
  nf.levels.resize(static_cast<std::size_t>(tower_.n));
  std::vector<Letter> rest(w.letters().begin(), w.letters().end());

  for (int k = tower_.n; k >= 1; --k) {
    // Scan the word as K·Q with K at level k and Q below: a level-k letter y
    // met after Q becomes K·(Q y Q^-1)·Q. prefix_maps[t] is conjugation by
    // the first t letters of Q, built only as far as needed.
    Word kernel;
    std::vector<Letter> lower;
    std::vector<Substitution> prefix_maps;

    for (const Letter& x : rest) {
      if (x.symbol.level() != k) {
        if (!lower.empty() && lower.back() == x.inverse()) {
          lower.pop_back();
          if (prefix_maps.size() > lower.size() + 1) prefix_maps.resize(lower.size() + 1);
        } else {
          lower.push_back(x);
        }
        continue;
      }
      if (prefix_maps.empty()) {
        Substitution id;
        for (const auto& y : tower_.level_alphabet(k)) id[y] = Word(y);
        prefix_maps.push_back(std::move(id));
      }
      while (prefix_maps.size() <= lower.size()) {
        const std::size_t t = prefix_maps.size() - 1;
        Substitution next = compose(prefix_maps[t], action(lower[t], k));
        for (const auto& [s, img] : next) check_size(img.size());
        prefix_maps.push_back(std::move(next));
      }
      const Word& image = prefix_maps[lower.size()].at(x.symbol);
      kernel = kernel * (x.exponent > 0 ? image : image.inverse());
      check_size(kernel.size());
    }
    nf.levels[static_cast<std::size_t>(tower_.n - k)] = std::move(kernel);
    rest = std::move(lower);
  }
  return nf;
}

bool Comber::words_equal(const Word& u, const Word& v) const {
  return comb(u * v.inverse()) == comb(Word());
}

bool Comber::is_identity(const Word& w) const { return comb(w) == comb(Word()); }

Word project_qn(int n, const Word& w) {
  std::vector<Letter> kept;
  for (const Letter& x : w.letters()) {
    if (x.symbol.level() > n)
      throw InvalidArg(to_string(x.symbol) + " lies above level " + std::to_string(n));
    if (x.symbol.level() < n) kept.push_back(x);
  }
  return Word::reduce(kept);
}

Word section_sn(int n, const Word& w) {
  for (const Letter& x : w.letters())
    if (x.symbol.level() >= n)
      throw InvalidArg(to_string(x.symbol) + " does not lie below level " + std::to_string(n));
  return w;
}

Word section_sprime(int n, const Word& w) {
  if (n < 2) throw InvalidArg("s' needs n>=2");
  section_sn(n, w);
  const GeneratorSymbol moved = GeneratorSymbol::rho(n - 1, 0);
  Substitution images;
  for (const Letter& x : w.letters()) images.try_emplace(x.symbol, x.symbol);
  images[moved] = Word(moved) * Word(GeneratorSymbol::rho(n, 0));
  return apply_homomorphism(w, images);
}

ThetaSplit theta_decompose(const Comber& engine, const Word& w) {
  if (engine.tower().kind != GroupKind::Orbit)
    throw InvalidArg("theta decomposition needs the orbit tower");
  ThetaSplit out;
  out.exponent = exponent_sum(w, GeneratorSymbol::rho(1, 0));
  out.remainder = element_Theta(engine.tower().n).power(-out.exponent) * w;
  return out;
}

bool CenterReport::ok() const {
  for (const auto& e : entries) {
    if (!e.commutes_with_theta) return false;
    if (!e.theta_power && !e.witness) return false;
  }
  return true;
}

CenterReport center_check(const Comber& engine, std::size_t witness_budget) {
  const TowerSpec& t = engine.tower();
  const Word center =
      t.kind == GroupKind::Orbit ? element_Theta(t.n) : element_full_twist(t.n);
  std::vector<GeneratorSymbol> gens;
  for (int j = 1; j <= t.n; ++j)
    for (const auto& s : t.level_alphabet(j)) gens.push_back(s);

  CenterReport report;
  report.n = t.n;
  for (const auto& g : gens) {
    CenterEntry entry;
    entry.generator = g;
    const Word gw(g);
    entry.commutes_with_theta = engine.words_equal(center * gw, gw * center);
    entry.theta_power =
        engine.words_equal(gw, center) || engine.words_equal(gw, center.inverse());
    if (!entry.theta_power) {
      for (std::size_t c = 0; c < gens.size() && c < witness_budget; ++c) {
        const Word h(gens[c]);
        if (!engine.words_equal(gw * h, h * gw)) {
          entry.witness = gens[c];
          break;
        }
      }
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace orbit
