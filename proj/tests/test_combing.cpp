#include <doctest.h>

#include <random>
#include <thread>

#include "orbit/combing.hpp"
#include "orbit/errors.hpp"
#include "orbit/presentation.hpp"
#include "orbit/sampling.hpp"

using namespace orbit;

namespace {

Word R(int j, int i, int e = 1) { return Word(GeneratorSymbol::rho(j, i), e); }
Word A(int i, int j, int e = 1) { return Word(GeneratorSymbol::artin(i, j), e); }

Comber orbit_engine(int n) { return Comber(TowerSpec{GroupKind::Orbit, n}); }

std::vector<GeneratorSymbol> gens_of(const Comber& e) {
  std::vector<GeneratorSymbol> g;
  for (int j = 1; j <= e.tower().n; ++j)
    for (const auto& s : e.tower().level_alphabet(j)) g.push_back(s);
  return g;
}

// Rewriting oracle: repeatedly pick a random adjacent pair x·y with
// level(x) < level(y), replace it by (x y x^-1)·x, and freely reduce, until
// the levels are non-increasing.
NormalForm rewrite_randomly(const Comber& e, const Word& w, std::mt19937_64& rng) {
  std::vector<Letter> cur(w.letters().begin(), w.letters().end());
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t t = 0; t + 1 < cur.size(); ++t)
      if (cur[t].symbol.level() < cur[t + 1].symbol.level()) spots.push_back(t);
    if (spots.empty()) break;
    const std::size_t t = spots[rng() % spots.size()];
    const Word moved = e.conjugation_action(cur[t], cur[t + 1]);
    std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(t));
    next.insert(next.end(), moved.letters().begin(), moved.letters().end());
    next.push_back(cur[t]);
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(t) + 2, cur.end());
    const Word reduced = Word::reduce(next);
    cur.assign(reduced.letters().begin(), reduced.letters().end());
  }
  NormalForm nf;
  nf.levels.resize(static_cast<std::size_t>(e.tower().n));
  for (int k = e.tower().n; k >= 1; --k) {
    std::vector<Letter> part;
    for (const Letter& x : cur)
      if (x.symbol.level() == k) part.push_back(x);
    nf.levels[static_cast<std::size_t>(e.tower().n - k)] = Word::reduce(part);
  }
  return nf;
}

}  // namespace

TEST_CASE("conjugation action examples") {
  const Comber e = orbit_engine(3);
  CHECK(e.conjugation_action({GeneratorSymbol::rho(1, 0), 1}, {GeneratorSymbol::rho(2, 0), 1}) == R(2, 0));
  CHECK(e.conjugation_action({GeneratorSymbol::rho(1, 0), 1}, {GeneratorSymbol::rho(2, 1), 1}) ==
        R(2, 0, -1) * R(2, 1) * R(2, 0));
  CHECK(e.conjugation_action({GeneratorSymbol::rho(2, 1), 1}, {GeneratorSymbol::rho(3, 1), 1}) ==
        R(3, 2, -1) * R(3, 1) * R(3, 2));
  CHECK_THROWS_AS(e.conjugation_action({GeneratorSymbol::rho(2, 1), 1}, {GeneratorSymbol::rho(2, 0), 1}),
                  InvalidArg);
  CHECK_THROWS_AS(e.conjugation_action({GeneratorSymbol::rho(3, 1), 1}, {GeneratorSymbol::rho(2, 0), 1}),
                  InvalidArg);
  // Inverse actor undoes the actor.
  for (const auto& x : gens_of(e))
    for (const auto& y : gens_of(e)) {
      if (x.level() >= y.level()) continue;
      const Word there = e.conjugation_action({x, 1}, {y, 1});
      CHECK(apply_homomorphism(there, e.action({x, -1}, y.level())) == Word(y));
    }
}

TEST_CASE("comb examples") {
  const Comber g2 = orbit_engine(2);
  const NormalForm nf = g2.comb(R(1, 0) * R(2, 0));
  CHECK(nf.level(2) == R(2, 0));
  CHECK(nf.level(1) == R(1, 0));
  CHECK(nf.to_string() == "level 2: r(2,0)\nlevel 1: r(1,0)\n");
  for (int n = 1; n <= 4; ++n) {
    const NormalForm id = orbit_engine(n).comb(Word());
    CHECK(id.levels.size() == static_cast<std::size_t>(n));
    for (const Word& w : id.levels) CHECK(w.empty());
  }
  const Comber g3 = orbit_engine(3);
  const Word theta = element_Theta(3);
  CHECK(g3.comb(theta * R(3, 1) * theta.inverse()) == g3.comb(R(3, 1)));
  CHECK_THROWS_AS(g3.comb(R(4, 0)), InvalidArg);
  CHECK_THROWS_AS(g3.comb(A(1, 2)), InvalidArg);
}

TEST_CASE("words_equal examples") {
  const Comber g2 = orbit_engine(2);
  CHECK_FALSE(g2.words_equal(Word(), R(1, 0)));
  CHECK(g2.words_equal(element_Theta(2) * R(2, 1), R(2, 1) * element_Theta(2)));
  CHECK(g2.is_identity(Word()));
  const Presentation p = orbit_presentation(2);
  for (const Word& r : p.relators) CHECK(g2.words_equal(R(2, 2) * R(1, 0), R(2, 2) * R(1, 0) * r));
}

TEST_CASE("relator insertion with exact normal forms") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    const Presentation p = orbit_presentation(n);
    const Comber e = Comber::for_presentation(p);
    for (const Word& r : p.relators)
      for (int trial = 0; trial < 3; ++trial) {
        const Word u = random_word(rng, p.generators, 4);
        const Word v = random_word(rng, p.generators, 4);
        CHECK(e.comb(u * r * v) == e.comb(u * v));
      }
  }
}

TEST_CASE("random-order rewriting reaches the same normal form") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 3; ++n) {
    const Comber e = orbit_engine(n);
    const auto g = gens_of(e);
    for (int trial = 0; trial < 60; ++trial) {
      const Word w = random_word(rng, g, n == 2 ? 10 : 6);
      const NormalForm expected = e.comb(w);
      for (int order = 0; order < 3; ++order) CHECK(rewrite_randomly(e, w, rng) == expected);
    }
  }
  const Comber p4(TowerSpec{GroupKind::Artin, 4});
  const auto g = gens_of(p4);
  for (int trial = 0; trial < 60; ++trial) {
    const Word w = random_word(rng, g, 8);
    CHECK(rewrite_randomly(p4, w, rng) == p4.comb(w));
  }
}

TEST_CASE("comb properties on random words") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n) {
    const Comber e = orbit_engine(n);
    const auto g = gens_of(e);
    for (int trial = 0; trial < 60; ++trial) {
      const Word u = random_word(rng, g, 6);
      const Word v = random_word(rng, g, 6);
      const NormalForm nu = e.comb(u);
      // each level uses its own alphabet only
      for (int k = 1; k <= n; ++k)
        for (const Letter& x : nu.level(k).letters()) CHECK(x.symbol.level() == k);
      CHECK(e.comb(nu.flatten()) == nu);
      CHECK(e.words_equal(u * v, nu.flatten() * e.comb(v).flatten()));
      // the top level of a word without top-level letters is empty, and
      // below it comb agrees with the smaller tower
      const Word lower = project_qn(n, u);
      const NormalForm nl = e.comb(lower);
      CHECK(nl.level(n).empty());
      const NormalForm small = orbit_engine(n - 1).comb(lower);
      for (int k = 1; k < n; ++k) CHECK(nl.level(k) == small.level(k));
      // a word living in one level combs to its free reduction
      std::vector<Letter> top;
      for (const Letter& x : u.letters())
        if (x.symbol.level() == n) top.push_back(x);
      CHECK(e.comb(Word::reduce(top)).level(n) == Word::reduce(top));
    }
  }
}

TEST_CASE("fingerprint digest matches exact combing") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const Comber e = orbit_engine(n);
    const auto g = gens_of(e);
    for (int trial = 0; trial < 150; ++trial) {
      const Word w = random_word(rng, g, 12);
      CHECK(e.digest(w) == e.digest_of(e.comb(w)));
    }
  }
  const Comber p5(TowerSpec{GroupKind::Artin, 5});
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, gens_of(p5), 12);
    CHECK(p5.digest(w) == p5.digest_of(p5.comb(w)));
  }
  // distinct normal forms get distinct digests
  const Comber g3 = orbit_engine(3);
  CHECK(g3.digest(R(3, 1)) != g3.digest(R(3, 2)));
  CHECK(g3.digest(R(3, 1) * R(3, 2)) != g3.digest(R(3, 2) * R(3, 1)));
  Sl2Mod m{3, 5, 7, 12};  // det 36-35 = 1
  CHECK(m * m.inverse() == Sl2Mod{});
}

TEST_CASE("word cap is a hard error") {
  const Comber tight(TowerSpec{GroupKind::Orbit, 3}, 20);
  const Word w = R(2, 2) * R(1, 0) * R(2, 1) * R(3, 4) * R(2, 2, -1) * R(3, 3);
  CHECK_THROWS_AS(tight.comb(w.power(3)), WordSizeExceeded);
  try {
    tight.comb(w.power(3));
  } catch (const WordSizeExceeded& ex) {
    CHECK(ex.length() > 20);
    CHECK(ex.cap() == 20);
  }
  CHECK_THROWS_AS(Comber(TowerSpec{GroupKind::Orbit, 3}, 0), InvalidArg);
}

TEST_CASE("projection and sections") {
  const Word w = R(1, 0) * R(3, 0) * R(2, 1);
  CHECK(project_qn(3, R(3, 3)).empty());
  CHECK(project_qn(3, w) == R(1, 0) * R(2, 1));
  CHECK_THROWS_AS(project_qn(2, w), InvalidArg);
  CHECK(section_sn(3, R(2, 1)) == R(2, 1));
  CHECK_THROWS_AS(section_sn(3, R(3, 1)), InvalidArg);
  CHECK(section_sprime(3, R(2, 0)) == R(2, 0) * R(3, 0));
  CHECK(section_sprime(3, R(2, 1) * R(1, 0)) == R(2, 1) * R(1, 0));

  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    const Comber lower = orbit_engine(n - 1);
    const Comber e = orbit_engine(n);
    const auto g = gens_of(lower);
    for (int trial = 0; trial < 50; ++trial) {
      const Word w = random_word(rng, g, 10);
      CHECK(project_qn(n, section_sn(n, w)) == w);
      CHECK(project_qn(n, section_sprime(n, w)) == w);
    }
    CHECK(e.words_equal(section_sprime(n, element_Theta(n - 1)), element_Theta(n)));
    // s' respects the relators of the smaller group
    for (const Word& r : orbit_presentation(n - 1).relators) CHECK(e.is_identity(section_sprime(n, r)));
  }
}

TEST_CASE("theta decomposition") {
  const Comber g3 = orbit_engine(3);
  const Word theta = element_Theta(3);
  const ThetaSplit cube = theta_decompose(g3, theta.power(3));
  CHECK(cube.exponent == 3);
  CHECK(cube.remainder.empty());
  const ThetaSplit plain = theta_decompose(g3, R(2, 1));
  CHECK(plain.exponent == 0);
  CHECK(plain.remainder == R(2, 1));
  const Comber g2 = orbit_engine(2);
  const ThetaSplit one = theta_decompose(g2, element_Theta(2) * R(2, 1));
  CHECK(one.exponent == 1);
  CHECK(g2.words_equal(one.remainder, R(2, 1)));
  CHECK_THROWS_AS(theta_decompose(Comber(TowerSpec{GroupKind::Artin, 3}), A(1, 2)), InvalidArg);
}

TEST_CASE("center check") {
  const CenterReport r1 = center_check(orbit_engine(1));
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].theta_power);
  CHECK(r1.ok());

  const CenterReport r2 = center_check(orbit_engine(2));
  CHECK(r2.ok());
  REQUIRE(r2.entries.size() == 4);
  CHECK(r2.entries[0].generator == GeneratorSymbol::rho(1, 0));
  CHECK_FALSE(r2.entries[0].theta_power);
  REQUIRE(r2.entries[0].witness);
  const Comber g2 = orbit_engine(2);
  CHECK_FALSE(g2.words_equal(R(1, 0) * R(2, 1), R(2, 1) * R(1, 0)));
  CHECK(g2.comb(element_C(2, 1)) != g2.comb(R(2, 1)));

  const CenterReport r3 = center_check(orbit_engine(3));
  CHECK(r3.entries.size() == 9);
  for (const auto& e : r3.entries) CHECK(e.commutes_with_theta);
  CHECK(r3.ok());
}

TEST_CASE("full twist is central in the pure braid group") {
  for (int n = 2; n <= 5; ++n) {
    const Comber e(TowerSpec{GroupKind::Artin, n});
    const Word twist = element_full_twist(n);
    for (const auto& g : gens_of(e)) CHECK(e.words_equal(twist * Word(g), Word(g) * twist));
    CHECK(center_check(e).ok());
  }
}

TEST_CASE("pure braid relators hold") {
  std::mt19937_64 rng(19);
  for (int n = 3; n <= 5; ++n) {
    const Presentation p = artin_presentation(n);
    const Comber e = Comber::for_presentation(p);
    for (const Word& r : p.relators) {
      CHECK(e.is_identity(r));
      const Word u = random_word(rng, p.generators, 5);
      const Word v = random_word(rng, p.generators, 5);
      CHECK(e.comb(u * r * v) == e.comb(u * v));
    }
  }
}

TEST_CASE("the printed long (III) relation breaks combing") {
  const Comber e(TowerSpec{GroupKind::Orbit, 3, RelationText::AsPrinted});
  CHECK_THROWS_AS(e.comb(R(2, 2, -1) * R(3, 4)), NotAutomorphism);
  CHECK(e.comb(R(3, 4) * R(2, 2, -1)).level(3) == R(3, 4));
}

TEST_CASE("shared cache under concurrent use") {
  const Comber shared = orbit_engine(4);
  const auto g = gens_of(shared);
  std::mt19937_64 rng(23);
  std::vector<Word> words;
  for (int t = 0; t < 64; ++t) words.push_back(random_word(rng, g, 8));
  std::vector<NormalForm> parallel(words.size());
  parallel_for(words.size(), [&](std::size_t t) { parallel[t] = shared.comb(words[t]); });
  const Comber fresh = orbit_engine(4);
  for (std::size_t t = 0; t < words.size(); ++t) CHECK(parallel[t] == fresh.comb(words[t]));
}
