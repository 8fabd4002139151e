#include "orbit/presentation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "orbit/errors.hpp"

namespace orbit {

namespace {

Word rho(int k, int l, int e = 1) { return Word(GeneratorSymbol::rho(k, l), e); }
Word artin(int i, int j, int e = 1) { return Word(GeneratorSymbol::artin(i, j), e); }

// r(k,m) ... r(k,q); the range q = m-1 is the empty product.
Word run(int k, int m, int q) {
  Word w;
  for (int t = m; t <= q; ++t) w = w * rho(k, t);
  return w;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArg(what);
}

}  // namespace

int TowerSpec::kernel_rank(int j) const {
  require(j >= 1 && j <= n, "level " + std::to_string(j) + " outside tower");
  return kind == GroupKind::Orbit ? 2 * j - 1 : j - 1;
}

std::vector<GeneratorSymbol> TowerSpec::level_alphabet(int j) const {
  std::vector<GeneratorSymbol> out;
  const int r = kernel_rank(j);
  for (int t = 0; t < r; ++t)
    out.push_back(kind == GroupKind::Orbit ? GeneratorSymbol::rho(j, t)
                                           : GeneratorSymbol::artin(t + 1, j));
  return out;
}

int TowerSpec::index_in_level(GeneratorSymbol s) const {
  const int j = s.level();
  if (j < 1 || j > n) return -1;
  if (kind == GroupKind::Orbit && s.family == Family::Rho) return s.second;
  if (kind == GroupKind::Artin && s.family == Family::Artin) return s.first - 1;
  return -1;
}

Word element_D(int j, int k) {
  require(1 <= j && j <= k, "D(j,k) needs 1<=j<=k");
  return run(k, j, k - 1);
}

Word element_C(int k, int j) {
  require(1 <= j && j < k, "C(k,j) needs 1<=j<k");
  const Word d = element_D(j + 1, k);
  return product({rho(k, 0, -1), d.inverse(), rho(k, j), d, rho(k, 0)});
}

Word element_E(int k, int m, int q) {
  require(k <= m && m <= q && q <= 2 * k - 2, "E(k,m,q) needs k<=m<=q<=2k-2");
  return run(k, m, q);
}

Word element_Theta(int n) {
  require(n >= 1, "Theta(n) needs n>=1");
  Word w;
  for (int j = 1; j <= n; ++j) w = w * rho(j, 0);
  return w;
}

Word element_full_twist(int n) {
  require(n >= 1, "full twist needs n>=1");
  Word w;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) w = w * artin(i, j);
  return w;
}

Word orbit_action_image(int j, int i, int k, int l, RelationText text) {
  require(1 <= j && j < k, "action needs 1<=j<k");
  require(0 <= i && i <= 2 * j - 2, "actor index out of range");
  require(0 <= l && l <= 2 * k - 2, "target index out of range");
  auto r = [k](int t, int e = 1) { return rho(k, t, e); };

  if (i == 0) {
    const Word c = element_C(k, j);
    if (l == 0 || (j < l && l < k)) return r(l);
    if ((1 <= l && l < j) || (k <= l && l <= k + j - 2)) return conjugate(c, r(l));
    if (l == j) return c;
    if (l == k + j - 1) {
      const Word e = run(k, k, k + j - 2);
      return conjugate(product({c, e.inverse(), r(0, -1), element_D(1, k).inverse()}), r(l));
    }
    return conjugate(c * r(k + j - 1), r(l));  // k+j <= l <= 2k-2
  }

  if (i < j) {
    if (l <= i - 1 || (j + 1 <= l && l <= k + i - 2) || (k + i <= l && l <= k + j - 2) ||
        k + j <= l)
      return r(l);
    if (l == i) return conjugate(r(j, -1), r(i));
    if (l < j) return conjugate(commutator(r(j, -1), r(i, -1)), r(l));
    if (l == j) return product({r(j, -1), r(i, -1), r(j), r(i), r(j)});
    if (l == k + i - 1)
      return conjugate(run(k, k + i - 1, k + j - 1) * run(k, k + i, k + j - 2).inverse(),
                       r(l));
    // l == k+j-1
    return conjugate(run(k, k + i, k + j - 2).inverse() * run(k, k + i - 1, k + j - 2), r(l));
  }

  const int a = i - j;
  const Word x = commutator(r(j, -1), r(k + a, -1));
  if ((1 <= l && l <= a) || (a + 2 <= l && l <= j - 1) || (k + a + 1 <= l && l <= k + j - 2) ||
      k + j <= l)
    return conjugate(x, r(l));
  if (l == a + 1)
    return conjugate(
        product({x, element_D(a + 1, k), r(0), run(k, k, k + j - 1), run(k, k, k + j - 2).inverse()}),
        element_C(k, a + 1));
  if (l == k + j - 1) {
    const Word outer =
        text == RelationText::Corrected ? x : commutator(r(j, -1), r(a + 1, -1));
    const Word e = run(k, k, k + j - 2);
    return conjugate(product({outer, e.inverse(), element_C(k, a + 1), e}), r(l));
  }
  if (l == j) return product({r(j, -1), r(k + a, -1), r(j), r(k + a), r(j)});
  if (l == k + a) return conjugate(r(j, -1), r(k + a));
  return r(l);  // l == 0 or j+1 <= l <= k+a-1
}

Word artin_inverse_action_image(int r, int s, int i, int j) {
  require(1 <= r && r < s && s < j && 1 <= i && i < j, "Artin action needs r<s<j, i<j");
  if (s < i || i < r) return artin(i, j);
  if (s == i) return conjugate(artin(r, j), artin(i, j));
  if (r == i) return conjugate(artin(r, j) * artin(s, j), artin(i, j));
  // r < i < s
  const Word c = commutator(artin(r, j), artin(s, j));
  return conjugate(c, artin(i, j));
}

Presentation orbit_presentation(int n, RelationText text) {
  require(n >= 1, "orbit presentation needs n>=1");
  Presentation p;
  p.tower = TowerSpec{GroupKind::Orbit, n, text};
  for (int j = 1; j <= n; ++j)
    for (const auto& s : p.tower->level_alphabet(j)) p.generators.push_back(s);

  // Enumeration order: (family, j, i, k, l).
  auto family_of = [](int j, int i) { return i == 0 ? 0 : (i < j ? 1 : 2); };
  for (int fam = 0; fam < 3; ++fam)
    for (int j = 1; j < n; ++j)
      for (int i = 0; i <= 2 * j - 2; ++i) {
        if (family_of(j, i) != fam) continue;
        for (int k = j + 1; k <= n; ++k)
          for (int l = 0; l <= 2 * k - 2; ++l) {
            const Word lhs = conjugate(rho(j, i), rho(k, l));
            p.relators.push_back(lhs * orbit_action_image(j, i, k, l, text).inverse());
          }
      }
  return p;
}

Presentation artin_presentation(int n) {
  require(n >= 1, "Artin presentation needs n>=1");
  Presentation p;
  p.tower = TowerSpec{GroupKind::Artin, n, RelationText::Corrected};
  for (int j = 2; j <= n; ++j)
    for (const auto& s : p.tower->level_alphabet(j)) p.generators.push_back(s);

  // Enumeration order: (actor r, actor s, target i, target j).
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = std::max(i, s) + 1; j <= n; ++j) {
          const Word lhs = conjugate(artin(r, s, -1), artin(i, j));
          p.relators.push_back(lhs * artin_inverse_action_image(r, s, i, j).inverse());
        }
  return p;
}

Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra) {
  Presentation q = p;
  for (const Word& w : extra) {
    for (const Letter& x : w.letters())
      if (std::find(p.generators.begin(), p.generators.end(), x.symbol) == p.generators.end())
        throw MissingImage("symbol " + to_string(x.symbol) + " is not a generator");
    q.relators.push_back(w);
  }
  q.tower.reset();
  return q;
}

// ---------------------------------------------------------------------------
// Export / import

namespace {

std::string gap_name(GeneratorSymbol s) {
  switch (s.family) {
    case Family::Rho:
      return "r" + std::to_string(s.first) + "_" + std::to_string(s.second);
    case Family::Artin:
      return "A" + std::to_string(s.first) + "_" + std::to_string(s.second);
    case Family::Surface:
      return "p" + std::to_string(s.first);
  }
  return "?";
}

const char* kind_name(GroupKind k) { return k == GroupKind::Orbit ? "gn" : "pn"; }

void check_symbols(const Presentation& p) {
  for (const Word& r : p.relators)
    for (const Letter& x : r.letters())
      if (std::find(p.generators.begin(), p.generators.end(), x.symbol) == p.generators.end())
        throw ParseError("relator uses unknown generator " + to_string(x.symbol));
}

}  // namespace

std::string to_text(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& s : p.generators) out += " " + to_string(s);
  out += "\n";
  if (p.relators.empty()) return out + "(no relators)\n";
  for (const Word& r : p.relators) out += to_string(r) + "\n";
  return out;
}

Presentation parse_text(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("generators:", 0) != 0)
    throw ParseError("text presentation must start with 'generators:'");
  const Word listed = parse_word(line.substr(11));
  for (const Letter& x : listed.letters()) {
    if (x.exponent != 1) throw ParseError("generator list contains an inverse");
    p.generators.push_back(x.symbol);
  }
  while (std::getline(in, line)) {
    if (line == "(no relators)") continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    p.relators.push_back(parse_word(line));
  }
  check_symbols(p);
  return p;
}

std::string to_json(const Presentation& p) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["generators"] = nlohmann::json::array();
  for (const auto& s : p.generators) j["generators"].push_back(to_string(s));
  j["relators"] = nlohmann::json::array();
  for (const Word& r : p.relators) {
    nlohmann::json letters = nlohmann::json::array();
    for (const Letter& x : r.letters()) letters.push_back(to_string(x));
    j["relators"].push_back(letters);
  }
  if (p.tower) {
    j["tower"] = {{"group", kind_name(p.tower->kind)},
                  {"n", p.tower->n},
                  {"relation_text",
                   p.tower->text == RelationText::Corrected ? "corrected" : "as_printed"}};
  }
  return j.dump(2) + "\n";
}

Presentation parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  Presentation p;
  try {
    if (j.at("schema_version").get<int>() != 1) throw ParseError("unsupported schema_version");
    for (const auto& g : j.at("generators")) p.generators.push_back(parse_symbol(g.get<std::string>()));
    for (const auto& r : j.at("relators")) {
      std::string joined;
      for (const auto& x : r) joined += x.get<std::string>() + " ";
      p.relators.push_back(parse_word(joined));
    }
    if (j.contains("tower")) {
      const auto& t = j.at("tower");
      const std::string group = t.at("group").get<std::string>();
      if (group != "gn" && group != "pn") throw ParseError("unknown tower group " + group);
      TowerSpec spec;
      spec.kind = group == "gn" ? GroupKind::Orbit : GroupKind::Artin;
      spec.n = t.at("n").get<int>();
      spec.text = t.value("relation_text", std::string("corrected")) == "as_printed"
                      ? RelationText::AsPrinted
                      : RelationText::Corrected;
      p.tower = spec;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed presentation json: ") + e.what());
  }
  check_symbols(p);
  return p;
}

std::string to_gap(const Presentation& p) {
  std::ostringstream out;
  out << "F := FreeGroup(";
  for (std::size_t t = 0; t < p.generators.size(); ++t)
    out << (t ? ", " : "") << '"' << gap_name(p.generators[t]) << '"';
  out << ");\n";
  for (std::size_t t = 0; t < p.generators.size(); ++t)
    out << gap_name(p.generators[t]) << " := F." << t + 1 << ";\n";
  out << "rels := [";
  for (std::size_t t = 0; t < p.relators.size(); ++t) {
    out << (t ? ",\n  " : "\n  ");
    const auto letters = p.relators[t].letters();
    if (letters.empty()) out << "One(F)";
    for (std::size_t u = 0; u < letters.size(); ++u) {
      out << (u ? "*" : "") << gap_name(letters[u].symbol);
      if (letters[u].exponent < 0) out << "^-1";
    }
  }
  out << (p.relators.empty() ? "];\n" : "\n];\n");
  out << "G := F / rels;\n";
  return out.str();
}

}  // namespace orbit
