#include "orbit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "orbit/abelian.hpp"
#include "orbit/combing.hpp"
#include "orbit/errors.hpp"
#include "orbit/fibration.hpp"
#include "orbit/presentation.hpp"
#include "orbit/sampling.hpp"

namespace orbit {

namespace {

struct RunConfig {
  std::string group = "gn";
  std::string surface = "s2";
  int n = 0;
  std::string word;
  std::string format = "text";
  std::string suite;
  std::string relation_text = "corrected";
  std::uint64_t seed = 0;
  std::size_t word_cap = kDefaultWordCap;
  std::size_t samples = 200;
  std::size_t max_length = 32;
  int k = 2;
  bool strict_corollary = false;
  bool abelianized = false;
  bool quotient = false;
};

struct CheckLine {
  bool pass = false;
  std::string text;
};

Surface surface_of(const RunConfig& cfg) { return cfg.surface == "s2" ? Surface::S2 : Surface::RP2; }

RelationText text_of(const RunConfig& cfg) {
  return cfg.relation_text == "as-printed" ? RelationText::AsPrinted : RelationText::Corrected;
}

Presentation group_of(const RunConfig& cfg) {
  return cfg.group == "gn" ? orbit_presentation(cfg.n, text_of(cfg)) : artin_presentation(cfg.n);
}

std::vector<GeneratorSymbol> all_generators(const TowerSpec& t) {
  std::vector<GeneratorSymbol> gens;
  for (int j = 1; j <= t.n; ++j)
    for (const auto& s : t.level_alphabet(j)) gens.push_back(s);
  return gens;
}

int emit(const std::vector<CheckLine>& lines, std::ostream& out) {
  bool ok = true;
  for (const auto& l : lines) {
    out << (l.pass ? "PASS " : "FAIL ") << l.text << "\n";
    ok = ok && l.pass;
  }
  out << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_presentation(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = group_of(cfg);
  if (cfg.format == "json")
    out << to_json(p);
  else if (cfg.format == "gap")
    out << to_gap(p);
  else
    out << to_text(p);
  return kExitOk;
}

int cmd_comb(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = group_of(cfg);
  const Comber engine = Comber::for_presentation(p, cfg.word_cap);
  const NormalForm nf = engine.comb(parse_word(cfg.word));
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["levels"] = nlohmann::json::array();
    for (int k = nf.top_level(); k >= 1; --k)
      j["levels"].push_back({{"level", k}, {"word", to_string(nf.level(k))}});
    out << j.dump(2) << "\n";
  } else {
    out << nf.to_string();
  }
  return kExitOk;
}

int cmd_abelianize(const RunConfig& cfg, std::ostream& out) {
  Presentation p = group_of(cfg);
  if (cfg.quotient) {
    const Word twist = cfg.group == "gn" ? element_Theta(cfg.n) : element_full_twist(cfg.n);
    p = quotient_by(p, {twist * twist});
  }
  const FGAbelianGroup g = h1(p);
  out << (cfg.format == "json" ? g.to_json() : g.to_string()) << "\n";
  return kExitOk;
}

std::string smith_line(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::string d;
  for (std::size_t t = 0; t < s.d.size(); ++t) d += (t ? "," : "") + s.d[t].str();
  return "(" + d + ")";
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  const Surface s = surface_of(cfg);
  const auto basis = pi2_basis(s, cfg.n);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["surface"] = surface_name(s);
    j["n"] = cfg.n;
    j["images"] = nlohmann::json::array();
    for (const auto& label : basis) {
      const FibreElement e = boundary_image(s, cfg.n, label);
      j["images"].push_back(
          {{"label", label.to_string()}, {"r_part", to_string(e.r_part)}, {"z_part", e.z_part}});
    }
    if (cfg.abelianized) {
      const IntMatrix m = boundary_matrix_ab(s, cfg.n);
      j["matrix"] = nlohmann::json::parse(m.to_string());
      nlohmann::json d = nlohmann::json::array();
      for (const auto& v : smith_normal_form(m).d) d.push_back(v.str());
      j["smith"] = d;
      j["cokernel"] = nlohmann::json::parse(cokernel(m).to_json());
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& label : basis)
    out << label.to_string() << " -> " << boundary_image(s, cfg.n, label).to_string() << "\n";
  if (cfg.abelianized) {
    const IntMatrix m = boundary_matrix_ab(s, cfg.n);
    out << "matrix: " << m.to_string() << "\n";
    out << "smith: " << smith_line(m) << "\n";
    out << "cokernel: " << cokernel(m).to_string() << "\n";
  }
  if (cfg.strict_corollary && s == Surface::S2) {
    const FibreElement printed = printed_corollary_image_minus_z0(cfg.n);
    const FibreElement used = boundary_image(s, cfg.n, {Pi2Kind::MinusZ0, 0});
    out << "strict-corollary: printed -z0 image " << printed.to_string()
        << (printed == used ? " agrees" : " differs from") << " signed-sum image "
        << used.to_string() << "\n";
    return printed == used ? kExitOk : kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verification suites

std::vector<CheckLine> suite_relators(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = group_of(cfg);
  const Comber engine = Comber::for_presentation(p, cfg.word_cap);
  const auto gens = all_generators(*p.tower);
  out << "seed: " << cfg.seed << "\n";

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    Word u = random_word(rng, gens, cfg.max_length);
    Word v = random_word(rng, gens, cfg.max_length);
    pairs.emplace_back(std::move(u), std::move(v));
  }
  // Compared through digests: explicit level words grow exponentially with
  // the word length, the digest stays linear.
  std::vector<NormalFormDigest> plain(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t t) { plain[t] = engine.digest(pairs[t].first * pairs[t].second); });

  std::vector<CheckLine> lines(p.relators.size());
  parallel_for(p.relators.size(), [&](std::size_t r) {
    const Word& rel = p.relators[r];
    lines[r] = {true, "relator " + std::to_string(r) + ": " + to_string(rel)};
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (engine.digest(pairs[t].first * rel * pairs[t].second) != plain[t]) {
        lines[r].pass = false;
        lines[r].text += "  reproducer u=\"" + to_string(pairs[t].first) + "\" v=\"" +
                         to_string(pairs[t].second) + "\"";
        break;
      }
    }
  });
  return lines;
}

std::vector<CheckLine> suite_center(const RunConfig& cfg) {
  const Presentation p = group_of(cfg);
  const Comber engine = Comber::for_presentation(p, cfg.word_cap);
  const CenterReport report = center_check(engine);
  std::vector<CheckLine> lines;
  const std::string center = cfg.group == "gn" ? "Theta" : "full twist";
  for (const auto& e : report.entries) {
    lines.push_back({e.commutes_with_theta, to_string(e.generator) + " commutes with " + center});
    if (e.theta_power)
      lines.push_back({true, to_string(e.generator) + " is a power of " + center});
    else
      lines.push_back({e.witness.has_value(),
                       to_string(e.generator) + " non-central, witness " +
                           (e.witness ? to_string(*e.witness) : std::string("none found"))});
  }
  return lines;
}

std::vector<CheckLine> suite_exactness(const RunConfig& cfg) {
  const Surface s = surface_of(cfg);
  std::vector<CheckLine> lines;
  const IntMatrix m = boundary_matrix_ab(s, cfg.n);
  const SmithForm snf = smith_normal_form(m);
  lines.push_back({snf.rank == static_cast<std::size_t>(cfg.n),
                   "boundary matrix rank " + std::to_string(snf.rank) + " (want " +
                       std::to_string(cfg.n) + "), smith " + smith_line(m)});

  // z-parts of the images must span Z^{n-1}
  const std::size_t g = m.rows() - static_cast<std::size_t>(cfg.n - 1);
  IntMatrix z(static_cast<std::size_t>(cfg.n - 1), m.cols());
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) z.at(r, c) = m.at(g + r, c);
  const FGAbelianGroup zq = cokernel(z);
  lines.push_back({zq == FGAbelianGroup{}, "loop factors spanned by the images, cokernel " + zq.to_string()});

  const SignedSumCheck sum = signed_sum_check(s, cfg.n);
  lines.push_back({sum.ok(), "signed sum of boundary images " + sum.sum.to_string() +
                                 " equals tau_hat^2 " + sum.expected.to_string()});

  if (cfg.strict_corollary && s == Surface::S2) {
    const FibreElement printed = printed_corollary_image_minus_z0(cfg.n);
    const FibreElement used = boundary_image(s, cfg.n, {Pi2Kind::MinusZ0, 0});
    lines.push_back({printed == used, "strict corollary: printed -z0 image " + printed.to_string() +
                                          " vs signed-sum image " + used.to_string()});
  }
  return lines;
}

std::vector<CheckLine> suite_quotient(const RunConfig& cfg) {
  const QuotientCheck q = quotient_check(surface_of(cfg), cfg.n);
  return {{q.ok(), "cokernel " + q.from_cokernel.to_string() + " vs quotient presentation " +
                       q.from_presentation.to_string()}};
}

std::vector<CheckLine> suite_split(const RunConfig& cfg) {
  const std::vector<std::pair<std::string, FGAbelianGroup>> coeffs = {
      {"Z", {1, {}}}, {"Z/2", {0, {2}}}, {"Z x Z/2", {1, {2}}}, {"Z/3", {0, {3}}}};
  const std::vector<long> vec = iota_sharp_vector(surface_of(cfg), cfg.n, cfg.k);
  std::string vtext;
  for (long v : vec) vtext += (vtext.empty() ? "" : ",") + std::to_string(v);
  std::vector<CheckLine> lines;
  for (const auto& [name, a] : coeffs) {
    const SplitCheck c = split_ses_check(a, cfg.n, vec);
    lines.push_back({c.ok(), "coefficients " + name + ", vector (" + vtext + "): quotient " +
                                 c.quotient.to_string() + ", section " +
                                 (c.section_identity ? "verified" : "broken")});
  }
  return lines;
}

std::vector<CheckLine> suite_theta(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = orbit_presentation(cfg.n, text_of(cfg));
  const Comber engine = Comber::for_presentation(p, cfg.word_cap);
  const auto gens = all_generators(*p.tower);
  const Word theta = element_Theta(cfg.n);
  out << "seed: " << cfg.seed << "\n";
  std::mt19937_64 rng(cfg.seed);
  std::vector<Word> words;
  for (std::size_t t = 0; t < cfg.samples; ++t) words.push_back(random_word(rng, gens, cfg.max_length));

  std::vector<CheckLine> lines(words.size());
  parallel_for(words.size(), [&](std::size_t t) {
    const Word& w = words[t];
    const GeneratorSymbol r10 = GeneratorSymbol::rho(1, 0);
    const ThetaSplit split = theta_decompose(engine, w);
    const Word joined = theta.power(split.exponent) * split.remainder;
    const bool recombines = engine.digest(joined) == engine.digest(w);
    const bool kernel = exponent_sum(split.remainder, r10) == 0;
    // any other exponent leaves the remainder outside the kernel
    const bool unique = exponent_sum(theta.power(-split.exponent - 1) * w, r10) != 0 &&
                        exponent_sum(theta.power(-split.exponent + 1) * w, r10) != 0;
    const ThetaSplit again = theta_decompose(engine, joined);
    const bool stable = again.exponent == split.exponent &&
                        engine.digest(again.remainder) == engine.digest(split.remainder);
    const bool pass = recombines && kernel && unique && stable;
    lines[t] = {pass, "word " + std::to_string(t) + " exponent " + std::to_string(split.exponent) +
                          (pass ? "" : "  reproducer \"" + to_string(w) + "\"")};
  });
  return lines;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<CheckLine> lines;
  if (cfg.suite == "relators")
    lines = suite_relators(cfg, out);
  else if (cfg.suite == "center")
    lines = suite_center(cfg);
  else if (cfg.suite == "exactness")
    lines = suite_exactness(cfg);
  else if (cfg.suite == "quotient")
    lines = suite_quotient(cfg);
  else if (cfg.suite == "split")
    lines = suite_split(cfg);
  else
    lines = suite_theta(cfg, out);
  return emit(lines, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit configuration braid groups: presentations, combing, boundary maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "gn (orbit braid group) or pn (pure braid group)")
        ->check(CLI::IsMember({"gn", "pn"}));
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of strands")->required()->check(CLI::PositiveNumber);
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--word-cap", cfg.word_cap, "longest intermediate word allowed")
        ->check(CLI::PositiveNumber);
  };
  auto add_relation_text = [&](CLI::App* sub) {
    sub->add_option("--relation-text", cfg.relation_text,
                    "corrected (default) or as-printed reading of the long (III) relation")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
  };

  auto* pres = app.add_subcommand("presentation", "print a presentation");
  add_group(pres);
  add_n(pres);
  add_relation_text(pres);
  pres->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "gap"}));

  auto* comb = app.add_subcommand("comb", "comb a word into its normal form");
  add_group(comb);
  add_n(comb);
  add_cap(comb);
  add_relation_text(comb);
  comb->add_option("--word", cfg.word, "word, e.g. \"r(1,0) r(2,0)^-1\"");
  comb->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite)
      ->required()
      ->check(CLI::IsMember({"relators", "center", "exactness", "quotient", "split", "theta"}));
  add_group(verify);
  add_n(verify);
  add_cap(verify);
  add_relation_text(verify);
  verify->add_option("--surface", cfg.surface)->check(CLI::IsMember({"s2", "rp2"}));
  verify->add_option("--seed", cfg.seed, "seed for randomized suites");
  verify->add_option("--samples", cfg.samples, "random samples for randomized suites");
  verify->add_option("--max-length", cfg.max_length, "longest random word");
  verify->add_option("--k", cfg.k, "homotopy degree for the split suite");
  verify->add_flag("--strict-corollary", cfg.strict_corollary,
                   "also compare with the closing corollary's printed -z0 image");

  auto* abel = app.add_subcommand("abelianize", "print H_1 of a presentation");
  add_group(abel);
  add_n(abel);
  abel->add_flag("--quotient", cfg.quotient, "quotient by the square of the central twist first");
  abel->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* bound = app.add_subcommand("boundary", "boundary images of the pi_2 basis");
  bound->add_option("--surface", cfg.surface)->required()->check(CLI::IsMember({"s2", "rp2"}));
  add_n(bound);
  bound->add_flag("--abelianized", cfg.abelianized, "also print the integer matrix and its Smith form");
  bound->add_flag("--strict-corollary", cfg.strict_corollary,
                  "compare with the closing corollary's printed -z0 image");
  bound->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (pres->parsed()) return cmd_presentation(cfg, out);
    if (comb->parsed()) return cmd_comb(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (abel->parsed()) return cmd_abelianize(cfg, out);
    return cmd_boundary(cfg, out);
  } catch (const WordSizeExceeded& e) {
    err << "word size exceeded: intermediate length " << e.length() << " > cap " << e.cap() << "\n";
    return kExitWordSize;
  } catch (const InvalidArg& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace orbit
