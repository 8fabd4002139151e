#include "orbit/fibration.hpp"

#include <map>
#include <mutex>

#include "orbit/errors.hpp"

namespace orbit {

namespace {

void require_model(Surface s, int n) {
  if (n < base_n(s))
    throw InvalidArg("n=" + std::to_string(n) + " below " + std::to_string(base_n(s)) +
                     " for " + surface_name(s));
}

Word twist_square(Surface s, int n) {
  const Word t = twist_element(s, n);
  return t * t;
}

}  // namespace

int base_n(Surface s) { return s == Surface::S2 ? 3 : 2; }

std::string surface_name(Surface s) { return s == Surface::S2 ? "s2" : "rp2"; }

std::string FibreElement::to_string() const {
  std::string z;
  for (std::size_t t = 0; t < z_part.size(); ++t) z += (t ? "," : "") + std::to_string(z_part[t]);
  return "(" + to_display_string(r_part) + "; (" + z + "))";
}

FibreElement multiply(const FibreElement& a, const FibreElement& b) {
  if (a.z_part.size() != b.z_part.size()) throw InvalidArg("fibre elements of different n");
  FibreElement c{a.r_part * b.r_part, a.z_part};
  for (std::size_t t = 0; t < c.z_part.size(); ++t) c.z_part[t] += b.z_part[t];
  return c;
}

FibreElement inverse(const FibreElement& a) {
  FibreElement c{a.r_part.inverse(), a.z_part};
  for (long& v : c.z_part) v = -v;
  return c;
}

Presentation fibre_base_presentation(Surface s, int n) {
  require_model(s, n);
  return s == Surface::S2 ? artin_presentation(n - 1) : orbit_presentation(n - 1);
}

Comber fibre_base_engine(Surface s, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Surface, int>, Comber> engines;
  require_model(s, n);
  std::lock_guard lock(mutex);
  auto it = engines.find({s, n});
  if (it == engines.end())
    it = engines.emplace(std::make_pair(s, n), Comber::for_presentation(fibre_base_presentation(s, n)))
             .first;
  return it->second;
}

Word twist_element(Surface s, int n) {
  require_model(s, n);
  return s == Surface::S2 ? element_full_twist(n - 1) : element_Theta(n - 1).inverse();
}

std::string Pi2Label::to_string() const {
  switch (kind) {
    case Pi2Kind::X:
      return "x" + std::to_string(index);
    case Pi2Kind::Z0:
      return "z0";
    case Pi2Kind::MinusZ0:
      return "-z0";
  }
  return "?";
}

Pi2Label parse_pi2_label(const std::string& text) {
  if (text == "z0") return {Pi2Kind::Z0, 0};
  if (text == "-z0") return {Pi2Kind::MinusZ0, 0};
  if (text.size() >= 2 && text[0] == 'x' &&
      text.find_first_not_of("0123456789", 1) == std::string::npos)
    return {Pi2Kind::X, std::stoi(text.substr(1))};
  throw InvalidArg("unknown basis label '" + text + "'");
}

std::vector<Pi2Label> pi2_basis(Surface s, int n) {
  require_model(s, n);
  std::vector<Pi2Label> basis;
  const int xs = s == Surface::S2 ? n - 2 : n - 1;
  for (int i = 0; i < xs; ++i) basis.push_back({Pi2Kind::X, i});
  basis.push_back({Pi2Kind::Z0, 0});
  if (s == Surface::S2) basis.push_back({Pi2Kind::MinusZ0, 0});
  return basis;
}

FibreElement delta_generator(Surface s, int n, int i) {
  require_model(s, n);
  if (i < 0 || i > n - 2) throw InvalidArg("delta index " + std::to_string(i) + " out of range");
  FibreElement e{Word(), std::vector<long>(static_cast<std::size_t>(n - 1), 0)};
  e.z_part[static_cast<std::size_t>(i)] = 1;
  return e;
}

FibreElement tau_hat(Surface s, int n) {
  return {twist_element(s, n), std::vector<long>(static_cast<std::size_t>(n - 1), 0)};
}

FibreElement boundary_image(Surface s, int n, const Pi2Label& label) {
  const auto basis = pi2_basis(s, n);
  if (std::find(basis.begin(), basis.end(), label) == basis.end())
    throw InvalidArg("label " + label.to_string() + " not in the basis for " + surface_name(s) +
                     ", n=" + std::to_string(n));
  const auto ones = std::vector<long>(static_cast<std::size_t>(n - 1), 1);
  if (label.kind == Pi2Kind::X) return delta_generator(s, n, label.index);
  if (s == Surface::RP2) {
    // tau^2 minus the sum of all deltas
    FibreElement e{twist_square(s, n), ones};
    for (long& v : e.z_part) v = -v;
    return e;
  }
  if (label.kind == Pi2Kind::Z0) return delta_generator(s, n, n - 2);
  // sum of all deltas minus tau^2
  return {twist_square(s, n).inverse(), ones};
}

FibreElement printed_corollary_image_minus_z0(int n) {
  require_model(Surface::S2, n);
  FibreElement e{twist_square(Surface::S2, n).inverse(),
                 std::vector<long>(static_cast<std::size_t>(n - 1), 1)};
  e.z_part.back() = 0;
  return e;
}

IntMatrix boundary_matrix_ab(Surface s, int n) {
  const Presentation base = fibre_base_presentation(s, n);
  const auto basis = pi2_basis(s, n);
  const std::size_t g = base.generators.size();
  IntMatrix m(g + static_cast<std::size_t>(n - 1), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const FibreElement e = boundary_image(s, n, basis[c]);
    for (std::size_t r = 0; r < g; ++r) m.at(r, c) = exponent_sum(e.r_part, base.generators[r]);
    for (std::size_t z = 0; z < e.z_part.size(); ++z) m.at(g + z, c) = e.z_part[z];
  }
  return m;
}

SignedSumCheck signed_sum_check(Surface s, int n) {
  SignedSumCheck out;
  out.sum = {Word(), std::vector<long>(static_cast<std::size_t>(n - 1), 0)};
  for (const auto& label : pi2_basis(s, n)) {
    const FibreElement e = boundary_image(s, n, label);
    out.sum = multiply(out.sum, label.kind == Pi2Kind::MinusZ0 ? inverse(e) : e);
  }
  const FibreElement t = tau_hat(s, n);
  out.expected = multiply(t, t);
  out.z_equal = out.sum.z_part == out.expected.z_part;
  out.r_equal = fibre_base_engine(s, n).words_equal(out.sum.r_part, out.expected.r_part);
  return out;
}

QuotientCheck quotient_check(Surface s, int n) {
  QuotientCheck out;
  out.from_cokernel = cokernel(boundary_matrix_ab(s, n));
  out.from_presentation = h1(quotient_by(fibre_base_presentation(s, n), {twist_square(s, n)}));
  return out;
}

std::vector<long> iota_sharp_vector(Surface s, int n, int k) {
  if (k < 2) throw InvalidArg("k must be at least 2");
  if (n < 1) throw InvalidArg("n must be at least 1");
  std::vector<long> v(static_cast<std::size_t>(n), 1);
  if (s == Surface::S2 && n == 2 && k == 2) v[1] = -1;
  return v;
}

SplitCheck split_ses_check(const FGAbelianGroup& coeff, int n, const std::vector<long>& vector) {
  if (n < 1 || vector.size() != static_cast<std::size_t>(n))
    throw InvalidArg("vector length must equal n");
  const auto unit = std::find_if(vector.begin(), vector.end(), [](long v) { return v == 1 || v == -1; });
  if (unit == vector.end()) throw NoUnitCoordinate("no coordinate equal to +-1");

  // A has generators e_0..e_{m-1}; order 0 marks a free generator.
  std::vector<Integer> order(coeff.free_rank, 0);
  order.insert(order.end(), coeff.torsion.begin(), coeff.torsion.end());
  const std::size_t m = order.size();
  const auto reduce_mod = [](Integer x, const Integer& d) {
    if (d == 0) return x;
    x %= d;
    return x < 0 ? x + d : x;
  };

  SplitCheck out;
  out.section_coordinate = static_cast<std::size_t>(unit - vector.begin());
  const long g = vector[out.section_coordinate];  // its own inverse

  // Theta(e_t) has v_c e_t in block c; h reads block i and multiplies by g.
  out.section_identity = true;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t u = 0; u < m; ++u) {
      const Integer theta_block = u == t ? Integer(vector[out.section_coordinate]) : Integer(0);
      const Integer back = reduce_mod(theta_block * g, order[u]);
      const Integer want = reduce_mod(u == t ? 1 : 0, order[u]);
      if (back != want) out.section_identity = false;
    }
  }

  // Presentation matrix of A^n / Theta(A): torsion relations, then Theta columns.
  const std::size_t rows = static_cast<std::size_t>(n) * m;
  std::size_t torsion_count = 0;
  for (const Integer& d : order) torsion_count += d != 0;
  IntMatrix rel(rows, static_cast<std::size_t>(n) * torsion_count + m);
  std::size_t col = 0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
    for (std::size_t t = 0; t < m; ++t)
      if (order[t] != 0) rel.at(c * m + t, col++) = order[t];
  for (std::size_t t = 0; t < m; ++t, ++col)
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) rel.at(c * m + t, col) = vector[c];
  out.quotient = cokernel(rel);

  out.expected_quotient = FGAbelianGroup{};
  for (int c = 1; c < n; ++c) out.expected_quotient = direct_sum(out.expected_quotient, coeff);
  return out;
}

NonsplitWitness nonsplit_witness_s2(int n) {
  require_model(Surface::S2, n);
  NonsplitWitness out;
  const Presentation base = fibre_base_presentation(Surface::S2, n);
  out.middle = direct_sum(h1(base), FGAbelianGroup{static_cast<std::size_t>(n - 1), {}});
  out.quotient = cokernel(boundary_matrix_ab(Surface::S2, n));
  out.quotient_check = h1(quotient_by(base, {twist_square(Surface::S2, n)}));
  return out;
}

Substitution upsilon_images(int n) {
  if (n < 1) throw InvalidArg("n must be at least 1");
  Substitution images;
  for (int j = 1; j <= n; ++j) {
    const Word p(GeneratorSymbol::surface(j));
    for (int i = 0; i <= 2 * j - 2; ++i) {
      Word img;
      if (i == 0) {
        Word band;
        for (int t = 1; t < j; ++t) band = band * Word(GeneratorSymbol::artin(t, j));
        img = product({p, band, p});
      } else if (i < j) {
        img = Word(GeneratorSymbol::artin(i, j));
      } else {
        img = conjugate(p, Word(GeneratorSymbol::artin(i - j + 1, j)));
      }
      images[GeneratorSymbol::rho(j, i)] = img;
    }
  }
  return images;
}

}  // namespace orbit
