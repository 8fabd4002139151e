#include "orbit/abelian.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "orbit/errors.hpp"

namespace orbit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArg("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t) m.at(t, t) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << at(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArg("matrix shapes do not match");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Integer& x = a.at(r, t);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) p.at(r, c) += x * b.at(t, c);
    }
  return p;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!move_smallest_to(t)) break;
      while (!settle_pivot(t)) {
      }
      if (a_.at(t, t) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    for (std::size_t s = 0; s < t; ++s) out.d.push_back(a_.at(s, s));
    out.U = std::move(u_);
    out.V = std::move(v_);
    return out;
  }

 private:
  // Smallest-|value| pivot in the trailing block, swapped to (t,t).
  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Integer& x = a_.at(r, c);
        if (x != 0 && (!found || abs(x) < abs(a_.at(br, bc)))) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Clears row and column t; returns false if the pivot had to change.
  bool settle_pivot(std::size_t t) {
    bool clean = true;
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (a_.at(r, t) == 0) continue;
      add_row(r, t, -(a_.at(r, t) / a_.at(t, t)));
      if (a_.at(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (a_.at(t, c) == 0) continue;
      add_col(c, t, -(a_.at(t, c) / a_.at(t, t)));
      if (a_.at(t, c) != 0) clean = false;
    }
    if (!clean) {
      move_smallest_to(t);
      return false;
    }
    // Divisibility: pull a non-multiple into row t and start over.
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c)
        if (a_.at(r, c) % a_.at(t, t) != 0) {
          add_row(t, r, 1);
          return false;
        }
    return true;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_.at(i, c), a_.at(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_.at(i, c), u_.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, i), a_.at(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_.at(r, i), v_.at(r, j));
  }
  // row i += f * row j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_.at(i, c) += f * a_.at(j, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(i, c) += f * u_.at(j, c);
  }
  // col i += f * col j
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_.at(r, i) += f * a_.at(r, j);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_.at(r, i) += f * v_.at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_.at(i, c) = -a_.at(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(i, c) = -u_.at(i, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s = SmithReducer(m).run();

  IntMatrix expected(m.rows(), m.cols());
  for (std::size_t t = 0; t < s.rank; ++t) expected.at(t, t) = s.d[t];
  if (s.U * m * s.V != expected) throw Error("Smith form failed to multiply back");
  for (std::size_t t = 1; t < s.rank; ++t)
    if (s.d[t] % s.d[t - 1] != 0) throw Error("Smith form divisibility chain broken");
  return s;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArg("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                                  const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t t = 0; t < orders.size(); ++t) diag.at(t, t) = orders[t];
  FGAbelianGroup g = cokernel(diag);
  g.free_rank += free_rank;
  return g;
}

std::string FGAbelianGroup::to_string() const {
  std::string out;
  if (free_rank > 0) out = "Z^" + std::to_string(free_rank);
  for (const Integer& d : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

std::string FGAbelianGroup::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["free_rank"] = free_rank;
  j["torsion"] = nlohmann::json::array();
  // Invariant factors may exceed 64 bits, so they travel as strings.
  for (const Integer& d : torsion) j["torsion"].push_back(d.str());
  return j.dump();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t c = 0; c < p.generators.size(); ++c)
      m.at(r, c) = exponent_sum(p.relators[r], p.generators[c]);
  return m;
}

FGAbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  FGAbelianGroup g;
  g.free_rank = m.rows() - s.rank;
  for (const Integer& d : s.d)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

bool has_torsion(const FGAbelianGroup& g) { return !g.torsion.empty(); }

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return FGAbelianGroup::from_cyclic_orders(a.free_rank + b.free_rank, orders);
}

FGAbelianGroup h1(const Presentation& p) { return cokernel(relation_matrix(p).transpose()); }

IntMatrix hom_on_h1(const Substitution& images, const Presentation& source,
                    const Presentation& target) {
  IntMatrix m(target.generators.size(), source.generators.size());
  for (std::size_t c = 0; c < source.generators.size(); ++c) {
    auto it = images.find(source.generators[c]);
    if (it == images.end())
      throw MissingImage("no image for " + orbit::to_string(source.generators[c]));
    for (std::size_t r = 0; r < target.generators.size(); ++r)
      m.at(r, c) = exponent_sum(it->second, target.generators[r]);
  }
  return m;
}

}  // namespace orbit
