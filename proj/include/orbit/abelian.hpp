#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbit/presentation.hpp"
#include "orbit/word.hpp"

namespace orbit {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U·M·V = diag(d, 0, ...) with U, V unimodular and d_1 | d_2 | ... | d_rank.
struct SmithForm {
  std::vector<Integer> d;
  std::size_t rank = 0;
  IntMatrix U;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

struct FGAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  /// Normalizes an arbitrary list of cyclic orders (0 or 1 entries allowed,
  /// 1 is dropped, 0 counts as a free factor) into invariant-factor form.
  static FGAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                           const std::vector<Integer>& orders);

  /// `Z^r x Z/d1 x Z/d2 ...`, or `0` for the trivial group.
  std::string to_string() const;
  std::string to_json() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

/// Rows are relators, columns are generators, entries exponent sums.
IntMatrix relation_matrix(const Presentation& p);

/// Cokernel of M : Z^cols -> Z^rows.
FGAbelianGroup cokernel(const IntMatrix& m);
bool has_torsion(const FGAbelianGroup& g);
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

FGAbelianGroup h1(const Presentation& p);

/// Matrix of the induced map on generator classes: rows follow target
/// generators, columns source generators.
IntMatrix hom_on_h1(const Substitution& images, const Presentation& source,
                    const Presentation& target);

}  // namespace orbit
