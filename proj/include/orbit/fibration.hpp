#pragma once

#include <string>
#include <vector>

#include "orbit/abelian.hpp"
#include "orbit/combing.hpp"
#include "orbit/presentation.hpp"
#include "orbit/word.hpp"

namespace orbit {

enum class Surface { S2, RP2 };

/// Smallest n handled by the fibration model: 3 for the sphere, 2 for the
/// projective plane.
int base_n(Surface s);
std::string surface_name(Surface s);

/// Element of pi_1 of the homotopy fibre: R_{n-1} x Z^{n-1}, with R the
/// pure braid group P_{n-1} (sphere) or G_{n-1} (projective plane).
struct FibreElement {
  Word r_part;
  std::vector<long> z_part;

  std::string to_string() const;
  friend bool operator==(const FibreElement&, const FibreElement&) = default;
};

/// Direct-product multiplication.
FibreElement multiply(const FibreElement& a, const FibreElement& b);
FibreElement inverse(const FibreElement& a);

/// Presentation, with tower, of R_{n-1}.
Presentation fibre_base_presentation(Surface s, int n);
/// Combing engine for R_{n-1}.
Comber fibre_base_engine(Surface s, int n);
/// Element generating the quotient twist: Delta^2_{n-1} or Theta_{n-1}^{-1}.
Word twist_element(Surface s, int n);

enum class Pi2Kind { X, Z0, MinusZ0 };

/// A basis label of pi_2 of the product. For the sphere the labels are
/// x_0..x_{n-3}, z_0, -z_0; for the projective plane x_0..x_{n-2}, z_0.
struct Pi2Label {
  Pi2Kind kind = Pi2Kind::X;
  int index = 0;

  std::string to_string() const;
  friend bool operator==(const Pi2Label&, const Pi2Label&) = default;
};

std::vector<Pi2Label> pi2_basis(Surface s, int n);
Pi2Label parse_pi2_label(const std::string& text);

FibreElement delta_generator(Surface s, int n, int i);
FibreElement tau_hat(Surface s, int n);
FibreElement boundary_image(Surface s, int n, const Pi2Label& label);

/// The value printed in the closing corollary for -z_0 on the sphere, which
/// lacks the delta_{z_0} term forced by the signed-sum identity.
FibreElement printed_corollary_image_minus_z0(int n);

/// Rows: H_1(R_{n-1}) generator classes in presentation order, then the
/// n-1 loop factors. Columns: pi2_basis order.
IntMatrix boundary_matrix_ab(Surface s, int n);

struct SignedSumCheck {
  FibreElement sum;
  FibreElement expected;  // tau_hat squared
  bool z_equal = false;
  bool r_equal = false;   // decided by combing in R_{n-1}
  bool ok() const { return z_equal && r_equal; }
};

/// Adds the boundary images with the signs of the boundary identity
/// (all + for the projective plane; -z_0 enters with - for the sphere) and
/// compares the result with tau_hat squared.
SignedSumCheck signed_sum_check(Surface s, int n);

struct QuotientCheck {
  FGAbelianGroup from_cokernel;
  FGAbelianGroup from_presentation;
  bool ok() const { return from_cokernel == from_presentation; }
};

QuotientCheck quotient_check(Surface s, int n);

std::vector<long> iota_sharp_vector(Surface s, int n, int k);

struct SplitCheck {
  std::size_t section_coordinate = 0;  // 0-based
  bool section_identity = false;       // h o Theta = id on generators
  FGAbelianGroup quotient;
  FGAbelianGroup expected_quotient;    // A^{n-1}
  bool ok() const { return section_identity && quotient == expected_quotient; }
};

/// Throws NoUnitCoordinate when no entry of `vector` is +-1.
SplitCheck split_ses_check(const FGAbelianGroup& coeff, int n, const std::vector<long>& vector);

struct NonsplitWitness {
  FGAbelianGroup middle;           // H_1(P_{n-1}) + Z^{n-1}
  FGAbelianGroup quotient;         // cokernel of the boundary matrix
  FGAbelianGroup quotient_check;   // H_1(P_{n-1} / <Delta^4>)
  bool ok() const { return !has_torsion(middle) && has_torsion(quotient) && quotient == quotient_check; }
};

NonsplitWitness nonsplit_witness_s2(int n);

/// The map on G_n generators into words over A(i,j) and p(j).
Substitution upsilon_images(int n);

}  // namespace orbit
