#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbit/word.hpp"

namespace orbit {

enum class GroupKind { Orbit, Artin };

/// Which reading of the long relation (III), case l=k+j-1 to use.
/// `Corrected` uses the commutator shared by the other (III) cases;
/// `AsPrinted` keeps the printed one, which does not give an automorphism.
enum class RelationText { Corrected, AsPrinted };

/// Level structure used by the combing engine: level j owns either
/// {r(j,i) : 0<=i<=2j-2} (orbit group) or {A(i,j) : i<j} (pure braids).
struct TowerSpec {
  GroupKind kind = GroupKind::Orbit;
  int n = 1;
  RelationText text = RelationText::Corrected;

  int kernel_rank(int j) const;
  std::vector<GeneratorSymbol> level_alphabet(int j) const;
  /// Position of `s` inside its level alphabet, or -1 if `s` is not a
  /// generator of this tower.
  int index_in_level(GeneratorSymbol s) const;
  bool contains(GeneratorSymbol s) const { return index_in_level(s) >= 0; }

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;
  std::optional<TowerSpec> tower;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

Presentation orbit_presentation(int n, RelationText text = RelationText::Corrected);
Presentation artin_presentation(int n);

/// Appends `extra` to the relators and drops the tower.
Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra);

// Distinguished elements.
Word element_D(int j, int k);          // r(k,j) r(k,j+1) ... r(k,k-1)
Word element_C(int k, int j);          // r(k,0)^-1 D(j+1,k)^-1 r(k,j) D(j+1,k) r(k,0)
Word element_E(int k, int m, int q);   // r(k,m) ... r(k,q)
Word element_Theta(int n);             // r(1,0) r(2,0) ... r(n,0)
Word element_full_twist(int n);        // (A12)(A13 A23)...(A1n ... A(n-1)n)

/// Right-hand side of  r(j,i) r(k,l) r(j,i)^-1 = rhs  for j<k.
Word orbit_action_image(int j, int i, int k, int l,
                        RelationText text = RelationText::Corrected);

/// Right-hand side of  A(r,s)^-1 A(i,j) A(r,s) = rhs  for s<j.
Word artin_inverse_action_image(int r, int s, int i, int j);

// Export / import.
std::string to_text(const Presentation& p);
std::string to_json(const Presentation& p);
std::string to_gap(const Presentation& p);
Presentation parse_text(std::string_view text);
Presentation parse_json(std::string_view text);

}  // namespace orbit
