#pragma once

#include <span>

#include "orbit/word.hpp"

namespace orbit {

/// Inverse of the endomorphism of the free group on `alphabet` given by
/// `images`, computed by Stallings folding of the petal graph of the images.
/// The result maps each generator y to the word w with images(w) = y.
/// Throws NotAutomorphism when the folded graph is not a rose on
/// `alphabet` (the map is not onto, or not injective).
Substitution invert_automorphism(const Substitution& images,
                                 std::span<const GeneratorSymbol> alphabet);

/// Composite map  x -> outer(inner(x)).
Substitution compose(const Substitution& outer, const Substitution& inner);

}  // namespace orbit
