#pragma once

#include "superheap/structures.hpp"

namespace superheap {

/// Heap obtained from a group via [x, y, z] = x y^-1 z, based at the
/// group identity. Registry name "heapify:<group>".
PointedTernaryStructure heapify(const GroupStructure& g);

/// Group obtained from a pointed heap via x y = [x, e, y] and
/// x^-1 = [e, x, e], with the basepoint as identity. Registry name
/// "groupify:<heap>".
GroupStructure groupify(const PointedTernaryStructure& h);

/// Groupification at an arbitrary fixed point instead of a constant
/// basepoint. Exposed for experimentation only: the result is tied to the
/// basepoint's generator count and is not used by any law suite.
GroupStructure groupify_at(const TernaryStructure& t, const SuperPoint& basepoint);

PointMap identity_map(SuperDomain domain);

// Endomorphism fixtures of the translation structures on (1|1).
/// (x, t) -> (b^2 x, b t): a group endomorphism, hence a heap and
/// pointed-heap endomorphism.
PointMap translation_scaling_endo(const Rational& b);
/// (x, t) -> (x + c, t): a heap endomorphism that moves the basepoint,
/// so for c != 0 it is not a group endomorphism.
PointMap translation_shift_map(const Rational& c);
/// (x, t) -> (x^2, t): parity-preserving but not a heap endomorphism;
/// negative fixture.
PointMap translation_square_map();

// Endomorphism fixtures of the odd line (0|1).
/// t -> b t.
PointMap odd_scaling_map(const Rational& b);

// Endomorphism fixtures of the multiplicative structures on (1|1).
/// (x, t) -> (x, -t): a group endomorphism.
PointMap mult_parity_flip();
/// (x, t) -> (c x, c t), c != 0: a heap endomorphism that moves the
/// basepoint, so not a group endomorphism unless c = 1.
PointMap mult_unit_scale(const Rational& c);

}  // namespace superheap
