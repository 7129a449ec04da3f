#pragma once

#include "bsp/normal_form.hpp"
#include "bsp/odometer.hpp"
#include "bsp/params.hpp"

namespace bsp {

// An arrow of the boundary groupoid: the germ carrying the point beta.x to
// the point alpha.x, where x is an (eventually periodic) boundary point.
struct BoundaryTriple {
  PathL alpha;
  PathL beta;
  EPSeq x;
};

BoundaryTriple makeTriple(PathL alpha, PathL beta, EPSeq x);

// First `depth` digits of the boundary point beta.x.
Tuple pointDigits(const PathL& beta, const EPSeq& x, long long depth);

// First `len` digits of x itself.
Tuple seqPrefix(const EPSeq& x, long long len);

// Drop the leading digit (rotating the period when the preperiod is empty).
EPSeq shiftSeq(const EPSeq& x);

BoundaryTriple inverseTriple(const BoundaryTriple& g);

// A germ is a unit exactly when both legs coincide (true in every
// representative of the class).
bool isUnitTriple(const BoundaryTriple& g);

// The height cocycle theta(alpha) - theta(beta); additive under products.
long long heightDiff(const BoundaryTriple& g);

// Product g*h, defined when source(g) = range(h) as boundary points.  Both
// triples are refined along their points to a common middle height; the
// result is a representative on the refined point (digit streams are
// compared out to the standard depth: preperiods + lcm of periods + heights
// + 2).  Throws NotComposable.
BoundaryTriple composeTriples(const BoundaryTriple& g, const BoundaryTriple& h);

// Equality of germs: g^{-1} h is defined and is a unit.
bool triplesEqual(const BoundaryTriple& g, const BoundaryTriple& h);

}  // namespace bsp
