#pragma once

#include <string>

#include "riordan/matrix.hpp"

namespace riordan {

/*
 * A nontrivial Riordan involution is pinned down by its corner sign and one
 * free coefficient per row: entry (2i+1, 0) = alpha_{2i} and entry
 * (2i+2, 1) = alpha_{2i+1}. Everything else is forced. Building at order n
 * consumes alpha_0..alpha_{n-1}.
 */
struct InvolutionSpec {
    int sign;      // +1 or -1, the corner entry
    Series alpha;  // free coefficients; trunc_order >= n-1 to build order n
};

// Row-by-row construction of the unique involution with the given free
// coefficients. Per row m >= 2: columns >= 2 come from the A-sequence row
// recursion; column 1 is free (even m) or forced by the column-one parity
// identity (odd m); the next A-sequence coefficient follows; column 0 is
// free (odd m) or forced by the column-zero parity identity (even m).
RiordanMatrix build_involution(const InvolutionSpec& spec, int n);

// Inverse of build_involution: read the sign and free coefficients back.
// Rejects non-involutions and the trivial involutions (plus/minus identity).
InvolutionSpec read_spec(const RiordanMatrix& m);

bool is_involution(const RiordanMatrix& m);

// The four diagonal-pattern representatives (1,x), (-1,x), (1,-x), (-1,-x);
// a subgroup isomorphic to Z2 x Z2.
enum class KleinTag { I, NEG_I, IPLUS0, IMINUS0 };

RiordanMatrix klein(KleinTag tag, int n);

std::string klein_tag_name(KleinTag tag);
KleinTag klein_tag_from_name(const std::string& name);

}  // namespace riordan
