#pragma once

#include <utility>
#include <vector>

#include "riordan/involution.hpp"
#include "riordan/matrix.hpp"

namespace riordan {

// Ordered factor list with its target and the result of the exact
// verification: `verified` means the ordered product of `factors` equals
// `target` and every factor squares to the identity.
struct FactorizationCertificate {
    std::vector<RiordanMatrix> factors;
    RiordanMatrix target;
    bool verified;
};

// The Klein element matching the diagonal pattern (d0, h1) of m; the
// diagonal signs must both be +1 or -1.
KleinTag klein_component(const RiordanMatrix& m);

// d0 and h1 in {+1,-1} and the quadratic A-sequence coefficient vanishes.
bool in_generated_by_involutions(const RiordanMatrix& m);

/*
 * Writes a unit-diagonal matrix as the single commutator [A_r, B_r] with
 * A_r = (1, r*x) and B_r = (l, m) built by the recursions
 *   m_j = (sum_{k=1}^{j-1} [x^j]h^k * m_k) / (r^{j-1} - 1),   m_1 = 1,
 *   l_j = (sum_{k=0}^{j-1} d[j][k] * l_k) / (r^j - 1),        l_0 = 1.
 * Requires r != 0 and r^k != 1 for 1 <= k <= order. The returned pair is
 * verified exactly: A_r B_r A_r^{-1} B_r^{-1} = m.
 */
std::pair<RiordanMatrix, RiordanMatrix> commutator_decompose(const RiordanMatrix& m, const Rat& r);

/*
 * Factors a matrix with d0 = 1, h1 = -1 in Omega_0 into three involutions
 * W1 = (delta1, omega1), W2 = (delta2, omega2), W3 = (1, omega3) with
 * W1*W2*W3 = m exactly. Two level-incremental affine passes: the inner
 * series are solved first (free entries at column one of even rows, window
 * of rows (even m, m+1) closed after the odd row), then the weight series
 * (free entries at column zero of odd rows, window (odd m, m+1) closed after
 * the even row; rows one and two have a closed form). Tie-breaks are fixed:
 * row-two seeds 1, 0, h2-1 and zero defaults for surviving free unknowns,
 * so the output is deterministic. Every product formed along the way must be
 * affine in the pending unknowns; NonlinearProduct or an inconsistent window
 * system is an internal failure, not an input error.
 */
FactorizationCertificate factor_three(const RiordanMatrix& m);

/*
 * Factors any member of the group generated by involutions into at most
 * four of them: directly via factor_three when the diagonal pattern is
 * (1,-1); otherwise multiply by the Klein element that fixes the pattern,
 * factor, and append it. Identity gives zero factors, involutions one.
 */
FactorizationCertificate factor_involutions(const RiordanMatrix& m);

// The unique (C, K) with C unit-diagonal in Omega_0 and C*klein(K) = m.
std::pair<RiordanMatrix, KleinTag> semidirect_decompose(const RiordanMatrix& m);

/*
 * Decides whether an order-2 matrix is a product of at most k involutions.
 * The order-2 involutions are exactly +-I and the two 2-parameter families
 * with diagonal +-(1,-1,1) and forced corner entry; the oracle enumerates
 * factor-type assignments, eliminates each case through its linear
 * equations, and certifies solvable cases with an exactly verified witness.
 */
bool r2_width_oracle(const RiordanMatrix& target, int k);

}  // namespace riordan
