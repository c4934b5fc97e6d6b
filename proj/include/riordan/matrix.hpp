#pragma once

#include <utility>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

// The T(f|g) parameterization: entries [x^i] x^j f / g^{j+1} with f, g units.
struct FgPair {
    Series f;
    Series g;
};

/*
 * Truncated Riordan matrix of order n: the (n+1)x(n+1) lower-triangular
 * matrix with entries d[i][j] = [x^i] d(x) h(x)^j, for d a unit series and h
 * of order exactly one, both truncated at n. The entry grid is materialized
 * at construction and is the source of truth for equality; the defining pair
 * (d, h) is retained for the formula-path operations. Matrices of different
 * orders are never equal; re-truncation is the explicit `project` operation.
 */
class RiordanMatrix {
public:
    static RiordanMatrix from_dh(const Series& d, const Series& h);

    // Entries trusted as given (deserialization and tests); shape and the
    // unit/order-one preconditions on (d, h) are still enforced.
    static RiordanMatrix from_parts(Series d, Series h, std::vector<std::vector<Rat>> rows);

    static RiordanMatrix identity(int order);
    static RiordanMatrix pascal(int order);

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    const Series& d() const { return d_; }
    const Series& h() const { return h_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    // Zero above the diagonal; indices must lie inside the matrix.
    const Rat& entry(int i, int j) const;

    bool operator==(const RiordanMatrix& other) const;

private:
    RiordanMatrix(Series d, Series h, std::vector<std::vector<Rat>> rows);

    Series d_;
    Series h_;
    std::vector<std::vector<Rat>> rows_;  // rows_[i] has i+1 entries
};

RiordanMatrix from_fg(const FgPair& p);

// Bridge to T(f|g): g = x/h with the top coefficient normalized to zero
// (an order-n matrix determines g only to order n-1), f = d*g.
FgPair to_fg(const RiordanMatrix& m);

// Group product (d,h)(l,m) = (d*l(h), m(h)). The entry grid of the result
// equals the triangular matrix product; cross-checked in debug builds.
RiordanMatrix mul(const RiordanMatrix& a, const RiordanMatrix& b);

// (d,h)^{-1} = (1/d(h^{-1}), h^{-1}).
RiordanMatrix inverse(const RiordanMatrix& a);

// Delete the last row and column; a group homomorphism onto order n-1.
RiordanMatrix project(const RiordanMatrix& a);

// The unique a_0..a_{n-1} with d[i][j] = sum_k a_k d[i-1][j-1+k] for all
// 1 <= j <= i <= n, solved triangularly from column one; a_0 = h_1.
Series a_sequence(const RiordanMatrix& m);

// Column identity d[i][j] = sum_k g_k d[i+1-k][j+1] with g = to_fg(m).g,
// checked for all 0 <= j <= i <= n-1.
bool vertical_check(const RiordanMatrix& m);

// Weighted composition action d*(s o h); equals the matrix-vector product of
// the entry grid with s's coefficient column (cross-checked in debug builds).
Series act(const RiordanMatrix& m, const Series& s);

// (d,h) = (d/d0, h/h1) * (d0, h1*x); returns the (unit-diagonal, diagonal) pair.
std::pair<RiordanMatrix, RiordanMatrix> unit_diagonal_split(const RiordanMatrix& m);

// h2^2 = h1*h3, equivalently the quadratic coefficient of x/h vanishes.
// Vacuously true below order 3.
bool is_omega0(const RiordanMatrix& m);

}  // namespace riordan
