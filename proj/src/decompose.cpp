#include "riordan/decompose.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "riordan/affine.hpp"
#include "riordan/error.hpp"

namespace riordan {

namespace {

KleinTag tag_from_signs(bool d_positive, bool h_positive) {
    if (d_positive) return h_positive ? KleinTag::I : KleinTag::IPLUS0;
    return h_positive ? KleinTag::NEG_I : KleinTag::IMINUS0;
}

Rat h1_or_one(const RiordanMatrix& m) { return m.order() >= 1 ? m.h()[1] : Rat(1); }

// Multiply reduced forms so pinned unknowns read as constants; a genuinely
// nonlinear product still throws NonlinearProduct.
LinExpr lmul(const LinSystem& sys, const LinExpr& a, const LinExpr& b) {
    return sys.reduce(a) * sys.reduce(b);
}

Rat numeric(const LinSystem& sys, const LinExpr& e, const char* what) {
    const LinExpr r = sys.reduce(e);
    if (!r.is_constant())
        throw InternalError(std::string("factor_three: ") + what + " is not fully determined");
    return r.constant_part();
}

// One (1, omega) involution under construction: triangular entry grid and
// the A-sequence of omega, as affine expressions in the pending unknowns.
struct OmegaFrame {
    char name = '?';
    std::vector<std::vector<LinExpr>> row;
    std::vector<LinExpr> aseq;
};

void omega_seed(OmegaFrame& f, char name, int n) {
    f.name = name;
    f.row.assign(static_cast<std::size_t>(n) + 1, {});
    for (int i = 0; i <= n; ++i)
        f.row[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, LinExpr());
    f.row[0][0] = LinExpr(Rat(1));
    if (n >= 1) {
        f.row[1][1] = LinExpr(Rat(-1));
        f.aseq.push_back(LinExpr(Rat(-1)));
    }
}

// Fill row m: columns >= 2 by the A-sequence row recursion; column one is
// `col1` when given (free entries of even rows, and the row-two seeds) and
// otherwise forced by the odd-row column-one parity identity
//   d[m][1] = -(1/(2*d[1][1])) * sum_{k=2}^{m-1} d[m][k]*d[k][1];
// then the next A-sequence coefficient follows from the new column-one entry.
void omega_row(OmegaFrame& f, int m, LinSystem& sys, const LinExpr* col1) {
    auto& row = f.row[static_cast<std::size_t>(m)];
    const auto& prev = f.row[static_cast<std::size_t>(m - 1)];
    for (int j = m; j >= 2; --j) {
        LinExpr acc;
        for (int k = 0; k <= m - j; ++k)
            acc += lmul(sys, f.aseq[static_cast<std::size_t>(k)], prev[static_cast<std::size_t>(j - 1 + k)]);
        row[static_cast<std::size_t>(j)] = acc;
    }
    if (col1 != nullptr) {
        row[1] = *col1;
    } else {
        LinExpr acc;
        for (int k = 2; k <= m - 1; ++k)
            acc += lmul(sys, row[static_cast<std::size_t>(k)], f.row[static_cast<std::size_t>(k)][1]);
        acc *= Rat(1, 2);  // -(1/(2*(-1)))
        row[1] = acc;
    }
    LinExpr anext = row[1];
    for (int j = 0; j <= m - 2; ++j)
        anext -= lmul(sys, f.aseq[static_cast<std::size_t>(j)], prev[static_cast<std::size_t>(j)]);
    anext *= Rat(1) / numeric(sys, prev[static_cast<std::size_t>(m - 1)], "an inner-frame diagonal entry");
    f.aseq.push_back(anext);
}

struct OmegaSolution {
    std::vector<Series> omega;              // the three inner involutions' series
    std::vector<std::vector<Rat>> aseq;     // their A-sequences
    std::vector<std::vector<Rat>> c_rows;   // entry grid of (1, omega3)
};

/*
 * Inner-series pass: find involutions (1,w1), (1,w2), (1,w3) with
 * w3(w2(w1)) = h, through the row equations of (1,w1)(1,h) = (1,w2)(1,w3)
 * applied to the coefficient columns of h and w3. Free entries are the
 * column-one entries of even rows; the pair of equations from rows (m, m+1)
 * pins the row-m unknowns, with the leftover degree of freedom defaulted to
 * zero. Row two is seeded 1, 0, h2-1, which keeps every later window system
 * nonsingular.
 */
OmegaSolution solve_inner(const RiordanMatrix& M) {
    const int n = M.order();
    const Series& h = M.h();
    LinSystem sys;
    std::vector<OmegaFrame> F(3);
    omega_seed(F[0], 'a', n);
    omega_seed(F[1], 'b', n);
    omega_seed(F[2], 'c', n);

    auto assert_row = [&](int m) {
        LinExpr lhs, rhs;
        for (int k = 1; k <= m; ++k) {
            lhs += lmul(sys, F[0].row[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)], LinExpr(h[k]));
            rhs += lmul(sys, F[1].row[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)],
                        F[2].row[static_cast<std::size_t>(k)][1]);
        }
        if (sys.assert_eq(lhs, rhs).outcome == LinSystem::Outcome::Inconsistent)
            throw InternalError("factor_three: inner-series equations inconsistent at row " +
                                std::to_string(m));
    };

    if (n >= 1) assert_row(1);
    if (n >= 2) {
        const LinExpr seeds[3] = {LinExpr(Rat(1)), LinExpr(Rat(0)), LinExpr(h[2] - 1)};
        for (int i = 0; i < 3; ++i) omega_row(F[static_cast<std::size_t>(i)], 2, sys, &seeds[i]);
        assert_row(2);
    }

    std::vector<UnknownId> pending;
    for (int m = 3; m <= n; ++m) {
        if (m % 2 == 0) {
            std::vector<UnknownId> fresh;
            for (auto& f : F) {
                const UnknownId id = sys.new_unknown(std::string(1, f.name) + "[" +
                                                     std::to_string(m) + ",1]");
                const LinExpr e = LinExpr::unknown(id);
                omega_row(f, m, sys, &e);
                fresh.push_back(id);
            }
            assert_row(m);
            pending = std::move(fresh);
        } else {
            for (auto& f : F) omega_row(f, m, sys, nullptr);
            assert_row(m);
            if (!pending.empty()) {
                sys.pin(pending);
                pending.clear();
            }
        }
    }
    if (!pending.empty()) sys.pin(pending);

    OmegaSolution out;
    for (const auto& f : F) {
        std::vector<Rat> w(static_cast<std::size_t>(n) + 1, Rat(0));
        for (int k = 1; k <= n; ++k)
            w[static_cast<std::size_t>(k)] = numeric(sys, f.row[static_cast<std::size_t>(k)][1], "an inner coefficient");
        out.omega.emplace_back(std::move(w));
        std::vector<Rat> a;
        for (const LinExpr& e : f.aseq) a.push_back(numeric(sys, e, "an A-sequence coefficient"));
        out.aseq.push_back(std::move(a));
    }
    out.c_rows.assign(static_cast<std::size_t>(n) + 1, {});
    for (int i = 0; i <= n; ++i) {
        out.c_rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rat(0));
        for (int j = 0; j <= i; ++j)
            out.c_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                numeric(sys, F[2].row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], "an inner entry");
    }
    return out;
}

}  // namespace

KleinTag klein_component(const RiordanMatrix& m) {
    const Rat& d0 = m.d()[0];
    const Rat h1 = h1_or_one(m);
    if (d0 != 1 && d0 != -1)
        throw DomainError("klein_component: corner entry must be +1 or -1");
    if (h1 != 1 && h1 != -1)
        throw DomainError("klein_component: subdiagonal sign must be +1 or -1");
    return tag_from_signs(d0 == 1, h1 == 1);
}

bool in_generated_by_involutions(const RiordanMatrix& m) {
    const Rat& d0 = m.d()[0];
    const Rat h1 = h1_or_one(m);
    if (d0 != 1 && d0 != -1) return false;
    if (h1 != 1 && h1 != -1) return false;
    return is_omega0(m);
}

std::pair<RiordanMatrix, RiordanMatrix> commutator_decompose(const RiordanMatrix& m, const Rat& r) {
    const int n = m.order();
    if (m.d()[0] != 1 || h1_or_one(m) != 1)
        throw DomainError("commutator_decompose: matrix must have a unit diagonal");
    if (r == 0) throw DomainError("commutator_decompose: r must be nonzero");
    {
        Rat rpow(1);
        for (int k = 1; k <= n; ++k) {
            rpow *= r;
            if (rpow == 1)
                throw DomainError("commutator_decompose: r^" + std::to_string(k) + " = 1");
        }
    }

    std::vector<Series> hpow;
    hpow.reserve(static_cast<std::size_t>(n) + 1);
    hpow.push_back(Series::one(n));
    for (int k = 1; k <= n; ++k) hpow.push_back(mul(hpow.back(), m.h()));

    std::vector<Rat> inner(static_cast<std::size_t>(n) + 1, Rat(0));
    if (n >= 1) inner[1] = 1;
    Rat rpow = r;  // r^{j-1} below
    for (int j = 2; j <= n; ++j) {
        Rat acc(0);
        for (int k = 1; k <= j - 1; ++k)
            acc += coeff(hpow[static_cast<std::size_t>(k)], j) * inner[static_cast<std::size_t>(k)];
        inner[static_cast<std::size_t>(j)] = acc / (rpow - 1);
        rpow *= r;
    }

    std::vector<Rat> weight(static_cast<std::size_t>(n) + 1, Rat(0));
    weight[0] = 1;
    rpow = r;
    for (int j = 1; j <= n; ++j) {
        Rat acc(0);
        for (int k = 0; k <= j - 1; ++k) acc += m.entry(j, k) * weight[static_cast<std::size_t>(k)];
        weight[static_cast<std::size_t>(j)] = acc / (rpow - 1);
        rpow *= r;
    }

    RiordanMatrix a = RiordanMatrix::from_dh(Series::one(n), scale(Series::x(n), r));
    RiordanMatrix b = RiordanMatrix::from_dh(Series(std::move(weight)), Series(std::move(inner)));
    if (!(mul(mul(a, b), mul(inverse(a), inverse(b))) == m))
        throw InternalError("commutator_decompose: commutator does not reproduce the input");
    return {std::move(a), std::move(b)};
}

FactorizationCertificate factor_three(const RiordanMatrix& M) {
    const int n = M.order();
    if (n < 1) throw DomainError("factor_three: order must be at least one");
    if (M.d()[0] != 1) throw DomainError("factor_three: d(0) must be 1");
    if (M.h()[1] != -1) throw DomainError("factor_three: h'(0) must be -1");
    if (!is_omega0(M))
        throw DomainError("factor_three: matrix must satisfy h2^2 = h1*h3");

    const OmegaSolution inner = solve_inner(M);
    const Series& d = M.d();

    /*
     * Weight pass: with the inner series fixed, find the column-zero streams
     * delta1, delta2 so that the full product reproduces M. Free entries are
     * the column-zero entries of odd rows; the pair of equations from rows
     * (m, m+1) pins them. Rows one and two collapse to a 2x2 system solved in
     * closed form (carrying them through the affine engine would need a
     * product of two pending unknowns).
     */
    LinSystem sys;
    std::vector<std::vector<LinExpr>> U(static_cast<std::size_t>(n) + 1), V(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<LinExpr>> vc(static_cast<std::size_t>(n) + 1);  // rows of V * (1, w3)
    for (int i = 0; i <= n; ++i) {
        U[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, LinExpr());
        V[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, LinExpr());
    }
    U[0][0] = LinExpr(Rat(1));
    V[0][0] = LinExpr(Rat(1));
    vc[0] = {LinExpr(Rat(1))};

    auto fill_upper = [&](std::vector<std::vector<LinExpr>>& G, const std::vector<Rat>& a, int m) {
        for (int j = m; j >= 1; --j) {
            LinExpr acc;
            for (int k = 0; k <= m - j; ++k)
                acc += lmul(sys, LinExpr(a[static_cast<std::size_t>(k)]),
                            G[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1 + k)]);
            G[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = acc;
        }
    };
    auto even_col0 = [&](const std::vector<std::vector<LinExpr>>& G, int m) {
        LinExpr acc;
        for (int k = 1; k <= m - 1; ++k)
            acc += lmul(sys, G[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)],
                        G[static_cast<std::size_t>(k)][0]);
        acc *= Rat(-1, 2);
        return acc;
    };
    auto fill_vc = [&](int p) {
        vc[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(p) + 1, LinExpr());
        for (int t = 0; t <= p; ++t) {
            LinExpr acc;
            for (int q = t; q <= p; ++q)
                acc += lmul(sys, V[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)],
                            LinExpr(inner.c_rows[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)]));
            vc[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)] = acc;
        }
    };
    auto assert_product_row = [&](int m) {
        for (int t = 0; t <= m; ++t) {
            LinExpr p;
            for (int q = t; q <= m; ++q)
                p += lmul(sys, U[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)],
                          vc[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)]);
            if (sys.assert_eq(p, LinExpr(M.entry(m, t))).outcome == LinSystem::Outcome::Inconsistent)
                throw InternalError("factor_three: weight equations inconsistent at row " +
                                    std::to_string(m));
        }
    };

    std::vector<UnknownId> pending;
    for (int m = 1; m <= n; ++m) {
        if (m == 1) {
            LinExpr u0, v0;
            if (n == 1) {
                const UnknownId uid = sys.new_unknown("u[1,0]");
                const UnknownId vid = sys.new_unknown("v[1,0]");
                u0 = LinExpr::unknown(uid);
                v0 = LinExpr::unknown(vid);
                pending = {uid, vid};
            } else {
                // rows one and two of the weight streams in closed form
                const Rat v10 = 2 * d[2] + d[1] - d[1] * d[1];
                v0 = LinExpr(v10);
                u0 = LinExpr(v10 + d[1]);
            }
            U[1][0] = u0;
            U[1][1] = LinExpr(Rat(-1));
            V[1][0] = v0;
            V[1][1] = LinExpr(Rat(-1));
        } else {
            fill_upper(U, inner.aseq[0], m);
            fill_upper(V, inner.aseq[1], m);
            if (m % 2 == 1) {
                const UnknownId uid = sys.new_unknown("u[" + std::to_string(m) + ",0]");
                const UnknownId vid = sys.new_unknown("v[" + std::to_string(m) + ",0]");
                U[static_cast<std::size_t>(m)][0] = LinExpr::unknown(uid);
                V[static_cast<std::size_t>(m)][0] = LinExpr::unknown(vid);
                pending = {uid, vid};
            } else {
                U[static_cast<std::size_t>(m)][0] = even_col0(U, m);
                V[static_cast<std::size_t>(m)][0] = even_col0(V, m);
            }
        }
        fill_vc(m);
        assert_product_row(m);
        if (m % 2 == 0 && !pending.empty()) {
            sys.pin(pending);
            pending.clear();
        }
    }
    if (!pending.empty()) sys.pin(pending);

    std::vector<Rat> delta1(static_cast<std::size_t>(n) + 1), delta2(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        delta1[static_cast<std::size_t>(i)] = numeric(sys, U[static_cast<std::size_t>(i)][0], "a weight coefficient");
        delta2[static_cast<std::size_t>(i)] = numeric(sys, V[static_cast<std::size_t>(i)][0], "a weight coefficient");
    }

    const RiordanMatrix w1 = RiordanMatrix::from_dh(Series(std::move(delta1)), inner.omega[0]);
    const RiordanMatrix w2 = RiordanMatrix::from_dh(Series(std::move(delta2)), inner.omega[1]);
    const RiordanMatrix w3 = RiordanMatrix::from_dh(Series::one(n), inner.omega[2]);
    for (const RiordanMatrix* w : {&w1, &w2, &w3})
        if (!is_involution(*w))
            throw InternalError("factor_three: a constructed factor does not square to identity");
    if (!(mul(mul(w1, w2), w3) == M))
        throw InternalError("factor_three: factor product does not reproduce the input");
    return FactorizationCertificate{{w1, w2, w3}, M, true};
}

FactorizationCertificate factor_involutions(const RiordanMatrix& m) {
    if (!in_generated_by_involutions(m))
        throw DomainError("factor_involutions: matrix is not in the group generated by involutions");
    const int n = m.order();
    if (m == RiordanMatrix::identity(n)) return FactorizationCertificate{{}, m, true};
    if (is_involution(m)) return FactorizationCertificate{{m}, m, true};

    std::vector<RiordanMatrix> factors;
    if (klein_component(m) == KleinTag::IPLUS0) {
        factors = factor_three(m).factors;
    } else {
        // multiply by the Klein element that turns the pattern into (1,-1)
        const KleinTag fix = tag_from_signs(m.d()[0] == 1, h1_or_one(m) == -1);
        const RiordanMatrix k = klein(fix, n);
        factors = factor_three(mul(m, k)).factors;
        factors.push_back(k);
    }
    RiordanMatrix product = RiordanMatrix::identity(n);
    for (const RiordanMatrix& f : factors) {
        if (!is_involution(f))
            throw InternalError("factor_involutions: a factor does not square to identity");
        product = mul(product, f);
    }
    if (!(product == m))
        throw InternalError("factor_involutions: factor product does not reproduce the input");
    return FactorizationCertificate{std::move(factors), m, true};
}

std::pair<RiordanMatrix, KleinTag> semidirect_decompose(const RiordanMatrix& m) {
    if (!in_generated_by_involutions(m))
        throw DomainError("semidirect_decompose: matrix is not in the group generated by involutions");
    const KleinTag tag = klein_component(m);
    // Klein elements are involutions, so klein(tag) is its own inverse.
    RiordanMatrix c = mul(m, klein(tag, m.order()));
    if (c.d()[0] != 1 || h1_or_one(c) != 1 || !is_omega0(c))
        throw InternalError("semidirect_decompose: quotient is not in the normal factor");
    return {std::move(c), tag};
}

namespace {

// The 2-parameter involution family in the order-2 group: diagonal
// (s, -s, s), free entries (1,0) and (2,1), forced corner.
RiordanMatrix r2_family(int s, const Rat& a0, const Rat& a1) {
    return build_involution(InvolutionSpec{s, Series({a0, a1})}, 2);
}

RiordanMatrix scale_matrix(const RiordanMatrix& m, const Rat& c) {
    return RiordanMatrix::from_dh(scale(m.d(), c), m.h());
}

std::optional<std::vector<RiordanMatrix>> r2_two_family_witness(const RiordanMatrix& y) {
    const Rat& st = y.entry(0, 0);
    if ((st != 1 && st != -1) || y.entry(1, 1) != st || y.entry(2, 2) != st) return std::nullopt;
    const Rat y10 = y.entry(1, 0), y21 = y.entry(2, 1), y20 = y.entry(2, 0);
    for (int si : {1, -1}) {
        const Rat s(si);
        const int ti = st == 1 ? si : -si;
        // The two subdiagonal equations eliminate p0 and q1; the corner
        // equation then reads -(s/2)(y10*p1 -+ y21*q0) = y20, linear in the
        // leftover unknowns.
        Rat p1(0), q0(0);
        bool feasible = true;
        if (y10 != 0) {
            p1 = Rat(-2) * s * y20 / y10;
        } else if (y21 != 0) {
            q0 = (st == 1 ? Rat(-2) : Rat(2)) * s * y20 / y21;
        } else {
            feasible = (y20 == 0);
        }
        if (!feasible) continue;
        const Rat p0 = st == 1 ? q0 + s * y10 : -s * y10 - q0;
        const Rat q1 = st == 1 ? p1 + s * y21 : s * y21 - p1;
        std::vector<RiordanMatrix> w{r2_family(si, p0, p1), r2_family(ti, q0, q1)};
        if (mul(w[0], w[1]) == y) return w;
    }
    return std::nullopt;
}

std::optional<std::vector<RiordanMatrix>> r2_three_family_witness(const RiordanMatrix& y) {
    const Rat& sigma = y.entry(0, 0);
    if ((sigma != 1 && sigma != -1) || y.entry(1, 1) != -sigma || y.entry(2, 2) != sigma)
        return std::nullopt;
    if (sigma == 1) return factor_three(y).factors;
    // Negating the leading weight factor of a triple for -y keeps it an involution.
    std::vector<RiordanMatrix> w = factor_three(scale_matrix(y, Rat(-1))).factors;
    w[0] = scale_matrix(w[0], Rat(-1));
    if (!(mul(mul(w[0], w[1]), w[2]) == y))
        throw InternalError("r2_width_oracle: negated triple does not reproduce the target");
    return w;
}

std::optional<std::vector<RiordanMatrix>> r2_family_witness(const RiordanMatrix& y, int f) {
    switch (f) {
        case 0:
            if (y == RiordanMatrix::identity(2)) return std::vector<RiordanMatrix>{};
            return std::nullopt;
        case 1: {
            const Rat& s = y.entry(0, 0);
            if (s != 1 && s != -1) return std::nullopt;
            RiordanMatrix candidate = r2_family(s == 1 ? 1 : -1, y.entry(1, 0), y.entry(2, 1));
            if (candidate == y) return std::vector<RiordanMatrix>{candidate};
            return std::nullopt;
        }
        case 2:
            return r2_two_family_witness(y);
        case 3:
            return r2_three_family_witness(y);
        case 4: {
            // Fix the alternating pattern with the (1,-x) family element.
            const Rat& s0 = y.entry(0, 0);
            if ((s0 != 1 && s0 != -1) || y.entry(1, 1) != s0 || y.entry(2, 2) != s0)
                return std::nullopt;
            const RiordanMatrix k = klein(KleinTag::IPLUS0, 2);
            auto triple = r2_three_family_witness(mul(y, k));
            if (!triple) return std::nullopt;
            triple->push_back(k);
            if (!(mul(mul(mul((*triple)[0], (*triple)[1]), (*triple)[2]), (*triple)[3]) == y))
                throw InternalError("r2_width_oracle: four-factor witness does not reproduce the target");
            return triple;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

bool r2_width_oracle(const RiordanMatrix& target, int k) {
    if (target.order() != 2) throw DomainError("r2_width_oracle: order must be exactly 2");
    if (k < 0) throw DomainError("r2_width_oracle: negative factor count");
    // Identity factors only waste a slot and -I factors flip a global sign,
    // so every length-j product reduces to +-(product of f family factors).
    // Any product of involutions has width at most four, so capping j at
    // four loses nothing.
    for (int j = 0; j <= std::min(k, 4); ++j) {
        for (int f = j; f >= 0; --f) {
            const Rat eps = (j - f) % 2 == 0 ? Rat(1) : Rat(-1);
            if (r2_family_witness(scale_matrix(target, eps), f)) return true;
        }
    }
    return false;
}

}  // namespace riordan
