#include "riordan/matrix.hpp"

#include <string>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_dh(const Series& d, const Series& h) {
    if (d.trunc_order() != h.trunc_order())
        throw DomainError("riordan: d and h truncation orders differ");
    if (d[0] == 0) throw DomainError("riordan: d(0) = 0 (d must be a unit)");
    if (h[0] != 0) throw DomainError("riordan: h(0) != 0 (h must vanish at zero)");
    if (h.trunc_order() >= 1 && h[1] == 0)
        throw DomainError("riordan: h'(0) = 0 (h must have order exactly one)");
}

std::vector<std::vector<Rat>> entries_from_dh(const Series& d, const Series& h) {
    const int n = d.trunc_order();
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rat(0));
    Series col = d;  // column j holds d*h^j
    for (int j = 0; j <= n; ++j) {
        for (int i = j; i <= n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[i];
        if (j < n) col = mul(col, h);
    }
    return rows;
}

#ifndef NDEBUG
std::vector<std::vector<Rat>> entrywise_product(const RiordanMatrix& a, const RiordanMatrix& b) {
    const int n = a.order();
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rat(0));
        for (int j = 0; j <= i; ++j) {
            Rat acc(0);
            for (int k = j; k <= i; ++k) acc += a.entry(i, k) * b.entry(k, j);
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
        }
    }
    return rows;
}
#endif

}  // namespace

RiordanMatrix::RiordanMatrix(Series d, Series h, std::vector<std::vector<Rat>> rows)
    : d_(std::move(d)), h_(std::move(h)), rows_(std::move(rows)) {}

RiordanMatrix RiordanMatrix::from_dh(const Series& d, const Series& h) {
    require_dh(d, h);
    return RiordanMatrix(d, h, entries_from_dh(d, h));
}

RiordanMatrix RiordanMatrix::from_parts(Series d, Series h, std::vector<std::vector<Rat>> rows) {
    require_dh(d, h);
    const std::size_t n = static_cast<std::size_t>(d.trunc_order());
    if (rows.size() != n + 1) throw DomainError("riordan: row count does not match the order");
    for (std::size_t i = 0; i <= n; ++i)
        if (rows[i].size() != i + 1)
            throw DomainError("riordan: row " + std::to_string(i) + " has the wrong length");
    return RiordanMatrix(std::move(d), std::move(h), std::move(rows));
}

RiordanMatrix RiordanMatrix::identity(int order) {
    return from_dh(Series::one(order), Series::x(order));
}

RiordanMatrix RiordanMatrix::pascal(int order) {
    // (1/(1-x), x/(1-x))
    std::vector<Rat> d(static_cast<std::size_t>(order) + 1, Rat(1));
    std::vector<Rat> h(static_cast<std::size_t>(order) + 1, Rat(1));
    h[0] = 0;
    return from_dh(Series(std::move(d)), Series(std::move(h)));
}

const Rat& RiordanMatrix::entry(int i, int j) const {
    static const Rat kZero(0);
    if (i < 0 || i > order() || j < 0)
        throw DomainError("riordan: entry index out of range");
    if (j > i) return kZero;
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool RiordanMatrix::operator==(const RiordanMatrix& other) const {
    return order() == other.order() && rows_ == other.rows_;
}

RiordanMatrix from_fg(const FgPair& p) {
    if (p.f.trunc_order() != p.g.trunc_order())
        throw DomainError("from_fg: f and g truncation orders differ");
    if (p.f[0] == 0) throw DomainError("from_fg: f(0) = 0 (f must be a unit)");
    if (p.g[0] == 0) throw DomainError("from_fg: g(0) = 0 (g must be a unit)");
    const int n = p.f.trunc_order();
    const Series d = div(p.f, p.g);
    // h = x/g: multiply 1/g by x, which drops the top coefficient of 1/g.
    const Series ginv = div(Series::one(n), p.g);
    std::vector<Rat> h(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 1; k <= n; ++k) h[static_cast<std::size_t>(k)] = ginv[k - 1];
    return RiordanMatrix::from_dh(d, Series(std::move(h)));
}

FgPair to_fg(const RiordanMatrix& m) {
    const int n = m.order();
    if (n == 0) return FgPair{Series::constant(m.d()[0], 0), Series::one(0)};
    // g = x/h is determined to order n-1 by h; normalize the top coefficient to 0.
    std::vector<Rat> hshift(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) hshift[static_cast<std::size_t>(k)] = m.h()[k + 1];
    const Series glow = div(Series::one(n - 1), Series(std::move(hshift)));
    std::vector<Rat> g(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = glow[k];
    Series gs(std::move(g));
    return FgPair{mul(m.d(), gs), gs};
}

RiordanMatrix mul(const RiordanMatrix& a, const RiordanMatrix& b) {
    if (a.order() != b.order()) throw DomainError("mul: order mismatch");
    RiordanMatrix result =
        RiordanMatrix::from_dh(mul(a.d(), compose(b.d(), a.h())), compose(b.h(), a.h()));
#ifndef NDEBUG
    if (result.rows() != entrywise_product(a, b))
        throw InternalError("mul: formula path disagrees with the entrywise product");
#endif
    return result;
}

RiordanMatrix inverse(const RiordanMatrix& a) {
    const Series hinv = comp_inverse(a.h());
    const Series dinv = div(Series::one(a.order()), compose(a.d(), hinv));
    return RiordanMatrix::from_dh(dinv, hinv);
}

RiordanMatrix project(const RiordanMatrix& a) {
    const int n = a.order();
    if (n == 0) throw DomainError("project: matrix has order zero");
    std::vector<std::vector<Rat>> rows(a.rows().begin(), a.rows().end() - 1);
    return RiordanMatrix::from_parts(a.d().truncated(n - 1), a.h().truncated(n - 1),
                                     std::move(rows));
}

Series a_sequence(const RiordanMatrix& m) {
    const int n = m.order();
    if (n < 1) throw DomainError("a_sequence: order must be at least one");
    std::vector<Rat> a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Rat acc = m.entry(i, 1);
        for (int k = 0; k <= i - 2; ++k) acc -= a[static_cast<std::size_t>(k)] * m.entry(i - 1, k);
        const Rat& diag = m.entry(i - 1, i - 1);
        if (diag == 0) throw DomainError("a_sequence: zero diagonal entry");
        a[static_cast<std::size_t>(i - 1)] = acc / diag;
    }
    return Series(std::move(a));
}

bool vertical_check(const RiordanMatrix& m) {
    const int n = m.order();
    if (n < 1) throw DomainError("vertical_check: order must be at least one");
    const FgPair p = to_fg(m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat acc(0);
            for (int k = 0; k <= i - j; ++k) acc += p.g[k] * m.entry(i + 1 - k, j + 1);
            if (acc != m.entry(i, j)) return false;
        }
    }
    return true;
}

Series act(const RiordanMatrix& m, const Series& s) {
    if (s.trunc_order() != m.order()) throw DomainError("act: truncation mismatch");
    Series out = mul(m.d(), compose(s, m.h()));
#ifndef NDEBUG
    for (int i = 0; i <= m.order(); ++i) {
        Rat acc(0);
        for (int j = 0; j <= i; ++j) acc += m.entry(i, j) * s[j];
        if (acc != out[i])
            throw InternalError("act: formula path disagrees with the matrix-vector product");
    }
#endif
    return out;
}

std::pair<RiordanMatrix, RiordanMatrix> unit_diagonal_split(const RiordanMatrix& m) {
    const int n = m.order();
    const Rat d0 = m.d()[0];
    const Rat h1 = n >= 1 ? m.h()[1] : Rat(1);
    RiordanMatrix unit =
        RiordanMatrix::from_dh(scale(m.d(), Rat(1) / d0), scale(m.h(), Rat(1) / h1));
    RiordanMatrix diag = RiordanMatrix::from_dh(Series::constant(d0, n), scale(Series::x(n), h1));
#ifndef NDEBUG
    if (!(mul(unit, diag) == m)) throw InternalError("unit_diagonal_split: parts do not reassemble");
#endif
    return {std::move(unit), std::move(diag)};
}

bool is_omega0(const RiordanMatrix& m) {
    if (m.order() < 3) return true;
    const Series& h = m.h();
    return h[2] * h[2] == h[1] * h[3];
}

}  // namespace riordan
