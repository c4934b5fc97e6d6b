#include "riordan/involution.hpp"

#include <utility>
#include <vector>

#include "riordan/error.hpp"

namespace riordan {

bool is_involution(const RiordanMatrix& m) {
    return mul(m, m) == RiordanMatrix::identity(m.order());
}

RiordanMatrix build_involution(const InvolutionSpec& spec, int n) {
    if (spec.sign != 1 && spec.sign != -1)
        throw DomainError("build_involution: sign must be +1 or -1");
    if (n < 0) throw DomainError("build_involution: negative order");
    if (n >= 1 && spec.alpha.trunc_order() < n - 1)
        throw DomainError("build_involution: insufficient alpha coefficients (order " +
                          std::to_string(n) + " needs " + std::to_string(n) + ")");

    const Rat sign(spec.sign);
    std::vector<std::vector<Rat>> r(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rat(0));
    std::vector<Rat> a;  // A-sequence of the involution, grown one term per row
    a.reserve(static_cast<std::size_t>(n));

    r[0][0] = sign;
    if (n >= 1) {
        r[1][0] = spec.alpha[0];
        r[1][1] = -sign;
        a.push_back(Rat(-1));
    }
    for (int m = 2; m <= n; ++m) {
        auto& row = r[static_cast<std::size_t>(m)];
        const auto& prev = r[static_cast<std::size_t>(m - 1)];
        for (int j = 2; j <= m; ++j) {
            Rat acc(0);
            for (int k = 0; k <= m - j; ++k)
                acc += a[static_cast<std::size_t>(k)] * prev[static_cast<std::size_t>(j - 1 + k)];
            row[static_cast<std::size_t>(j)] = acc;
        }
        if (m % 2 == 0) {
            row[1] = spec.alpha[m - 1];
        } else {
            Rat acc(0);
            for (int k = 2; k <= m - 1; ++k)
                acc += row[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)][1];
            row[1] = -acc / (2 * r[1][1]);
        }
        Rat anext = row[1];
        for (int j = 0; j <= m - 2; ++j)
            anext -= a[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(j)];
        a.push_back(anext / prev[static_cast<std::size_t>(m - 1)]);
        if (m % 2 == 1) {
            row[0] = spec.alpha[m - 1];
        } else {
            Rat acc(0);
            for (int k = 1; k <= m - 1; ++k)
                acc += row[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)][0];
            row[0] = -acc / (2 * r[0][0]);
        }
    }

    // d is column zero; column one is d*h, so h = (column one)/d.
    std::vector<Rat> dcol(static_cast<std::size_t>(n) + 1), col1(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) dcol[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)][0];
    for (int i = 1; i <= n; ++i) col1[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)][1];
    const Series d(std::move(dcol));
    const Series h = div(Series(std::move(col1)), d);
    RiordanMatrix result = RiordanMatrix::from_dh(d, h);
#ifndef NDEBUG
    if (result.rows() != r)
        throw InternalError("build_involution: row recursion disagrees with the defining pair");
    if (!is_involution(result)) throw InternalError("build_involution: result does not square to identity");
#endif
    return result;
}

InvolutionSpec read_spec(const RiordanMatrix& m) {
    if (!is_involution(m)) throw DomainError("read_spec: matrix is not an involution");
    const int n = m.order();
    if (m == RiordanMatrix::identity(n) ||
        m == RiordanMatrix::from_dh(Series::constant(Rat(-1), n), Series::x(n)))
        throw DomainError("read_spec: trivial involution has no free-coefficient form");
    const Rat& corner = m.entry(0, 0);
    std::vector<Rat> alpha(static_cast<std::size_t>(n));
    for (int row = 1; row <= n; ++row)
        alpha[static_cast<std::size_t>(row - 1)] = row % 2 == 1 ? m.entry(row, 0) : m.entry(row, 1);
    return InvolutionSpec{corner == 1 ? 1 : -1, Series(std::move(alpha))};
}

RiordanMatrix klein(KleinTag tag, int n) {
    const Rat d0 = (tag == KleinTag::I || tag == KleinTag::IPLUS0) ? Rat(1) : Rat(-1);
    const Rat h1 = (tag == KleinTag::I || tag == KleinTag::NEG_I) ? Rat(1) : Rat(-1);
    return RiordanMatrix::from_dh(Series::constant(d0, n), scale(Series::x(n), h1));
}

std::string klein_tag_name(KleinTag tag) {
    switch (tag) {
        case KleinTag::I: return "I";
        case KleinTag::NEG_I: return "NEG_I";
        case KleinTag::IPLUS0: return "IPLUS0";
        case KleinTag::IMINUS0: return "IMINUS0";
    }
    throw InternalError("klein_tag_name: bad tag");
}

KleinTag klein_tag_from_name(const std::string& name) {
    if (name == "I") return KleinTag::I;
    if (name == "NEG_I") return KleinTag::NEG_I;
    if (name == "IPLUS0") return KleinTag::IPLUS0;
    if (name == "IMINUS0") return KleinTag::IMINUS0;
    throw DomainError("unknown Klein element '" + name + "'");
}

}  // namespace riordan
