#include "riordan/series.hpp"

#include <sstream>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.trunc_order() != b.trunc_order())
        throw DomainError(std::string(op) + ": truncation orders differ (" +
                          std::to_string(a.trunc_order()) + " vs " +
                          std::to_string(b.trunc_order()) + ")");
}

}  // namespace

Series::Series(int trunc_order) {
    if (trunc_order < 0) throw DomainError("Series: negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
}

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("Series: empty coefficient list");
}

Series Series::constant(const Rat& c, int trunc_order) {
    Series s(trunc_order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::x(int trunc_order) {
    Series s(trunc_order);
    if (trunc_order >= 1) s.coeffs_[1] = 1;
    return s;
}

const Rat& Series::operator[](int k) const {
    if (k < 0 || k > trunc_order())
        throw DomainError("coefficient index " + std::to_string(k) +
                          " beyond truncation order " + std::to_string(trunc_order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

bool Series::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

int Series::valuation() const {
    for (int k = 0; k <= trunc_order(); ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
    return trunc_order() + 1;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > trunc_order())
        throw DomainError("truncated: bad order " + std::to_string(new_order));
    return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series add(const Series& a, const Series& b) {
    require_same_order(a, b, "add");
    std::vector<Rat> c(a.coeffs());
    for (int k = 0; k <= b.trunc_order(); ++k) c[static_cast<std::size_t>(k)] += b[k];
    return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
    require_same_order(a, b, "sub");
    std::vector<Rat> c(a.coeffs());
    for (int k = 0; k <= b.trunc_order(); ++k) c[static_cast<std::size_t>(k)] -= b[k];
    return Series(std::move(c));
}

Series negate(const Series& a) { return scale(a, Rat(-1)); }

Series scale(const Series& a, const Rat& c) {
    std::vector<Rat> out(a.coeffs());
    for (Rat& v : out) v *= c;
    return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    require_same_order(a, b, "mul");
    const int n = a.trunc_order();
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
    require_same_order(a, b, "div");
    if (b[0] == 0) throw DomainError("div: non-unit divisor (constant term is zero)");
    const int n = a.trunc_order();
    std::vector<Rat> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rat acc = a[k];
        for (int i = 1; i <= k; ++i) acc -= b[i] * q[static_cast<std::size_t>(k - i)];
        q[static_cast<std::size_t>(k)] = acc / b[0];
    }
    return Series(std::move(q));
}

Series compose(const Series& a, const Series& b) {
    require_same_order(a, b, "compose");
    if (b[0] != 0) throw DomainError("compose: inner series has nonzero constant term");
    const int n = a.trunc_order();
    Series r = Series::constant(a[n], n);
    for (int k = n - 1; k >= 0; --k) {
        std::vector<Rat> next = mul(r, b).coeffs();
        next[0] += a[k];
        r = Series(std::move(next));
    }
    return r;
}

Series comp_inverse(const Series& a) {
    const int n = a.trunc_order();
    if (a[0] != 0) throw DomainError("comp_inverse: series must vanish at zero");
    if (n == 0) return Series(0);
    if (a[1] == 0) throw DomainError("comp_inverse: series must have order exactly one");
    // Triangular back-substitution: fix b_k so that [x^k] a(b) = 0 for k >= 2.
    // The unknown b_k enters [x^k] a(b) only through the linear term a_1*b_k.
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    b[1] = Rat(1) / a[1];
    for (int k = 2; k <= n; ++k) {
        std::vector<Rat> prefix = b;
        const Series partial(std::move(prefix));
        b[static_cast<std::size_t>(k)] = -coeff(compose(a, partial), k) / a[1];
    }
    return Series(std::move(b));
}

Series pow(const Series& a, unsigned k) {
    Series result = Series::one(a.trunc_order());
    Series base = a;
    while (k > 0) {
        if (k & 1u) result = mul(result, base);
        k >>= 1u;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

const Rat& coeff(const Series& a, int k) { return a[k]; }

Series series_from_string(const std::string& text) {
    std::vector<Rat> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        const std::string piece =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        try {
            coeffs.push_back(rat_from_string(piece));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), pos + e.offset);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Series(std::move(coeffs));
}

std::string series_to_string(const Series& a) {
    std::ostringstream out;
    for (int k = 0; k <= a.trunc_order(); ++k) {
        if (k > 0) out << ',';
        out << rat_to_string(a[k]);
    }
    return out.str();
}

}  // namespace riordan
