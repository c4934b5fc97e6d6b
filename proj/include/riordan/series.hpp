#pragma once

#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/*
 * Truncated formal power series over the rationals. A Series of truncation
 * order N carries exactly the coefficients of x^0..x^N; no operation ever
 * reads beyond the truncation. Mixing truncation orders is an error, never a
 * silent re-truncation. Values are immutable after construction.
 */
class Series {
public:
    // The zero series at the given truncation order.
    explicit Series(int trunc_order);

    // Takes the coefficients c_0..c_N; the truncation order is N.
    explicit Series(std::vector<Rat> coeffs);

    static Series constant(const Rat& c, int trunc_order);
    static Series one(int trunc_order) { return constant(Rat(1), trunc_order); }
    static Series x(int trunc_order);

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Coefficient of x^k; k must not exceed the truncation order.
    const Rat& operator[](int k) const;

    bool is_zero() const;
    // Index of the first nonzero coefficient; trunc_order()+1 for the zero series.
    int valuation() const;

    // Prefix of the coefficients; new_order <= trunc_order().
    Series truncated(int new_order) const;

    bool operator==(const Series& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Rat& c);

// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);

// Quotient q with q*b = a; b must be a unit (b(0) != 0).
Series div(const Series& a, const Series& b);

// a(b(x)) by Horner evaluation; b must have zero constant term.
Series compose(const Series& a, const Series& b);

// b with a(b) = b(a) = x; a must have order exactly one (a(0)=0, a'(0)!=0).
Series comp_inverse(const Series& a);

// k-fold Cauchy power; pow(a, 0) = 1.
Series pow(const Series& a, unsigned k);

// The k-th coefficient; k must not exceed the truncation order.
const Rat& coeff(const Series& a, int k);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Rat& c, const Series& a) { return scale(a, c); }

// Comma-separated coefficient list, e.g. "1,1/2,-3".
Series series_from_string(const std::string& text);
std::string series_to_string(const Series& a);

}  // namespace riordan
