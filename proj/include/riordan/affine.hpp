#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

using UnknownId = int;

/*
 * Affine expression in named unknowns: constant + sum of coeff * unknown.
 * Multiplication requires at least one constant operand and throws
 * NonlinearProduct otherwise; the factorization schedules rely on that check
 * to certify that every constraint they ever build is genuinely linear.
 */
class LinExpr {
public:
    LinExpr() : constant_(0) {}
    LinExpr(Rat c) : constant_(std::move(c)) {}
    LinExpr(long c) : constant_(c) {}
    static LinExpr unknown(UnknownId id);

    bool is_constant() const { return terms_.empty(); }
    const Rat& constant_part() const { return constant_; }
    // The constant value; the expression must be constant.
    const Rat& value() const;
    const std::map<UnknownId, Rat>& terms() const { return terms_; }

    LinExpr& operator+=(const LinExpr& other);
    LinExpr& operator-=(const LinExpr& other);
    LinExpr& operator*=(const Rat& c);

    Rat eval(const std::map<UnknownId, Rat>& values) const;

    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    void set_term(UnknownId id, Rat coeff);

    Rat constant_;
    std::map<UnknownId, Rat> terms_;
};

LinExpr operator+(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a, const LinExpr& b);
LinExpr operator-(LinExpr a);
LinExpr operator*(const LinExpr& a, const LinExpr& b);  // NonlinearProduct unless one side is constant

/*
 * Incremental exact linear system. Equations are reduced against the current
 * echelon bindings as they arrive; each consistent, novel equation binds one
 * pivot unknown (the smallest id with a nonzero coefficient) to an affine
 * expression in the still-free unknowns. Bindings stay fully back-substituted.
 */
class LinSystem {
public:
    enum class Outcome { Bound, Dependent, Inconsistent };

    struct Assertion {
        Outcome outcome;
        std::optional<UnknownId> pivot;  // present iff outcome == Bound
    };

    UnknownId new_unknown(std::string label);
    int unknown_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(UnknownId id) const;

    Assertion assert_eq(const LinExpr& lhs, const LinExpr& rhs);

    // Substitute every bound unknown by its binding.
    LinExpr reduce(const LinExpr& e) const;

    bool is_bound(UnknownId id) const { return bindings_.count(id) != 0; }

    // Values for every unknown: bound ones by back-substitution, free ones
    // from `defaults` (zero when unspecified).
    std::map<UnknownId, Rat> resolve(const std::map<UnknownId, Rat>& defaults = {}) const;

    // Give every unknown in `ids` a definite numeric value consistent with
    // the system: free ones are bound to `dflt`, already-bound ones must then
    // reduce to a constant (their bindings may only involve unknowns in
    // `ids`). Later reductions see all of them as constants.
    void pin(const std::vector<UnknownId>& ids, const Rat& dflt = Rat(0));

private:
    std::vector<std::string> labels_;
    std::map<UnknownId, LinExpr> bindings_;
};

}  // namespace riordan
