#include "riordan/affine.hpp"

#include <sstream>
#include <utility>

#include "riordan/error.hpp"

namespace riordan {

LinExpr LinExpr::unknown(UnknownId id) {
    LinExpr e;
    e.terms_[id] = Rat(1);
    return e;
}

const Rat& LinExpr::value() const {
    if (!is_constant()) throw InternalError("LinExpr::value: expression is not constant");
    return constant_;
}

void LinExpr::set_term(UnknownId id, Rat coeff) {
    if (coeff == 0)
        terms_.erase(id);
    else
        terms_[id] = std::move(coeff);
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
    constant_ += other.constant_;
    for (const auto& [id, c] : other.terms_) {
        auto it = terms_.find(id);
        if (it == terms_.end()) {
            terms_.emplace(id, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
    constant_ -= other.constant_;
    for (const auto& [id, c] : other.terms_) {
        auto it = terms_.find(id);
        if (it == terms_.end()) {
            terms_.emplace(id, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LinExpr& LinExpr::operator*=(const Rat& c) {
    if (c == 0) {
        constant_ = 0;
        terms_.clear();
        return *this;
    }
    constant_ *= c;
    for (auto& [id, v] : terms_) v *= c;
    return *this;
}

Rat LinExpr::eval(const std::map<UnknownId, Rat>& values) const {
    Rat acc = constant_;
    for (const auto& [id, c] : terms_) {
        auto it = values.find(id);
        if (it != values.end()) acc += c * it->second;
    }
    return acc;
}

std::string LinExpr::to_string(const std::vector<std::string>& labels) const {
    std::ostringstream out;
    out << rat_to_string(constant_);
    for (const auto& [id, c] : terms_) {
        out << " + " << rat_to_string(c) << "*";
        if (id >= 0 && static_cast<std::size_t>(id) < labels.size())
            out << labels[static_cast<std::size_t>(id)];
        else
            out << "u" << id;
    }
    return out.str();
}

LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
LinExpr operator-(LinExpr a) { return a *= Rat(-1); }

LinExpr operator*(const LinExpr& a, const LinExpr& b) {
    if (a.is_constant()) {
        LinExpr out = b;
        return out *= a.constant_part();
    }
    if (b.is_constant()) {
        LinExpr out = a;
        return out *= b.constant_part();
    }
    throw NonlinearProduct();
}

UnknownId LinSystem::new_unknown(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<UnknownId>(labels_.size()) - 1;
}

const std::string& LinSystem::label(UnknownId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= labels_.size())
        throw InternalError("LinSystem::label: bad unknown id");
    return labels_[static_cast<std::size_t>(id)];
}

LinExpr LinSystem::reduce(const LinExpr& e) const {
    LinExpr out(e.constant_part());
    for (const auto& [id, c] : e.terms()) {
        auto it = bindings_.find(id);
        if (it == bindings_.end()) {
            out += LinExpr(c) * LinExpr::unknown(id);
        } else {
            LinExpr piece = it->second;
            piece *= c;
            out += piece;
        }
    }
    return out;
}

LinSystem::Assertion LinSystem::assert_eq(const LinExpr& lhs, const LinExpr& rhs) {
    LinExpr e = reduce(lhs - rhs);
    if (e.is_constant())
        return {e.constant_part() == 0 ? Outcome::Dependent : Outcome::Inconsistent, std::nullopt};
    // First-nonzero pivot: the smallest free unknown present.
    const auto& [pivot, coeff] = *e.terms().begin();
    LinExpr binding = e;
    binding -= LinExpr(coeff) * LinExpr::unknown(pivot);
    binding *= Rat(-1) / coeff;
    for (auto& [id, expr] : bindings_) {
        auto it = expr.terms().find(pivot);
        if (it == expr.terms().end()) continue;
        LinExpr substituted = expr;
        substituted -= LinExpr(it->second) * LinExpr::unknown(pivot);
        substituted += LinExpr(it->second) * binding;
        expr = std::move(substituted);
    }
    const UnknownId bound = pivot;
    bindings_[bound] = std::move(binding);
    return {Outcome::Bound, bound};
}

std::map<UnknownId, Rat> LinSystem::resolve(const std::map<UnknownId, Rat>& defaults) const {
    std::map<UnknownId, Rat> values;
    auto default_of = [&defaults](UnknownId id) {
        auto it = defaults.find(id);
        return it == defaults.end() ? Rat(0) : it->second;
    };
    for (UnknownId id = 0; id < unknown_count(); ++id) {
        auto it = bindings_.find(id);
        if (it == bindings_.end()) {
            values[id] = default_of(id);
            continue;
        }
        Rat acc = it->second.constant_part();
        for (const auto& [free_id, c] : it->second.terms()) acc += c * default_of(free_id);
        values[id] = acc;
    }
    return values;
}

void LinSystem::pin(const std::vector<UnknownId>& ids, const Rat& dflt) {
    for (UnknownId id : ids) {
        if (is_bound(id)) continue;
        if (assert_eq(LinExpr::unknown(id), LinExpr(dflt)).outcome == Outcome::Inconsistent)
            throw InternalError("pin: default assignment contradicts the system for " + label(id));
    }
    for (UnknownId id : ids) {
        if (!reduce(LinExpr::unknown(id)).is_constant())
            throw InternalError("pin: " + label(id) + " still depends on an unknown outside the window");
    }
}

}  // namespace riordan
