#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilbcell/errors.hpp"
#include "hilbcell/semigroup.hpp"

namespace hilbcell {

using Rational = mpq_class;

std::string format_rational(const Rational& v);

/// Interned symbolic coefficient names (lambda slots, user symbols).
class VarTable {
public:
    int intern(const std::string& name);
    std::optional<int> find(const std::string& name) const;
    const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

/// Affine-linear expression c0 + sum coeff_v * v over interned variables.
/// Multiplication requires at least one constant factor.
class LinExpr {
public:
    LinExpr() : constant_(0) {}
    LinExpr(Rational c) : constant_(std::move(c)) {}
    LinExpr(int c) : constant_(c) {}
    LinExpr(long c) : constant_(static_cast<long int>(c)) {}
    static LinExpr variable(int id);

    bool is_zero() const { return terms_.empty() && constant_ == 0; }
    bool is_constant() const { return terms_.empty(); }
    const Rational& constant() const { return constant_; }
    const std::map<int, Rational>& terms() const { return terms_; }

    LinExpr operator-() const;
    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    /// Throws std::logic_error when both operands carry variables.
    friend LinExpr operator*(const LinExpr& a, const LinExpr& b);
    bool operator==(const LinExpr& o) const {
        return constant_ == o.constant_ && terms_ == o.terms_;
    }

    /// Replaces `var` by `value`.
    LinExpr substituted(int var, const LinExpr& value) const;
    /// Solves this == 0 for `var` (which must occur): var = result.
    LinExpr solved_for(int var) const;

    std::string str(const VarTable& vars) const;

private:
    Rational constant_;
    std::map<int, Rational> terms_; // no zero coefficients
};

namespace series_detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LinExpr& c) { return c.is_zero(); }
} // namespace series_detail

/// Exponents at or above this sentinel are unknowable; series built from
/// polynomial data carry it as their horizon.
inline constexpr Int kExactOrder = std::numeric_limits<Int>::max() / 4;

/// Formal power series in t with exact coefficients, known below `horizon`.
/// No stored zero coefficients; all stored exponents are nonnegative and
/// below the horizon.
template <typename C>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(Int horizon) : horizon_(horizon) { check_horizon(horizon); }

    static TruncatedSeries monomial(Int exponent, C coeff = C(1), Int horizon = kExactOrder) {
        TruncatedSeries s(horizon);
        s.add_term(exponent, std::move(coeff));
        return s;
    }

    Int horizon() const { return horizon_; }
    bool is_exact() const { return horizon_ >= kExactOrder; }
    /// No known terms (the tail beyond the horizon stays undetermined).
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Int, C>& terms() const { return coeffs_; }

    std::optional<std::pair<Int, C>> leading() const {
        if (coeffs_.empty()) return std::nullopt;
        return *coeffs_.begin();
    }
    std::optional<Int> order() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }

    C coeff(Int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? C(0) : it->second;
    }

    void add_term(Int exponent, C value) {
        if (exponent < 0) throw std::invalid_argument("series: negative exponent");
        if (exponent >= horizon_) return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            if (!series_detail::coeff_is_zero(value)) coeffs_.emplace(exponent, std::move(value));
            return;
        }
        it->second += value;
        if (series_detail::coeff_is_zero(it->second)) coeffs_.erase(it);
    }

    void erase_term(Int exponent) { coeffs_.erase(exponent); }

    TruncatedSeries truncated(Int new_horizon) const {
        check_horizon(new_horizon);
        TruncatedSeries out(std::min(new_horizon, horizon_));
        for (const auto& [e, c] : coeffs_) {
            if (e >= out.horizon_) break;
            out.coeffs_.emplace(e, c);
        }
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(horizon_);
        for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        set_horizon(std::min(horizon_, o.horizon_));
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        set_horizon(std::min(horizon_, o.horizon_));
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }

    /// Error term of a product is O(t^(nu(f)+N_g)) + O(t^(nu(g)+N_f)); for a
    /// factor with no known terms its horizon stands in for the order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const Int eff_a = std::min(a.order().value_or(a.horizon_), a.horizon_);
        const Int eff_b = std::min(b.order().value_or(b.horizon_), b.horizon_);
        Int h = std::min(sat_add(eff_a, b.horizon_), sat_add(eff_b, a.horizon_));
        h = std::min(h, kExactOrder);
        TruncatedSeries out(h);
        for (const auto& [ea, ca] : a.coeffs_) {
            if (ea >= h) break;
            for (const auto& [eb, cb] : b.coeffs_) {
                if (ea + eb >= h) break;
                out.add_term(ea + eb, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator*(const C& s, const TruncatedSeries& f) {
        TruncatedSeries out(f.horizon_);
        if (series_detail::coeff_is_zero(s)) return out;
        for (const auto& [e, c] : f.coeffs_) out.add_term(e, s * c);
        return out;
    }

    bool operator==(const TruncatedSeries& o) const {
        return horizon_ == o.horizon_ && coeffs_ == o.coeffs_;
    }
    /// Same known terms, horizons ignored.
    bool same_terms(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    static void check_horizon(Int h) {
        if (h <= 0)
            throw PrecisionError("series: operation leaves no exact terms (horizon <= 0)", 1);
    }
    void set_horizon(Int h) {
        check_horizon(h);
        horizon_ = h;
        coeffs_.erase(coeffs_.lower_bound(h), coeffs_.end());
    }
    static Int sat_add(Int a, Int b) { return std::min(a, kExactOrder - b) + b; }

    std::map<Int, C> coeffs_;
    Int horizon_ = kExactOrder;
};

using RationalSeries = TruncatedSeries<Rational>;
using SymbolicSeries = TruncatedSeries<LinExpr>;

/// Least-exponent term; throws PrecisionError when no term is known below
/// the horizon (covers the exact zero series, whose order is infinite).
template <typename C>
std::pair<Int, C> leading_term(const TruncatedSeries<C>& f) {
    auto lt = f.leading();
    if (!lt)
        throw PrecisionError("leading_term: no terms below the horizon", f.horizon());
    return *lt;
}

/// Parses "t^4 + 3/2 t^5" style input: rational coefficients, caret
/// exponents, optional '*', whitespace-insensitive; identifiers denote
/// symbolic coefficients and are interned into `vars`.
SymbolicSeries parse_series(std::string_view text, VarTable& vars);

/// Parse rejecting symbolic coefficients.
RationalSeries parse_rational_series(std::string_view text);

/// Comma-separated list of series.
std::vector<RationalSeries> parse_series_list(std::string_view text);

RationalSeries to_rational(const SymbolicSeries& f);
SymbolicSeries to_symbolic(const RationalSeries& f);

std::string format_series(const RationalSeries& f);
std::string format_series(const SymbolicSeries& f, const VarTable& vars);

} // namespace hilbcell
