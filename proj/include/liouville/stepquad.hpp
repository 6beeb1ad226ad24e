#pragma once

// Exact integration of step-function integrands whose jumps sit at the
// integers and at the points x/k where floor(x/t) changes.

#include <cmath>
#include <compare>
#include <string>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

/// An exact integration endpoint: a positive rational or sqrt(m).
class Point {
public:
    Point(Rational r) : num_(r.num), den_(r.den) {  // NOLINT(google-explicit-constructor)
        if (r.num == 0) throw domain_error("integration endpoints must be positive");
    }
    Point(u64 n) : Point(Rational{n}) {}  // NOLINT(google-explicit-constructor)

    static Point sqrt_of(u64 m) {
        if (m == 0) throw domain_error("integration endpoints must be positive");
        Point p(Rational{1});
        p.num_ = m;
        p.den_ = 0;
        return p;
    }

    bool is_sqrt() const { return den_ == 0; }

    double value() const {
        return is_sqrt() ? std::sqrt(static_cast<double>(num_))
                         : static_cast<double>(num_) / static_cast<double>(den_);
    }
    double reciprocal() const {
        return is_sqrt() ? 1.0 / std::sqrt(static_cast<double>(num_))
                         : static_cast<double>(den_) / static_cast<double>(num_);
    }

    u64 floor() const { return is_sqrt() ? isqrt(num_) : num_ / den_; }
    u64 ceil() const {
        if (is_sqrt()) {
            u64 r = isqrt(num_);
            return r * r == num_ ? r : r + 1;
        }
        return num_ / den_ + (num_ % den_ != 0);
    }

    /// floor(x / p).
    u64 floor_quotient(u64 x) const {
        if (is_sqrt()) {
            u128 xx = static_cast<u128>(x) * x;
            return static_cast<u64>(isqrt(xx / num_));
        }
        return static_cast<u64>(static_cast<u128>(x) * den_ / num_);
    }

    /// True when x / p is an integer.
    bool divides_into(u64 x) const {
        if (is_sqrt()) {
            u128 f = floor_quotient(x);
            return f * f * num_ == static_cast<u128>(x) * x;
        }
        return (static_cast<u128>(x) * den_) % num_ == 0;
    }

    /// p*p <= x.
    bool square_at_most(u64 x) const {
        if (is_sqrt()) return num_ <= x;
        return static_cast<u128>(num_) * num_ <= static_cast<u128>(x) * den_ * den_;
    }

    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (!a.is_sqrt() && !b.is_sqrt())
            return static_cast<u128>(a.num_) * b.den_ <=> static_cast<u128>(b.num_) * a.den_;
        if (a.is_sqrt() && b.is_sqrt()) return a.num_ <=> b.num_;
        if (a.is_sqrt()) return 0 <=> (b <=> a);
        // rational a = n/d against sqrt(m): compare n^2 with m d^2
        return static_cast<u128>(a.num_) * a.num_ <=> static_cast<u128>(b.num_) * a.den_ * a.den_;
    }
    friend bool operator==(const Point& a, const Point& b) { return (a <=> b) == 0; }

    std::string str() const {
        return is_sqrt() ? "sqrt(" + std::to_string(num_) + ")" : Rational{num_, den_}.str();
    }

private:
    u64 num_;
    u64 den_;  // 0 marks sqrt(num_)
};

/// One maximal open interval on which floor(t) and floor(x/t) are constant.
struct QuotientPiece {
    enum class End { integer, quotient, limit };

    double left, right;
    double inv_left, inv_right;
    u64 floor_t;   ///< floor(t) inside the piece; 0 when integers are not breakpoints
    u64 quotient;  ///< floor(x/t) inside the piece
    End right_kind;
    u64 right_index;  ///< n for an integer end, k for an end at x/k
};

/// Walks [lo, hi] left to right, cutting at every x/k and, when
/// `split_at_integers` is set, at every integer.
///
/// Two integer cursors carry the next integer and the next k with x/k > t,
/// so the walk never compares floating-point breakpoints.
template <typename Visit>
void for_each_quotient_piece(u64 x, const Point& lo, const Point& hi, bool split_at_integers, Visit&& visit) {
    if (lo < Point{1}) throw domain_error("piece walk requires lo >= 1");
    if (!(lo < hi)) throw domain_error("empty interval [" + lo.str() + ", " + hi.str() + "]");

    u64 n_next = lo.floor() + 1;
    u64 k_next = lo.floor_quotient(x);
    if (k_next > 0 && lo.divides_into(x)) --k_next;  // largest k with x/k > lo
    const u64 hi_ceil = hi.ceil();
    const u64 k_hi = hi.floor_quotient(x);  // x/k >= hi  <=>  k <= k_hi
    const double x_d = static_cast<double>(x);

    double cur = lo.value();
    double cur_inv = lo.reciprocal();
    for (;;) {
        bool take_int = split_at_integers;
        bool take_q = k_next >= 1;
        if (take_int && take_q) {
            u128 lhs = static_cast<u128>(n_next) * k_next;
            if (lhs < x)
                take_q = false;
            else if (lhs > x)
                take_int = false;
        }
        const u64 floor_t = split_at_integers ? n_next - 1 : 0;
        bool at_end;
        if (take_int)
            at_end = n_next >= hi_ceil;
        else if (take_q)
            at_end = k_next <= k_hi;
        else
            at_end = true;

        if (at_end) {
            visit(QuotientPiece{cur, hi.value(), cur_inv, hi.reciprocal(), floor_t, k_next,
                                QuotientPiece::End::limit, 0});
            return;
        }
        QuotientPiece piece{cur, 0.0, cur_inv, 0.0, floor_t, k_next, QuotientPiece::End::integer, n_next};
        if (take_int) {
            piece.right = static_cast<double>(n_next);
            piece.inv_right = 1.0 / piece.right;
        } else {
            piece.right = x_d / static_cast<double>(k_next);
            piece.inv_right = static_cast<double>(k_next) / x_d;
            piece.right_kind = QuotientPiece::End::quotient;
            piece.right_index = k_next;
        }
        visit(piece);
        cur = piece.right;
        cur_inv = piece.inv_right;
        if (take_int) ++n_next;
        if (take_q) --k_next;
    }
}

/// Sorted, deduplicated union of the integers in [lo, hi] and the points
/// x/k inside [lo, hi], together with lo and hi themselves.
inline std::vector<Rational> breakpoints_quotient(u64 x, Rational lo, Rational hi) {
    if (lo < Rational{1} || !(lo < hi) || Rational{x} < hi)
        throw domain_error("breakpoints need 1 <= lo < hi <= x; got [" + lo.str() + ", " + hi.str() + "]");
    std::vector<Rational> out{lo.reduced()};
    for_each_quotient_piece(x, lo, hi, true, [&](const QuotientPiece& p) {
        switch (p.right_kind) {
        case QuotientPiece::End::integer: out.emplace_back(p.right_index); break;
        case QuotientPiece::End::quotient: out.push_back(Rational{x, p.right_index}.reduced()); break;
        case QuotientPiece::End::limit: out.push_back(hi.reduced()); break;
        }
    });
    return out;
}

/// A step function on [b_0, b_m] taking value v_i on (b_i, b_{i+1}).
class PiecewiseConstant {
public:
    PiecewiseConstant(std::vector<Rational> breakpoints, std::vector<i64> values)
        : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
        if (breakpoints_.size() < 2) throw domain_error("piecewise function needs at least one piece");
        if (values_.size() + 1 != breakpoints_.size())
            throw domain_error("piece count must be breakpoint count - 1");
        for (std::size_t i = 1; i < breakpoints_.size(); ++i)
            if (!(breakpoints_[i - 1] < breakpoints_[i])) throw domain_error("breakpoints must increase strictly");
    }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<i64>& values() const { return values_; }
    Rational lo() const { return breakpoints_.front(); }
    Rational hi() const { return breakpoints_.back(); }

    /// Value on the piece containing t, for t strictly inside a piece.
    i64 operator()(double t) const {
        for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
            if (t < breakpoints_[i + 1].to_double()) return values_[i];
        return values_.back();
    }

    /// sum_i v_i * weight_integral(b_i, b_{i+1}).
    template <typename WeightIntegral>
    double integrate(WeightIntegral&& weight_integral) const {
        CompensatedSum sum;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] != 0)
                sum += static_cast<double>(values_[i]) * weight_integral(breakpoints_[i], breakpoints_[i + 1]);
        return sum.value();
    }

private:
    std::vector<Rational> breakpoints_;
    std::vector<i64> values_;
};

/// t^{-s} evaluated as a^{-s} - b^{-s} without cancellation for b close to a.
inline double power_difference(double a, double b, double s) {
    return -std::pow(a, -s) * std::expm1(-s * std::log1p((b - a) / a));
}

/// Integral over [lo, hi] of value_at(floor(t)) against a weight, given the
/// weight's integral over each subinterval.
template <typename ValueAt, typename WeightIntegral>
double integrate_floor_step(double lo, double hi, ValueAt&& value_at, WeightIntegral&& weight_integral) {
    if (!(lo >= 1.0)) throw domain_error("floor-step integral needs lo >= 1");
    CompensatedSum sum;
    if (!(hi > lo)) return 0.0;
    u64 n = static_cast<u64>(std::floor(lo));
    double a = lo;
    while (a < hi) {
        const double b = std::min(static_cast<double>(n + 1), hi);
        const double v = static_cast<double>(value_at(n));
        if (v != 0.0) sum += v * weight_integral(a, b);
        a = b;
        ++n;
    }
    return sum.value();
}

/// Integral from 1 to x_upper of L(t) / t^{s+1}, with L constant on [n, n+1).
template <typename LOracle>
double integrate_L_over_power(double x_upper, double s_exp, LOracle&& L) {
    if (!(x_upper >= 1.0)) throw domain_error("upper limit must be >= 1");
    if (!(s_exp > 0.0)) throw domain_error("exponent must be positive");
    return integrate_floor_step(1.0, x_upper, L,
                                [s_exp](double a, double b) { return power_difference(a, b, s_exp) / s_exp; });
}

/// Integral over [t_lo, t_hi] of h(floor(x/t)) L(t) / t^2, with t_hi <= sqrt(x).
///
/// `h` is evaluated at floor(x/t), which ranges up to x / t_lo.
template <typename HFn, typename LOracle>
double integrate_pair(u64 x, HFn&& h, LOracle&& L, const Point& t_lo, const Point& t_hi) {
    if (!t_hi.square_at_most(x)) throw domain_error("integrate_pair needs t_hi <= sqrt(x)");
    if (t_lo == t_hi) return 0.0;
    CompensatedSum sum;
    for_each_quotient_piece(x, t_lo, t_hi, true, [&](const QuotientPiece& p) {
        const i64 lv = static_cast<i64>(L(p.floor_t));
        if (lv == 0) return;
        const i64 hv = static_cast<i64>(h(p.quotient));
        if (hv == 0) return;
        sum += static_cast<double>(hv * lv) * (p.inv_left - p.inv_right);
    });
    return sum.value();
}

/// Integral over [t_lo, t_hi] of L(x/t) dt; L(x/t) vanishes once t > x.
template <typename LOracle>
double integrate_L_quotient_form(u64 x, const Point& t_lo, const Point& t_hi, LOracle&& L) {
    if (t_hi < t_lo) throw domain_error("integrate_L_quotient_form needs t_lo <= t_hi");
    if (t_lo == t_hi) return 0.0;
    CompensatedSum sum;
    for_each_quotient_piece(x, t_lo, t_hi, false, [&](const QuotientPiece& p) {
        if (p.quotient == 0) return;
        const i64 lv = static_cast<i64>(L(p.quotient));
        if (lv != 0) sum += static_cast<double>(lv) * (p.right - p.left);
    });
    return sum.value();
}

/// The same integral over [sqrt(x), x].
template <typename LOracle>
double integrate_L_quotient_form(u64 x, LOracle&& L) {
    if (x <= 1) return 0.0;
    return integrate_L_quotient_form(x, Point::sqrt_of(x), Point{x}, L);
}

} // namespace liouville
