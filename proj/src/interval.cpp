#include "minkcert/interval.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>

namespace minkcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the FMA residual of a product or quotient may itself
// underflow, so the error-sign test is not trustworthy and we nudge
// unconditionally.
constexpr double kResidualGuard = 1e-300;

std::atomic<int> g_txn_slack_ulps{2};

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

double nudge(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_up(x);
    for (int i = 0; i > ulps; --i) x = next_down(x);
    return x;
}

// Exact roundoff of s = fl(a + b) (Knuth two-sum). Valid for all finite
// doubles; the error of a rounded sum is always representable.
double sum_err(double a, double b, double s) {
    const double bv = s - a;
    const double av = s - bv;
    return (a - av) + (b - bv);
}

double add_rd(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s;
    return sum_err(a, b, s) < 0.0 ? next_down(s) : s;
}

double add_ru(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s;
    return sum_err(a, b, s) > 0.0 ? next_up(s) : s;
}

double sub_rd(double a, double b) { return add_rd(a, -b); }
double sub_ru(double a, double b) { return add_ru(a, -b); }

double mul_rd(double a, double b) {
    const double p = a * b;
    if (!std::isfinite(p)) return p;
    if (p == 0.0) {
        if (a == 0.0 || b == 0.0) return 0.0;  // exact zero
        return next_down(0.0);                 // underflowed nonzero product
    }
    if (std::fabs(p) < kResidualGuard) return next_down(p);
    return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

double mul_ru(double a, double b) {
    const double p = a * b;
    if (!std::isfinite(p)) return p;
    if (p == 0.0) {
        if (a == 0.0 || b == 0.0) return 0.0;
        return next_up(0.0);
    }
    if (std::fabs(p) < kResidualGuard) return next_up(p);
    return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

// Quotient rounding uses the exact residual a - q*b, representable whenever
// neither a nor b sits in the under/overflow fringe.
double div_rd(double a, double b) {
    const double q = a / b;
    if (!std::isfinite(q)) return q;
    if (q == 0.0 && a == 0.0) return 0.0;
    if (std::fabs(q) < kResidualGuard || std::fabs(a) < kResidualGuard ||
        std::fabs(b) < kResidualGuard) {
        return next_down(q);
    }
    const double r = std::fma(-q, b, a);  // a - q*b
    const bool true_below = (r != 0.0) && ((r > 0.0) != (b > 0.0));
    return true_below ? next_down(q) : q;
}

double div_ru(double a, double b) {
    const double q = a / b;
    if (!std::isfinite(q)) return q;
    if (q == 0.0 && a == 0.0) return 0.0;
    if (std::fabs(q) < kResidualGuard || std::fabs(a) < kResidualGuard ||
        std::fabs(b) < kResidualGuard) {
        return next_up(q);
    }
    const double r = std::fma(-q, b, a);
    const bool true_above = (r != 0.0) && ((r > 0.0) == (b > 0.0));
    return true_above ? next_up(q) : q;
}

Interval checked(double lo, double hi) { return Interval(lo, hi); }

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw empty_interval("interval endpoints out of order");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw non_finite_result();
}

Interval Interval::entire() { return Interval(-kInf, kInf, unchecked_tag{}); }

bool Interval::is_entire() const { return lo_ == -kInf && hi_ == kInf; }

int txn_slack_ulps() { return g_txn_slack_ulps.load(std::memory_order_relaxed); }

void set_txn_slack_ulps(int k) {
    if (k < 1) throw precondition_violation("transcendental slack must be at least 1 ulp");
    g_txn_slack_ulps.store(k, std::memory_order_relaxed);
}

Interval add(const Interval& a, const Interval& b) {
    return checked(add_rd(a.lo(), b.lo()), add_ru(a.hi(), b.hi()));
}

Interval sub(const Interval& a, const Interval& b) {
    return checked(sub_rd(a.lo(), b.hi()), sub_ru(a.hi(), b.lo()));
}

Interval mul(const Interval& a, const Interval& b) {
    const double lo = std::min(std::min(mul_rd(a.lo(), b.lo()), mul_rd(a.lo(), b.hi())),
                               std::min(mul_rd(a.hi(), b.lo()), mul_rd(a.hi(), b.hi())));
    const double hi = std::max(std::max(mul_ru(a.lo(), b.lo()), mul_ru(a.lo(), b.hi())),
                               std::max(mul_ru(a.hi(), b.lo()), mul_ru(a.hi(), b.hi())));
    return checked(lo, hi);
}

Interval div(const Interval& a, const Interval& b) {
    if (b.lo() <= 0.0 && b.hi() >= 0.0) throw division_by_zero_interval();
    const double lo = std::min(std::min(div_rd(a.lo(), b.lo()), div_rd(a.lo(), b.hi())),
                               std::min(div_rd(a.hi(), b.lo()), div_rd(a.hi(), b.hi())));
    const double hi = std::max(std::max(div_ru(a.lo(), b.lo()), div_ru(a.lo(), b.hi())),
                               std::max(div_ru(a.hi(), b.lo()), div_ru(a.hi(), b.hi())));
    return checked(lo, hi);
}

Interval neg(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval exp(const Interval& a) {
    const int k = txn_slack_ulps();
    double lo = nudge(std::exp(a.lo()), -k);
    if (lo < 0.0) lo = 0.0;  // e^x > 0
    const double hi = nudge(std::exp(a.hi()), k);
    if (!std::isfinite(hi)) throw non_finite_result("exp overflow");
    return checked(lo, hi);
}

Interval ln(const Interval& a) {
    if (a.lo() <= 0.0) throw log_non_positive();
    const int k = txn_slack_ulps();
    return checked(nudge(std::log(a.lo()), -k), nudge(std::log(a.hi()), k));
}

Interval pow(const Interval& x, const Interval& q) {
    if (x.lo() < 0.0) throw negative_base();
    if (x.lo() == 0.0) {
        if (q.lo() <= 0.0) throw zero_to_nonpositive();
        if (x.hi() == 0.0) return Interval(0.0, 0.0);  // 0^q = 0 for q > 0
        // x -> x^q is increasing for q > 0, so the sup over the box is
        // attained at x.hi; the inf is covered by the exact 0.
        const Interval upper = exp(mul(q, ln(Interval::singleton(x.hi()))));
        return checked(0.0, upper.hi());
    }
    return exp(mul(q, ln(x)));
}

Interval min_i(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max_i(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

double width(const Interval& a) { return sub_ru(a.hi(), a.lo()); }

double midpoint(const Interval& a) {
    const double m = a.lo() + (a.hi() - a.lo()) / 2.0;
    return std::clamp(m, a.lo(), a.hi());
}

std::pair<Interval, Interval> bisect(const Interval& a) {
    const double m = midpoint(a);
    return {Interval(a.lo(), m), Interval(m, a.hi())};
}

SignClass sign(const Interval& a) {
    if (a.lo() > 0.0) return SignClass::positive;
    if (a.hi() < 0.0) return SignClass::negative;
    return SignClass::contains_zero;
}

bool contains(const Interval& a, double x) { return a.lo() <= x && x <= a.hi(); }

bool subset(const Interval& a, const Interval& b) {
    return b.lo() <= a.lo() && a.hi() <= b.hi();
}

std::string to_string(const Interval& a) {
    char buf[64];
    std::string out = "[";
    auto r = std::to_chars(buf, buf + sizeof buf, a.lo());
    out.append(buf, r.ptr);
    out += ", ";
    r = std::to_chars(buf, buf + sizeof buf, a.hi());
    out.append(buf, r.ptr);
    out += "]";
    return out;
}

}  // namespace minkcert
