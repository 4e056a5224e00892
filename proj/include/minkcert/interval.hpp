#pragma once

#include <optional>
#include <string>
#include <utility>

#include "minkcert/errors.hpp"

namespace minkcert {

enum class SignClass { positive, negative, contains_zero };

/*
 * Closed interval [lo, hi] over machine doubles with outward-rounded
 * endpoints. Enclosure contract: for every operation OP exported below and
 * all points x_i in X_i, op(x_1, ..., x_n) lies in OP(X_1, ..., X_n).
 *
 * Endpoints are finite; an operation whose endpoint would overflow throws
 * non_finite_result instead of propagating infinities. The one exception is
 * Interval::entire(), the documented whole-line marker used by the verifier
 * to force an indeterminate classification.
 *
 * Rounding is done by next-representable nudging, never by switching the
 * hardware rounding mode, so values are immutable and safe to share across
 * threads.
 */
class Interval {
public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double lo, double hi);

    static Interval singleton(double x) { return Interval(x, x); }
    // Whole real line; only sanctioned producer of non-finite endpoints.
    static Interval entire();

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool is_entire() const;

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

private:
    struct unchecked_tag {};
    Interval(double lo, double hi, unchecked_tag) : lo_(lo), hi_(hi) {}

    double lo_;
    double hi_;
};

// Slack applied around libm calls (exp, ln), in ulps per endpoint. Covers a
// faithfully rounded libm with margin. Set before starting parallel work.
int txn_slack_ulps();
void set_txn_slack_ulps(int k);

// arithmetic
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);  // throws division_by_zero_interval
Interval neg(const Interval& a);                     // exact

// transcendental
Interval exp(const Interval& a);
Interval ln(const Interval& a);                      // requires a.lo > 0
// x^q as exp(q ln x); x.lo >= 0, and q.lo > 0 when x.lo == 0
Interval pow(const Interval& x, const Interval& q);

// lattice / set operations
Interval min_i(const Interval& a, const Interval& b);
Interval max_i(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

// queries
double width(const Interval& a);    // hi - lo, rounded up
double midpoint(const Interval& a);
std::pair<Interval, Interval> bisect(const Interval& a);
SignClass sign(const Interval& a);
bool contains(const Interval& a, double x);
bool subset(const Interval& a, const Interval& b);  // a inside b

std::string to_string(const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

}  // namespace minkcert
