// Truncated formal power series over Rational in the fixed alphabet {q, t, y, u}.
//
// q counts symmetric powers, t tracks homological degree (or the expansion
// order of a genus series), y is the chi_y parameter and u stands in for the
// formal quarter power of epsilon in the elliptic genus. q, t, u exponents
// are non-negative and truncated at per-variable orders; y lives in a Laurent
// window [y_min, y_max] that is either strict (escaping products are an
// error) or truncating (escaping products are dropped).
//
// A series is a finite map from exponent tuples to nonzero coefficients;
// series equality is equality of those term maps.

#pragma once

#include "symprod/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace symprod {

enum class VarId : int { q = 0, t = 1, y = 2, u = 3 };

inline constexpr std::array<const char*, 4> kVarNames = {"q", "t", "y", "u"};

struct Exponents {
    int q = 0;
    int t = 0;
    int y = 0;
    int u = 0;

    friend auto operator<=>(const Exponents&, const Exponents&) = default;

    bool all_zero() const { return q == 0 && t == 0 && y == 0 && u == 0; }

    int get(VarId v) const;
    void set(VarId v, int e);

    friend Exponents operator+(const Exponents& a, const Exponents& b) {
        return {a.q + b.q, a.t + b.t, a.y + b.y, a.u + b.u};
    }
};

enum class YWindowMode { strict, truncating };

struct TruncationProfile {
    int q_order = 8;
    int t_order = 8;
    int u_order = 4;
    int y_min = -8;
    int y_max = 8;
    YWindowMode y_mode = YWindowMode::strict;

    friend bool operator==(const TruncationProfile&, const TruncationProfile&) = default;

    // true iff e is storable: 0 <= e.q <= q_order etc., y_min <= e.y <= y_max
    bool contains(const Exponents& e) const {
        return e.q >= 0 && e.q <= q_order && e.t >= 0 && e.t <= t_order &&
               e.u >= 0 && e.u <= u_order && e.y >= y_min && e.y <= y_max;
    }

    void validate() const;
};

class TruncatedSeries {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit TruncatedSeries(const TruncationProfile& profile);

    static TruncatedSeries constant(const Rational& c, const TruncationProfile& profile);
    // c * q^e.q t^e.t y^e.y u^e.u, subject to the usual truncation rules.
    // Negative q/t/u exponents are rejected.
    static TruncatedSeries monomial(const Rational& c, const Exponents& e,
                                    const TruncationProfile& profile);

    const TruncationProfile& profile() const { return profile_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;

    // Stored coefficient of e (zero if absent). Requesting an exponent the
    // profile cannot represent is an error: that data is not available.
    Rational coefficient(const Exponents& e) const;

    bool operator==(const TruncatedSeries& o) const { return terms_ == o.terms_; }

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries s, const Rational& c) { return s *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s) { return s *= c; }

private:
    // Accumulates c at exponent e, applying the truncation rules: q/t/u
    // overflow drops the term, y-window overflow drops or throws per mode.
    void accumulate(const Exponents& e, const Rational& c);

    TruncationProfile profile_;
    TermMap terms_;
};

// 1 / (1 - m) = 1 + m + m^2 + ... for a monomial m (at most one term) with no
// constant part. Termination needs a strictly positive q, t or u exponent.
TruncatedSeries inv_one_minus(const TruncatedSeries& m);

// sum_{k>=0} s^k / k!. Requires zero constant term, and every term of s must
// carry a strictly positive q, t or u exponent (otherwise powers of s never
// leave the truncation profile and the sum is not finite).
TruncatedSeries exp(const TruncatedSeries& s);

// log(1 + s) = sum_{k>=1} (-1)^{k+1} s^k / k. Same preconditions as exp.
TruncatedSeries log_one_plus(const TruncatedSeries& s);

// base^exponent = exp(exponent * log(1 + (base - 1))). base must have
// constant term exactly 1; exponent must be free of q, t and y (a polynomial
// in u, or a constant). Integer exponents agree with repeated multiplication.
TruncatedSeries pow(const TruncatedSeries& base, const TruncatedSeries& exponent);
TruncatedSeries pow(const TruncatedSeries& base, const Rational& exponent);
TruncatedSeries pow(const TruncatedSeries& base, long long exponent);

// Partial exponent assignment for coefficient extraction.
struct ExponentQuery {
    std::optional<int> q;
    std::optional<int> t;
    std::optional<int> y;
    std::optional<int> u;
};

// Coefficient of the assigned monomial, as a series in the remaining
// variables. Assigned variables collapse to order 0 in the result profile.
// Assigning an exponent outside the profile is an error.
TruncatedSeries coeff(const TruncatedSeries& s, const ExponentQuery& which);

// Convenience: the coefficient of q^n.
TruncatedSeries coeff_q(const TruncatedSeries& s, int n);

// Substitutes a rational value for one variable (term-wise value^exponent).
// value must be nonzero if any term has a negative exponent in v.
TruncatedSeries substitute(const TruncatedSeries& s, VarId v, const Rational& value);

// Moves all exponents from one variable to another (both in {q, t, u}).
// Every term of s must be free of `to`.
TruncatedSeries rename_var(const TruncatedSeries& s, VarId from, VarId to);

// "p/q*q^2*t" style rendering: terms in ascending exponent order (variables
// ordered q, t, y, u), coefficients printed exactly.
std::string to_string(const TruncatedSeries& s);
std::string to_string(const TruncatedSeries& s, const std::array<std::string, 4>& var_names);

}  // namespace symprod
