#include "symprod/series.hpp"

#include <sstream>
#include <stdexcept>

namespace symprod {

int Exponents::get(VarId v) const {
    switch (v) {
        case VarId::q: return q;
        case VarId::t: return t;
        case VarId::y: return y;
        case VarId::u: return u;
    }
    throw std::logic_error("Exponents::get: bad VarId");
}

void Exponents::set(VarId v, int e) {
    switch (v) {
        case VarId::q: q = e; return;
        case VarId::t: t = e; return;
        case VarId::y: y = e; return;
        case VarId::u: u = e; return;
    }
    throw std::logic_error("Exponents::set: bad VarId");
}

void TruncationProfile::validate() const {
    if (q_order < 0 || t_order < 0 || u_order < 0) {
        throw std::invalid_argument("TruncationProfile: negative truncation order");
    }
    if (y_min > 0 || y_max < 0) {
        throw std::invalid_argument("TruncationProfile: y-window must satisfy y_min <= 0 <= y_max");
    }
}

TruncatedSeries::TruncatedSeries(const TruncationProfile& profile) : profile_(profile) {
    profile_.validate();
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, const TruncationProfile& profile) {
    return monomial(c, Exponents{}, profile);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, const Exponents& e,
                                          const TruncationProfile& profile) {
    if (e.q < 0 || e.t < 0 || e.u < 0) {
        throw std::invalid_argument("TruncatedSeries::monomial: negative q/t/u exponent");
    }
    TruncatedSeries s(profile);
    s.accumulate(e, c);
    return s;
}

Rational TruncatedSeries::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
    if (!profile_.contains(e)) {
        std::ostringstream os;
        os << "coefficient (q,t,y,u)=(" << e.q << "," << e.t << "," << e.y << "," << e.u
           << ") lies outside the truncation profile";
        throw std::invalid_argument(os.str());
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::accumulate(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    if (e.q > profile_.q_order || e.t > profile_.t_order || e.u > profile_.u_order) {
        return;  // truncated
    }
    if (e.y < profile_.y_min || e.y > profile_.y_max) {
        if (profile_.y_mode == YWindowMode::truncating) return;
        std::ostringstream os;
        os << "y-exponent " << e.y << " escapes the strict window [" << profile_.y_min << ","
           << profile_.y_max << "]";
        throw std::overflow_error(os.str());
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(profile_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {

void require_equal_profiles(const TruncationProfile& a, const TruncationProfile& b,
                            const char* op) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(op) + ": operand truncation profiles differ");
    }
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_equal_profiles(profile_, o.profile_, "add");
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_equal_profiles(profile_, o.profile_, "sub");
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_profiles(a.profile_, b.profile_, "mul");
    TruncatedSeries r(a.profile_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.accumulate(ea + eb, ca * cb);
        }
    }
    return r;
}

TruncatedSeries inv_one_minus(const TruncatedSeries& m) {
    if (m.terms().size() > 1) {
        throw std::invalid_argument("inv_one_minus: argument must be a monomial");
    }
    TruncatedSeries acc = TruncatedSeries::constant(1, m.profile());
    if (m.is_zero()) return acc;
    const Exponents& e = m.terms().begin()->first;
    if (e.all_zero()) {
        throw std::invalid_argument("inv_one_minus: monomial has a constant part");
    }
    if (e.q <= 0 && e.t <= 0 && e.u <= 0) {
        throw std::invalid_argument(
            "inv_one_minus: monomial needs a positive q, t or u exponent to terminate");
    }
    TruncatedSeries power = TruncatedSeries::constant(1, m.profile());
    while (true) {
        power = power * m;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc;
}

namespace {

// Shared precondition of exp/log_one_plus: no constant term, and each term
// must gain q/t/u degree under powering so the expansion loop terminates.
void require_expandable(const TruncatedSeries& s, const char* op) {
    for (const auto& [e, c] : s.terms()) {
        if (e.all_zero()) {
            throw std::invalid_argument(std::string(op) + ": argument has a nonzero constant term");
        }
        if (e.q <= 0 && e.t <= 0 && e.u <= 0) {
            throw std::invalid_argument(std::string(op) +
                                        ": argument has a term with no positive q/t/u exponent; "
                                        "the expansion would not terminate");
        }
    }
}

}  // namespace

TruncatedSeries exp(const TruncatedSeries& s) {
    require_expandable(s, "exp");
    TruncatedSeries acc = TruncatedSeries::constant(1, s.profile());
    TruncatedSeries term = TruncatedSeries::constant(1, s.profile());
    for (long long k = 1;; ++k) {
        term = term * s;
        term *= Rational(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

TruncatedSeries log_one_plus(const TruncatedSeries& s) {
    require_expandable(s, "log_one_plus");
    TruncatedSeries acc(s.profile());
    TruncatedSeries power = TruncatedSeries::constant(1, s.profile());
    for (long long k = 1;; ++k) {
        power = power * s;
        if (power.is_zero()) break;
        const Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
        acc += power * c;
    }
    return acc;
}

TruncatedSeries pow(const TruncatedSeries& base, const TruncatedSeries& exponent) {
    require_equal_profiles(base.profile(), exponent.profile(), "pow");
    if (!(base.constant_term() == Rational(1))) {
        throw std::invalid_argument("pow: base constant term must be 1");
    }
    for (const auto& [e, c] : exponent.terms()) {
        if (e.q != 0 || e.t != 0 || e.y != 0) {
            throw std::invalid_argument("pow: exponent must be a polynomial in u (or a constant)");
        }
    }
    TruncatedSeries reduced = base - TruncatedSeries::constant(1, base.profile());
    return exp(exponent * log_one_plus(reduced));
}

TruncatedSeries pow(const TruncatedSeries& base, const Rational& exponent) {
    return pow(base, TruncatedSeries::constant(exponent, base.profile()));
}

TruncatedSeries pow(const TruncatedSeries& base, long long exponent) {
    return pow(base, Rational(exponent));
}

TruncatedSeries coeff(const TruncatedSeries& s, const ExponentQuery& which) {
    const TruncationProfile& p = s.profile();
    auto check = [](std::optional<int> asked, int lo, int hi, const char* var) {
        if (asked && (*asked < lo || *asked > hi)) {
            std::ostringstream os;
            os << "coeff: requested " << var << "-exponent " << *asked
               << " outside the truncation profile";
            throw std::invalid_argument(os.str());
        }
    };
    check(which.q, 0, p.q_order, "q");
    check(which.t, 0, p.t_order, "t");
    check(which.u, 0, p.u_order, "u");
    check(which.y, p.y_min, p.y_max, "y");

    TruncationProfile rp = p;
    if (which.q) rp.q_order = 0;
    if (which.t) rp.t_order = 0;
    if (which.u) rp.u_order = 0;
    if (which.y) { rp.y_min = 0; rp.y_max = 0; }

    TruncatedSeries r(rp);
    for (const auto& [e, c] : s.terms()) {
        if (which.q && e.q != *which.q) continue;
        if (which.t && e.t != *which.t) continue;
        if (which.y && e.y != *which.y) continue;
        if (which.u && e.u != *which.u) continue;
        Exponents re = e;
        if (which.q) re.q = 0;
        if (which.t) re.t = 0;
        if (which.y) re.y = 0;
        if (which.u) re.u = 0;
        r += TruncatedSeries::monomial(c, re, rp);
    }
    return r;
}

TruncatedSeries coeff_q(const TruncatedSeries& s, int n) {
    ExponentQuery w;
    w.q = n;
    return coeff(s, w);
}

TruncatedSeries substitute(const TruncatedSeries& s, VarId v, const Rational& value) {
    TruncationProfile rp = s.profile();
    switch (v) {
        case VarId::q: rp.q_order = 0; break;
        case VarId::t: rp.t_order = 0; break;
        case VarId::u: rp.u_order = 0; break;
        case VarId::y: rp.y_min = 0; rp.y_max = 0; break;
    }
    TruncatedSeries r(rp);
    for (const auto& [e, c] : s.terms()) {
        const int k = e.get(v);
        Exponents re = e;
        re.set(v, 0);
        if (k == 0) {
            r += TruncatedSeries::monomial(c, re, rp);
        } else if (!(value.is_zero() && k > 0)) {
            r += TruncatedSeries::monomial(c * pow(value, k), re, rp);
        }
    }
    return r;
}

TruncatedSeries rename_var(const TruncatedSeries& s, VarId from, VarId to) {
    if (from == VarId::y || to == VarId::y) {
        throw std::invalid_argument("rename_var: only q, t, u may be renamed");
    }
    if (from == to) return s;
    for (const auto& [e, c] : s.terms()) {
        if (e.get(to) != 0) {
            throw std::invalid_argument("rename_var: series already involves the target variable");
        }
    }
    TruncationProfile rp = s.profile();
    auto order_of = [](const TruncationProfile& p, VarId v) -> int {
        switch (v) {
            case VarId::q: return p.q_order;
            case VarId::t: return p.t_order;
            case VarId::u: return p.u_order;
            default: return 0;
        }
    };
    auto set_order = [](TruncationProfile& p, VarId v, int n) {
        switch (v) {
            case VarId::q: p.q_order = n; break;
            case VarId::t: p.t_order = n; break;
            case VarId::u: p.u_order = n; break;
            default: break;
        }
    };
    const int moved = order_of(s.profile(), from);
    set_order(rp, to, moved);
    set_order(rp, from, 0);

    TruncatedSeries r(rp);
    for (const auto& [e, c] : s.terms()) {
        Exponents re = e;
        const int k = e.get(from);
        re.set(from, 0);
        re.set(to, k);
        r += TruncatedSeries::monomial(c, re, rp);
    }
    return r;
}

std::string to_string(const TruncatedSeries& s) {
    return to_string(s, {std::string(kVarNames[0]), std::string(kVarNames[1]),
                         std::string(kVarNames[2]), std::string(kVarNames[3])});
}

std::string to_string(const TruncatedSeries& s, const std::array<std::string, 4>& var_names) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string vars;
        const int exps[4] = {e.q, e.t, e.y, e.u};
        for (int i = 0; i < 4; ++i) {
            if (exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_names[static_cast<size_t>(i)];
            if (exps[i] != 1) vars += "^" + std::to_string(exps[i]);
        }
        if (vars.empty()) {
            os << mag.str();
        } else if (mag == Rational(1)) {
            os << vars;
        } else {
            os << mag.str() << "*" << vars;
        }
    }
    return os.str();
}

}  // namespace symprod
