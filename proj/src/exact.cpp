#include "roller/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roller/error.hpp"

namespace roller {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw Error(Errc::MalformedInput, "empty integer");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw Error(Errc::MalformedInput, std::string(s));
    i128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error(Errc::MalformedInput, "bad number '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (!fits64(v)) throw Error(Errc::Overflow, std::string(s));
    }
    return static_cast<std::int64_t>(neg ? -v : v);
}

}  // namespace

Rational Rational::from_wide(i128 n, i128 d) {
    if (d == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw Error(Errc::Overflow, "rational exceeds int64");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::DivisionByZero, "division by zero rational");
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Rational n = parse(s.substr(0, slash));
        Rational d = parse(s.substr(slash + 1));
        return n / d;
    }
    auto dotpos = s.find('.');
    if (dotpos == std::string_view::npos) return Rational(parse_int(s));
    std::string digits(s.substr(0, dotpos));
    std::string frac(s.substr(dotpos + 1));
    if (frac.empty() || frac.size() > 17) throw Error(Errc::MalformedInput, "bad decimal '" + std::string(s) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    bool neg = !digits.empty() && digits[0] == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    Rational ip(parse_int(digits));
    Rational fp(parse_int(frac), scale);
    return neg ? ip - fp : ip + fp;
}

// --- Q(sqrt3) ---

int Exact::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with 3b^2
    auto c = (a_ * a_) <=> (Rational(3) * b_ * b_);
    int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    return sa > 0 ? s : -s;
}

double Exact::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(3.0); }

std::int64_t Exact::floor() const {
    if (is_rational()) return a_.floor();
    auto f = static_cast<std::int64_t>(std::floor(to_double()));
    while (Exact(f) > *this) --f;
    while (Exact(f + 1) <= *this) ++f;
    return f;
}

std::int64_t Exact::ceil() const {
    std::int64_t f = floor();
    return Exact(f) == *this ? f : f + 1;
}

Exact Exact::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    Rational norm = a_ * a_ - Rational(3) * b_ * b_;
    return Exact(a_ / norm, -b_ / norm);
}

Exact operator*(const Exact& x, const Exact& y) {
    return Exact(x.a_ * y.a_ + Rational(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

std::strong_ordering operator<=>(const Exact& x, const Exact& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Exact::str() const {
    if (b_.sign() == 0) return a_.str();
    std::string surd;
    std::int64_t n = b_.num();
    if (n == 1) surd = "√3";
    else if (n == -1) surd = "-√3";
    else surd = std::to_string(n) + "√3";
    if (b_.den() != 1) surd += "/" + std::to_string(b_.den());
    if (a_.sign() == 0) return surd;
    if (surd[0] != '-') surd = "+" + surd;
    return a_.str() + surd;
}

Exact Exact::parse(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '*') t += ch;
    if (t.empty()) throw Error(Errc::MalformedInput, "empty number");
    // split into signed terms
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/') {
            terms.push_back(t.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(t.substr(start));

    static const char* radicals[] = {"\xE2\x88\x9A" "3", "sqrt3", "sqrt(3)", "r3"};
    Exact out;
    for (auto term : terms) {
        bool surd = false;
        for (const char* r : radicals) {
            auto p = term.find(r);
            if (p != std::string::npos) {
                term.erase(p, std::string_view(r).size());
                surd = true;
                break;
            }
        }
        bool neg = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            neg = term[0] == '-';
            term.erase(0, 1);
        }
        Rational c;
        if (term.empty()) {
            if (!surd) throw Error(Errc::MalformedInput, "bad number '" + std::string(s) + "'");
            c = Rational(1);
        } else if (term[0] == '/') {
            c = Rational(1) / Rational::parse(term.substr(1));
        } else {
            c = Rational::parse(term);
        }
        if (neg) c = -c;
        out += surd ? Exact(Rational(0), c) : Exact(c);
    }
    return out;
}

Exact dot(const ExactVec& u, const ExactVec& v) {
    if (u.size() != v.size()) throw Error(Errc::MalformedInput, "dimension mismatch in dot product");
    Exact s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

ExactVec parse_exact_vec(std::string_view s) {
    ExactVec out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(Exact::parse(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string exact_vec_str(const ExactVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

namespace {

// scale so the leading nonzero coefficient has absolute value one
void normalize(LinearConstraint& c) {
    for (const auto& x : c.a) {
        if (!x.is_zero()) {
            Exact f = x.abs().inverse();
            for (auto& y : c.a) y *= f;
            c.b *= f;
            return;
        }
    }
}

bool same_row(const LinearConstraint& p, const LinearConstraint& q) { return p.a == q.a && p.b == q.b; }

}  // namespace

bool feasible(std::vector<LinearConstraint> cs, std::size_t dim) {
    for (auto& c : cs)
        if (c.a.size() != dim) throw Error(Errc::MalformedInput, "constraint dimension mismatch");
    for (std::size_t var = dim; var-- > 0;) {
        std::vector<LinearConstraint> pos, neg, next;
        for (auto& c : cs) {
            int s = c.a[var].sign();
            if (s > 0) pos.push_back(c);
            else if (s < 0) neg.push_back(c);
            else next.push_back(c);
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Exact wp = -n.a[var], wn = p.a[var];
                LinearConstraint r;
                r.a.resize(dim);
                for (std::size_t j = 0; j < dim; ++j) r.a[j] = wp * p.a[j] + wn * n.a[j];
                r.a[var] = Exact();
                r.b = wp * p.b + wn * n.b;
                next.push_back(std::move(r));
            }
        }
        cs.clear();
        for (auto& c : next) {
            bool zero = std::all_of(c.a.begin(), c.a.end(), [](const Exact& x) { return x.is_zero(); });
            if (zero) {
                if (c.b.sign() < 0) return false;
                continue;
            }
            normalize(c);
            bool dup = std::any_of(cs.begin(), cs.end(), [&](const LinearConstraint& o) { return same_row(o, c); });
            if (!dup) cs.push_back(std::move(c));
        }
    }
    for (const auto& c : cs)
        if (c.b.sign() < 0) return false;
    return true;
}

}  // namespace roller
