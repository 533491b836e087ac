#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace roller {

// int64 rational, always reduced with positive denominator; every op is overflow-checked
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT implicit on purpose
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;
    // "3", "-7/2", "0.25"
    static Rational parse(std::string_view s);

private:
    static Rational from_wide(__int128 n, __int128 d);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// a + b*sqrt(3)
class Exact {
public:
    Exact() = default;
    Exact(Rational a) : a_(a) {}  // NOLINT
    Exact(std::int64_t a) : a_(a) {}  // NOLINT
    Exact(Rational a, Rational b) : a_(a), b_(b) {}

    static Exact sqrt3() { return Exact(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    bool is_rational() const { return b_.sign() == 0; }
    bool is_zero() const { return a_.sign() == 0 && b_.sign() == 0; }
    int sign() const;
    std::int64_t floor() const;
    std::int64_t ceil() const;
    bool is_integer() const { return is_rational() && a_.is_integer(); }
    double to_double() const;
    Exact abs() const { return sign() < 0 ? -*this : *this; }
    Exact inverse() const;

    Exact operator-() const { return Exact(-a_, -b_); }
    friend Exact operator+(const Exact& x, const Exact& y) { return Exact(x.a_ + y.a_, x.b_ + y.b_); }
    friend Exact operator-(const Exact& x, const Exact& y) { return Exact(x.a_ - y.a_, x.b_ - y.b_); }
    friend Exact operator*(const Exact& x, const Exact& y);
    friend Exact operator/(const Exact& x, const Exact& y) { return x * y.inverse(); }
    Exact& operator+=(const Exact& o) { return *this = *this + o; }
    Exact& operator-=(const Exact& o) { return *this = *this - o; }
    Exact& operator*=(const Exact& o) { return *this = *this * o; }

    friend bool operator==(const Exact& x, const Exact& y) = default;
    friend std::strong_ordering operator<=>(const Exact& x, const Exact& y);

    // "1/2", "-√3/2", "1+2√3"; parse also takes "sqrt3" for the radical
    std::string str() const;
    static Exact parse(std::string_view s);

private:
    Rational a_;
    Rational b_;
};

using ExactVec = std::vector<Exact>;

Exact dot(const ExactVec& u, const ExactVec& v);
// comma separated coordinates, e.g. "1/2,-√3/2"
ExactVec parse_exact_vec(std::string_view s);
std::string exact_vec_str(const ExactVec& v);

// a.x <= b
struct LinearConstraint {
    ExactVec a;
    Exact b;
};

// closed polyhedron feasibility by Fourier-Motzkin elimination, exact
bool feasible(std::vector<LinearConstraint> cs, std::size_t dim);

}  // namespace roller
