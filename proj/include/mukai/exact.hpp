#pragma once

#include "mukai/numeric.hpp"

#include <optional>
#include <vector>

namespace mukai {

// Integer multiple of a square root: coeff * sqrt(radicand).
// The radicand is squarefree after construction; square factors move into
// the coefficient. A zero coefficient forces radicand 1, so equality is
// plain field comparison.
class Surd {
public:
    Surd() : coeff_(0), radicand_(1) {}
    Surd(Int coeff, Int radicand) {
        if (radicand < 1) throw InvalidInput("Surd: radicand must be positive");
        if (coeff == 0) {
            coeff_ = 0;
            radicand_ = 1;
            return;
        }
        auto [outer, core] = extract_square(radicand);
        coeff_ = coeff * outer;
        radicand_ = core;
    }

    const Int& coeff() const { return coeff_; }
    const Int& radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }
    bool is_zero() const { return coeff_ == 0; }

    friend Surd operator*(const Surd& u, const Surd& v) {
        return Surd(u.coeff_ * v.coeff_, u.radicand_ * v.radicand_);
    }
    friend Surd operator-(const Surd& u) { return Surd(-u.coeff_, u.radicand_); }
    friend bool operator==(const Surd& u, const Surd& v) {
        return u.coeff_ == v.coeff_ && u.radicand_ == v.radicand_;
    }

    double to_double() const {
        Float f = coeff_.convert_to<Float>() * boost::multiprecision::sqrt(radicand_.convert_to<Float>());
        return f.convert_to<double>();
    }

private:
    Int coeff_;
    Int radicand_;
};

// Finite sum of surds with pairwise distinct radicands.
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(const Surd& s) { *this += s; }  // NOLINT(google-explicit-constructor)

    SurdSum& operator+=(const Surd& s) {
        if (s.is_zero()) return *this;
        for (auto& t : terms_) {
            if (t.radicand() == s.radicand()) {
                Int c = t.coeff() + s.coeff();
                if (c == 0) {
                    t = terms_.back();
                    terms_.pop_back();
                } else {
                    t = Surd(c, t.radicand());
                }
                return *this;
            }
        }
        terms_.push_back(s);
        return *this;
    }

    SurdSum& operator+=(const SurdSum& o) {
        for (const auto& t : o.terms_) *this += t;
        return *this;
    }

    friend SurdSum operator+(SurdSum a, const SurdSum& b) {
        a += b;
        return a;
    }

    friend SurdSum operator*(const SurdSum& a, const SurdSum& b) {
        SurdSum out;
        for (const auto& u : a.terms_)
            for (const auto& v : b.terms_) out += u * v;
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Surd>& terms() const { return terms_; }

    // The value as a plain integer, if it is one.
    std::optional<Int> as_integer() const {
        if (terms_.empty()) return Int(0);
        if (terms_.size() == 1 && terms_[0].is_rational()) return terms_[0].coeff();
        return std::nullopt;
    }

    // The value as b*sqrt(D) with b integral, if it has that shape.
    std::optional<Int> as_multiple_of_sqrt(const Int& D) const {
        if (terms_.empty()) return Int(0);
        const Surd unit(1, D);
        if (terms_.size() != 1) return std::nullopt;
        const Surd& t = terms_[0];
        if (t.radicand() != unit.radicand()) return std::nullopt;
        if (t.coeff() % unit.coeff() != 0) return std::nullopt;
        return t.coeff() / unit.coeff();
    }

private:
    std::vector<Surd> terms_;
};

// Element x + y*sqrt(delta) of a real quadratic field, with exact sign
// decisions. delta is fixed per value; a rational value carries delta 0 and
// mixes freely with any field.
class QuadraticReal {
public:
    QuadraticReal() : x_(0), y_(0), delta_(0) {}
    QuadraticReal(Rat x, Rat y, Int delta) : x_(std::move(x)), y_(std::move(y)), delta_(std::move(delta)) {
        if (delta_ < 0) throw InvalidInput("QuadraticReal: negative discriminant");
        if (y_ == 0 || delta_ == 0) {
            y_ = 0;
            delta_ = 0;
        }
    }
    static QuadraticReal rational(Rat x) { return QuadraticReal(std::move(x), 0, 0); }

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    const Int& delta() const { return delta_; }
    bool is_rational() const { return y_ == 0; }

    friend QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b) {
        Int d = common_delta(a, b);
        return QuadraticReal(a.x_ + b.x_, a.y_ + b.y_, d);
    }
    friend QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b) {
        Int d = common_delta(a, b);
        return QuadraticReal(a.x_ - b.x_, a.y_ - b.y_, d);
    }
    friend QuadraticReal operator-(const QuadraticReal& a) { return QuadraticReal(-a.x_, -a.y_, a.delta_); }
    friend QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b) {
        Int d = common_delta(a, b);
        return QuadraticReal(a.x_ * b.x_ + a.y_ * b.y_ * Rat(d), a.x_ * b.y_ + a.y_ * b.x_, d);
    }
    friend QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b) {
        if (b.sign() == 0) throw InvalidInput("QuadraticReal: division by zero");
        const Rat norm = b.x_ * b.x_ - b.y_ * b.y_ * Rat(b.delta_);
        if (norm == 0) throw InvalidInput("QuadraticReal: divisor has zero field norm");
        const QuadraticReal conj(b.x_, -b.y_, b.delta_);
        QuadraticReal num = a * conj;
        return QuadraticReal(num.x_ / norm, num.y_ / norm, num.delta_);
    }

    QuadraticReal pow(unsigned long long n) const {
        QuadraticReal result = rational(1);
        QuadraticReal base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    // Exact sign, decided in rational arithmetic.
    int sign() const {
        if (y_ == 0) return sign_of(x_);
        if (x_ == 0) return sign_of(y_);
        const int sx = sign_of(x_);
        const int sy = sign_of(y_);
        if (sx == sy) return sx;
        const Rat lhs = x_ * x_;
        const Rat rhs = y_ * y_ * Rat(delta_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sx : sy;
    }

    QuadraticReal abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() == 0; }
    friend bool operator<(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() >= 0; }

    double to_double() const {
        Float f = x_.convert_to<Float>();
        if (y_ != 0) f += y_.convert_to<Float>() * boost::multiprecision::sqrt(delta_.convert_to<Float>());
        return f.convert_to<double>();
    }

    // "(7+3*sqrt(5))/2" style rendering over a common denominator.
    std::string exact_string() const;

private:
    static Int common_delta(const QuadraticReal& a, const QuadraticReal& b) {
        if (a.y_ == 0) return b.delta_;
        if (b.y_ == 0) return a.delta_;
        if (a.delta_ != b.delta_)
            throw InvalidInput("QuadraticReal: mixing values from different quadratic fields");
        return a.delta_;
    }

    Rat x_;
    Rat y_;
    Int delta_;
};

// Roots of x^2 - tr*x + det = 0, larger first; exact in Q(sqrt(tr^2-4det)).
std::pair<QuadraticReal, QuadraticReal> eigenvalues(const Int& tr, const Int& det = 1);

inline double to_float(const QuadraticReal& x) { return x.to_double(); }

}  // namespace mukai
