#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prehom {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; anything larger is promoted to a GMP rational and demoted
/// again as soon as it fits. Both representations are canonical, so equality
/// is a plain field comparison.
class Rational {
public:
    Rational() = default;
    Rational(long long value);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// a -= factor * b, the inner step of every elimination loop.
void sub_mul(Rational& a, const Rational& factor, const Rational& b);

}  // namespace prehom
