#include "prehom/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace prehom {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    constexpr u128 k64 = std::numeric_limits<std::uint64_t>::max();
    while (a > k64 || b > k64) {
        if (b == 0) return a;
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

mpz_class to_mpz(i128 v) {
    const u128 u = abs128(v);
    mpz_class r(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    r <<= 64;
    r += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    if (v < 0) r = -r;
    return r;
}

std::uint64_t uabs(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

Rational::Rational(long long value) : num_(value) {
    if (value == std::numeric_limits<long long>::min()) assign_big(mpq_class(mpz_class(static_cast<long>(value))));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    q.canonicalize();
    assign_big(std::move(q));
}

Rational::Rational(const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    assign_big(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_big(mpq_class value) {
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        const long nl = n.get_si();
        if (nl != std::numeric_limits<long>::min()) {
            num_ = nl;
            den_ = d.get_si();
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    if (big_) *big_ = std::move(value);
    else big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view part) {
        if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw std::invalid_argument("not a rational: '" + s + "'");
    } else {
        if (!valid_int(std::string_view(s).substr(0, slash)) || !valid_int(std::string_view(s).substr(slash + 1)))
            throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (slash != std::string::npos) {
        const auto pos = s.find('/');
        if (s[pos + 1] == '+') s.erase(pos + 1, 1);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    Rational r;
    r.assign_big(std::move(q));
    return r;
}

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) *r.big_ = -*r.big_;
    else r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (!big_ && !rhs.big_) {
        i128 n;
        i128 d;
        if (den_ == rhs.den_) {
            n = static_cast<i128>(num_) + rhs.num_;
            d = den_;
            if (d == 1 && fits(n)) {
                num_ = static_cast<std::int64_t>(n);
                return *this;
            }
        } else {
            n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
            d = static_cast<i128>(den_) * rhs.den_;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const u128 g = gcd128(abs128(n), static_cast<u128>(d));
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (rhs.is_zero()) return *this;
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = Rational();
    if (!big_ && !rhs.big_) {
        const std::uint64_t g1 = std::gcd(uabs(num_), static_cast<std::uint64_t>(rhs.den_));
        const std::uint64_t g2 = std::gcd(uabs(rhs.num_), static_cast<std::uint64_t>(den_));
        const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (rhs.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (rhs.den_ / static_cast<std::int64_t>(g1));
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!rhs.big_) {
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in magnitude class
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

void sub_mul(Rational& a, const Rational& factor, const Rational& b) {
    if (factor.is_zero() || b.is_zero()) return;
    Rational t = factor;
    t *= b;
    a -= t;
}

}  // namespace prehom
