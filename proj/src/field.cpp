#include "linklab/field.hpp"

namespace linklab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p),
                 newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("invmod: element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set covering all n < 2^64
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw PreconditionError("prime_field: " + std::to_string(p) +
                                " is not prime");
    return Field(p);
}

Coeff Field::zero() const {
    return is_rationals() ? Coeff::rational(mpq_class(0)) : Coeff::residue(0);
}

Coeff Field::one() const {
    return is_rationals() ? Coeff::rational(mpq_class(1))
                          : Coeff::residue(1 % p_);
}

Coeff Field::from_int(std::int64_t k) const {
    if (is_rationals()) return Coeff::rational(mpq_class(static_cast<long>(k)));
    std::int64_t m = k % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return Coeff::residue(static_cast<std::uint64_t>(m));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
    if (is_rationals())
        return Coeff::rational(a.as_rational() + b.as_rational());
    std::uint64_t s = a.as_residue() + b.as_residue();
    if (s >= p_) s -= p_;
    return Coeff::residue(s);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
    if (is_rationals())
        return Coeff::rational(a.as_rational() - b.as_rational());
    std::uint64_t x = a.as_residue(), y = b.as_residue();
    return Coeff::residue(x >= y ? x - y : x + p_ - y);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
    if (is_rationals())
        return Coeff::rational(a.as_rational() * b.as_rational());
    return Coeff::residue(mulmod(a.as_residue(), b.as_residue(), p_));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
    return mul(a, inv(b));
}

Coeff Field::neg(const Coeff& a) const {
    if (is_rationals()) return Coeff::rational(-a.as_rational());
    std::uint64_t x = a.as_residue();
    return Coeff::residue(x == 0 ? 0 : p_ - x);
}

Coeff Field::inv(const Coeff& a) const {
    if (is_zero(a)) throw Error("division by zero coefficient");
    if (is_rationals()) return Coeff::rational(1 / a.as_rational());
    return Coeff::residue(invmod(a.as_residue(), p_));
}

Coeff Field::pow(const Coeff& a, std::uint64_t e) const {
    if (is_rationals()) {
        mpq_class r(1);
        mpq_class b = a.as_rational();
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return Coeff::rational(r);
    }
    return Coeff::residue(powmod(a.as_residue(), e, p_));
}

bool Field::is_zero(const Coeff& a) const {
    return is_rationals() ? a.as_rational() == 0 : a.as_residue() == 0;
}

bool Field::is_one(const Coeff& a) const {
    return is_rationals() ? a.as_rational() == 1 : a.as_residue() == 1 % p_;
}

std::string Field::to_string(const Coeff& a) const {
    if (is_rationals()) return a.as_rational().get_str();
    // symmetric range for readability: p-1 prints as -1
    std::uint64_t r = a.as_residue();
    if (r > p_ / 2) return "-" + std::to_string(p_ - r);
    return std::to_string(r);
}

}  // namespace linklab
