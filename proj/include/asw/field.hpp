#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace asw {

// Exact rational scalar. Thin value wrapper around GMP so the rest of the
// library only sees the field interface (zero/one/inv/is_zero/str).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static const char* field_name() { return "Q"; }

    bool is_zero() const { return v_ == 0; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(1) / v_);
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const { return *this * o.inv(); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

// Prime field F_p with the modulus fixed once per run (CLI --char / test setup).
class Fp {
public:
    static inline std::uint64_t modulus = 2;

    static void set_modulus(std::uint64_t p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be a prime >= 2");
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("Fp: modulus must be prime");
        modulus = p;
    }

    Fp() : v_(0) {}
    Fp(long n) {
        long long m = static_cast<long long>(modulus);
        long long r = n % m;
        v_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }
    explicit Fp(const std::string& s) : Fp(std::stol(s)) {}

    static Fp zero() { return Fp(0); }
    static Fp one() { return Fp(1); }
    static std::string field_name() { return "Fp:" + std::to_string(modulus); }

    bool is_zero() const { return v_ == 0; }
    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        long long a = static_cast<long long>(v_), m = static_cast<long long>(modulus);
        long long x0 = 0, x1 = 1, r0 = m, r1 = a;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }

    Fp operator-() const { return Fp(-(long)v_); }
    Fp operator+(const Fp& o) const { return from_raw((v_ + o.v_) % modulus); }
    Fp operator-(const Fp& o) const { return from_raw((v_ + modulus - o.v_) % modulus); }
    Fp operator*(const Fp& o) const { return from_raw((v_ * o.v_) % modulus); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % modulus; return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ + modulus - o.v_) % modulus; return *this; }
    Fp& operator*=(const Fp& o) { v_ = (v_ * o.v_) % modulus; return *this; }
    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp from_raw(std::uint64_t r) { Fp x; x.v_ = r; return x; }
    std::uint64_t v_;
};

template <class K>
concept Field = requires(K a, K b) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inv() } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::same_as<bool>;
};

} // namespace asw
