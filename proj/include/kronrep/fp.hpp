#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <ostream>

namespace kronrep {

// Element of the prime field F_P for a small compile-time prime.
template <std::uint32_t P>
class Fp {
    static_assert(P >= 2 && P < (1u << 16), "small primes only");

public:
    Fp() = default;
    Fp(int v) : v_(static_cast<std::uint32_t>(((v % static_cast<int>(P)) + static_cast<int>(P)) % static_cast<int>(P))) {}
    Fp(long v) : Fp(static_cast<int>(v % static_cast<long>(P))) {}

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const {
        // Fermat; P is prime
        std::uint32_t base = v_, e = P - 2, acc = 1;
        while (e) {
            if (e & 1u) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return raw(acc);
    }

    friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % P); }
    friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + P - b.v_) % P); }
    friend Fp operator*(Fp a, Fp b) { return raw(a.v_ * b.v_ % P); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    friend Fp operator-(Fp a) { return raw((P - a.v_) % P); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    static Fp raw(std::uint32_t v) { Fp f; f.v_ = v; return f; }
    std::uint32_t v_ = 0;
};

template <std::uint32_t P> inline Fp<P> conj(Fp<P> x) { return x; }
template <std::uint32_t P> inline Fp<P> real(Fp<P> x) { return x; }
template <std::uint32_t P> inline Fp<P> imag(Fp<P>) { return Fp<P>(0); }
template <std::uint32_t P> inline Fp<P> abs(Fp<P> x) { return x; }
template <std::uint32_t P> inline Fp<P> abs2(Fp<P> x) { return x * x; }
template <std::uint32_t P> inline bool is_zero(Fp<P> x) { return x.is_zero(); }

using F2 = Fp<2>;
using F3 = Fp<3>;

}  // namespace kronrep

namespace Eigen {
template <std::uint32_t P>
struct NumTraits<kronrep::Fp<P>> : GenericNumTraits<kronrep::Fp<P>> {
    using Real = kronrep::Fp<P>;
    using NonInteger = kronrep::Fp<P>;
    using Nested = kronrep::Fp<P>;
    using Literal = kronrep::Fp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
