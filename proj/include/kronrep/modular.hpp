#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kronrep/linalg.hpp"

// Word-size prime field elimination. Entries are held as doubles in [0, p)
// with p < 2^26 so a product plus an entry stays exact in 53 bits.
namespace kronrep::modp {

// Deterministic list: the index-th prime below 2^26, descending.
std::uint32_t prime(std::size_t index);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(int rows, int cols, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }
    const double* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }

    void set(int i, int j, long long v);
    void add(int i, int j, long long v);

private:
    int rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<double> a_;
};

// Reduction of a rational; nullopt when p divides the denominator.
std::optional<std::uint32_t> reduce(const Rational& q, std::uint32_t p);
std::optional<ModMatrix> reduce(const MatQ& m, std::uint32_t p);

struct ModEchelon {
    std::vector<int> pivots;      // pivot columns, ascending
    std::vector<int> pivot_rows;  // original row index feeding each pivot
    int rank = 0;
};

// In-place elimination. With reduced = true the result is the RREF (pivot rows
// occupy rows 0..rank-1, pivots normalized to 1).
ModEchelon echelonize(ModMatrix& m, bool reduced);

int rank(ModMatrix m);
inline int nullity(ModMatrix m) { const int c = m.cols(); return c - rank(std::move(m)); }

// Normalized kernel basis (same convention as the exact routine), as columns.
ModMatrix kernel(ModMatrix m);

// Element of F_p for a runtime prime p < 2^26. A default-constructed zero
// carries p = 0 and adopts the prime of whatever it meets.
class Zp {
public:
    Zp() = default;
    Zp(int v) : v_(v == 0 ? 0 : throw_needs_prime()) {}
    Zp(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Zp operator+(Zp a, Zp b) { const auto p = a.p_ | b.p_; return raw((a.v_ + b.v_) % (p ? p : 1), p); }
    friend Zp operator-(Zp a, Zp b) { const auto p = a.p_ | b.p_; return raw((a.v_ + p - b.v_) % (p ? p : 1), p); }
    friend Zp operator*(Zp a, Zp b) {
        const auto p = a.p_ | b.p_;
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % (p ? p : 1)), p);
    }
    friend Zp operator/(Zp a, Zp b) { return a * Zp(inv_mod(b.v_, b.p_), b.p_); }
    friend Zp operator-(Zp a) { return raw(a.v_ ? a.p_ - a.v_ : 0, a.p_); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }
    Zp& operator/=(Zp o) { return *this = *this / o; }
    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

private:
    static std::uint32_t throw_needs_prime();
    static Zp raw(std::uint32_t v, std::uint32_t p) { Zp z; z.v_ = v; z.p_ = p; return z; }
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline Zp conj(Zp x) { return x; }
inline Zp real(Zp x) { return x; }
inline Zp imag(Zp) { return Zp(); }
inline Zp abs(Zp x) { return x; }
inline Zp abs2(Zp x) { return x * x; }
inline bool is_zero(Zp x) { return x.is_zero(); }

using MatP = Mat<Zp>;

std::optional<MatP> reduce_matrix(const MatQ& m, std::uint32_t p);
ModMatrix to_engine(const MatP& m, std::uint32_t p);
MatP from_engine(const ModMatrix& m);

}  // namespace kronrep::modp

namespace Eigen {
template <>
struct NumTraits<kronrep::modp::Zp> : GenericNumTraits<kronrep::modp::Zp> {
    using Real = kronrep::modp::Zp;
    using NonInteger = kronrep::modp::Zp;
    using Nested = kronrep::modp::Zp;
    using Literal = kronrep::modp::Zp;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 0, RequireInitialization = 1, ReadCost = 1, AddCost = 2, MulCost = 4 };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
