#include "kronrep/modular.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace kronrep::modp {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline double reduce_signed(double v, double p, double pinv) {
    v -= std::floor(v * pinv) * p;
    if (v < 0) v += p;
    if (v >= p) v -= p;
    return v;
}

// dst[j] = dst[j] - c * src[j] mod p over [from, n)
inline void axpy(double* __restrict dst, const double* __restrict src, double c, int from, int n, double p,
                 double pinv) {
    for (int j = from; j < n; ++j) {
        double v = dst[j] - c * src[j];
        v -= std::floor(v * pinv) * p;
        v += (v < 0) ? p : 0.0;
        v -= (v >= p) ? p : 0.0;
        dst[j] = v;
    }
}

}  // namespace

std::uint32_t prime(std::size_t index) {
    static std::mutex mu;
    static std::vector<std::uint32_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint32_t n = cache.empty() ? (1u << 26) : cache.back();
    while (cache.size() <= index) {
        do { --n; } while (!is_prime(n));
        cache.push_back(n);
    }
    return cache[index];
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    if (nr == 0) throw std::domain_error("inverse of zero mod p");
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

ModMatrix::ModMatrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {
    if (p >= (1u << 26)) throw std::invalid_argument("prime too large for the double engine");
}

void ModMatrix::set(int i, int j, long long v) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    at(i, j) = static_cast<double>(r);
}

void ModMatrix::add(int i, int j, long long v) {
    long long r = (static_cast<long long>(at(i, j)) + v % static_cast<long long>(p_)) % static_cast<long long>(p_);
    if (r < 0) r += p_;
    at(i, j) = static_cast<double>(r);
}

std::optional<std::uint32_t> reduce(const Rational& q, std::uint32_t p) {
    const unsigned long d = mpz_fdiv_ui(q.value().get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    const unsigned long n = mpz_fdiv_ui(q.value().get_num_mpz_t(), p);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * inv_mod(d, p) % p);
}

std::optional<ModMatrix> reduce(const MatQ& m, std::uint32_t p) {
    ModMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), p);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            auto v = reduce(m(i, j), p);
            if (!v) return std::nullopt;
            out.at(static_cast<int>(i), static_cast<int>(j)) = static_cast<double>(*v);
        }
    return out;
}

ModEchelon echelonize(ModMatrix& m, bool reduced) {
    ModEchelon e;
    const int rows = m.rows(), cols = m.cols();
    const double p = m.prime();
    const double pinv = 1.0 / p;
    std::vector<int> origin(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) origin[static_cast<size_t>(i)] = i;
    std::vector<double> tmp(static_cast<size_t>(cols));
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0.0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
            std::swap(origin[static_cast<size_t>(piv)], origin[static_cast<size_t>(r)]);
        }
        double* prow = m.row(r);
        const double inv = static_cast<double>(inv_mod(static_cast<std::uint64_t>(prow[c]), m.prime()));
        for (int j = c; j < cols; ++j)
            if (prow[j] != 0.0) prow[j] = reduce_signed(prow[j] * inv, p, pinv);
        for (int i = reduced ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            double* row = m.row(i);
            const double f = row[c];
            if (f == 0.0) continue;
            axpy(row, prow, f, c, cols, p, pinv);
        }
        e.pivots.push_back(c);
        e.pivot_rows.push_back(origin[static_cast<size_t>(r)]);
        ++r;
    }
    e.rank = r;
    return e;
}

int rank(ModMatrix m) { return echelonize(m, false).rank; }

ModMatrix kernel(ModMatrix m) {
    const ModEchelon e = echelonize(m, true);
    const int cols = m.cols();
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = 1;
    ModMatrix k(cols, cols - e.rank, m.prime());
    const double p = m.prime();
    int col = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        k.at(f, col) = 1.0;
        for (int i = 0; i < e.rank; ++i) {
            const double v = m.at(i, f);
            k.at(e.pivots[static_cast<size_t>(i)], col) = v == 0.0 ? 0.0 : p - v;
        }
        ++col;
    }
    return k;
}

std::uint32_t Zp::throw_needs_prime() { throw std::invalid_argument("nonzero Zp literal needs a prime"); }

std::optional<MatP> reduce_matrix(const MatQ& m, std::uint32_t p) {
    MatP out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            auto v = reduce(m(i, j), p);
            if (!v) return std::nullopt;
            out(i, j) = Zp(*v, p);
        }
    return out;
}

ModMatrix to_engine(const MatP& m, std::uint32_t p) {
    ModMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), p);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = m(i, j).value();
    return out;
}

MatP from_engine(const ModMatrix& m) {
    MatP out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Zp(static_cast<std::uint64_t>(m.at(i, j)), m.prime());
    return out;
}

}  // namespace kronrep::modp
