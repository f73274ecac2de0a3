// Exact rational kernel via p-adic lifting of the pivot block solve.
#include <algorithm>
#include <cmath>

#include "kronrep/linalg.hpp"
#include "kronrep/modular.hpp"

namespace kronrep::detail {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct IntRows {
    int rows = 0, cols = 0;
    std::vector<i64> a;  // row-major
    std::vector<std::vector<std::pair<int, i64>>> sparse;
    i64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Clear denominators row by row; nullopt if an entry leaves the 31-bit range.
std::optional<IntRows> integer_rows(const MatQ& m) {
    IntRows out;
    out.cols = static_cast<int>(m.cols());
    const mpz_class limit = mpz_class(1) << 31;
    std::vector<mpz_class> row(static_cast<size_t>(out.cols));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        mpz_class l = 1, g = 0;
        bool nonzero = false;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t()); nonzero = true; }
        if (!nonzero) continue;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row[static_cast<size_t>(j)] = m(i, j).value().get_num() * (l / m(i, j).value().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[static_cast<size_t>(j)].get_mpz_t());
        }
        std::vector<std::pair<int, i64>> sp;
        for (int j = 0; j < out.cols; ++j) {
            mpz_class v = row[static_cast<size_t>(j)] / g;
            if (abs(v) >= limit) return std::nullopt;
            const i64 w = v.get_si();
            out.a.push_back(w);
            if (w != 0) sp.emplace_back(j, w);
        }
        out.sparse.push_back(std::move(sp));
        ++out.rows;
    }
    return out;
}

// a/b with |a| <= bound, 0 < b <= bound, a = b*u mod modulus
bool rational_reconstruct(const mpz_class& u, const mpz_class& modulus, const mpz_class& bound, mpq_class& out) {
    mpz_class r0 = modulus, r1 = u, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        q = r0 / r1;
        tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    out = mpq_class(r1, t1);
    out.canonicalize();
    return true;
}

bool verify(const IntRows& a, const MatQ& k) {
    std::vector<mpz_class> z(static_cast<size_t>(a.cols));
    mpz_class acc;
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
        mpz_class l = 1;
        for (Eigen::Index i = 0; i < k.rows(); ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k(i, c).value().get_den_mpz_t());
        for (Eigen::Index i = 0; i < k.rows(); ++i)
            z[static_cast<size_t>(i)] = k(i, c).value().get_num() * (l / k(i, c).value().get_den());
        for (const auto& row : a.sparse) {
            acc = 0;
            for (const auto& [j, v] : row) {
                if (v > 0) mpz_addmul_ui(acc.get_mpz_t(), z[static_cast<size_t>(j)].get_mpz_t(), static_cast<unsigned long>(v));
                else mpz_submul_ui(acc.get_mpz_t(), z[static_cast<size_t>(j)].get_mpz_t(), static_cast<unsigned long>(-v));
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

std::optional<MatQ> attempt(const IntRows& a, std::uint32_t p) {
    const int n = a.cols;
    modp::ModMatrix red(a.rows, n, p);
    for (int i = 0; i < a.rows; ++i)
        for (const auto& [j, v] : a.sparse[static_cast<size_t>(i)]) red.set(i, j, v);
    const modp::ModEchelon e = modp::echelonize(red, false);
    const int rho = e.rank;
    std::vector<int> free_cols;
    {
        std::vector<char> piv(static_cast<size_t>(n), 0);
        for (int c : e.pivots) piv[static_cast<size_t>(c)] = 1;
        for (int j = 0; j < n; ++j)
            if (!piv[static_cast<size_t>(j)]) free_cols.push_back(j);
    }
    const int nf = static_cast<int>(free_cols.size());
    MatQ k = zeros<Rational>(n, nf);
    for (int t = 0; t < nf; ++t) k(free_cols[static_cast<size_t>(t)], t) = Rational(1);
    if (nf == 0 || rho == 0) {
        if (verify(a, k)) return k;
        return std::nullopt;
    }

    // pivot block and its inverse mod p
    std::vector<i64> arp(static_cast<size_t>(rho) * rho), brhs(static_cast<size_t>(rho) * nf);
    modp::ModMatrix aug(rho, 2 * rho, p);
    double hbits = 0;
    for (int i = 0; i < rho; ++i) {
        const int src = e.pivot_rows[static_cast<size_t>(i)];
        double norm2 = 0;
        for (int j = 0; j < rho; ++j) {
            const i64 v = a.at(src, e.pivots[static_cast<size_t>(j)]);
            arp[static_cast<size_t>(i) * rho + j] = v;
            aug.set(i, j, v);
            norm2 += static_cast<double>(v) * static_cast<double>(v);
        }
        for (int t = 0; t < nf; ++t) {
            const i64 v = a.at(src, free_cols[static_cast<size_t>(t)]);
            brhs[static_cast<size_t>(i) * nf + t] = -v;
            norm2 += static_cast<double>(v) * static_cast<double>(v);
        }
        aug.set(i, rho + i, 1);
        hbits += 0.5 * std::log2(std::max(norm2, 1.0));
    }
    const modp::ModEchelon ae = modp::echelonize(aug, true);
    if (ae.rank != rho || ae.pivots.back() != rho - 1) return std::nullopt;
    std::vector<u64> cinv(static_cast<size_t>(rho) * rho);
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j) cinv[static_cast<size_t>(i) * rho + j] = static_cast<u64>(aug.at(i, rho + j));

    const double pbits = std::log2(static_cast<double>(p));
    const int max_steps = static_cast<int>(std::ceil((2 * hbits + 4) / pbits)) + 2;
    const size_t cells = static_cast<size_t>(rho) * nf;
    std::vector<mpz_class> acc(cells);
    std::vector<u64> bmod(cells), x(cells);
    mpz_class pk = 1;
    int next_try = 4;
    for (int step = 1; step <= max_steps; ++step) {
        for (size_t c = 0; c < cells; ++c) {
            i64 v = brhs[c] % static_cast<i64>(p);
            bmod[c] = static_cast<u64>(v < 0 ? v + p : v);
        }
        // x = C * b mod p
        for (int i = 0; i < rho; ++i) {
            for (int t = 0; t < nf; ++t) {
                u64 s = 0;
                const u64* crow = &cinv[static_cast<size_t>(i) * rho];
                for (int j = 0; j < rho; ++j) {
                    s += crow[j] * bmod[static_cast<size_t>(j) * nf + t];
                    if ((j & 4095) == 4095) s %= p;
                }
                x[static_cast<size_t>(i) * nf + t] = s % p;
            }
        }
        // b <- (b - A_RP x) / p
        for (int i = 0; i < rho; ++i) {
            for (int t = 0; t < nf; ++t) {
                i128 s = brhs[static_cast<size_t>(i) * nf + t];
                const i64* arow = &arp[static_cast<size_t>(i) * rho];
                for (int j = 0; j < rho; ++j)
                    s -= static_cast<i128>(arow[j]) * static_cast<i128>(x[static_cast<size_t>(j) * nf + t]);
                if (s % p != 0) return std::nullopt;
                brhs[static_cast<size_t>(i) * nf + t] = static_cast<i64>(s / p);
            }
        }
        for (size_t c = 0; c < cells; ++c)
            if (x[c]) mpz_addmul_ui(acc[c].get_mpz_t(), pk.get_mpz_t(), static_cast<unsigned long>(x[c]));
        pk *= p;

        if (step != max_steps && step < next_try) continue;
        next_try *= 2;
        mpz_class bound;
        mpz_sqrt(bound.get_mpz_t(), mpz_class(pk / 2).get_mpz_t());
        bool ok = true;
        mpz_class den = 1, w;
        mpq_class q;
        MatQ trial = k;
        for (int i = 0; i < rho && ok; ++i) {
            for (int t = 0; t < nf && ok; ++t) {
                const mpz_class& u = acc[static_cast<size_t>(i) * nf + t];
                // try the running common denominator first
                w = (u * den) % pk;
                if (w > pk / 2) w -= pk;
                if (abs(w) <= bound) {
                    q = mpq_class(w, den);
                    q.canonicalize();
                } else {
                    if (!rational_reconstruct(u, pk, bound, q)) { ok = false; break; }
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
                }
                trial(e.pivots[static_cast<size_t>(i)], t) = Rational(q);
            }
        }
        if (!ok) continue;
        // free columns must be the rational ones: no pivot after f may be nonzero
        bool shape = true;
        for (int t = 0; t < nf && shape; ++t)
            for (int i = 0; i < rho; ++i)
                if (e.pivots[static_cast<size_t>(i)] > free_cols[static_cast<size_t>(t)] &&
                    !trial(e.pivots[static_cast<size_t>(i)], t).is_zero()) { shape = false; break; }
        if (shape && verify(a, trial)) return trial;
        if (step == max_steps) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

bool prefer_lifting(const MatQ& m) { return m.cols() >= 24 && m.rows() * m.cols() >= 1500; }

std::optional<MatQ> kernel_lifted(const MatQ& m) {
    auto a = integer_rows(m);
    if (!a) return std::nullopt;
    if (a->rows == 0) return identity<Rational>(m.cols());
    for (std::size_t idx = 0; idx < 4; ++idx)
        if (auto k = attempt(*a, modp::prime(idx))) return k;
    return std::nullopt;
}

}  // namespace kronrep::detail
