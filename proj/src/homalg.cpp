#include "kronrep/homalg.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kronrep/modular.hpp"

namespace kronrep {

namespace {

using modp::MatP;
using modp::Zp;

struct ExactSink {
    MatQ m;
    ExactSink(Eigen::Index rows, Eigen::Index cols) : m(zeros<Rational>(rows, cols)) {}
    void add(long i, long j, const Rational& v) { m(i, j) += v; }
    int nullity() const { return static_cast<int>(kernel_basis<Rational>(m).cols()); }
};

struct ModSink {
    modp::ModMatrix m;
    ModSink(Eigen::Index rows, Eigen::Index cols, std::uint32_t p)
        : m(static_cast<int>(rows), static_cast<int>(cols), p) {}
    void add(long i, long j, const Zp& v) {
        if (v.value()) m.add(static_cast<int>(i), static_cast<int>(j), v.value());
    }
    int nullity() const { return modp::nullity(m); }
};

// Field-specific helpers selected by scalar type.
struct ExactField {
    using Scalar = Rational;
    using Sink = ExactSink;
    Sink sink(Eigen::Index rows, Eigen::Index cols) const { return Sink(rows, cols); }
    MatQ kernel(const MatQ& a) const { return kernel_basis<Rational>(a); }
};

struct ModField {
    using Scalar = Zp;
    using Sink = ModSink;
    std::uint32_t p;
    Sink sink(Eigen::Index rows, Eigen::Index cols) const { return Sink(rows, cols, p); }
    MatP kernel(const MatP& a) const {
        if (a.cols() == 0) return MatP(0, 0);
        return modp::from_engine(modp::kernel(modp::to_engine(a, p)));
    }
};

std::optional<Rep<Zp>> reduce_rep(const KroneckerRep& m, std::uint32_t p) {
    Rep<Zp> out;
    out.r = m.r;
    out.dim = m.dim;
    for (const auto& a : m.maps) {
        auto red = modp::reduce_matrix(a, p);
        if (!red) return std::nullopt;
        out.maps.push_back(std::move(*red));
    }
    return out;
}

// f2 M_i - N_i f1 = 0; unknowns f1 (row-major) then f2 (row-major)
template <class S, class Sink>
void full_hom_system(const Rep<S>& M, const Rep<S>& N, Sink& out) {
    const long xm = M.dim.x, ym = M.dim.y, xn = N.dim.x, yn = N.dim.y;
    const long off = xn * xm;
    for (int i = 0; i < M.r; ++i)
        for (long a = 0; a < yn; ++a)
            for (long m = 0; m < xm; ++m) {
                const long row = (i * yn + a) * xm + m;
                for (long e = 0; e < ym; ++e)
                    if (!is_zero(M.map(i)(e, m))) out.add(row, off + a * ym + e, M.map(i)(e, m));
                for (long b = 0; b < xn; ++b)
                    if (!is_zero(N.map(i)(a, b))) out.add(row, b * xm + m, -N.map(i)(a, b));
            }
}

// sum_j N_j f1 K_j = 0 with K the kernel of psi_M; unknowns f1 only
template <class S, class Sink>
void source_hom_system(const Rep<S>& M, const Rep<S>& N, const Mat<S>& K, Sink& out) {
    const long xm = M.dim.x, xn = N.dim.x, yn = N.dim.y, k = K.cols();
    for (int j = 0; j < N.r; ++j)
        for (long a = 0; a < yn; ++a)
            for (long b = 0; b < xn; ++b) {
                const S nv = N.map(j)(a, b);
                if (is_zero(nv)) continue;
                for (long e = 0; e < xm; ++e)
                    for (long c = 0; c < k; ++c) {
                        const S& kv = K(j * xm + e, c);
                        if (!is_zero(kv)) out.add(a * k + c, b * xm + e, nv * kv);
                    }
            }
}

// sum_i L_i f2 M_i = 0 with L the left kernel of eta_N; unknowns f2 only
template <class S, class Sink>
void target_hom_system(const Rep<S>& M, const Rep<S>& N, const Mat<S>& L, Sink& out) {
    const long xm = M.dim.x, ym = M.dim.y, yn = N.dim.y, cl = L.rows();
    for (int i = 0; i < M.r; ++i)
        for (long a = 0; a < cl; ++a)
            for (long b = 0; b < yn; ++b) {
                const S lv = L(a, i * yn + b);
                if (is_zero(lv)) continue;
                for (long e = 0; e < ym; ++e)
                    for (long m = 0; m < xm; ++m) {
                        const S& mv = M.map(i)(e, m);
                        if (!is_zero(mv)) out.add(a * xm + m, b * ym + e, lv * mv);
                    }
            }
}

double cost(double rows, double cols) { return rows * cols * std::max(1.0, std::min(rows, cols)); }

template <class Field>
int hom_dim_generic(const Rep<typename Field::Scalar>& M, const Rep<typename Field::Scalar>& N, const Field& f) {
    using S = typename Field::Scalar;
    const long xm = M.dim.x, ym = M.dim.y, xn = N.dim.x, yn = N.dim.y;
    const int r = M.r;
    if (xm * xn + ym * yn == 0) return 0;
    const double k_est = std::max<long>(0, r * xm - ym), c_est = std::max<long>(0, r * yn - xn);
    const double full = cost(static_cast<double>(r * yn * xm), static_cast<double>(xn * xm + yn * ym));
    const double src = cost(yn * k_est, static_cast<double>(xn * xm));
    const double tgt = cost(c_est * xm, static_cast<double>(yn * ym));
    if (src <= full && src <= tgt) {
        const Mat<S> K = f.kernel(structure_matrix(M));
        const long k = K.cols();
        const long rank_psi = r * xm - k;
        auto sink = f.sink(yn * k, xn * xm);
        source_hom_system(M, N, K, sink);
        return sink.nullity() + static_cast<int>(yn * (ym - rank_psi));
    }
    if (tgt <= full) {
        const Mat<S> eta = stacked_matrix(N);
        const Mat<S> L = f.kernel(Mat<S>(eta.transpose())).transpose();
        const long cl = L.rows();
        const long rank_eta = r * yn - cl;
        auto sink = f.sink(cl * xm, yn * ym);
        target_hom_system(M, N, L, sink);
        return sink.nullity() + static_cast<int>(xm * (xn - rank_eta));
    }
    auto sink = f.sink(r * yn * xm, xn * xm + yn * ym);
    full_hom_system(M, N, sink);
    return sink.nullity();
}

// B2 psi = psi (A (x) I + I (x) B1): unknowns A then B1; restricted to ker psi
template <class Field>
int stabilizer_generic(const Rep<typename Field::Scalar>& M, const Field& f) {
    using S = typename Field::Scalar;
    const long x = M.dim.x, y = M.dim.y;
    const int r = M.r;
    const Mat<S> K = f.kernel(structure_matrix(M));
    const long k = K.cols();
    const long rank_psi = r * x - k;
    auto sink = f.sink(y * k, r * r + x * x);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            for (long a = 0; a < y; ++a)
                for (long c = 0; c < k; ++c) {
                    S acc = S(0);
                    for (long e = 0; e < x; ++e) {
                        const S& mv = M.map(j)(a, e);
                        const S& kv = K(i * x + e, c);
                        if (!is_zero(mv) && !is_zero(kv)) acc += mv * kv;
                    }
                    if (!is_zero(acc)) sink.add(a * k + c, j * r + i, acc);
                }
        }
    for (int i = 0; i < r; ++i)
        for (long a = 0; a < y; ++a)
            for (long b = 0; b < x; ++b) {
                const S mv = M.map(i)(a, b);
                if (is_zero(mv)) continue;
                for (long e = 0; e < x; ++e)
                    for (long c = 0; c < k; ++c) {
                        const S& kv = K(i * x + e, c);
                        if (!is_zero(kv)) sink.add(a * k + c, r * r + b * x + e, mv * kv);
                    }
            }
    return sink.nullity() + static_cast<int>(y * (y - rank_psi));
}

template <class Fn>
auto with_reduction(const std::vector<const KroneckerRep*>& reps, Fn fn) {
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const std::uint32_t p = modp::prime(idx);
        std::vector<Rep<Zp>> red;
        bool ok = true;
        for (const auto* m : reps) {
            auto rm = reduce_rep(*m, p);
            if (!rm) { ok = false; break; }
            red.push_back(std::move(*rm));
        }
        if (ok) return fn(red, ModField{p});
    }
    throw std::runtime_error("no usable prime for modular reduction");
}

MatQ hom_system_exact(const KroneckerRep& m, const KroneckerRep& n) {
    ExactSink sink(m.r * n.dim.y * m.dim.x, n.dim.x * m.dim.x + n.dim.y * m.dim.y);
    full_hom_system(m, n, sink);
    return sink.m;
}

void check_arrows(const KroneckerRep& m, const KroneckerRep& n) {
    if (m.r != n.r) throw std::invalid_argument("arrow count mismatch");
}

}  // namespace

HomBasis hom_basis(const KroneckerRep& m, const KroneckerRep& n) {
    check_arrows(m, n);
    HomBasis out{m, n, {}};
    const long xm = m.dim.x, ym = m.dim.y, xn = n.dim.x, yn = n.dim.y;
    if (xm * xn + ym * yn == 0) return out;
    const MatQ k = kernel_basis<Rational>(hom_system_exact(m, n));
    const long off = xn * xm;
    for (Eigen::Index c = 0; c < k.cols(); ++c) {
        MorphismPair f{MatQ(xn, xm), MatQ(yn, ym)};
        for (long b = 0; b < xn; ++b)
            for (long e = 0; e < xm; ++e) f.f1(b, e) = k(b * xm + e, c);
        for (long a = 0; a < yn; ++a)
            for (long e = 0; e < ym; ++e) f.f2(a, e) = k(off + a * ym + e, c);
        out.basis.push_back(std::move(f));
    }
    return out;
}

std::optional<int> hom_dim_mod(const KroneckerRep& m, const KroneckerRep& n, std::uint32_t p) {
    check_arrows(m, n);
    auto rm = reduce_rep(m, p);
    auto rn = reduce_rep(n, p);
    if (!rm || !rn) return std::nullopt;
    return hom_dim_generic(*rm, *rn, ModField{p});
}

int hom_dim_bound(const KroneckerRep& m, const KroneckerRep& n) {
    check_arrows(m, n);
    return with_reduction({&m, &n}, [](const std::vector<Rep<Zp>>& red, const ModField& f) {
        return hom_dim_generic(red[0], red[1], f);
    });
}

int hom_dim_exact(const KroneckerRep& m, const KroneckerRep& n) {
    check_arrows(m, n);
    return hom_dim_generic(m, n, ExactField{});
}

int hom_dim(const KroneckerRep& m, const KroneckerRep& n, int known_lower) {
    const int ub = hom_dim_bound(m, n);
    if (ub < known_lower) throw std::logic_error("hom_dim: modular bound below a known lower bound");
    if (ub == known_lower) return ub;
    return hom_dim_exact(m, n);
}

int ext1_dim(const KroneckerRep& y, const KroneckerRep& x) {
    return hom_dim(y, x) - static_cast<int>(euler_form(y.dim, x.dim, y.r));
}

int ext1_dim_cokernel(const KroneckerRep& y, const KroneckerRep& x) {
    check_arrows(y, x);
    const MatQ d = hom_system_exact(y, x);
    return static_cast<int>(d.rows()) - rank<Rational>(d);
}

Ext1 ext1(const KroneckerRep& y, const KroneckerRep& x) {
    check_arrows(y, x);
    const long yx = y.dim.x, xy = x.dim.y;
    const long coords = y.r * xy * yx;
    const long unknowns = x.dim.x * yx + xy * y.dim.y;
    const int h = hom_dim(y, x);
    const long target_rank = unknowns - h;
    std::vector<int> pivots;
    bool have = false;
    if (coords * unknowns > 40000) {
        // rows of D independent mod p are independent over Q
        have = with_reduction({&y, &x}, [&](const std::vector<Rep<Zp>>& red, const ModField& f) {
            ModSink sink(coords, unknowns, f.p);
            full_hom_system(red[0], red[1], sink);
            modp::ModMatrix t(static_cast<int>(unknowns), static_cast<int>(coords), f.p);
            for (int i = 0; i < sink.m.rows(); ++i)
                for (int j = 0; j < sink.m.cols(); ++j) t.at(j, i) = sink.m.at(i, j);
            const modp::ModEchelon e = modp::echelonize(t, false);
            if (e.rank != target_rank) return false;
            pivots = e.pivots;
            return true;
        });
    }
    if (!have) {
        const MatQ d = hom_system_exact(y, x);
        pivots = pivot_columns<Rational>(MatQ(d.transpose()));
        if (static_cast<long>(pivots.size()) != target_rank) throw std::logic_error("ext1: rank mismatch");
    }
    Ext1 out;
    std::vector<char> used(static_cast<size_t>(coords), 0);
    for (int p : pivots) used[static_cast<size_t>(p)] = 1;
    for (long j = 0; j < coords; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        ExtCocycle c;
        c.blocks.assign(static_cast<size_t>(y.r), zeros<Rational>(xy, yx));
        const long i = j / (xy * yx), rest = j % (xy * yx);
        c.blocks[static_cast<size_t>(i)](rest / yx, rest % yx) = 1;
        out.cocycles.push_back(std::move(c));
    }
    out.dim = static_cast<int>(out.cocycles.size());
    if (out.dim != h - euler_form(y.dim, x.dim, y.r)) throw std::logic_error("ext1: Euler defect disagrees");
    return out;
}

KroneckerRep extension_from_cocycle(const KroneckerRep& y, const KroneckerRep& x, const ExtCocycle& c) {
    check_arrows(y, x);
    KroneckerRep e = KroneckerRep::zero(y.r, x.dim + y.dim);
    for (int i = 0; i < y.r; ++i) {
        e.map(i).topLeftCorner(x.dim.y, x.dim.x) = x.map(i);
        e.map(i).topRightCorner(x.dim.y, y.dim.x) = c.blocks[static_cast<size_t>(i)];
        e.map(i).bottomRightCorner(y.dim.y, y.dim.x) = y.map(i);
    }
    return e;
}

ExtCocycle random_cocycle(const Ext1& e, int bound, Rng& rng) {
    if (e.cocycles.empty()) throw std::invalid_argument("random_cocycle: Ext vanishes");
    for (;;) {
        ExtCocycle c;
        for (const auto& b : e.cocycles.front().blocks) c.blocks.push_back(zeros<Rational>(b.rows(), b.cols()));
        bool nonzero = false;
        for (const auto& base : e.cocycles) {
            const long coef = random_int(rng, -bound, bound);
            if (coef == 0) continue;
            nonzero = true;
            for (size_t i = 0; i < c.blocks.size(); ++i) c.blocks[i] += Rational(coef) * base.blocks[i];
        }
        if (nonzero) return c;
    }
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "inconclusive";
    }
}

std::string to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::yes: return "yes";
        case IsoVerdict::no: return "no";
        default: return "probably_not";
    }
}

namespace {

MatQ as_block(const MorphismPair& f) {
    MatQ a = zeros<Rational>(f.f1.rows() + f.f2.rows(), f.f1.cols() + f.f2.cols());
    a.topLeftCorner(f.f1.rows(), f.f1.cols()) = f.f1;
    a.bottomRightCorner(f.f2.rows(), f.f2.cols()) = f.f2;
    return a;
}

Rational trace(const MatQ& a) {
    Rational t = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

// coefficients c_0..c_n of det(t I - a)
std::vector<Rational> char_poly(const MatQ& a) {
    const Eigen::Index n = a.rows();
    std::vector<Rational> c(static_cast<size_t>(n + 1));
    c[static_cast<size_t>(n)] = 1;
    MatQ mk = zeros<Rational>(n, n);
    const MatQ id = identity<Rational>(n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = a * mk + c[static_cast<size_t>(n - k + 1)] * id;
        c[static_cast<size_t>(n - k)] = -trace(MatQ(a * mk)) / Rational(static_cast<long>(k));
    }
    return c;
}

std::vector<mpz_class> small_divisors(mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    if (v == 0 || v > 1000000) return out;
    const long n = v.get_si();
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.emplace_back(d);
            if (d * d != n) out.emplace_back(n / d);
        }
    return out;
}

std::vector<Rational> rational_roots(std::vector<Rational> c) {
    std::vector<Rational> roots;
    mpz_class l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.value().get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& q : c) z.push_back(q.value().get_num() * (l / q.value().get_den()));
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= z.size()) return roots;
    const auto nums = small_divisors(z[low]);
    const auto dens = small_divisors(z.back());
    std::set<Rational> seen;
    for (const auto& p : nums)
        for (const auto& q : dens)
            for (int s : {1, -1}) {
                const Rational cand(mpz_class(s * p), q);
                if (!seen.insert(cand).second) continue;
                Rational v = 0;
                for (size_t i = c.size(); i-- > 0;) v = v * cand + c[i];
                if (v.is_zero()) roots.push_back(cand);
            }
    return roots;
}

bool splits_off(const MatQ& a) {
    const Eigen::Index n = a.rows();
    for (const auto& lambda : rational_roots(char_poly(a))) {
        MatQ b = a - lambda * identity<Rational>(n);
        MatQ pw = b;
        for (Eigen::Index k = 1; k < n; ++k) pw = pw * b;
        const int nul = static_cast<int>(kernel_basis<Rational>(pw).cols());
        if (nul > 0 && nul < n) return true;
    }
    return false;
}

}  // namespace

namespace {

EndAnalysis end_analysis_uncached(const KroneckerRep& m, std::uint64_t seed) {
    EndAnalysis out;
    if (m.dim.is_zero()) {
        out.geometric_indec = Tri::no;
        return out;
    }
    out.end_dim = hom_dim(m, m, 1);
    if (out.end_dim == 1) {
        out.is_brick = true;
        out.geometric_indec = Tri::yes;
        return out;
    }
    const HomBasis hb = hom_basis(m, m);
    const int e = hb.dim();
    MatQ gram(e, e);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
            const auto& a = hb.basis[static_cast<size_t>(i)];
            const auto& b = hb.basis[static_cast<size_t>(j)];
            gram(i, j) = trace(MatQ(a.f1 * b.f1)) + trace(MatQ(a.f2 * b.f2));
        }
    out.rad_dim = static_cast<int>(kernel_basis<Rational>(gram).cols());
    if (e - out.rad_dim == 1) {
        out.geometric_indec = Tri::yes;
        return out;
    }
    std::vector<MatQ> candidates;
    for (const auto& f : hb.basis) candidates.push_back(as_block(f));
    Rng rng(seed);
    for (int t = 0; t < 8; ++t) {
        MatQ a = zeros<Rational>(m.dim.x + m.dim.y, m.dim.x + m.dim.y);
        for (const auto& f : hb.basis) a += Rational(random_int(rng, -3, 3)) * as_block(f);
        candidates.push_back(std::move(a));
    }
    for (const auto& a : candidates)
        if (splits_off(a)) {
            out.geometric_indec = Tri::no;
            return out;
        }
    out.geometric_indec = Tri::inconclusive;
    return out;
}

}  // namespace

// the same large representation is typically analysed by several reports in a row
EndAnalysis end_analysis(const KroneckerRep& m, std::uint64_t seed) {
    struct Entry {
        KroneckerRep rep;
        std::uint64_t seed;
        EndAnalysis result;
    };
    static std::mutex mu;
    static std::deque<Entry> recent;
    {
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& e : recent)
            if (e.seed == seed && e.rep == m) return e.result;
    }
    EndAnalysis out = end_analysis_uncached(m, seed);
    std::lock_guard<std::mutex> lock(mu);
    recent.push_front({m, seed, out});
    if (recent.size() > 8) recent.pop_back();
    return out;
}

UniversalExtension universal_extension(const KroneckerRep& y, const std::vector<KroneckerRep>& xs) {
    UniversalExtension out;
    std::vector<Ext1> exts;
    DimVector kernel_dim;
    for (const auto& x : xs) {
        check_arrows(y, x);
        exts.push_back(ext1(y, x));
        if (exts.back().dim == 0) throw std::invalid_argument("universal_extension: some Ext group vanishes");
        out.multiplicities.push_back(exts.back().dim);
        kernel_dim = kernel_dim + x.dim * exts.back().dim;
    }
    out.e = KroneckerRep::zero(y.r, kernel_dim + y.dim);
    for (int i = 0; i < y.r; ++i) {
        long row = 0, col = 0;
        for (size_t t = 0; t < xs.size(); ++t)
            for (const auto& c : exts[t].cocycles) {
                out.e.map(i).block(row, col, xs[t].dim.y, xs[t].dim.x) = xs[t].map(i);
                out.e.map(i).block(row, kernel_dim.x, xs[t].dim.y, y.dim.x) = c.blocks[static_cast<size_t>(i)];
                row += xs[t].dim.y;
                col += xs[t].dim.x;
            }
        out.e.map(i).bottomRightCorner(y.dim.y, y.dim.x) = y.map(i);
    }
    const DimVector total = out.e.dim;
    out.inclusion.f1 = zeros<Rational>(total.x, kernel_dim.x);
    out.inclusion.f1.topRows(kernel_dim.x) = identity<Rational>(kernel_dim.x);
    out.inclusion.f2 = zeros<Rational>(total.y, kernel_dim.y);
    out.inclusion.f2.topRows(kernel_dim.y) = identity<Rational>(kernel_dim.y);
    out.projection.f1 = zeros<Rational>(y.dim.x, total.x);
    out.projection.f1.rightCols(y.dim.x) = identity<Rational>(y.dim.x);
    out.projection.f2 = zeros<Rational>(y.dim.y, total.y);
    out.projection.f2.rightCols(y.dim.y) = identity<Rational>(y.dim.y);
    return out;
}

IsoVerdict is_isomorphic(const KroneckerRep& m, const KroneckerRep& n, std::uint64_t seed, int trials) {
    if (m.r != n.r || m.dim != n.dim) return IsoVerdict::no;
    if (m.dim.is_zero()) return IsoVerdict::yes;
    const int h = hom_dim(m, n);
    if (h != hom_dim(n, m) || h == 0) return IsoVerdict::no;
    const HomBasis hb = hom_basis(m, n);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        MorphismPair f = zero_morphism(m, n);
        for (const auto& b : hb.basis) {
            const Rational c(random_int(rng, -5, 5));
            f.f1 += c * b.f1;
            f.f2 += c * b.f2;
        }
        if (rank<Rational>(f.f1) == m.dim.x && rank<Rational>(f.f2) == m.dim.y) return IsoVerdict::yes;
    }
    return IsoVerdict::probably_not;
}

int stabilizer_dim_exact(const KroneckerRep& m) { return stabilizer_generic(m, ExactField{}); }

int stabilizer_dim(const KroneckerRep& m) {
    // (I, 0, I) and (0, I, I) fix any nonzero structure map
    bool nonzero = false;
    for (const auto& a : m.maps) nonzero = nonzero || !is_zero_matrix(a);
    if (nonzero && stabilizer_dim_bound(m) == 2) return 2;
    return stabilizer_dim_exact(m);
}

int stabilizer_dim_bound(const KroneckerRep& m) {
    return with_reduction({&m}, [](const std::vector<Rep<Zp>>& red, const ModField& f) {
        return stabilizer_generic(red[0], f);
    });
}

}  // namespace kronrep
