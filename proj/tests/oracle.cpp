#include "oracle.hpp"

#include <functional>

namespace oracle {

Table table(const kronrep::MatQ& m) {
    Table t(static_cast<size_t>(m.rows()), std::vector<mpq_class>(static_cast<size_t>(m.cols())));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j).value();
    return t;
}

int rank(Table t) {
    if (t.empty()) return 0;
    const size_t rows = t.size(), cols = t[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && t[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(t[piv], t[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (t[i][c] == 0) continue;
            const mpq_class f = t[i][c] / t[r][c];
            for (size_t j = c; j < cols; ++j) t[i][j] -= f * t[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

long a_term(int d, int n) {
    long a = 0, b = 1;
    for (int k = 0; k < n; ++k) {
        const long next = d * b - a;
        a = b;
        b = next;
    }
    return a;
}

kronrep::KroneckerRep kronecker_preprojective(int n) {
    auto m = kronrep::KroneckerRep::zero(2, {n, n + 1});
    for (int i = 0; i < n; ++i) {
        m.map(0)(i, i) = 1;
        m.map(1)(i + 1, i) = 1;
    }
    return m;
}

namespace {

// column-major vec: vec(A X B) = (B^T kron A) vec(X)
Table kron_table(const Table& a, const Table& b) {
    const size_t ar = a.size(), ac = ar ? a[0].size() : 0, br = b.size(), bc = br ? b[0].size() : 0;
    Table out(ar * br, std::vector<mpq_class>(ac * bc));
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j)
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

Table eye(size_t n) {
    Table t(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i) t[i][i] = 1;
    return t;
}

Table transpose(const Table& a) {
    if (a.empty()) return {};
    Table t(a[0].size(), std::vector<mpq_class>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Table scaled(Table a, const mpq_class& s) {
    for (auto& row : a)
        for (auto& v : row) v *= s;
    return a;
}

// horizontal blocks stacked into rows of a bigger system
void place(Table& sys, size_t row0, size_t col0, const Table& block) {
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = 0; j < block[i].size(); ++j) sys[row0 + i][col0 + j] += block[i][j];
}

}  // namespace

int hom_dim(const kronrep::KroneckerRep& m, const kronrep::KroneckerRep& n) {
    const size_t xm = m.dim.x, ym = m.dim.y, xn = n.dim.x, yn = n.dim.y;
    const size_t u1 = xn * xm, u2 = yn * ym;
    if (u1 + u2 == 0) return 0;
    const size_t eq = yn * xm;
    Table sys(m.r * eq, std::vector<mpq_class>(u1 + u2));
    for (int i = 0; i < m.r; ++i) {
        // f2 M_i - N_i f1 = 0
        place(sys, i * eq, u1, kron_table(transpose(table(m.map(i))), eye(yn)));
        place(sys, i * eq, 0, scaled(kron_table(eye(xm), table(n.map(i))), -1));
    }
    return static_cast<int>(u1 + u2) - rank(sys);
}

int ext_dim(const kronrep::KroneckerRep& y, const kronrep::KroneckerRep& x) {
    const size_t u1 = x.dim.x * y.dim.x, u2 = x.dim.y * y.dim.y, eq = x.dim.y * y.dim.x;
    const size_t target = y.r * eq;
    if (target == 0) return 0;
    if (u1 + u2 == 0) return static_cast<int>(target);
    Table sys(target, std::vector<mpq_class>(u1 + u2));
    for (int i = 0; i < y.r; ++i) {
        // x_i f1 - f2 y_i with f1: y1 -> x1, f2: y2 -> x2
        place(sys, i * eq, 0, kron_table(eye(y.dim.x), table(x.map(i))));
        place(sys, i * eq, u1, scaled(kron_table(transpose(table(y.map(i))), eye(x.dim.y)), -1));
    }
    return static_cast<int>(target) - rank(sys);
}

int stabilizer_dim(const kronrep::KroneckerRep& m) {
    const size_t r = m.r, x = m.dim.x, y = m.dim.y;
    const size_t ua = r * r, u1 = x * x, u2 = y * y, eq = y * x;
    Table sys(r * eq, std::vector<mpq_class>(ua + u1 + u2));
    for (size_t j = 0; j < r; ++j) {
        const size_t row = j * eq;
        place(sys, row, ua + u1, kron_table(transpose(table(m.map(static_cast<int>(j)))), eye(y)));
        place(sys, row, ua, scaled(kron_table(eye(x), table(m.map(static_cast<int>(j)))), -1));
        // - sum_i A_ij M_i, A column-major at index j*r + i
        for (size_t i = 0; i < r; ++i) {
            const Table mi = table(m.map(static_cast<int>(i)));
            for (size_t c = 0; c < x; ++c)
                for (size_t a = 0; a < y; ++a) sys[row + c * y + a][j * r + i] -= mi[a][c];
        }
    }
    return static_cast<int>(ua + u1 + u2) - rank(sys);
}

int radical_dim(const kronrep::KroneckerRep& m) {
    Table t(static_cast<size_t>(m.dim.y));
    for (int i = 0; i < m.r; ++i) {
        const Table mi = table(m.map(i));
        for (size_t a = 0; a < t.size(); ++a) t[a].insert(t[a].end(), mi[a].begin(), mi[a].end());
    }
    return rank(t);
}

std::vector<long> k2_multiplicities(const kronrep::KroneckerRep& n, int top) {
    std::vector<long> h;
    for (int k = 0; k <= top + 2; ++k) h.push_back(hom_dim(kronecker_preprojective(k), n));
    std::vector<long> b;
    for (int k = 0; k <= top; ++k) b.push_back(h[k] - 2 * h[k + 1] + h[k + 2]);
    return b;
}

namespace {

using Vec = std::vector<int>;

int rank_mod(std::vector<Vec> rows, int p) {
    int r = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        size_t piv = static_cast<size_t>(r);
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<size_t>(r)]);
        int inv = 1;
        while (rows[static_cast<size_t>(r)][c] * inv % p != 1) ++inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<size_t>(r) || rows[i][c] % p == 0) continue;
            const int f = rows[i][c] * inv % p;
            for (size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[static_cast<size_t>(r)][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

void for_each_tuple(int p, int len, int count, const std::function<bool(const std::vector<Vec>&)>& visit) {
    long total = 1;
    for (int i = 0; i < len * count; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<Vec> vs(static_cast<size_t>(count), Vec(static_cast<size_t>(len)));
        for (auto& v : vs)
            for (auto& e : v) {
                e = static_cast<int>(c % p);
                c /= p;
            }
        if (visit(vs)) return;
    }
}

}  // namespace

bool subrep_exists(const SmallRep& maps, int p, int x, int y, int ex, int ey) {
    bool found = false;
    for_each_tuple(p, x, ex, [&](const std::vector<Vec>& u1) {
        if (rank_mod(u1, p) != ex) return false;
        for_each_tuple(p, y, ey, [&](const std::vector<Vec>& u2) {
            if (rank_mod(u2, p) != ey) return false;
            for (const auto& a : maps)
                for (const auto& v : u1) {
                    Vec img(static_cast<size_t>(y), 0);
                    for (int i = 0; i < y; ++i)
                        for (int j = 0; j < x; ++j) img[i] = (img[i] + a[i][j] * v[j]) % p;
                    std::vector<Vec> both = u2;
                    both.push_back(img);
                    if (rank_mod(both, p) != ey) return false;
                }
            found = true;
            return true;
        });
        return found;
    });
    return found;
}

}  // namespace oracle
