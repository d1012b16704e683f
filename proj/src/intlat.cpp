#include "sp4/intlat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sp4 {

i64 gcd_ll(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Frac::Frac(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Frac: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    i64 g = gcd_ll(n, d);
    num = n / g;
    den = d / g;
}

Frac Frac::operator+(const Frac& o) const {
    i128 n = (i128)num * o.den + (i128)o.num * den;
    i128 d = (i128)den * o.den;
    i128 r = n % d;
    if (r < 0) r += d;
    // reduce in 128 bits before narrowing
    i128 a = r, b = d;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    Frac out;
    out.num = (i64)(r / a);
    out.den = (i64)(d / a);
    return out;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
            m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
}
Mat2 Mat2::operator+(const Mat2& o) const {
    return {m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]};
}
Mat2 Mat2::operator-(const Mat2& o) const {
    return {m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]};
}

i64 trace_prod(const Mat2& a, const Mat2& b) {
    return a.m[0] * b.m[0] + a.m[1] * b.m[2] + a.m[2] * b.m[1] + a.m[3] * b.m[3];
}

QuadForm2::QuadForm2(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_) {
    if (a < 1 || c < 1 || 4 * a * c - b * b <= 0)
        throw std::invalid_argument("QuadForm2: not positive definite");
}

// --- aut_group --------------------------------------------------------------

std::vector<Mat2> aut_group(const QuadForm2& t) {
    // column-norm constraint: if U^T T U = T then each column u of U satisfies
    // u^T T u in {a, c}, hence |u|^2 <= max(a,c)/lambda_min(T)
    double tr = double(t.a + t.c);
    double root = std::sqrt(double(t.a - t.c) * double(t.a - t.c) + double(t.b) * double(t.b));
    double lmin = (tr - root) / 2.0;
    i64 bound = (i64)std::ceil(std::sqrt(double(std::max(t.a, t.c)) / lmin)) + 1;

    Mat2 T2 = t.twice();
    std::vector<Mat2> out;
    for (i64 u0 = -bound; u0 <= bound; ++u0)
        for (i64 u1 = -bound; u1 <= bound; ++u1)
            for (i64 u2 = -bound; u2 <= bound; ++u2)
                for (i64 u3 = -bound; u3 <= bound; ++u3) {
                    Mat2 u(u0, u1, u2, u3);
                    i64 d = u.det();
                    if (d != 1 && d != -1) continue;
                    if (u.transpose() * T2 * u == T2) out.push_back(u);
                }
    return out;
}

// --- reduction / equivalence ------------------------------------------------

QuadForm2 gl2_reduce(const QuadForm2& t) {
    i64 a = t.a, b = t.b, c = t.c;
    for (int guard = 0; guard < 4096; ++guard) {
        // translate: b -> b - 2qa with |b| <= a
        if (b > a || b < -a) {
            i64 q = b / (2 * a);
            i64 r = b - 2 * q * a;
            if (r > a) {
                r -= 2 * a;
                ++q;
            } else if (r < -a) {
                r += 2 * a;
                --q;
            }
            c = a * q * q - b * q + c;
            b = r;
        }
        if (a > c) {
            std::swap(a, c);
            continue;  // swap can break |b| <= a
        }
        if (b < 0) b = -b;  // improper move diag(1,-1)
        if (b <= a && a <= c) return QuadForm2(a, b, c);
    }
    throw std::logic_error("gl2_reduce: no convergence");
}

bool is_equivalent(const QuadForm2& t, const QuadForm2& q) {
    return gl2_reduce(t) == gl2_reduce(q);
}

// --- Smith normal form (2x2) -----------------------------------------------

SmithResult smith_normal_form(const Mat2& c) {
    if (c.det() == 0) throw std::invalid_argument("smith_normal_form: singular matrix");
    Mat2 a = c, u = Mat2::identity(), v = Mat2::identity();

    auto swap_rows = [&](Mat2& x, Mat2& uu) {
        x = Mat2(x.m[2], x.m[3], x.m[0], x.m[1]);
        uu = Mat2(uu.m[2], uu.m[3], uu.m[0], uu.m[1]);
    };
    auto swap_cols = [&](Mat2& x, Mat2& vv) {
        x = Mat2(x.m[1], x.m[0], x.m[3], x.m[2]);
        vv = Mat2(vv.m[1], vv.m[0], vv.m[3], vv.m[2]);
    };
    auto addmul_row = [&](Mat2& x, Mat2& uu, i64 k) {  // row0 += k*row1
        x.m[0] += k * x.m[2];
        x.m[1] += k * x.m[3];
        uu.m[0] += k * uu.m[2];
        uu.m[1] += k * uu.m[3];
    };
    auto addmul_row10 = [&](Mat2& x, Mat2& uu, i64 k) {  // row1 += k*row0
        x.m[2] += k * x.m[0];
        x.m[3] += k * x.m[1];
        uu.m[2] += k * uu.m[0];
        uu.m[3] += k * uu.m[1];
    };
    auto addmul_col = [&](Mat2& x, Mat2& vv, i64 k) {  // col1 += k*col0
        x.m[1] += k * x.m[0];
        x.m[3] += k * x.m[2];
        vv.m[1] += k * vv.m[0];
        vv.m[3] += k * vv.m[2];
    };
    auto addmul_col01 = [&](Mat2& x, Mat2& vv, i64 k) {  // col0 += k*col1
        x.m[0] += k * x.m[1];
        x.m[2] += k * x.m[3];
        vv.m[0] += k * vv.m[1];
        vv.m[2] += k * vv.m[3];
    };

    for (int guard = 0; guard < 256; ++guard) {
        // move a minimal nonzero entry to (0,0)
        int best = -1;
        for (int i = 0; i < 4; ++i)
            if (a.m[i] != 0 && (best < 0 || std::llabs(a.m[i]) < std::llabs(a.m[best]))) best = i;
        if (best == 2 || best == 3) swap_rows(a, u);
        if (best == 1 || best == 3) swap_cols(a, v);

        if (a.m[2] != 0) {
            addmul_row10(a, u, -(a.m[2] / a.m[0]));
            if (a.m[2] != 0) continue;
        }
        if (a.m[1] != 0) {
            addmul_col(a, v, -(a.m[1] / a.m[0]));
            if (a.m[1] != 0) continue;
        }
        // divisibility d1 | d2
        if (a.m[3] % a.m[0] != 0) {
            addmul_row(a, u, 1);  // brings a.m[3] into row 0
            continue;
        }
        break;
    }
    // sign normalization
    if (a.m[0] < 0) {
        a.m[0] = -a.m[0];
        u.m[0] = -u.m[0];
        u.m[1] = -u.m[1];
    }
    if (a.m[3] < 0) {
        a.m[3] = -a.m[3];
        u.m[2] = -u.m[2];
        u.m[3] = -u.m[3];
    }
    return SmithResult{u, v, a.m[0], a.m[3]};
}

// --- general small integer linear systems -----------------------------------

namespace {

// Dense Smith reduction of an m x n matrix with full U (m x m) and V (n x n)
// bookkeeping. Sizes are tiny (<= 4 x 8) so quadratic scans are fine.
struct SmithSmall {
    int m, n;
    std::vector<i64> s;  // m x n, row-major, diagonalized in place
    std::vector<i64> u;  // m x m with u*G*v = s
    std::vector<i64> v;  // n x n

    SmithSmall(int m_, int n_, std::vector<i64> g) : m(m_), n(n_), s(std::move(g)) {
        u.assign(m * m, 0);
        v.assign(n * n, 0);
        for (int i = 0; i < m; ++i) u[i * m + i] = 1;
        for (int i = 0; i < n; ++i) v[i * n + i] = 1;
        reduce();
    }

    i64& at(int i, int j) { return s[i * n + j]; }

    void row_op(int i, int j, i64 k) {  // row i += k * row j
        for (int t = 0; t < n; ++t) at(i, t) += k * at(j, t);
        for (int t = 0; t < m; ++t) u[i * m + t] += k * u[j * m + t];
    }
    void col_op(int i, int j, i64 k) {  // col i += k * col j
        for (int t = 0; t < m; ++t) at(t, i) += k * at(t, j);
        for (int t = 0; t < n; ++t) v[t * n + i] += k * v[t * n + j];
    }
    void row_swap(int i, int j) {
        for (int t = 0; t < n; ++t) std::swap(at(i, t), at(j, t));
        for (int t = 0; t < m; ++t) std::swap(u[i * m + t], u[j * m + t]);
    }
    void col_swap(int i, int j) {
        for (int t = 0; t < m; ++t) std::swap(at(t, i), at(t, j));
        for (int t = 0; t < n; ++t) std::swap(v[t * n + i], v[t * n + j]);
    }

    void reduce() {
        int r = std::min(m, n);
        for (int k = 0; k < r; ++k) {
            for (int guard = 0; guard < 1024; ++guard) {
                int bi = -1, bj = -1;
                for (int i = k; i < m; ++i)
                    for (int j = k; j < n; ++j)
                        if (at(i, j) != 0 &&
                            (bi < 0 || std::llabs(at(i, j)) < std::llabs(at(bi, bj)))) {
                            bi = i;
                            bj = j;
                        }
                if (bi < 0) return;  // rest is zero
                if (bi != k) row_swap(bi, k);
                if (bj != k) col_swap(bj, k);
                bool dirty = false;
                for (int i = k + 1; i < m; ++i)
                    if (at(i, k) != 0) {
                        row_op(i, k, -(at(i, k) / at(k, k)));
                        if (at(i, k) != 0) dirty = true;
                    }
                for (int j = k + 1; j < n; ++j)
                    if (at(k, j) != 0) {
                        col_op(j, k, -(at(k, j) / at(k, k)));
                        if (at(k, j) != 0) dirty = true;
                    }
                if (!dirty) break;
            }
        }
    }
};

}  // namespace

std::optional<std::vector<i64>> solve_integer_linear(int m, int n, const std::vector<i64>& g,
                                                     const std::vector<i64>& t) {
    SmithSmall sm(m, n, g);
    // y = U t
    std::vector<i64> y(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) y[i] += sm.u[i * m + j] * t[j];
    std::vector<i64> z(n, 0);
    int r = std::min(m, n);
    for (int i = 0; i < m; ++i) {
        i64 d = (i < r) ? sm.s[i * n + i] : 0;
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            z[i] = y[i] / d;
        }
    }
    std::vector<i64> x(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += sm.v[i * n + j] * z[j];
    return x;
}

// --- symplectic completion ---------------------------------------------------

bool is_coprime_symmetric_pair(const Mat2& c, const Mat2& d) {
    if (!((c * d.transpose()).is_symmetric())) return false;
    // 2x4 block (C D), columns c0 c1 d0 d1; gcd over the six 2x2 minors
    std::array<std::array<i64, 2>, 4> col = {{{c.m[0], c.m[2]},
                                              {c.m[1], c.m[3]},
                                              {d.m[0], d.m[2]},
                                              {d.m[1], d.m[3]}}};
    i64 g = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            g = gcd_ll(g, col[i][0] * col[j][1] - col[i][1] * col[j][0]);
    return g == 1;
}

std::optional<std::pair<Mat2, Mat2>> symplectic_complete(const Mat2& c, const Mat2& d) {
    if (!is_coprime_symmetric_pair(c, d)) return std::nullopt;

    // A D^T - B C^T = I as a 4x8 system in (a00,a01,a10,a11,b00,b01,b10,b11).
    // Row (i,j) of the result: sum_k a_ik d_jk - sum_k b_ik c_jk.
    std::vector<i64> g(4 * 8, 0), rhs = {1, 0, 0, 1};
    auto G = [&](int row, int col) -> i64& { return g[row * 8 + col]; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int row = i * 2 + j;
            for (int k = 0; k < 2; ++k) {
                G(row, i * 2 + k) = d.m[j * 2 + k];       // a_ik * d_jk
                G(row, 4 + i * 2 + k) = -c.m[j * 2 + k];  // -b_ik * c_jk
            }
        }
    auto sol = solve_integer_linear(4, 8, g, rhs);
    if (!sol) return std::nullopt;  // unreachable for a coprime symmetric pair
    Mat2 a((*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]);
    Mat2 b((*sol)[4], (*sol)[5], (*sol)[6], (*sol)[7]);

    // fix the antisymmetric defect of A B^T by the shift (A,B) += S(C,D),
    // S = [[0, x],[0, 0]]; this keeps A D^T - B C^T = I since C D^T is symmetric
    Mat2 ab = a * b.transpose();
    i64 x = ab.m[1] - ab.m[2];
    Mat2 s(0, x, 0, 0);
    a = a + s * c;
    b = b + s * d;
    return std::make_pair(a, b);
}

// --- L_C and its quotient -----------------------------------------------------

namespace {

// integer kernel basis (3 vectors in Z^4) of a single nonzero functional w.x = 0
std::array<std::array<i64, 4>, 3> kernel_basis_1x4(const std::array<i64, 4>& w) {
    // Smith of the 1x4 matrix: w V = (g 0 0 0); kernel basis = cols 1..3 of V
    SmithSmall sm(1, 4, std::vector<i64>(w.begin(), w.end()));
    std::array<std::array<i64, 4>, 3> out{};
    for (int j = 1; j < 4; ++j)
        for (int i = 0; i < 4; ++i) out[j - 1][i] = sm.v[i * 4 + j];
    return out;
}

Mat2 from_vec(const std::array<i64, 4>& v) { return Mat2(v[0], v[1], v[2], v[3]); }

}  // namespace

SymLatticeBasis compatible_d_lattice(const Mat2& c) {
    if (c.det() == 0) throw std::invalid_argument("compatible_d_lattice: singular matrix");
    // constraint (C D^T - D C^T)_{01} = 0:
    //   c00*D10 + c01*D11 - c10*D00 - c11*D01 = 0
    std::array<i64, 4> w = {-c.m[2], -c.m[3], c.m[0], c.m[1]};
    auto kb = kernel_basis_1x4(w);

    SymLatticeBasis lat;
    for (int i = 0; i < 3; ++i) lat.gens[i] = from_vec(kb[i]);
    lat.sub_gens[0] = c * Mat2(1, 0, 0, 0);
    lat.sub_gens[1] = c * Mat2(0, 1, 1, 0);
    lat.sub_gens[2] = c * Mat2(0, 0, 0, 1);

    // coordinates of sub_gens in the gens basis: solve 4x3 systems
    std::vector<i64> basis_mat(4 * 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) basis_mat[i * 3 + j] = lat.gens[j].m[i];
    std::vector<i64> wmat(3 * 3);
    for (int j = 0; j < 3; ++j) {
        std::vector<i64> t(4);
        for (int i = 0; i < 4; ++i) t[i] = lat.sub_gens[j].m[i];
        auto x = solve_integer_linear(4, 3, basis_mat, t);
        if (!x) throw std::logic_error("compatible_d_lattice: C*Lambda not inside L_C");
        for (int i = 0; i < 3; ++i) wmat[i * 3 + j] = (*x)[i];
    }

    // Smith of the 3x3 inclusion: U W V' = diag(e); adapted basis B' = B U^{-1},
    // i.e. solve U^T (B'^T) = B^T columnwise. U is unimodular so this is exact.
    SmithSmall sm(3, 3, wmat);
    for (int i = 0; i < 3; ++i) {
        i64 e = sm.s[i * 3 + i];
        lat.elem_div[i] = e < 0 ? -e : e;
        if (lat.elem_div[i] == 0) throw std::logic_error("compatible_d_lattice: rank defect");
    }
    // rep_gens[j] = sum_i gens[i] * (U^{-1})_{ij}; solve U X = I exactly
    std::array<std::array<i64, 3>, 3> uinv{};
    for (int j = 0; j < 3; ++j) {
        std::vector<i64> e(3, 0);
        e[j] = 1;
        auto x = solve_integer_linear(3, 3, std::vector<i64>(sm.u.begin(), sm.u.end()), e);
        if (!x) throw std::logic_error("compatible_d_lattice: U not invertible");
        for (int i = 0; i < 3; ++i) uinv[i][j] = (*x)[i];
    }
    for (int j = 0; j < 3; ++j) {
        Mat2 g = Mat2::zero();
        for (int i = 0; i < 3; ++i) {
            Mat2 t = lat.gens[i];
            for (auto& mm : t.m) mm *= uinv[i][j];
            g = g + t;
        }
        lat.rep_gens[j] = g;
    }
    return lat;
}

std::vector<Mat2> SymLatticeBasis::representatives() const {
    std::vector<Mat2> out;
    out.reserve((size_t)index());
    for (i64 y0 = 0; y0 < elem_div[0]; ++y0)
        for (i64 y1 = 0; y1 < elem_div[1]; ++y1)
            for (i64 y2 = 0; y2 < elem_div[2]; ++y2) {
                Mat2 d = Mat2::zero();
                for (int i = 0; i < 4; ++i)
                    d.m[i] = y0 * rep_gens[0].m[i] + y1 * rep_gens[1].m[i] + y2 * rep_gens[2].m[i];
                out.push_back(d);
            }
    return out;
}

// --- eigen_pair ----------------------------------------------------------------

std::pair<double, double> eigen_pair(const QuadForm2& t, const QuadForm2& q, const Mat2& c) {
    i64 det_c = c.det();
    if (det_c == 0) throw std::invalid_argument("eigen_pair: singular matrix");
    // P = T C^{-1} Q C^{-T}; trace = Tr(2T adj(C) 2Q adj(C)^T) / (4 det^2), exact
    Mat2 adjc = c.adj();
    Mat2 num = t.twice() * adjc * q.twice() * adjc.transpose();
    i128 tr_num = (i128)num.m[0] + num.m[3];
    i128 tr_den = (i128)4 * det_c * det_c;
    // det = det(T) det(Q) / det(C)^2 = disc(T) disc(Q) / (16 det^2)
    i128 det_num = (i128)t.disc() * q.disc();
    i128 det_den = (i128)16 * det_c * det_c * det_c * det_c;

    double tr = double(tr_num) / double(tr_den);
    double dd = double(det_num) / double(det_den);
    double disc = tr * tr - 4.0 * dd;
    if (disc < 0) disc = 0;  // symmetric positive spectrum, clamp rounding
    double r = std::sqrt(disc);
    return {(tr - r) / 2.0, (tr + r) / 2.0};
}

}  // namespace sp4
