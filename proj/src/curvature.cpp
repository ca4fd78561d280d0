#include "curvmod/curvature.hpp"

#include <algorithm>

#include "curvmod/errors.hpp"

namespace curvmod {

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Lexicographic rank of a strictly increasing tuple among all such tuples.
long tuple_rank(int n, const std::vector<int>& t) {
    int k = static_cast<int>(t.size());
    long r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int x = prev + 1; x < t[i]; ++x) r += binom(n - 1 - x, k - 1 - i);
        prev = t[i];
    }
    return r;
}

// Columns of the action matrices, for iterating X e_j.
std::vector<SparseMatrix> action_columns(const Representation& rho) {
    std::vector<SparseMatrix> t;
    t.reserve(rho.action.size());
    for (const auto& m : rho.action) t.push_back(m.transpose());
    return t;
}

int checked_rank(const SparseMatrix& m, RankMode mode, const std::vector<std::uint64_t>& primes) {
    if (mode == RankMode::Exact) return rank(m);
    if (primes.size() < 3) throw Error("modular mode needs at least 3 primes");
    int r = modular_rank(m, primes[0]);
    for (size_t i = 1; i < primes.size(); ++i)
        if (modular_rank(m, primes[i]) != r) throw Error("modular ranks disagree across primes");
    return r;
}

} // namespace

long CochainSpace::dim() const { return binom(n, k) * value_dim; }

long CochainSpace::index(const std::vector<int>& tuple, int value) const {
    return tuple_rank(n, tuple) * value_dim + value;
}

SparseMatrix bianchi_matrix(const Representation& rho) {
    const int n = rho.dim;
    const int dg = rho.algebra->dim();
    auto pairs = increasing_tuples(n, 2);
    const long nrows = binom(n, 3) * n;
    SparseMatrixBuilder b(static_cast<int>(nrows), static_cast<int>(pairs.size()) * dg);
    auto cols = action_columns(rho);
    std::vector<int> tri(3);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        int pa = pairs[pi][0], pb = pairs[pi][1];
        for (int x = 0; x < dg; ++x) {
            int col = static_cast<int>(pi) * dg + x;
            for (int m = 0; m < n; ++m) {
                if (m == pa || m == pb) continue;
                // orientation of (pa,pb) within the cyclic order of the sorted
                // triple: reversed exactly when m sits between them
                int sign = (m > pa && m < pb) ? -1 : 1;
                tri = {pa, pb, m};
                std::sort(tri.begin(), tri.end());
                long base = tuple_rank(n, tri) * n;
                for (const auto& [v, c] : cols[x].row(m))
                    b.add(static_cast<int>(base) + v, col, sign > 0 ? c : -c);
            }
        }
    }
    return b.build();
}

SubspaceBasis curvature_module(const Representation& rho) {
    return kernel_basis(bianchi_matrix(rho));
}

SubspaceBasis prolongation(const Representation& rho) {
    const int n = rho.dim;
    const int dg = rho.algebra->dim();
    const long nrows = binom(n, 2) * n;
    SparseMatrixBuilder b(static_cast<int>(nrows), n * dg);
    auto cols = action_columns(rho);
    std::vector<int> pr(2);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < dg; ++x) {
            int col = a * dg + x;
            for (int j = 0; j < n; ++j) {
                if (j == a) continue;
                // value at the pair {a,j} is +X e_j when a is the first slot
                int sign = (j > a) ? 1 : -1;
                pr = {std::min(a, j), std::max(a, j)};
                long base = tuple_rank(n, pr) * n;
                for (const auto& [v, c] : cols[x].row(j))
                    b.add(static_cast<int>(base) + v, col, sign > 0 ? c : -c);
            }
        }
    return kernel_basis(b.build());
}

namespace {

// Antisymmetrization V* (x) g^(1) -> wedge^2 V* (x) g on a computed
// prolongation basis.
SparseMatrix spencer_map(const Representation& rho, const SubspaceBasis& prol) {
    const int n = rho.dim;
    const int dg = rho.algebra->dim();
    const int dp = prol.size();
    SparseMatrixBuilder b(static_cast<int>(binom(n, 2)) * dg, n * dp);
    std::vector<int> pr(2);
    for (int a = 0; a < n; ++a)
        for (int s = 0; s < dp; ++s) {
            int col = a * dp + s;
            for (const auto& [idx, c] : prol.vectors.row(s)) {
                int j = idx / dg, x = idx % dg;
                if (j == a) continue;
                int sign = (j > a) ? 1 : -1;
                pr = {std::min(a, j), std::max(a, j)};
                long base = tuple_rank(n, pr) * dg;
                b.add(static_cast<int>(base) + x, col, sign > 0 ? c : -c);
            }
        }
    return b.build();
}

} // namespace

int spencer_h12(const Representation& rho) {
    auto k = curvature_module(rho);
    auto prol = prolongation(rho);
    if (prol.size() == 0) return k.size();
    return k.size() - rank(spencer_map(rho, prol));
}

SparseMatrix ricci_trace_matrix(const Representation& rho) {
    const int n = rho.dim;
    const int dg = rho.algebra->dim();
    auto pairs = increasing_tuples(n, 2);
    SparseMatrixBuilder b(n * n, static_cast<int>(pairs.size()) * dg);
    auto cols = action_columns(rho);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        int pa = pairs[pi][0], pb = pairs[pi][1];
        for (int x = 0; x < dg; ++x) {
            int col = static_cast<int>(pi) * dg + x;
            // (t_R psi)(e_i, e_j) = [i=b](X e_j)_a - [i=a](X e_j)_b
            for (int j = 0; j < n; ++j)
                for (const auto& [v, c] : cols[x].row(j)) {
                    if (v == pa) b.add(pb * n + j, col, c);
                    if (v == pb) b.add(pa * n + j, col, -c);
                }
        }
    }
    return b.build();
}

CurvatureReport is_ricci_type(const Representation& rho) {
    CurvatureReport rep;
    rep.dim_V = rho.dim;
    rep.dim_g = rho.algebra->dim();
    rep.dim_domain = static_cast<int>(binom(rho.dim, 2)) * rep.dim_g;
    auto k = curvature_module(rho);
    rep.dim_K = k.size();
    auto prol = prolongation(rho);
    rep.dim_prolongation = prol.size();
    rep.dim_spencer_h12 =
        prol.size() == 0 ? rep.dim_K : rep.dim_K - rank(spencer_map(rho, prol));
    // t_R restricted to K: rows of the kernel basis pushed through the trace
    auto t = ricci_trace_matrix(rho);
    rep.ricci_trace_rank_on_K = rank(k.vectors * t.transpose());
    rep.ricci_type = rep.ricci_trace_rank_on_K == rep.dim_K;
    return rep;
}

SparseMatrix lie_cochain_differential(const GradedLieAlgebra& g, int k) {
    if (k < 0) throw Error("negative cochain degree");
    auto v = g.component(-1);
    const int n = static_cast<int>(v.size());
    const int nn = g.algebra->dim();
    auto cod = increasing_tuples(n, k + 1);
    const long ncols = binom(n, k) * nn;
    SparseMatrixBuilder b(static_cast<int>(cod.size()) * nn, static_cast<int>(ncols));
    std::vector<int> s(k);
    for (size_t ti = 0; ti < cod.size(); ++ti) {
        const auto& t = cod[ti];
        for (int i = 0; i <= k; ++i) {
            s.clear();
            for (int j = 0; j <= k; ++j)
                if (j != i) s.push_back(t[j]);
            long cbase = tuple_rank(n, s) * nn;
            long rbase = static_cast<long>(ti) * nn;
            int sign = (i % 2) ? -1 : 1;
            for (int w = 0; w < nn; ++w)
                for (const auto& [u, c] : g.algebra->bracket(v[t[i]], w))
                    b.add(static_cast<int>(rbase) + u, static_cast<int>(cbase) + w,
                          sign > 0 ? c : -c);
        }
    }
    return b.build();
}

SparseMatrix lie_cochain_differential_component(const GradedLieAlgebra& g, int k,
                                                int value_degree) {
    if (k < 0) throw Error("negative cochain degree");
    auto v = g.component(-1);
    auto dom_vals = g.component(value_degree);
    auto cod_vals = g.component(value_degree - 1);
    const int n = static_cast<int>(v.size());
    const int dv = static_cast<int>(dom_vals.size());
    const int cv = static_cast<int>(cod_vals.size());
    std::vector<int> cod_pos(g.algebra->dim(), -1);
    for (int i = 0; i < cv; ++i) cod_pos[cod_vals[i]] = i;
    auto cod = increasing_tuples(n, k + 1);
    const long ncols = binom(n, k) * dv;
    SparseMatrixBuilder b(static_cast<int>(cod.size()) * cv, static_cast<int>(ncols));
    std::vector<int> s(k);
    for (size_t ti = 0; ti < cod.size(); ++ti) {
        const auto& t = cod[ti];
        for (int i = 0; i <= k; ++i) {
            s.clear();
            for (int j = 0; j <= k; ++j)
                if (j != i) s.push_back(t[j]);
            long cbase = tuple_rank(n, s) * dv;
            long rbase = static_cast<long>(ti) * cv;
            int sign = (i % 2) ? -1 : 1;
            for (int w = 0; w < dv; ++w)
                for (const auto& [u, c] : g.algebra->bracket(v[t[i]], dom_vals[w])) {
                    int p = cod_pos[u];
                    if (p < 0) throw Error("bracket left the expected graded component");
                    b.add(static_cast<int>(rbase) + p, static_cast<int>(cbase) + w,
                          sign > 0 ? c : -c);
                }
        }
    }
    return b.build();
}

bool verify_homogeneity(const GradedLieAlgebra& g) {
    auto v = g.component(-1);
    const int nn = g.algebra->dim();
    auto d1 = lie_cochain_differential(g, 1);
    auto cols = d1.transpose();
    for (int col = 0; col < cols.nrows(); ++col) {
        int wdeg = g.degree[col % nn];
        for (const auto& [row, c] : cols.row(col)) {
            (void)c;
            if (wdeg == -1) return false; // V*(x)V must map to zero
            if (g.degree[row % nn] != wdeg - 1) return false;
        }
    }
    return true;
}

Rational verify_prop1(const GradedLieAlgebra& g) {
    auto d = lie_cochain_differential_component(g, 2, 0);
    auto b = bianchi_matrix(component_rep(g, -1));
    if (d.nrows() != b.nrows() || d.ncols() != b.ncols())
        throw Error("cochain and curvature index conventions disagree");
    if (b.is_zero() && d.is_zero()) return Rational(-1); // dim V < 3: both maps vanish
    Rational c(0);
    for (int i = 0; i < b.nrows() && c == 0; ++i)
        for (const auto& [j, bv] : b.row(i)) {
            c = d.at(i, j) / bv;
            break;
        }
    if (c == 0 || !(d - b.scaled(c)).is_zero())
        throw NotProportional("differential is not a scalar multiple of the Bianchi map");
    return c;
}

std::pair<int, bool> image_decomposition(const GradedLieAlgebra& g) {
    auto d1 = lie_cochain_differential_component(g, 1, 1);
    auto image = row_space_basis(d1.transpose());
    auto k = kernel_basis(bianchi_matrix(component_rep(g, -1)));
    return {image.size(), image == k};
}

SparseMatrix tR_circ_dLie(const GradedLieAlgebra& g) {
    auto d1 = lie_cochain_differential_component(g, 1, 1);
    auto t = ricci_trace_matrix(component_rep(g, -1));
    return t * d1;
}

int lie_cohomology_dim(const GradedLieAlgebra& g, int k, RankMode mode,
                       const std::vector<std::uint64_t>& primes) {
    auto dk = lie_cochain_differential(g, k);
    int ker = dk.ncols() - checked_rank(dk, mode, primes);
    if (k == 0) return ker;
    auto prev = lie_cochain_differential(g, k - 1);
    return ker - checked_rank(prev, mode, primes);
}

int lie_cohomology_component_dim(const GradedLieAlgebra& g, int k, int value_degree,
                                 RankMode mode, const std::vector<std::uint64_t>& primes) {
    auto dk = lie_cochain_differential_component(g, k, value_degree);
    int ker = dk.ncols() - checked_rank(dk, mode, primes);
    if (k == 0) return ker;
    auto prev = lie_cochain_differential_component(g, k - 1, value_degree + 1);
    return ker - checked_rank(prev, mode, primes);
}

} // namespace curvmod
