#include "curvmod/liealg.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace curvmod {

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       std::vector<std::vector<std::vector<std::pair<int, Rational>>>> upper)
    : dim_(static_cast<int>(labels.size())), labels_(std::move(labels)), upper_(std::move(upper)) {
    assert(static_cast<int>(upper_.size()) == dim_);
}

std::vector<std::pair<int, Rational>> LieAlgebra::bracket(int i, int j) const {
    if (i == j) return {};
    if (i < j) return upper_[i][j - i - 1];
    auto out = upper_[j][i - j - 1];
    for (auto& [k, c] : out) c = -c;
    return out;
}

SparseVec LieAlgebra::bracket(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b)
            for (const auto& [k, c] : bracket(i, j)) {
                auto& cell = out[k];
                cell += ca * cb * c;
                if (cell == 0) out.erase(k);
            }
    return out;
}

SparseMatrix LieAlgebra::ad(int i) const {
    SparseMatrixBuilder b(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (const auto& [k, c] : bracket(i, j)) b.add(k, j, c);
    return b.build();
}

bool check_jacobi(const LieAlgebra& l) {
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto bij = l.bracket(i, j);
            for (int k = j + 1; k < n; ++k) {
                SparseVec acc;
                auto addterm = [&](const std::vector<std::pair<int, Rational>>& bxy, int z) {
                    for (const auto& [l2, c] : bxy)
                        for (const auto& [m, c2] : l.bracket(l2, z)) {
                            auto& cell = acc[m];
                            cell += c * c2;
                            if (cell == 0) acc.erase(m);
                        }
                };
                addterm(bij, k);
                addterm(l.bracket(j, k), i);
                addterm(l.bracket(k, i), j);
                if (!acc.empty()) return false;
            }
        }
    return true;
}

bool check_representation(const Representation& rho) {
    const LieAlgebra& l = *rho.algebra;
    const int n = l.dim();
    if (static_cast<int>(rho.action.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseMatrix comm = rho.action[i] * rho.action[j] - rho.action[j] * rho.action[i];
            SparseMatrixBuilder rhs(rho.dim, rho.dim);
            for (const auto& [k, c] : l.bracket(i, j))
                for (int r = 0; r < rho.dim; ++r)
                    for (const auto& [col, v] : rho.action[k].row(r)) rhs.add(r, col, c * v);
            if (!(comm == rhs.build())) return false;
        }
    return true;
}

Representation adjoint_rep(const LieAlgebraPtr& l) {
    Representation rho;
    rho.algebra = l;
    rho.dim = l->dim();
    for (int i = 0; i < l->dim(); ++i) rho.action.push_back(l->ad(i));
    return rho;
}

// ---------------------------------------------------------------------------

namespace {

// Expresses each commutator of `mats` in the span of `mats` (must be linearly
// independent and closed). Returns the structure-constant table.
std::vector<std::vector<std::vector<std::pair<int, Rational>>>>
structure_from_matrices(const std::vector<SparseMatrix>& mats, int n) {
    const int d = static_cast<int>(mats.size());
    // columns of B = vectorized basis matrices
    SparseMatrixBuilder bb(n * n, d);
    for (int g = 0; g < d; ++g)
        for (int r = 0; r < n; ++r)
            for (const auto& [c, v] : mats[g].row(r)) bb.add(r * n + c, g, v);
    SparseMatrix B = bb.build();
    RrefResult R = rref(B);
    if (R.rank != d) throw Error("matrix basis is not linearly independent");
    // For solving B x = t: restrict to the pivot rows; invert that d x d block.
    RrefResult Rt = rref(B.transpose());
    std::vector<int> pivot_rows = Rt.pivot_cols; // independent rows of B
    SparseMatrix Bp = B.select_rows(pivot_rows);
    // invert via rref of [Bp | I]
    SparseMatrixBuilder aug(d, 2 * d);
    for (int i = 0; i < d; ++i) {
        for (const auto& [c, v] : Bp.row(i)) aug.add(i, c, v);
        aug.add(i, d + i, Rational(1));
    }
    RrefResult inv = rref(aug.build());
    if (inv.rank != d) throw Error("pivot block not invertible");
    std::vector<int> right;
    for (int i = 0; i < d; ++i) right.push_back(d + i);
    SparseMatrix Bpinv = inv.rref.select_columns(right);

    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table(d);
    for (int i = 0; i < d; ++i) table[i].resize(d - i - 1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            SparseMatrix comm = mats[i] * mats[j] - mats[j] * mats[i];
            SparseVec t;
            for (size_t pi = 0; pi < pivot_rows.size(); ++pi) {
                int rc = pivot_rows[pi];
                Rational v = comm.at(rc / n, rc % n);
                if (v != 0) t[static_cast<int>(pi)] = v;
            }
            SparseVec x = Bpinv.apply(t);
            // verify exactly
            SparseMatrixBuilder chk(n, n);
            for (const auto& [g, c] : x)
                for (int r = 0; r < n; ++r)
                    for (const auto& [cc, v] : mats[g].row(r)) chk.add(r, cc, c * v);
            if (!(chk.build() == comm)) throw Error("matrix set not closed under commutator");
            auto& cell = table[i][j - i - 1];
            for (const auto& [g, c] : x) cell.emplace_back(g, c);
        }
    return table;
}

} // namespace

Representation algebra_from_matrices(std::vector<std::string> labels,
                                     std::vector<SparseMatrix> mats, int space_dim) {
    auto table = structure_from_matrices(mats, space_dim);
    auto alg = std::make_shared<LieAlgebra>(std::move(labels), std::move(table));
    Representation rho;
    rho.algebra = alg;
    rho.dim = space_dim;
    rho.action = std::move(mats);
    return rho;
}

// ---------------------------------------------------------------------------
// Split orthogonal algebra and spinors.

namespace {

// Gram matrix of the split form: B(u_i, w_j) = delta_ij with u_i = e_i,
// w_i = e_{m+i}; odd n has a final unit vector.
Rational gram(int n, int a, int b) {
    int m = n / 2;
    if (a < m && b == m + a) return Rational(1);
    if (b < m && a == m + b) return Rational(1);
    if (n % 2 == 1 && a == n - 1 && b == n - 1) return Rational(1);
    return Rational(0);
}

std::vector<std::pair<int, int>> so_basis_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) ps.emplace_back(a, b);
    return ps;
}

} // namespace

Representation so_split(int n) {
    if (n < 2) throw Error("so_split requires n >= 2");
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    for (auto [a, b] : so_basis_pairs(n)) {
        SparseMatrixBuilder m(n, n);
        for (int c = 0; c < n; ++c) {
            m.add(a, c, gram(n, b, c));
            m.add(b, c, -gram(n, a, c));
        }
        mats.push_back(m.build());
        labels.push_back("X(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return algebra_from_matrices(std::move(labels), std::move(mats), n);
}

Representation half_spinor_rep(int n, Parity parity) {
    if (n < 2 || n % 2 != 0) throw Error("half_spinor_rep requires even n >= 2");
    const int m = n / 2;
    const int full = 1 << m;
    // gamma matrices on the full exterior algebra: u_i -> creation,
    // w_i -> twice annihilation, so that gamma_a gamma_b + gamma_b gamma_a = 2 B(a,b).
    auto sign_below = [](int s, int i) {
        int mask = s & ((1 << i) - 1);
        return (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) ? 1 : -1;
    };
    std::vector<SparseMatrix> gamma;
    for (int i = 0; i < m; ++i) { // creation
        SparseMatrixBuilder g(full, full);
        for (int s = 0; s < full; ++s)
            if (!((s >> i) & 1)) g.add(s | (1 << i), s, Rational(sign_below(s, i)));
        gamma.push_back(g.build());
    }
    for (int i = 0; i < m; ++i) { // 2 * annihilation
        SparseMatrixBuilder g(full, full);
        for (int s = 0; s < full; ++s)
            if ((s >> i) & 1) g.add(s & ~(1 << i), s, Rational(2 * sign_below(s, i)));
        gamma.push_back(g.build());
    }
    // sigma_{a,b} = (gamma_a gamma_b - B(a,b)) / 2 intertwines with X_{a,b}.
    const int want = parity == Parity::Even ? 0 : 1;
    std::vector<int> keep;
    for (int s = 0; s < full; ++s)
        if (__builtin_popcount(static_cast<unsigned>(s)) % 2 == want) keep.push_back(s);
    std::vector<int> pos(full, -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);

    Representation vec = so_split(n);
    Representation rho;
    rho.algebra = vec.algebra;
    rho.dim = static_cast<int>(keep.size());
    for (auto [a, b] : so_basis_pairs(n)) {
        SparseMatrix prod = gamma[a] * gamma[b];
        SparseMatrixBuilder sg(rho.dim, rho.dim);
        for (int r = 0; r < full; ++r) {
            if (pos[r] < 0) continue;
            for (const auto& [c, v] : prod.row(r)) {
                if (pos[c] < 0) continue; // parity is preserved; defensive skip
                sg.add(pos[r], pos[c], v / 2);
            }
        }
        Rational bab = gram(n, a, b);
        if (bab != 0)
            for (int i = 0; i < rho.dim; ++i) sg.add(i, i, -bab / 2);
        rho.action.push_back(sg.build());
    }
    return rho;
}

Representation append_center(const Representation& rho) {
    const LieAlgebra& l = *rho.algebra;
    const int d = l.dim();
    std::vector<std::string> labels = l.basis_labels();
    labels.push_back("Z");
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table(d + 1);
    for (int i = 0; i <= d; ++i) table[i].resize(d - i);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) table[i][j - i - 1] = l.bracket(i, j);
    auto alg = std::make_shared<LieAlgebra>(std::move(labels), std::move(table));
    Representation out;
    out.algebra = alg;
    out.dim = rho.dim;
    out.action = rho.action;
    out.action.push_back(SparseMatrix::identity(rho.dim));
    return out;
}

Representation gl_rep(int n) {
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseMatrixBuilder m(n, n);
            m.add(i, j, Rational(1));
            mats.push_back(m.build());
            labels.push_back("E(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return algebra_from_matrices(std::move(labels), std::move(mats), n);
}

Representation sl_rep(int n) {
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            SparseMatrixBuilder m(n, n);
            m.add(i, j, Rational(1));
            mats.push_back(m.build());
            labels.push_back("E(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (int i = 0; i + 1 < n; ++i) {
        SparseMatrixBuilder m(n, n);
        m.add(i, i, Rational(1));
        m.add(i + 1, i + 1, Rational(-1));
        mats.push_back(m.build());
        labels.push_back("H(" + std::to_string(i) + ")");
    }
    return algebra_from_matrices(std::move(labels), std::move(mats), n);
}

// ---------------------------------------------------------------------------
// Functorial constructions.

Representation dual_rep(const Representation& rho) {
    Representation out;
    out.algebra = rho.algebra;
    out.dim = rho.dim;
    for (const auto& m : rho.action) out.action.push_back(m.transpose().scaled(Rational(-1)));
    return out;
}

std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    for (;;) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

Representation wedge_rep(const Representation& rho, int k) {
    if (k > rho.dim) throw Error("wedge degree exceeds dimension");
    auto tuples = increasing_tuples(rho.dim, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
    Representation out;
    out.algebra = rho.algebra;
    out.dim = static_cast<int>(tuples.size());
    for (const auto& X : rho.action) {
        SparseMatrixBuilder m(out.dim, out.dim);
        for (size_t ti = 0; ti < tuples.size(); ++ti) {
            const auto& t = tuples[ti];
            for (int slot = 0; slot < k; ++slot) {
                // X acting in one slot: e_{t[slot]} -> X e_{t[slot]}
                for (int r = 0; r < rho.dim; ++r) {
                    Rational v = X.at(r, t[slot]);
                    if (v == 0) continue;
                    std::vector<int> nt = t;
                    nt[slot] = r;
                    // sort with sign; drop repeats
                    int sign = 1;
                    bool dup = false;
                    for (int a = 0; a < k && !dup; ++a)
                        for (int b = a + 1; b < k; ++b) {
                            if (nt[a] == nt[b]) {
                                dup = true;
                                break;
                            }
                            if (nt[a] > nt[b]) {
                                std::swap(nt[a], nt[b]);
                                sign = -sign;
                            }
                        }
                    if (dup) continue;
                    m.add(index[nt], static_cast<int>(ti), v * sign);
                }
            }
        }
        out.action.push_back(m.build());
    }
    return out;
}

Representation tensor_rep(const Representation& rho, const Representation& sigma) {
    assert(rho.algebra == sigma.algebra);
    Representation out;
    out.algebra = rho.algebra;
    out.dim = rho.dim * sigma.dim;
    const int sd = sigma.dim;
    for (size_t g = 0; g < rho.action.size(); ++g) {
        SparseMatrixBuilder m(out.dim, out.dim);
        // rho(X) (x) I
        for (int r = 0; r < rho.dim; ++r)
            for (const auto& [c, v] : rho.action[g].row(r))
                for (int s = 0; s < sd; ++s) m.add(r * sd + s, c * sd + s, v);
        // I (x) sigma(X)
        for (int r = 0; r < sd; ++r)
            for (const auto& [c, v] : sigma.action[g].row(r))
                for (int a = 0; a < rho.dim; ++a) m.add(a * sd + r, a * sd + c, v);
        out.action.push_back(m.build());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gradings.

std::vector<int> GradedLieAlgebra::component(int d) const {
    std::vector<int> out;
    for (int i = 0; i < algebra->dim(); ++i)
        if (degree[i] == d) out.push_back(i);
    return out;
}

bool check_grading(const GradedLieAlgebra& g) {
    const LieAlgebra& l = *g.algebra;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = i + 1; j < l.dim(); ++j) {
            int d = g.degree[i] + g.degree[j];
            for (const auto& [k, c] : l.bracket(i, j)) {
                if (d < -1 || d > 1) return false;
                if (g.degree[k] != d) return false;
            }
        }
    if (g.grading_element) {
        for (int j = 0; j < l.dim(); ++j) {
            SparseVec x{{j, Rational(1)}};
            SparseVec br = l.bracket(*g.grading_element, x);
            SparseVec want;
            if (g.degree[j] != 0) want[j] = Rational(g.degree[j]);
            if (br != want) return false;
        }
    }
    return true;
}

Representation component_rep(const GradedLieAlgebra& g, int d) {
    if (d != -1 && d != 1) throw Error("component_rep degree must be -1 or +1");
    const LieAlgebra& l = *g.algebra;
    std::vector<int> vbasis = g.component(d);
    std::vector<int> zbasis = g.component(0);
    std::vector<int> vpos(l.dim(), -1);
    for (size_t i = 0; i < vbasis.size(); ++i) vpos[vbasis[i]] = static_cast<int>(i);
    std::vector<int> zpos(l.dim(), -1);
    for (size_t i = 0; i < zbasis.size(); ++i) zpos[zbasis[i]] = static_cast<int>(i);

    const int zd = static_cast<int>(zbasis.size());
    std::vector<std::string> labels;
    for (int i : zbasis) labels.push_back(l.basis_labels()[i]);
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table(zd);
    for (int i = 0; i < zd; ++i) table[i].resize(zd - i - 1);
    for (int i = 0; i < zd; ++i)
        for (int j = i + 1; j < zd; ++j) {
            auto& cell = table[i][j - i - 1];
            for (const auto& [k, c] : l.bracket(zbasis[i], zbasis[j])) {
                assert(zpos[k] >= 0);
                cell.emplace_back(zpos[k], c);
            }
            std::sort(cell.begin(), cell.end());
        }
    auto sub = std::make_shared<LieAlgebra>(std::move(labels), std::move(table));

    Representation rho;
    rho.algebra = sub;
    rho.dim = static_cast<int>(vbasis.size());
    for (int gi : zbasis) {
        SparseMatrixBuilder m(rho.dim, rho.dim);
        for (size_t col = 0; col < vbasis.size(); ++col)
            for (const auto& [k, c] : l.bracket(gi, vbasis[col])) {
                assert(vpos[k] >= 0);
                m.add(vpos[k], static_cast<int>(col), c);
            }
        rho.action.push_back(m.build());
    }
    return rho;
}

} // namespace curvmod
