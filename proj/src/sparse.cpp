#include "curvmod/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace curvmod {

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i] = {{i, Rational(1)}};
    return m;
}

std::int64_t SparseMatrix::nnz() const {
    std::int64_t n = 0;
    for (const auto& r : rows_) n += static_cast<std::int64_t>(r.size());
    return n;
}

Rational SparseMatrix::at(int i, int j) const {
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) return it->second;
    return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(ncols_, nrows_);
    std::vector<int> counts(ncols_, 0);
    for (const auto& r : rows_)
        for (const auto& [c, v] : r) counts[c]++;
    for (int c = 0; c < ncols_; ++c) t.rows_[c].reserve(counts[c]);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [c, v] : rows_[i]) t.rows_[c].emplace_back(i, v);
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    assert(ncols_ == o.nrows_);
    SparseMatrix out(nrows_, o.ncols_);
    std::map<int, Rational> acc;
    for (int i = 0; i < nrows_; ++i) {
        acc.clear();
        for (const auto& [k, v] : rows_[i])
            for (const auto& [j, w] : o.rows_[k]) acc[j] += v * w;
        Row r;
        for (auto& [j, v] : acc)
            if (v != 0) r.emplace_back(j, v);
        out.rows_[i] = std::move(r);
    }
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    SparseMatrix out(nrows_, ncols_);
    if (c == 0) return out;
    for (int i = 0; i < nrows_; ++i) {
        out.rows_[i] = rows_[i];
        for (auto& [j, v] : out.rows_[i]) v *= c;
    }
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    assert(nrows_ == o.nrows_ && ncols_ == o.ncols_);
    SparseMatrix out(nrows_, ncols_);
    for (int i = 0; i < nrows_; ++i) {
        Row r;
        auto a = rows_[i].begin(), ae = rows_[i].end();
        auto b = o.rows_[i].begin(), be = o.rows_[i].end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                r.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                r.emplace_back(b->first, -b->second);
                ++b;
            } else {
                Rational v = a->second - b->second;
                if (v != 0) r.emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
        out.rows_[i] = std::move(r);
    }
    return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& below) const {
    assert(ncols_ == below.ncols_);
    SparseMatrix out(nrows_ + below.nrows_, ncols_);
    for (int i = 0; i < nrows_; ++i) out.rows_[i] = rows_[i];
    for (int i = 0; i < below.nrows_; ++i) out.rows_[nrows_ + i] = below.rows_[i];
    return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& rows) const {
    SparseMatrix out(static_cast<int>(rows.size()), ncols_);
    for (size_t i = 0; i < rows.size(); ++i) out.rows_[i] = rows_[rows[i]];
    return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<int>& cols) const {
    std::vector<int> remap(ncols_, -1);
    for (size_t i = 0; i < cols.size(); ++i) remap[cols[i]] = static_cast<int>(i);
    SparseMatrix out(nrows_, static_cast<int>(cols.size()));
    for (int i = 0; i < nrows_; ++i) {
        Row r;
        for (const auto& [c, v] : rows_[i])
            if (remap[c] >= 0) r.emplace_back(remap[c], v);
        std::sort(r.begin(), r.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        out.rows_[i] = std::move(r);
    }
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int i = 0; i < nrows_; ++i) {
        Rational acc(0);
        for (const auto& [c, w] : rows_[i]) {
            auto it = v.find(c);
            if (it != v.end()) acc += w * it->second;
        }
        if (acc != 0) out[i] = acc;
    }
    return out;
}

std::string SparseMatrix::to_text() const {
    std::ostringstream os;
    os << nrows_ << " " << ncols_ << " " << nnz() << "\n";
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [c, v] : rows_[i])
            os << (i + 1) << " " << (c + 1) << " " << rational_to_text(v) << "\n";
    return os.str();
}

SparseMatrix SparseMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    long nrows, ncols, nnz;
    if (!(is >> nrows >> ncols >> nnz)) throw ParseError("bad matrix header");
    if (nrows < 0 || ncols < 0 || nnz < 0) throw ParseError("negative matrix header field");
    SparseMatrix m(static_cast<int>(nrows), static_cast<int>(ncols));
    int last_i = -1, last_j = -1;
    for (long k = 0; k < nnz; ++k) {
        long i, j;
        std::string lit;
        if (!(is >> i >> j >> lit)) throw ParseError("truncated matrix body");
        if (i < 1 || i > nrows || j < 1 || j > ncols) throw ParseError("matrix index out of bounds");
        Rational v = rational_from_text(lit);
        if (v == 0) throw ParseError("stored zero entry");
        if (i - 1 < last_i || (i - 1 == last_i && j - 1 <= last_j))
            throw ParseError("entries not sorted row-major");
        last_i = static_cast<int>(i - 1);
        last_j = static_cast<int>(j - 1);
        m.rows_[i - 1].emplace_back(static_cast<int>(j - 1), v);
    }
    return m;
}

void SparseMatrixBuilder::add(int i, int j, const Rational& v) {
    assert(i >= 0 && i < nrows_ && j >= 0 && j < ncols_);
    if (v == 0) return;
    auto& cell = rows_[i][j];
    cell += v;
    if (cell == 0) rows_[i].erase(j);
}

SparseMatrix SparseMatrixBuilder::build() const {
    SparseMatrix m(nrows_, ncols_);
    for (int i = 0; i < nrows_; ++i) {
        SparseMatrix::Row r;
        r.reserve(rows_[i].size());
        for (const auto& [c, v] : rows_[i]) r.emplace_back(c, v);
        m.set_row(i, std::move(r));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Exact elimination over the integers (content-stripped rows, Markowitz-style
// pivoting: sparsest column first, then sparsest row).

namespace {

using IEntry = std::pair<int, Integer>;
using IRow = std::vector<IEntry>;

void strip_content(IRow& r) {
    if (r.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// pv*row - q*prow; the pivot column cancels by construction.
IRow combine(const Integer& pv, const IRow& row, const Integer& q, const IRow& prow) {
    IRow out;
    out.reserve(row.size() + prow.size());
    auto a = row.begin(), ae = row.end();
    auto b = prow.begin(), be = prow.end();
    Integer t1, t2;
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.emplace_back(a->first, pv * a->second);
            ++a;
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, -q * b->second);
            ++b;
        } else {
            t1 = pv * a->second;
            t2 = q * b->second;
            t1 -= t2;
            if (t1 != 0) out.emplace_back(a->first, t1);
            ++a;
            ++b;
        }
    }
    strip_content(out);
    return out;
}

bool row_has(const IRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const IEntry& e, int c) { return e.first < c; });
    return it != r.end() && it->first == col;
}

const Integer* row_get(const IRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const IEntry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) return &it->second;
    return nullptr;
}

struct Eliminator {
    int nrows, ncols;
    std::vector<IRow> rows;
    std::vector<char> alive;               // row is a pivot candidate
    std::vector<int> col_count;            // nonzeros among alive rows
    std::vector<std::vector<int>> col_rows; // superset of alive rows touching col
    std::vector<std::pair<int, int>> pivots; // (row, col) in selection order

    explicit Eliminator(const SparseMatrix& m)
        : nrows(m.nrows()), ncols(m.ncols()), rows(nrows), alive(nrows, 1),
          col_count(ncols, 0), col_rows(ncols) {
        Integer l, t;
        for (int i = 0; i < nrows; ++i) {
            const auto& src = m.row(i);
            IRow r;
            r.reserve(src.size());
            l = 1;
            for (const auto& [c, v] : src) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
            for (const auto& [c, v] : src) {
                t = l / v.get_den();
                r.emplace_back(c, v.get_num() * t);
            }
            strip_content(r);
            if (r.empty()) {
                alive[i] = 0;
            } else {
                for (const auto& [c, v] : r) {
                    col_count[c]++;
                    col_rows[c].push_back(i);
                }
            }
            rows[i] = std::move(r);
        }
    }

    void register_update(int ri, const IRow& oldr, const IRow& newr) {
        auto a = oldr.begin(), ae = oldr.end();
        auto b = newr.begin(), be = newr.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                col_count[a->first]--;
                ++a;
            } else if (a == ae || b->first < a->first) {
                col_count[b->first]++;
                col_rows[b->first].push_back(ri);
                ++b;
            } else {
                ++a;
                ++b;
            }
        }
    }

    void retire_row(int ri) {
        alive[ri] = 0;
        for (const auto& [c, v] : rows[ri]) col_count[c]--;
    }

    // Forward pass; keep_pivot_rows controls whether pivot rows stay in memory
    // (needed for rref / kernels) or may be dropped (rank only). With
    // `leftmost` the pivot column is the smallest remaining one, which makes
    // finish_rref produce the unique reduced row echelon form.
    void run(bool keep_pivot_rows, bool leftmost = false) {
        for (;;) {
            int pc = -1, best = INT32_MAX;
            for (int c = 0; c < ncols; ++c)
                if (col_count[c] > 0 && (leftmost || col_count[c] < best)) {
                    best = col_count[c];
                    pc = c;
                    if (leftmost) break;
                }
            if (pc < 0) break;
            int pr = -1;
            size_t prlen = SIZE_MAX;
            for (int ri : col_rows[pc]) {
                if (!alive[ri] || !row_has(rows[ri], pc)) continue;
                if (rows[ri].size() < prlen || (rows[ri].size() == prlen && ri < pr)) {
                    prlen = rows[ri].size();
                    pr = ri;
                }
            }
            assert(pr >= 0);
            retire_row(pr);
            const Integer pv = *row_get(rows[pr], pc);
            std::vector<int> targets;
            for (int ri : col_rows[pc])
                if (alive[ri] && row_has(rows[ri], pc)) targets.push_back(ri);
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (int ri : targets) {
                const Integer q = *row_get(rows[ri], pc);
                IRow updated = combine(pv, rows[ri], q, rows[pr]);
                register_update(ri, rows[ri], updated);
                rows[ri] = std::move(updated);
                if (rows[ri].empty()) alive[ri] = 0;
            }
            pivots.emplace_back(pr, pc);
            if (!keep_pivot_rows) rows[pr] = IRow();
            col_rows[pc].clear();
        }
    }

    // Back-substitution among pivot rows, then division by pivots; produces
    // canonical rref rows sorted by pivot column.
    RrefResult finish_rref() {
        std::vector<int> pivot_of_col(ncols, -1);
        for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i].second] = static_cast<int>(i);
        std::vector<int> selection_index(pivots.size());
        for (size_t i = 0; i < pivots.size(); ++i) selection_index[i] = static_cast<int>(i);
        // reduce in reverse selection order
        for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
            auto [ri, ci] = pivots[i];
            for (;;) {
                int target = -1;
                for (const auto& [c, v] : rows[ri]) {
                    int pj = pivot_of_col[c];
                    if (c != ci && pj >= 0) {
                        target = c;
                        break;
                    }
                }
                if (target < 0) break;
                auto [rj, cj] = pivots[pivot_of_col[target]];
                const Integer pv = *row_get(rows[rj], cj);
                const Integer q = *row_get(rows[ri], target);
                rows[ri] = combine(pv, rows[ri], q, rows[rj]);
            }
        }
        std::vector<std::pair<int, int>> sorted = pivots; // (row, col)
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        RrefResult res;
        res.rank = static_cast<int>(sorted.size());
        res.rref = SparseMatrix(res.rank, ncols);
        for (int i = 0; i < res.rank; ++i) {
            auto [ri, ci] = sorted[i];
            res.pivot_cols.push_back(ci);
            const Integer pv = *row_get(rows[ri], ci);
            SparseMatrix::Row out;
            out.reserve(rows[ri].size());
            for (const auto& [c, v] : rows[ri]) {
                Rational q(v, pv);
                q.canonicalize();
                out.emplace_back(c, std::move(q));
            }
            res.rref.set_row(i, std::move(out));
        }
        return res;
    }
};

} // namespace

int rank(const SparseMatrix& m) {
    Eliminator e(m);
    e.run(false);
    return static_cast<int>(e.pivots.size());
}

namespace {

// True when every row's pivot is its leading entry; together with the other
// reduced-form invariants this characterizes the unique rref.
bool leading_pivots(const RrefResult& r) {
    for (int i = 0; i < r.rank; ++i)
        if (r.rref.row(i).front().first != r.pivot_cols[i]) return false;
    return true;
}

} // namespace

RrefResult rref(const SparseMatrix& m) {
    // Sparsity-driven pass first, then a leftmost-pivot pass on the reduced
    // rows to reach the canonical form; the second pass is over rank rows only.
    Eliminator e(m);
    e.run(true);
    RrefResult first = e.finish_rref();
    if (leading_pivots(first)) return first;
    Eliminator e2(first.rref);
    e2.run(true, true);
    return e2.finish_rref();
}

SubspaceBasis kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::vector<char> is_pivot(m.ncols(), 0);
    for (int c : r.pivot_cols) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.ncols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SparseMatrixBuilder b(static_cast<int>(free_cols.size()), m.ncols());
    for (size_t i = 0; i < free_cols.size(); ++i) {
        int f = free_cols[i];
        b.add(static_cast<int>(i), f, Rational(1));
        for (int pi = 0; pi < r.rank; ++pi) {
            Rational v = r.rref.at(pi, f);
            if (v != 0) b.add(static_cast<int>(i), r.pivot_cols[pi], -v);
        }
    }
    // canonicalize (leftmost reduced echelon form)
    RrefResult canon = rref(b.build());
    SubspaceBasis out;
    out.ambient_dim = m.ncols();
    out.vectors = canon.rref;
    return out;
}

SubspaceBasis row_space_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    return SubspaceBasis{m.ncols(), r.rref};
}

// ---------------------------------------------------------------------------
// Modular elimination.

namespace {

using MRow = std::vector<std::pair<int, std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u64(const Integer& z, std::uint64_t p) {
    Integer r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

} // namespace

int modular_rank(const SparseMatrix& m, std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw BadPrime("prime out of supported range");
    const int nrows = m.nrows(), ncols = m.ncols();
    std::vector<MRow> rows(nrows);
    std::vector<char> alive(nrows, 1);
    std::vector<int> col_count(ncols, 0);
    std::vector<std::vector<int>> col_rows(ncols);
    for (int i = 0; i < nrows; ++i) {
        MRow r;
        for (const auto& [c, v] : m.row(i)) {
            std::uint64_t den = mpz_mod_u64(v.get_den(), p);
            if (den == 0) throw BadPrime("prime divides a stored denominator");
            std::uint64_t num = mpz_mod_u64(v.get_num(), p);
            std::uint64_t e = mulmod(num, powmod(den, p - 2, p), p);
            if (e) r.emplace_back(c, e);
        }
        if (r.empty()) {
            alive[i] = 0;
        } else {
            for (const auto& [c, v] : r) {
                col_count[c]++;
                col_rows[c].push_back(i);
            }
        }
        rows[i] = std::move(r);
    }
    auto row_find = [](const MRow& r, int col) -> const std::uint64_t* {
        auto it = std::lower_bound(r.begin(), r.end(), col,
                                   [](const std::pair<int, std::uint64_t>& e, int c) { return e.first < c; });
        if (it != r.end() && it->first == col) return &it->second;
        return nullptr;
    };
    int rank = 0;
    for (;;) {
        int pc = -1, best = INT32_MAX;
        for (int c = 0; c < ncols; ++c)
            if (col_count[c] > 0 && col_count[c] < best) {
                best = col_count[c];
                pc = c;
            }
        if (pc < 0) break;
        int pr = -1;
        size_t prlen = SIZE_MAX;
        for (int ri : col_rows[pc]) {
            if (!alive[ri] || !row_find(rows[ri], pc)) continue;
            if (rows[ri].size() < prlen || (rows[ri].size() == prlen && ri < pr)) {
                prlen = rows[ri].size();
                pr = ri;
            }
        }
        alive[pr] = 0;
        for (const auto& [c, v] : rows[pr]) col_count[c]--;
        std::uint64_t pinv = powmod(*row_find(rows[pr], pc), p - 2, p);
        std::vector<int> targets;
        for (int ri : col_rows[pc])
            if (alive[ri] && row_find(rows[ri], pc)) targets.push_back(ri);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int ri : targets) {
            std::uint64_t f = mulmod(*row_find(rows[ri], pc), pinv, p);
            MRow out;
            out.reserve(rows[ri].size() + rows[pr].size());
            auto a = rows[ri].begin(), ae = rows[ri].end();
            auto b2 = rows[pr].begin(), be = rows[pr].end();
            while (a != ae || b2 != be) {
                if (b2 == be || (a != ae && a->first < b2->first)) {
                    out.push_back(*a++);
                } else if (a == ae || b2->first < a->first) {
                    std::uint64_t v = p - mulmod(f, b2->second, p);
                    if (v != p && v != 0) out.emplace_back(b2->first, v % p);
                    ++b2;
                } else {
                    std::uint64_t v = (a->second + p - mulmod(f, b2->second, p)) % p;
                    if (v) out.emplace_back(a->first, v);
                    ++a;
                    ++b2;
                }
            }
            // update col bookkeeping
            {
                auto x = rows[ri].begin(), xe = rows[ri].end();
                auto y = out.begin(), ye = out.end();
                while (x != xe || y != ye) {
                    if (y == ye || (x != xe && x->first < y->first)) {
                        col_count[x->first]--;
                        ++x;
                    } else if (x == xe || y->first < x->first) {
                        col_count[y->first]++;
                        col_rows[y->first].push_back(ri);
                        ++y;
                    } else {
                        ++x;
                        ++y;
                    }
                }
            }
            rows[ri] = std::move(out);
            if (rows[ri].empty()) alive[ri] = 0;
        }
        rows[pr] = MRow();
        col_rows[pc].clear();
        rank++;
    }
    return rank;
}

} // namespace curvmod
