#include "curvmod/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "curvmod/errors.hpp"

namespace curvmod {

namespace {

RootCoords add_rc(const RootCoords& a, const RootCoords& b) {
    RootCoords out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RootCoords neg_rc(const RootCoords& a) {
    RootCoords out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

bool is_zero_rc(const RootCoords& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// Structure constants N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta},
// determined by Carter's relations from the extraspecial-pair base values.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& r) : r_(r) {
        // extraspecial pair of each positive root gamma: the special pair
        // (xi, eta), xi + eta = gamma, xi < eta, with xi minimal.
        for (const auto& g : r.positive_roots) {
            int best = -1;
            for (int ai = 0; ai < static_cast<int>(r.positive_roots.size()); ++ai) {
                const auto& a = r.positive_roots[ai];
                RootCoords b = add_rc(g, neg_rc(a));
                int bi = r.pos_index(b);
                if (bi >= 0 && ai < bi) {
                    best = ai;
                    break; // positive roots are scanned in the total order
                }
            }
            if (best >= 0) extraspecial_[g] = best;
        }
    }

    // p_{a,b} = max{k : b - k a is a root}
    int p_of(const RootCoords& a, const RootCoords& b) const {
        int p = 0;
        RootCoords cur = b;
        for (;;) {
            cur = add_rc(cur, neg_rc(a));
            if (is_zero_rc(cur) || !r_.is_root(cur)) break;
            ++p;
        }
        return p;
    }

    Rational N(const RootCoords& a, const RootCoords& b) {
        auto key = std::make_pair(a, b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Rational v = compute(a, b);
        memo_[key] = v;
        return v;
    }

private:
    Rational compute(const RootCoords& a, const RootCoords& b) {
        const RootSystem& r = r_;
        RootCoords s = add_rc(a, b);
        bool apos = r.pos_index(a) >= 0;
        bool bpos = r.pos_index(b) >= 0;
        if (apos && bpos) return npos(a, b);
        if (!apos && !bpos) return -N(neg_rc(a), neg_rc(b));
        if (!apos) return -N(b, a);
        // a > 0, b < 0
        if (r.pos_index(s) >= 0) {
            // triple (a, b, -s) sums to zero:
            // N_{a,b}/(s,s) = N_{b,-s}/(a,a), and N_{b,-s} = -N_{-b,s}.
            return -(r.norm2(s) / r.norm2(a)) * N(neg_rc(b), s);
        }
        return -N(neg_rc(a), neg_rc(b));
    }

    Rational npos(const RootCoords& a, const RootCoords& b) {
        const RootSystem& r = r_;
        int ai = r.pos_index(a), bi = r.pos_index(b);
        if (ai > bi) return -npos(b, a);
        RootCoords g = add_rc(a, b);
        auto es = extraspecial_.at(g);
        const RootCoords& xi = r.positive_roots[es];
        RootCoords eta = add_rc(g, neg_rc(xi));
        if (a == xi && b == eta) return Rational(p_of(a, b) + 1);
        // Carter's four-root relation on (xi, eta, -a, -b), which sums to zero:
        //   N_{xi,eta} N_{-a,-b}/(xi+eta)^2 + N_{eta,-a} N_{xi,-b}/(eta-a)^2
        //     + N_{-a,xi} N_{eta,-b}/(xi-a)^2 = 0
        Rational t(0);
        RootCoords ea = add_rc(eta, neg_rc(a));
        RootCoords xb = add_rc(xi, neg_rc(b));
        if (!is_zero_rc(ea) && r.is_root(ea) && !is_zero_rc(xb) && r.is_root(xb))
            t += N(eta, neg_rc(a)) * N(xi, neg_rc(b)) / r.norm2(ea);
        RootCoords xa = add_rc(xi, neg_rc(a));
        RootCoords eb = add_rc(eta, neg_rc(b));
        if (!is_zero_rc(xa) && r.is_root(xa) && !is_zero_rc(eb) && r.is_root(eb))
            t += N(neg_rc(a), xi) * N(eta, neg_rc(b)) / r.norm2(xa);
        return r.norm2(g) * t / N(xi, eta);
    }

    const RootSystem& r_;
    std::map<RootCoords, int> extraspecial_;
    std::map<std::pair<RootCoords, RootCoords>, Rational> memo_;
};

std::string root_label(const RootCoords& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    return os.str();
}

} // namespace

ChevalleyAlgebra chevalley(const RootSystem& r) {
    const int rank = r.rank;
    const int np = static_cast<int>(r.positive_roots.size());
    const int dim = rank + 2 * np;
    StructureConstants sc(r);

    auto root_of = [&](int idx) -> RootCoords {
        if (idx < rank) return {};
        if (idx < rank + np) return r.positive_roots[idx - rank];
        return neg_rc(r.positive_roots[idx - rank - np]);
    };
    auto idx_of_root = [&](const RootCoords& a) -> int {
        int p = r.pos_index(a);
        if (p >= 0) return rank + p;
        return rank + np + r.pos_index(neg_rc(a));
    };
    // coroot coordinates of alpha: h_alpha = sum_i m_i (d_i / d_alpha) h_i
    auto coroot = [&](const RootCoords& a) {
        Rational da = r.norm2(a) / 2;
        std::vector<Rational> c(rank);
        for (int i = 0; i < rank; ++i) c[i] = Rational(a[i]) * r.symmetrizer[i] / da;
        return c;
    };

    std::vector<std::string> labels;
    for (int i = 0; i < rank; ++i) labels.push_back("h" + std::to_string(i + 1));
    for (const auto& a : r.positive_roots) labels.push_back("e(" + root_label(a) + ")");
    for (const auto& a : r.positive_roots) labels.push_back("f(" + root_label(a) + ")");

    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table(dim);
    for (int i = 0; i < dim; ++i) table[i].resize(dim - i - 1);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto& cell = table[i][j - i - 1];
            RootCoords ra = root_of(i), rb = root_of(j);
            if (ra.empty() && rb.empty()) continue; // [h,h] = 0
            if (ra.empty()) {
                int c = r.pair_coroot(rb, i);
                if (c) cell.emplace_back(j, Rational(c));
                continue;
            }
            if (rb.empty()) {
                int c = -r.pair_coroot(ra, j);
                if (c) cell.emplace_back(i, Rational(c));
                continue;
            }
            RootCoords s = add_rc(ra, rb);
            if (is_zero_rc(s)) {
                // [e_a, f_a] = h_a (and [f_a, e_a] = -h_a)
                bool a_is_pos = r.pos_index(ra) >= 0;
                auto cc = coroot(a_is_pos ? ra : rb);
                Rational sgn = a_is_pos ? Rational(1) : Rational(-1);
                for (int k = 0; k < rank; ++k)
                    if (cc[k] != 0) cell.emplace_back(k, sgn * cc[k]);
                continue;
            }
            if (r.is_root(s)) {
                Rational n = sc.N(ra, rb);
                if (n != 0) cell.emplace_back(idx_of_root(s), n);
            }
        }

    ChevalleyAlgebra out;
    out.algebra = std::make_shared<LieAlgebra>(std::move(labels), std::move(table));
    out.roots = r;
    return out;
}

GradedLieAlgebra grade_by_node(const ChevalleyAlgebra& c, int node) {
    const RootSystem& r = c.roots;
    if (node < 0 || node >= r.rank) throw Error("bad node index");
    if (r.highest_root[node] != 1)
        throw NotOneGraded("highest-root coefficient at the node is " +
                           std::to_string(r.highest_root[node]) + ", not 1");
    GradedLieAlgebra g;
    g.algebra = c.algebra;
    g.degree.assign(c.algebra->dim(), 0);
    const int np = static_cast<int>(r.positive_roots.size());
    for (int p = 0; p < np; ++p) {
        g.degree[c.e_index(p)] = r.positive_roots[p][node];
        g.degree[c.f_index(p)] = -r.positive_roots[p][node];
    }
    // grading element E = sum t_i h_i with <alpha_j, E> = delta_{j,node}:
    // solve sum_i t_i cartan[j][i] ... our bracket gives [h_i, e_{alpha_j}]
    // = <alpha_j, alpha_i^vee> e = cartan[i][j] e, so solve cartan^T t = delta_node.
    const int n = r.rank;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) aug[j][i] = Rational(r.cartan[i][j]);
        aug[j][n] = (j == node) ? Rational(1) : Rational(0);
    }
    for (int col = 0; col < n; ++col) {
        int pr = col;
        while (aug[pr][col] == 0) ++pr;
        std::swap(aug[col], aug[pr]);
        Rational pv = aug[col][col];
        for (auto& x : aug[col]) x /= pv;
        for (int rr = 0; rr < n; ++rr)
            if (rr != col && aug[rr][col] != 0) {
                Rational f = aug[rr][col];
                for (int k = 0; k <= n; ++k) aug[rr][k] -= f * aug[col][k];
            }
    }
    SparseVec e;
    for (int i = 0; i < n; ++i)
        if (aug[i][n] != 0) e[c.cartan_index(i)] = aug[i][n];
    g.grading_element = e;
    if (!check_grading(g)) throw Error("grading verification failed");
    return g;
}

} // namespace curvmod
