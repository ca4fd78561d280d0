#include "curvmod/kostant.hpp"

#include "curvmod/errors.hpp"

namespace curvmod {

namespace {

// <mu, alpha^vee> for mu in fundamental coordinates and alpha = sum n_j alpha_j:
// alpha^vee = sum n_j (d_j / d_alpha) alpha_j^vee.
Rational pair_with_coroot(const RootSystem& r, const Weight& mu, const RootCoords& alpha) {
    Rational da = r.norm2(alpha) / 2;
    Rational s(0);
    for (int j = 0; j < r.rank; ++j)
        if (alpha[j]) s += Rational(alpha[j]) * r.symmetrizer[j] * Rational(mu[j]) / da;
    return s;
}

// Grading-element eigenvalue: the node coordinate of mu written over the
// simple roots, i.e. the node entry of cartan^{-1} mu (our cochains carry
// negative degrees, hence the sign).
int homogeneity_of(const RootSystem& r, int node, const Weight& mu) {
    const int n = r.rank;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rational(r.cartan[i][j]);
        aug[i][n] = Rational(mu[i]);
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
    Rational h = -aug[node][n];
    if (h.get_den() != 1) throw Error("weight does not lie in the root lattice");
    return static_cast<int>(h.get_num().get_si());
}

} // namespace

Integer weyl_dimension(const RootSystem& r, int node, const Weight& mu) {
    for (int j = 0; j < r.rank; ++j)
        if (j != node && mu[j] < 0)
            throw NonDominant("weight is not dominant for the Levi factor");
    Weight rho = rho_weight(r);
    Weight shifted = mu;
    for (int j = 0; j < r.rank; ++j) shifted[j] += rho[j];
    Rational prod(1);
    for (const auto& a : r.positive_roots) {
        if (a[node] != 0) continue;
        prod *= pair_with_coroot(r, shifted, a) / pair_with_coroot(r, rho, a);
    }
    if (prod.get_den() != 1) throw Error("Weyl dimension did not come out integral");
    return prod.get_num();
}

std::vector<CohomologyComponent> kostant_h(const RootSystem& r, int node, int k) {
    if (node < 0 || node >= r.rank) throw Error("bad node index");
    if (r.highest_root[node] != 1)
        throw NotOneGraded("highest-root coefficient at the node is " +
                           std::to_string(r.highest_root[node]) + ", not 1");
    Weight lambda(r.rank);
    for (int i = 0; i < r.rank; ++i) lambda[i] = r.pair_coroot(r.highest_root, i);
    std::vector<CohomologyComponent> out;
    for (const auto& w : minimal_coset_reps(r, node, k)) {
        if (w.length != k) continue;
        CohomologyComponent c;
        c.w = w;
        c.weight = affine_action(r, w, lambda);
        c.homogeneity = homogeneity_of(r, node, c.weight);
        c.value_degree = c.homogeneity - k;
        if (c.value_degree < -1 || c.value_degree > 1)
            throw Error("component outside the one-graded value range");
        const char* part = c.value_degree == -1 ? "V" : (c.value_degree == 0 ? "g0" : "V*");
        c.located_in = "wedge^" + std::to_string(k) + " V* (x) " + part;
        c.dimension = weyl_dimension(r, node, c.weight);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace curvmod
