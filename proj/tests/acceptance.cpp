// Acceptance run: one line per criterion. Criterion 1 is expected to fail;
// the computed prolongation is 16, not 0, because g1 of the one-graded e6
// always embeds in g^(1) of (g0, g_-1) (see the spencer/prolongation tests
// and the project notes); the final Ricci-type verdict is unaffected.

#include <cstdio>
#include <string>

#include "curvmod/catalog.hpp"
#include "curvmod/curvature.hpp"
#include "curvmod/kostant.hpp"
#include "curvmod/reports.hpp"

using namespace curvmod;

namespace {

int failures = 0;
int expected_failures = 0;

void line(int crit, bool ok, const std::string& what, bool expected_red = false) {
    if (ok) {
        std::printf("PASS  criterion %2d: %s\n", crit, what.c_str());
    } else if (expected_red) {
        ++expected_failures;
        std::printf("FAIL  criterion %2d: %s [documented discrepancy, see README]\n", crit,
                    what.c_str());
    } else {
        ++failures;
        std::printf("FAIL  criterion %2d: %s\n", crit, what.c_str());
    }
}

} // namespace

int main() {
    auto spin = catalog_lookup("spin10c-center");
    auto spin_report = is_ricci_type(spin);
    auto g = graded_catalog_lookup("e6-chevalley", 1);

    // 1: the source claims g^(1) = 0; computed dimension is 16 = dim g1
    line(1, spin_report.dim_prolongation == 0,
         "prolongation(spin10c-center) = 0 (computed " +
             std::to_string(spin_report.dim_prolongation) + ", = dim g1 of the one-grading)",
         true);

    line(2, spin_report.dim_K == 256,
         "dim K(spin10c-center) = 256 by exact kernel of the 8960x5520 Bianchi matrix");

    line(3, spin_report.ricci_type && spin_report.ricci_trace_rank_on_K == 256,
         "is_ricci_type(spin10c-center): Ricci trace injective on K");

    auto tr = tR_circ_dLie(g);
    line(4, tr.nrows() == 256 && tr.ncols() == 256 && rank(tr) == 256,
         "tR o dLie on e6/node 1 is a 256x256 matrix of full rank");

    bool prop1_ok = false;
    std::string prop1_note = "verify_prop1(e6/node 1): |c| = 1";
    try {
        Rational c = verify_prop1(g);
        prop1_ok = (c == 1 || c == -1);
        prop1_note += " (c = " + rational_to_text(c) + ")";
    } catch (const std::exception& e) {
        prop1_note += std::string(" (NotProportional: ") + e.what() + ")";
    }
    line(5, prop1_ok, prop1_note);

    line(6, verify_homogeneity(g), "verify_homogeneity(e6/node 1)");

    auto e6 = build_root_system('E', 6);
    auto k2 = kostant_h(e6, 0, 2);
    bool kost_ok = k2.size() == 1 && k2.front().value_degree == -1;
    bool h2_ok = lie_cohomology_component_dim(g, 2, 0) == 0;
    line(7, kost_ok && h2_ok,
         "kostant H^2(e6/node 1): one component in wedge^2 V* (x) V; g0 part of H^2 = 0 (exact)");

    bool cross = true;
    for (auto [t, rk] : {std::pair{'A', 2}, {'A', 3}}) {
        auto r = build_root_system(t, rk);
        auto gr = graded_catalog_lookup(std::string(1, std::tolower(t)) + std::to_string(rk) +
                                            "-chevalley",
                                        1);
        Integer total = 0;
        for (const auto& c : kostant_h(r, 0, 2)) total += c.dimension;
        cross = cross && total == lie_cohomology_dim(gr, 2);
    }
    line(8, cross, "sum of Kostant degree-2 dimensions = direct H^2 on a2, a3 (node 1)");

    bool oracle = true;
    int expect_k[] = {6, 20, 50};
    for (int n = 3; n <= 5; ++n) {
        auto rep = is_ricci_type(so_split(n));
        oracle = oracle && rep.dim_K == expect_k[n - 3] && rep.ricci_type == (n == 3) &&
                 rep.dim_prolongation == 0;
    }
    oracle = oracle && prolongation(gl_rep(2)).size() == 6;
    line(9, oracle, "classical suite: dim K(so_n) = n^2(n^2-1)/12, Ricci-type only n=3, "
                    "prolongations 0, gl2 prolongation 6");

    bool structural = check_jacobi(*g.algebra) && g.algebra->dim() == 78 &&
                      g.component(-1).size() == 16 && g.component(0).size() == 46 &&
                      g.component(1).size() == 16;
    for (int k = 0; k < 3 && structural; ++k) {
        auto a = lie_cochain_differential(g, k + 1);
        auto b = lie_cochain_differential(g, k);
        structural = (a * b).is_zero();
    }
    line(10, structural, "e6 Chevalley basis: Jacobi, dim 78, grading (16,46,16), dLie^2 = 0");

    auto k_e6 = curvature_module(component_rep(g, -1));
    auto odd = is_ricci_type(catalog_lookup("spin10c-center-odd"));
    auto g6 = graded_catalog_lookup("e6-chevalley", 6);
    auto tr6 = tR_circ_dLie(g6);
    bool two = k_e6.size() == spin_report.dim_K && odd.dim_K == 256 && odd.ricci_type &&
               rank(tr6) == 256;
    line(11, two, "Fock spinor and e6 component constructions agree; odd parity / node 6 "
                  "verdict identical");

    auto r1 = full_report("spin10").dump(2);
    auto r2 = full_report("spin10").dump(2);
    line(12, r1 == r2, "report spin10 is byte-identical across runs");

    std::printf("summary: %d hard failure(s), %d documented discrepancy(ies)\n", failures,
                expected_failures);
    return failures ? 1 : 0;
}
