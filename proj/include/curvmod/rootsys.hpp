#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvmod/rational.hpp"

namespace curvmod {

// Roots and weights are integer coordinate vectors: roots over the simple
// roots, weights over the fundamental weights.
using RootCoords = std::vector<int>;
using Weight = std::vector<int>;

struct RootSystem {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Rational> symmetrizer;    // d_i with d_i * cartan[i][j] symmetric
    std::vector<RootCoords> positive_roots; // sorted by (height, lex)
    RootCoords highest_root;

    int pos_index(const RootCoords& a) const; // -1 if not a positive root
    bool is_root(const RootCoords& a) const;
    int height(const RootCoords& a) const;

    // <alpha, alpha_i^vee>
    int pair_coroot(const RootCoords& alpha, int i) const;
    Rational norm2(const RootCoords& alpha) const; // (alpha, alpha)

    // Reflection s_i acting on root coordinates / fundamental-weight coordinates.
    RootCoords reflect_root(const RootCoords& a, int i) const;
    Weight reflect_weight(const Weight& w, int i) const;
};

// Builds the root system by the reflection closure algorithm.
// Supported types: A (rank>=1), B (>=2), C (>=3), D (>=4), E (6,7,8), F (4), G (2).
RootSystem build_root_system(char type, int rank);

struct WeylElement {
    std::vector<int> word; // simple reflection indices, reduced
    int length = 0;
};

Weight rho_weight(const RootSystem& r);

// Affine action w.lambda = w(lambda + rho) - rho; the word acts rightmost
// reflection first.
Weight affine_action(const RootSystem& r, const WeylElement& w, const Weight& lambda);

Weight weyl_apply(const RootSystem& r, const std::vector<int>& word, const Weight& w);
RootCoords weyl_apply_root(const RootSystem& r, const std::vector<int>& word, const RootCoords& a);

// Inversion set {alpha > 0 : w^{-1} alpha < 0}; its size equals the length.
std::vector<RootCoords> inversion_set(const RootSystem& r, const WeylElement& w);

// All w with length <= max_len whose inversion set consists of roots whose
// coordinate at `node` is >= 1 (the nilradical roots of the one-grading).
// Deterministic order: by length, then lexicographic word.
std::vector<WeylElement> minimal_coset_reps(const RootSystem& r, int node, int max_len);

} // namespace curvmod
