#include "curvmod/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "curvmod/errors.hpp"

namespace curvmod {

namespace {

std::vector<std::vector<int>> make_cartan(char type, int rank) {
    auto bad = [&](const std::string& why) -> std::vector<std::vector<int>> {
        throw UnsupportedType(std::string("unsupported root system ") + type +
                              std::to_string(rank) + ": " + why);
    };
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (type) {
    case 'A':
        if (rank < 1) bad("rank >= 1 required");
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
        break;
    case 'B': // last simple root short
        if (rank < 2) bad("rank >= 2 required");
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
        c[rank - 2][rank - 1] = -1;
        c[rank - 1][rank - 2] = -2;
        break;
    case 'C': // last simple root long
        if (rank < 3) bad("rank >= 3 required");
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
        c[rank - 2][rank - 1] = -2;
        c[rank - 1][rank - 2] = -1;
        break;
    case 'D':
        if (rank < 4) bad("rank >= 4 required");
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
        link(rank - 3, rank - 1);
        break;
    case 'E':
        if (rank < 6 || rank > 8) bad("rank 6..8 required");
        // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
        link(0, 2);
        link(2, 3);
        link(3, 4);
        link(4, 5);
        if (rank >= 7) link(5, 6);
        if (rank == 8) link(6, 7);
        link(1, 3);
        break;
    case 'F':
        if (rank != 4) bad("rank 4 required");
        link(0, 1);
        c[1][2] = -2;
        c[2][1] = -1;
        link(2, 3);
        break;
    case 'G':
        if (rank != 2) bad("rank 2 required");
        c[0][1] = -1;
        c[1][0] = -3;
        break;
    default:
        bad("unknown type letter");
    }
    return c;
}

} // namespace

int RootSystem::pos_index(const RootCoords& a) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), a,
                               [](const RootCoords& x, const RootCoords& y) {
                                   int hx = std::accumulate(x.begin(), x.end(), 0);
                                   int hy = std::accumulate(y.begin(), y.end(), 0);
                                   if (hx != hy) return hx < hy;
                                   return x < y;
                               });
    if (it != positive_roots.end() && *it == a) return static_cast<int>(it - positive_roots.begin());
    return -1;
}

bool RootSystem::is_root(const RootCoords& a) const {
    if (pos_index(a) >= 0) return true;
    RootCoords n(a.size());
    for (size_t i = 0; i < a.size(); ++i) n[i] = -a[i];
    return pos_index(n) >= 0;
}

int RootSystem::height(const RootCoords& a) const {
    return std::accumulate(a.begin(), a.end(), 0);
}

int RootSystem::pair_coroot(const RootCoords& alpha, int i) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += alpha[j] * cartan[i][j];
    return s;
}

Rational RootSystem::norm2(const RootCoords& alpha) const {
    Rational s(0);
    for (int i = 0; i < rank; ++i) s += Rational(alpha[i]) * symmetrizer[i] * Rational(pair_coroot(alpha, i));
    return s;
}

RootCoords RootSystem::reflect_root(const RootCoords& a, int i) const {
    RootCoords out = a;
    out[i] -= pair_coroot(a, i);
    return out;
}

Weight RootSystem::reflect_weight(const Weight& w, int i) const {
    Weight out = w;
    int wi = w[i];
    for (int k = 0; k < rank; ++k) out[k] -= wi * cartan[k][i];
    return out;
}

RootSystem build_root_system(char type, int rank) {
    RootSystem r;
    r.type = type;
    r.rank = rank;
    r.cartan = make_cartan(type, rank);
    for (int i = 0; i < rank; ++i)
        if (r.cartan[i][i] != 2) throw InvalidCartanMatrix("diagonal entry not 2");
    // symmetrizer: d_i cartan[i][j] = d_j cartan[j][i]
    r.symmetrizer.assign(rank, Rational(0));
    r.symmetrizer[0] = Rational(1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (r.cartan[i][j] != 0 && r.symmetrizer[i] != 0) {
                    Rational want = r.symmetrizer[i] * Rational(r.cartan[i][j]) / Rational(r.cartan[j][i]);
                    if (r.symmetrizer[j] != want) {
                        if (r.symmetrizer[j] != 0 && r.symmetrizer[j] != want)
                            throw InvalidCartanMatrix("cartan matrix not symmetrizable");
                        r.symmetrizer[j] = want;
                        changed = true;
                    }
                }
    }
    for (int i = 0; i < rank; ++i)
        if (r.symmetrizer[i] == 0) throw InvalidCartanMatrix("cartan matrix not irreducible");

    // closure over root strings
    std::set<RootCoords> roots;
    std::vector<RootCoords> simples;
    for (int i = 0; i < rank; ++i) {
        RootCoords s(rank, 0);
        s[i] = 1;
        simples.push_back(s);
        roots.insert(s);
    }
    std::vector<RootCoords> frontier = simples;
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (const auto& a : frontier) {
            for (int i = 0; i < rank; ++i) {
                // p = max k with a - k alpha_i a root
                int p = 0;
                RootCoords cur = a;
                for (;;) {
                    cur[i] -= 1;
                    bool zero = std::all_of(cur.begin(), cur.end(), [](int x) { return x == 0; });
                    if (zero || !roots.count(cur)) break;
                    ++p;
                }
                int s = 0;
                for (int j = 0; j < rank; ++j) s += a[j] * r.cartan[i][j];
                if (p - s >= 1) {
                    RootCoords na = a;
                    na[i] += 1;
                    if (roots.insert(na).second) next.push_back(na);
                }
            }
        }
        frontier = std::move(next);
    }
    r.positive_roots.assign(roots.begin(), roots.end());
    std::sort(r.positive_roots.begin(), r.positive_roots.end(),
              [&](const RootCoords& x, const RootCoords& y) {
                  int hx = std::accumulate(x.begin(), x.end(), 0);
                  int hy = std::accumulate(y.begin(), y.end(), 0);
                  if (hx != hy) return hx < hy;
                  return x < y;
              });
    r.highest_root = r.positive_roots.back();
    return r;
}

Weight rho_weight(const RootSystem& r) {
    return Weight(r.rank, 1);
}

Weight weyl_apply(const RootSystem& r, const std::vector<int>& word, const Weight& w) {
    Weight out = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = r.reflect_weight(out, *it);
    return out;
}

RootCoords weyl_apply_root(const RootSystem& r, const std::vector<int>& word, const RootCoords& a) {
    RootCoords out = a;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = r.reflect_root(out, *it);
    return out;
}

Weight affine_action(const RootSystem& r, const WeylElement& w, const Weight& lambda) {
    Weight shifted = lambda;
    for (int i = 0; i < r.rank; ++i) shifted[i] += 1;
    Weight out = weyl_apply(r, w.word, shifted);
    for (int i = 0; i < r.rank; ++i) out[i] -= 1;
    return out;
}

std::vector<RootCoords> inversion_set(const RootSystem& r, const WeylElement& w) {
    // {alpha > 0 : w^{-1} alpha < 0}; w^{-1} is the reversed word.
    std::vector<int> inv(w.word.rbegin(), w.word.rend());
    std::vector<RootCoords> out;
    for (const auto& a : r.positive_roots) {
        RootCoords im = weyl_apply_root(r, inv, a);
        if (r.height(im) < 0) out.push_back(a);
    }
    return out;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& r, int node, int max_len) {
    if (node < 0 || node >= r.rank) throw Error("bad node index");
    // Enumerate v = w^{-1} by BFS over reduced words extended on the right
    // (lexicographically smallest reduced word first); w = reverse(v).
    // l(v s_i) = l(v) + 1 iff v(alpha_i) > 0, and
    // {alpha>0 : w^{-1} alpha < 0} = {alpha>0 : v alpha < 0}.
    struct State {
        std::vector<RootCoords> simple_images;
        std::vector<int> word;
    };
    auto image_key = [](const std::vector<RootCoords>& im) { return im; };
    std::set<std::vector<RootCoords>> seen;
    std::vector<RootCoords> id_im;
    for (int i = 0; i < r.rank; ++i) {
        RootCoords s(r.rank, 0);
        s[i] = 1;
        id_im.push_back(s);
    }
    seen.insert(image_key(id_im));
    std::vector<State> frontier{{id_im, {}}};
    std::vector<WeylElement> out;
    out.push_back(WeylElement{{}, 0});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<State> next;
        for (const auto& st : frontier) {
            for (int i = 0; i < r.rank; ++i) {
                if (r.height(st.simple_images[i]) < 0) continue; // l would drop
                State ns;
                ns.word = st.word;
                ns.word.push_back(i);
                ns.simple_images.resize(r.rank);
                for (int j = 0; j < r.rank; ++j) {
                    // (v s_i)(alpha_j) = v(s_i alpha_j)
                    RootCoords sij = r.reflect_root(id_im[j], i);
                    RootCoords im(r.rank, 0);
                    for (int k = 0; k < r.rank; ++k)
                        for (int l = 0; l < r.rank; ++l) im[l] += sij[k] * st.simple_images[k][l];
                    ns.simple_images[j] = im;
                }
                if (seen.insert(image_key(ns.simple_images)).second) next.push_back(ns);
            }
        }
        std::vector<WeylElement> found;
        for (const auto& st : next) {
            // st.word composes rightmost-first, extended on the inner side;
            // the coset representative is its inverse: the reversed word.
            WeylElement w;
            w.word.assign(st.word.rbegin(), st.word.rend());
            w.length = len;
            auto invs = inversion_set(r, w);
            if (static_cast<int>(invs.size()) != len) continue; // word not reduced
            bool ok = true;
            for (const auto& a : invs)
                if (a[node] < 1) {
                    ok = false;
                    break;
                }
            if (ok) found.push_back(w);
        }
        std::sort(found.begin(), found.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
        for (auto& w : found) out.push_back(std::move(w));
        frontier = std::move(next);
    }
    return out;
}

} // namespace curvmod
