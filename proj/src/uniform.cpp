#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fr/matching.hpp"

namespace fr {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Phase-1 simplex with Bland's rule, exact rationals. Finds x >= 0 with
/// A x = 1 or reports infeasibility.
std::optional<std::vector<Rat>> solve_feasible(const std::vector<std::vector<int>>& A, int m,
                                               int ncols) {
    int width = ncols + m + 1; // x columns, artificials, rhs
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(width, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < ncols; ++j) T[i][j] = A[i][j];
        T[i][ncols + i] = 1;
        T[i][width - 1] = 1;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = ncols + i;

    // phase-1 objective: minimize sum of artificials; w[j] = column sum over
    // rows whose basic variable is artificial
    std::vector<Rat> w(width, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < width; ++j) w[j] += T[i][j];

    while (true) {
        int enter = -1;
        for (int j = 0; j < ncols + m; ++j) {
            if (j >= ncols && w[j] > 0) continue; // never re-enter artificials
            if (w[j] > 0) {
                enter = j;
                break; // Bland: lowest index
            }
        }
        if (enter == -1) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][width - 1] / T[i][enter];
            if (leave == -1 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == -1) return std::nullopt; // unbounded: cannot happen here
        Rat piv = T[leave][enter];
        for (int j = 0; j < width; ++j) T[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (int j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
        }
        {
            Rat f = w[enter];
            for (int j = 0; j < width; ++j) w[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    if (w[width - 1] != 0) return std::nullopt; // residual artificial value
    std::vector<Rat> x(ncols, 0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < ncols)
            x[basis[i]] = T[i][width - 1];
        else if (T[i][width - 1] != 0)
            return std::nullopt;
    }
    return x;
}

} // namespace

UniformFamily uniform_pm_family(const CubicGraph& g, const Limits* limits) {
    auto pms = enumerate_perfect_matchings(g, limits);
    int m = g.edge_count();
    int N = static_cast<int>(pms.size());
    std::vector<std::vector<int>> A(m, std::vector<int>(N, 0));
    for (int j = 0; j < N; ++j)
        for (EdgeId e : pms[j].edges) A[e][j] = 1;

    auto sol = solve_feasible(A, m, N);
    if (!sol)
        throw Error(ErrorCode::LemmaViolation,
                    "no uniform perfect-matching cover found; input not bridgeless cubic?");

    Int denom_lcm = 1;
    for (const auto& x : *sol) {
        if (x == 0) continue;
        Int d = boost::multiprecision::denominator(x);
        denom_lcm = boost::multiprecision::lcm(denom_lcm, d);
    }
    std::vector<Int> counts(N, 0);
    for (int j = 0; j < N; ++j)
        counts[j] = boost::multiprecision::numerator((*sol)[j]) *
                    (denom_lcm / boost::multiprecision::denominator((*sol)[j]));
    Int p = denom_lcm; // per-edge coverage of the scaled family
    Int g_all = p;
    for (const auto& c : counts)
        if (c != 0) g_all = boost::multiprecision::gcd(g_all, c);
    p /= g_all;

    UniformFamily fam;
    fam.p = static_cast<int>(p);
    for (int j = 0; j < N; ++j) {
        Int c = counts[j] / g_all;
        if (c != 0) fam.members.emplace_back(pms[j], static_cast<int>(c));
    }
    return fam;
}

} // namespace fr
