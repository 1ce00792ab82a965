#pragma once

// Independent oracle for the theta pairing on the coordinate axes of the
// node R = k[x,y]/(xy): stable Tor lengths from the 2-periodic resolution
//   ... -> R --g'--> R --g--> R -> R/(g) -> 0   (g' the complementary axis),
// computed degreewise over monomial bases of N = R/(h). Everything here is
// monomial combinatorics plus the naive rank; none of the engine's homology
// path is involved.

#include <string>
#include <vector>

#include "naive_linalg.hpp"

namespace testsupport {

struct NodeTorOracle {
    // g, h in {"x", "y"}: theta(R/(g), R/(h)).
    static long theta(const std::string& g, const std::string& h, int degree_bound = 14) {
        long even = 0, odd = 0;
        const std::string gp = (g == "x") ? "y" : "x";
        for (int d = 0; d <= degree_bound; ++d) {
            // Tor_even at degree d: ker(g' : N_d -> N_{d+1}) / g * N_{d-1}
            even += homology_dim(h, gp, g, d);
            // Tor_odd: ker(g)/im(g')
            odd += homology_dim(h, g, gp, d);
        }
        return even - odd;
    }

  private:
    // Monomial basis of N_d for N = k[x,y]/(xy, h): monomials x^a y^b with
    // a + b = d, ab = 0, not divisible by h.
    static std::vector<std::pair<int, int>> basis(const std::string& h, int d) {
        std::vector<std::pair<int, int>> out;
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            if (a > 0 && b > 0) continue;
            if (h == "x" && a > 0) continue;
            if (h == "y" && b > 0) continue;
            out.push_back({a, b});
        }
        return out;
    }

    // Multiplication by the variable `v` as a matrix N_d -> N_{d+1}.
    static NaiveMatrix mult_matrix(const std::string& h, const std::string& v, int d) {
        auto src = basis(h, d);
        auto tgt = basis(h, d + 1);
        NaiveMatrix m(tgt.size(), std::vector<CycScalar>(src.size(), CycScalar::zero(2)));
        for (size_t j = 0; j < src.size(); ++j) {
            auto [a, b] = src[j];
            if (v == "x") ++a; else ++b;
            if (a > 0 && b > 0) continue;  // killed by xy
            if (h == "x" && a > 0) continue;
            if (h == "y" && b > 0) continue;
            for (size_t i = 0; i < tgt.size(); ++i) {
                if (tgt[i] == std::make_pair(a, b)) m[i][j] = CycScalar::one(2);
            }
        }
        return m;
    }

    // dim ker(out : N_d -> N_{d+1}) - rank(in : N_{d-1} -> N_d)
    static long homology_dim(const std::string& h, const std::string& out_map,
                             const std::string& in_map, int d) {
        auto src = basis(h, d);
        size_t dim = src.size();
        size_t rank_out = naive_rank(mult_matrix(h, out_map, d));
        size_t rank_in = d > 0 ? naive_rank(mult_matrix(h, in_map, d - 1)) : 0;
        return static_cast<long>(dim) - static_cast<long>(rank_out) -
               static_cast<long>(rank_in);
    }
};

}  // namespace testsupport
