#ifndef FFRT_EQUIVARIANT_RESOLUTION_HPP
#define FFRT_EQUIVARIANT_RESOLUTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ffrt/fp_linear.hpp"
#include "ffrt/koszul_catalog.hpp"
#include "ffrt/sl2_characters.hpp"

namespace ffrt {

// Explicit differentials of the equivariant resolution of M_j over F_p.
// Terms are T(w) (x) Lambda^a F (x) S(-a); differentials are solved from
// the linear system expressing commutation with e and f together with
// multidegree and weight preservation, then scalar-normalized. Each system
// must have a one-dimensional solution space.
//
// Generator-level entry of d_u : P_{-u} -> P_{-u+1}: the image of a source
// generator (tilt basis tv, wedge mask) is a sum of target generators times
// square-free monomials supported on the dropped wedge variables.
struct GeneratorImage {
    int tv;                 // target tilting basis index
    int mask;               // target wedge subset (bitmask)
    std::vector<int> vars;  // variables of the monomial factor, ascending
    std::vector<char> kind; // 'x' or 'y' per variable
    fp_t coeff;
};

class EquivariantResolution {
  public:
    EquivariantResolution(int n, int j, int D, fp_t p, int threads = 0);

    int n() const { return n_; }
    int j() const { return j_; }
    int degree_bound() const { return D_; }
    const std::vector<ResolutionTermSpec>& terms() const { return terms_; }

    // Character of ker(d_u : P_{-u} -> P_{-u+1}) in degree d; u = k gives
    // the syzygy K_{jk}.
    WeightCharacter kernel_char(int u, int d) const;

    // d_{u} composed with d_{u+1} vanishes on every block of degree <= D.
    bool composites_vanish() const;
    // dim ker(d_u) = rank(d_{u+1}) for u >= 1 on every block of degree <= D
    // (with d_n = 0); exactness of the truncated complex away from 0.
    bool exact_away_from_zero() const;

    // Per-weight dimensions of (K_{jk}^{G_r})_d, weights divided by p^r.
    WeightCharacter kjk_gr_invariants(int k, int r, int d) const;

  private:
    struct Block;  // basis of one (multidegree, weight) slice of a term

    Block term_block(int u, const std::vector<int>& mdeg, int w) const;
    FpMatrix block_map(int u, const Block& src, const Block& tgt) const;
    void solve_generator_map(int u);

    int n_, j_, D_;
    fp_t p_;
    int threads_;
    std::vector<ResolutionTermSpec> terms_;  // index u = -position
    // gen_maps_[u]: images of the generators of P_{-u} under d_u, u >= 1
    std::vector<std::map<std::pair<int, int>, std::vector<GeneratorImage>>> gen_maps_;
};

}  // namespace ffrt

#endif
