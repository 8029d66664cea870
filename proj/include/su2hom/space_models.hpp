#pragma once

#include "su2hom/chain_complex.hpp"

namespace su2hom::models {

/// S^m with one basepoint and one m-cell (two 0-cells for m = 0).
ChainComplex sphere(int m);

ChainComplex circle();

/// (S^1)^n as the n-fold tensor power of circle(); rank C(n, j) in degree j.
ChainComplex torus(int n);

/// S^m with the antipodal action: one free generator e_j per degree 0..m,
/// ∂e_j = (1 + (-1)^j τ) e_{j-1}.
EquivariantChainComplex equivariant_sphere(int m);

/// RP^m = coinvariants(equivariant_sphere(m)); boundaries alternate 0, 2.
ChainComplex rp(int m);

/// RP^m / RP^{k-1} for 1 <= k <= m: basepoint plus one cell in each degree k..m.
ChainComplex stunted_rp(int m, int k);

/// Sphere bundle S(kL) of k copies of the canonical line bundle over RP^2,
/// modelled as S^{k-1} ×_{Z/2} S^2 with the antipodal action on both
/// factors. Based at its first 0-cell.
ChainComplex sphere_bundle_skl(int k);

/// Thom space T(kL) over RP^m, i.e. RP^{k+m} / RP^{k-1}.
ChainComplex thom_space_kl(int k, int m);

/// ⋁_{k=1..n} C(n,k) · Σ S(kL), whose reduced cohomology is that of
/// Hom(Z^n, SU(2)). The cell count grows like 6n·2^(n-1); n <= 12.
ChainComplex splitting_wedge_model(int n);

}  // namespace su2hom::models
