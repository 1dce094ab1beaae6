#ifndef QSFD_MOLS_HPP
#define QSFD_MOLS_HPP

#include <string>

#include "qsfd/latin.hpp"

namespace qsfd {

/// p-1 pairwise orthogonal squares of prime order p >= 3; square k
/// (1 <= k <= p-1) has entry(i,j) = (k*i + j) mod p.
MolsSet cyclic_mols(int p);

/// q-1 pairwise orthogonal squares of prime-power order q; square a
/// (a in GF(q) \ {0}) has entry(x,y) = a*x + y in GF(q). Agrees with
/// cyclic_mols cell-for-cell when q is prime.
MolsSet galois_mols(int q);

/// Bundled reference squares. Known names: "fig2-order4" (three pairwise
/// orthogonal squares of order 4, printed order) and "fig2-order3" (the
/// orthogonal pair of order 3). Throws UnknownFixture otherwise.
MolsSet fixture_catalog(const std::string& name);

/// Generator dispatch used by the CLI: cyclic for primes, galois for
/// bundled prime powers. Orders 2 and 6 are refused outright (no orthogonal
/// pair exists); other unsupported orders throw NotPrimePower or
/// UnsupportedOrder.
MolsSet mols_for_order(int order);

}  // namespace qsfd

#endif
