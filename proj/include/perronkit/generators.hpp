#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "perronkit/matrix.hpp"

namespace perronkit {

/// T(n; c, a, b): `c` on the subdiagonal, `a` on the diagonal, `b` on the
/// superdiagonal. CSR storage.
NonnegMatrix tridiagonal(std::size_t n, double c, double a, double b);

/// Closed-form spectrum of T(n; c, a, b), descending:
/// a + 2 sqrt(bc) cos(k pi / (n+1)), k = 1..n.
std::vector<double> tridiagonal_eigs(std::size_t n, double c, double a, double b);

/// Random primitive matrix: positive diagonal, a Hamiltonian cycle through a
/// random permutation (for irreducibility), other off-diagonal entries kept
/// with probability `density`. Entries are drawn from [0.1, 1).
NonnegMatrix random_primitive(std::size_t n, double density, std::uint64_t seed,
                              Storage storage = Storage::Dense);

/// Cyclic permutation i -> i+1 (mod n): irreducible, imprimitive for n >= 2.
NonnegMatrix cyclic_permutation(std::size_t n);

}  // namespace perronkit
