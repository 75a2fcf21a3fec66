#pragma once

#include "partial_hopf/hopf.hpp"

namespace partial_hopf {

/// Taft algebra T_n(q), q = zeta_n. Basis g^i x^j at index i*n + j, labels
/// like "1", "g^2", "x", "gx^3". Built algebras are cached, so repeated calls
/// return the same object. Throws InvalidOrder for n < 2.
HopfPtr taft(int n);

/// Nichols Hopf algebra of dimension 2^n. Basis g^j0 x1^j1 ... x_{n-1}^j_{n-1}
/// at the index whose binary digits are (j0, j1, ...), j0 least significant;
/// labels like "1", "g", "x1", "gx1x2". Throws InvalidOrder for n < 2.
HopfPtr nichols(int n);

/// Group algebra of the cyclic group of order n over Q(zeta_n).
HopfPtr group_algebra_cyclic(int n);

/// Its dual, with the characters g^i -> zeta_n^(ik) declared as group-likes.
HopfPtr dual_group_algebra_cyclic(int n);

/// Recomputes delta(g^i x^j) as delta(g)^i delta(x)^j and compares with the
/// stored closed-form coproduct of taft(n).
Report taft_comultiplication_crosscheck(int n);

/// Sign and result index of the product of two Nichols basis monomials
/// (bit masks as in nichols()); sign 0 means the product vanishes.
std::pair<int, unsigned> nichols_monomial_product(unsigned a, unsigned b);

std::string taft_label(int i, int j);
std::string nichols_label(unsigned bits);

}  // namespace partial_hopf
