#ifndef HOPFINV_EXACTLIN_HPP
#define HOPFINV_EXACTLIN_HPP

#include "hopfinv/fpmodule.hpp"
#include "hopfinv/intmatrix.hpp"
#include "hopfinv/smith.hpp"

namespace hopfinv {

// --- over Z ---------------------------------------------------------------

/// Columns form a basis of the saturated kernel lattice of A.
DenseInt kernel_int(const DenseInt& a);

/// Basis of the column lattice im(A) as columns of the result.
DenseInt image_lattice_basis(const DenseInt& a);

/// Solves K * X = B exactly over Z; throws DimensionMismatch when no
/// integral solution exists. Requires K of full column rank (unique X).
DenseInt solve_int(const DenseInt& k, const DenseInt& b);

/// True iff A x = b has an integer solution.
bool solvable_int(const DenseInt& a, const DenseInt& b);

// --- over fields ----------------------------------------------------------

std::size_t rank_rat(const DenseRat& a);
/// Columns form a basis of ker(A) over Q; deterministic.
DenseRat kernel_rat(const DenseRat& a);
/// Solves A X = B over Q; returns false when inconsistent.
bool solve_rat(const DenseRat& a, const DenseRat& b, DenseRat& x);

std::size_t rank_fp(const DenseInt& a, const Int& p);
DenseInt kernel_fp(const DenseInt& a, const Int& p);
bool solve_fp(const DenseInt& a, const DenseInt& b, const Int& p, DenseInt& x);

// --- over Z/n -------------------------------------------------------------

/// Generators (as columns, entries in [0,n)) of ker(A : (Z/n)^c -> (Z/n)^r)
/// as a Z/n-module.
DenseInt kernel_mod(const DenseInt& a, const Int& n);

/// Basis of the lattice {x in Z^c : A x = 0 mod n}; contains n*Z^c, so the
/// result is a full-rank c x c matrix.
DenseInt kernel_lift_lattice(const DenseInt& a, const Int& n);

// --- dispatch -------------------------------------------------------------

/// kernel_basis: basis over Z and fields, generating set over
/// Z/n.
IntMatrix kernel_basis(const IntMatrix& a, const BaseScalar& scalar);

std::size_t rank_over(const DenseInt& a, const BaseScalar& field);

/// ker(d_out) / im(d_in) over Z. Shapes: d_in : Z^a -> Z^N, d_out : Z^N -> Z^c.
FpModule complex_cohomology(const IntMatrix& d_in, const IntMatrix& d_out);
FpModule complex_cohomology(const DenseInt& d_in, const DenseInt& d_out);

/// Presentation of L / (im B + n Z^g) where L = im(lattice_basis), a
/// full-rank sublattice of Z^g containing n Z^g. Used for cokernels of maps
/// into (Z/n)-invariant groups.
FpModule quotient_of_lattice_mod(const DenseInt& lattice_basis, const DenseInt& b, const Int& n);

} // namespace hopfinv

#endif
