#=======================================================================
# incidence.py
#=======================================================================
# The matrix c(N,M) = ⟨N; irreducible factors of M⟩ on a (rank,
# nullity) component, its exact inverse, and the primitives
#
#   Q_M = sum over N >= M of c^-1(M,N) N
#
# dual to the free-product monomials P_M = sum over N of c(N,M) N.

from fractions import Fraction

import numpy as np

from matfp.datatypes.FormalSum  import FormalSum
from matfp.model.Matroid        import direct_sum
from matfp.model.exceptions     import SingularDiagonal, SizeMismatch
from matfp.tools.freeproduct.constructions import free_product
from matfp.tools.factorization.factor      import factor_irreducible
from matfp.tools.iso.canonical  import iso_key

from .coproduct  import multisection, section_coefficient
from .weak_order import weak_leq, up_set_poset

#-----------------------------------------------------------------------
# _factor_keys
#-----------------------------------------------------------------------
def _factor_keys( key, cat ):
  if cat is not None and key in cat:
    return cat[ key ].factor_keys
  return tuple( factor_irreducible( key.matroid() ).iso_keys() )

#-----------------------------------------------------------------------
# c_matrix
#-----------------------------------------------------------------------
# Rows and columns follow the poset's linear extension, so the matrix
# is upper triangular.
def c_matrix( poset, cat = None ):
  count = len( poset )
  c     = np.zeros( ( count, count ), dtype=object )
  for j, col in enumerate( poset.classes ):
    factors = _factor_keys( col, cat )
    for i, row in enumerate( poset.classes ):
      c[i, j] = multisection( row, factors )
  return c

#-----------------------------------------------------------------------
# c_inverse
#-----------------------------------------------------------------------
# inv(i,i) = 1/c(i,i)
# inv(i,j) = -1/c(j,j) * sum over i <= k < j of inv(i,k) c(k,j)
def c_inverse( c ):
  c     = np.asarray( c, dtype=object )
  count = c.shape[0]
  for i in range( count ):
    for j in range( i ):
      if c[i, j] != 0:
        raise ValueError( 'matrix is not upper triangular at ({}, {})'.format( i, j ) )
    if c[i, i] == 0:
      raise SingularDiagonal( i )

  inv = np.empty( ( count, count ), dtype=object )
  inv.fill( Fraction( 0 ) )
  for i in range( count ):
    inv[i, i] = Fraction( 1 ) / c[i, i]
    for j in range( i + 1, count ):
      acc = sum( ( inv[i, k] * c[k, j] for k in range( i, j ) ), Fraction( 0 ) )
      inv[i, j] = -acc / c[j, j]
  return inv

#-----------------------------------------------------------------------
# q_primitive
#-----------------------------------------------------------------------
# Only the up-set of M in its component contributes to row M.
def q_primitive( M, cat ):
  cat.require( M.n )
  poset = up_set_poset( M, cat )
  inv   = c_inverse( c_matrix( poset, cat ) )
  row   = poset.index( iso_key( M ) )
  return FormalSum( { key : inv[row, j] for j, key in enumerate( poset.classes ) } )

#-----------------------------------------------------------------------
# p_expansion
#-----------------------------------------------------------------------
def p_expansion( M, cat ):
  'P_M = sum over N of c(N,M) N, N in the component of M.'
  cat.require( M.n )
  factors = _factor_keys( iso_key( M ), cat )
  terms   = {}
  for key in cat.component( M.r, M.n - M.r ):
    coeff = multisection( key, factors )
    if coeff:
      terms[ key ] = coeff
  return FormalSum( terms )

#-----------------------------------------------------------------------
# initial_bounds_check
#-----------------------------------------------------------------------
# Whenever ⟨L;M,N⟩ is nonzero, M⊕N <= L <= M□N in the weak order.
def initial_bounds_check( L, M, N ):
  if L.n != M.n + N.n:
    raise SizeMismatch( 'sizes {} + {} do not add up to {}'.format( M.n, N.n, L.n ) )
  if section_coefficient( L, M, N ) == 0:
    return True
  return weak_leq( direct_sum( M, N ), L ) and weak_leq( L, free_product( M, N ) )
