#=======================================================================
# coproduct.py
#=======================================================================
# Restriction-contraction coproduct and section coefficients on
# isomorphism classes.
#
#   δ(M)        = sum over A of  [M|A] ⊗ [M/A]
#   ⟨L;M,N⟩     = #{ A : L|A ≅ M and L/A ≅ N }
#   ⟨L;M1..Mk⟩  = #{ chains 0 = A0 ⊆ ... ⊆ Ak = S : L(A_(i-1),A_i) ≅ M_i }

import functools

from matfp.datatypes.FormalSum import FormalSum
from matfp.datatypes.helpers   import subsets_of_size
from matfp.tools.iso.canonical import iso_key

#-----------------------------------------------------------------------
# coproduct
#-----------------------------------------------------------------------
def coproduct( M ):
  'FormalSum over (IsoKey, IsoKey) pairs; the coefficients add up to 2^n.'
  terms = {}
  for A in range( 1 << M.n ):
    pair          = ( iso_key( M.restrict( A ) ), iso_key( M.contract( A ) ) )
    terms[ pair ] = terms.get( pair, 0 ) + 1
  return FormalSum( terms )

#-----------------------------------------------------------------------
# _multisection
#-----------------------------------------------------------------------
# Depends on L only through its class. The last block of the chain is
# peeled off: A ranges over the sets with L/A ≅ M_k, and the rest of
# the chain lives in L|A.
@functools.lru_cache( maxsize = 1 << 16 )
def _multisection( lkey, mkeys ):
  if not mkeys:
    return 1 if lkey.n == 0 else 0
  last = mkeys[-1]
  L    = lkey.matroid()
  size = L.n - last.n
  if size < 0:
    return 0
  total = 0
  for A in subsets_of_size( L.n, size ):
    if L.rank( A ) != L.r - last.r:
      continue
    if iso_key( L.contract( A ) ) != last:
      continue
    total += _multisection( iso_key( L.restrict( A ) ), mkeys[:-1] )
  return total

def _as_key( M ):
  return M if hasattr( M, 'canon' ) else iso_key( M )

#-----------------------------------------------------------------------
# multisection
#-----------------------------------------------------------------------
def multisection( L, Ms ):
  'Accepts matroids or IsoKeys; 0 when the sizes do not add up.'
  lkey  = _as_key( L )
  mkeys = tuple( _as_key( M ) for M in Ms )
  if sum( k.n for k in mkeys ) != lkey.n or sum( k.r for k in mkeys ) != lkey.r:
    return 0
  return _multisection( lkey, mkeys )

def section_coefficient( L, M, N ):
  return multisection( L, [ M, N ] )

#-----------------------------------------------------------------------
# minor_product
#-----------------------------------------------------------------------
# Dual algebra product M·N = sum over L of ⟨L;M,N⟩ L, with L running
# over the catalog level |M| + |N|.
def minor_product( M, N, cat ):
  n = M.n + N.n
  terms = {}
  for key in cat.level( n ):
    coeff = section_coefficient( key, M, N )
    if coeff:
      terms[ key ] = coeff
  return FormalSum( terms )

#-----------------------------------------------------------------------
# pairing
#-----------------------------------------------------------------------
def pairing( Q, P ):
  'Bilinear pairing in which distinct class keys are orthonormal.'
  return sum( ( coeff * P[ key ] for key, coeff in Q.items() ), 0 )
