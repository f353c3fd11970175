#=======================================================================
# twist.py
#=======================================================================
# Compatibility of the coproduct with free product. Tensors M⊗N are
# pairs of class keys; the twist and the product on tensors are
#
#   τ(M⊗N)       = L^ρ(M) N ⊗ T^ν(N) M
#   (M⊗N)(P⊗Q)   = (M □ L^ρ(N) P) ⊗ (T^ν(P) N □ Q)
#
# and δ(M□N) = δ(M)·δ(N) with that product.

import functools

from matfp.datatypes.FormalSum import FormalSum
from matfp.tools.freeproduct.constructions import free_product
from matfp.tools.freeproduct.structure     import lift_k, truncation_k
from matfp.tools.iso.canonical import iso_key

from .coproduct import coproduct

#-----------------------------------------------------------------------
# Key-level Operations
#-----------------------------------------------------------------------

@functools.lru_cache( maxsize = 1 << 14 )
def key_free_product( a, b ):
  return iso_key( free_product( a.matroid(), b.matroid() ) )

@functools.lru_cache( maxsize = 1 << 14 )
def key_lift( a, i ):
  return a if i == 0 else iso_key( lift_k( a.matroid(), i ) )

@functools.lru_cache( maxsize = 1 << 14 )
def key_truncation( a, i ):
  return a if i == 0 else iso_key( truncation_k( a.matroid(), i ) )

def _nullity( key ):
  return key.n - key.r

#-----------------------------------------------------------------------
# twist
#-----------------------------------------------------------------------
def twist( pair ):
  M, N = pair
  return ( key_lift( N, M.r ), key_truncation( M, _nullity( N ) ) )

#-----------------------------------------------------------------------
# twisted_product
#-----------------------------------------------------------------------
def twisted_product( pair1, pair2 ):
  M, N = pair1
  P, Q = pair2
  return ( key_free_product( M, key_lift( P, N.r ) ),
           key_free_product( key_truncation( N, _nullity( P ) ), Q ) )

#-----------------------------------------------------------------------
# tensor_product
#-----------------------------------------------------------------------
def tensor_product( left, right ):
  'Bilinear extension of twisted_product to FormalSums over pairs.'
  terms = {}
  for p1, a in left.items():
    for p2, b in right.items():
      key          = twisted_product( p1, p2 )
      terms[ key ] = terms.get( key, 0 ) + a * b
  return FormalSum( terms )

#-----------------------------------------------------------------------
# bialgebra_check
#-----------------------------------------------------------------------
def bialgebra_check( M, N ):
  lhs = coproduct( free_product( M, N ) )
  rhs = tensor_product( coproduct( M ), coproduct( N ) )
  return lhs == rhs
