#=======================================================================
# structure.py
#=======================================================================
# Truncation and Higgs lift, and the identities describing minors,
# truncations and lifts of free products. The identity checkers build
# both sides independently; the *_of_fp functions raise
# TheoremViolation with both sides in the witness when they differ.

import numpy as np

from matfp.datatypes        import helpers
from matfp.datatypes.helpers import full_mask
from matfp.model.Matroid    import Matroid, point, loop
from matfp.model.exceptions import NotNested, TheoremViolation

from .constructions import free_product

#=======================================================================
# Truncation and Lift
#=======================================================================

#-----------------------------------------------------------------------
# truncation_k
#-----------------------------------------------------------------------
# T^i M keeps the independent sets of size at most max(0, r - i).
def truncation_k( M, i ):
  if i < 0:
    raise ValueError( 'truncation order must be nonnegative, got {}'.format( i ) )
  r     = max( 0, M.r - i )
  pop   = helpers.popcount_table( M.n )
  sel   = M.independence_table() & ( pop == r )
  return Matroid( M.n, r, helpers.subset_index( M.n )[ sel ].tolist(),
                  validate = False )

#-----------------------------------------------------------------------
# lift_k
#-----------------------------------------------------------------------
# L^i M has the sets of nullity at most i as independent sets.
def lift_k( M, i ):
  if i < 0:
    raise ValueError( 'lift order must be nonnegative, got {}'.format( i ) )
  r     = min( M.n, M.r + i )
  pop   = helpers.popcount_table( M.n ).astype( np.int64 )
  null  = pop - M.rank_table()
  sel   = ( null <= i ) & ( pop == r )
  return Matroid( M.n, r, helpers.subset_index( M.n )[ sel ].tolist(),
                  validate = False )

def truncation( M ):
  return truncation_k( M, 1 )

def lift( M ):
  return lift_k( M, 1 )

#-----------------------------------------------------------------------
# lift_via_point
#-----------------------------------------------------------------------
# L(N) = (I□N)|T
def lift_via_point( N ):
  return free_product( point(), N ).restrict( full_mask( N.n + 1 ) & ~1 )

#-----------------------------------------------------------------------
# truncation_via_loop
#-----------------------------------------------------------------------
# T(M) = (M□Z)/a where a is the new loop-side element.
def truncation_via_loop( M ):
  return free_product( M, loop() ).contract( 1 << M.n )

#=======================================================================
# Minors of Free Products
#=======================================================================

def _split( M, A ):
  A = int( A )
  return A & M.full, A >> M.n

def _violation( what, **witness ):
  raise TheoremViolation( '{} does not hold'.format( what ), witness )

#-----------------------------------------------------------------------
# restriction_of_fp
#-----------------------------------------------------------------------
# (M□N)|U = M|U_S □ L^i N|U_T with i = λ_M(U_S).
def restriction_of_fp( M, N, U ):
  uS, uT = _split( M, U )
  lhs    = free_product( M, N ).restrict( U )
  rhs    = free_product( M.restrict( uS ),
                         lift_k( N, M.rank_lack( uS ) ).restrict( uT ) )
  if lhs != rhs:
    _violation( 'restriction of a free product', M=M, N=N, U=U, lhs=lhs, rhs=rhs )
  return lhs

#-----------------------------------------------------------------------
# contraction_of_fp
#-----------------------------------------------------------------------
# (M□N)/U = T^j M/U_S □ N/U_T with j = ν_N(U_T).
def contraction_of_fp( M, N, U ):
  uS, uT = _split( M, U )
  lhs    = free_product( M, N ).contract( U )
  rhs    = free_product( truncation_k( M, N.nullity( uT ) ).contract( uS ),
                         N.contract( uT ) )
  if lhs != rhs:
    _violation( 'contraction of a free product', M=M, N=N, U=U, lhs=lhs, rhs=rhs )
  return lhs

#-----------------------------------------------------------------------
# minor_of_fp
#-----------------------------------------------------------------------
# (M□N)(U,V) = (T^j M)(U_S,V_S) □ (L^i N)(U_T,V_T) with j = ν_N(U_T)
# and i = λ_M(V_S).
def minor_of_fp( M, N, U, V ):
  U, V = int( U ), int( V )
  if U & ~V:
    raise NotNested( U, V )
  uS, uT = _split( M, U )
  vS, vT = _split( M, V )
  j      = N.nullity( uT )
  i      = M.rank_lack( vS )
  lhs    = free_product( M, N ).minor( U, V )
  rhs    = free_product( truncation_k( M, j ).minor( uS, vS ),
                         lift_k( N, i ).minor( uT, vT ) )
  if lhs != rhs:
    _violation( 'minor of a free product', M=M, N=N, U=U, V=V, lhs=lhs, rhs=rhs )
  return lhs

#=======================================================================
# Truncations and Lifts of Free Products
#=======================================================================

#-----------------------------------------------------------------------
# fp_truncation_identity
#-----------------------------------------------------------------------
# T^i(M□N) = T^j M □ T^(i-j) N with j = max(i - ρ(N), 0).
def fp_truncation_identity( M, N, i ):
  j = max( i - N.r, 0 )
  return truncation_k( free_product( M, N ), i ) == \
         free_product( truncation_k( M, j ), truncation_k( N, i - j ) )

#-----------------------------------------------------------------------
# fp_lift_identity
#-----------------------------------------------------------------------
# L^i(M□N) = L^(i-k) M □ L^k N with k = max(i - ν(M), 0).
def fp_lift_identity( M, N, i ):
  k = max( i - M.nullity(), 0 )
  return lift_k( free_product( M, N ), i ) == \
         free_product( lift_k( M, i - k ), lift_k( N, k ) )

#=======================================================================
# Weak Maps
#=======================================================================

#-----------------------------------------------------------------------
# is_weak_map_image
#-----------------------------------------------------------------------
def is_weak_map_image( L, P ):
  'True if every independent set of L is independent in P (same ground set).'
  if L.n != P.n:
    return False
  return not np.any( L.independence_table() & ~P.independence_table() )

#-----------------------------------------------------------------------
# split_weak_map_holds
#-----------------------------------------------------------------------
# For S' a subset of L's ground set, L -> L|S' □ L/S' (with S' moved to
# the front) is a rank-preserving weak map.
def split_weak_map_holds( L, Sp ):
  Sp    = int( Sp )
  rest  = L.full & ~Sp
  order = helpers.elements( Sp ) + helpers.elements( rest )
  perm  = [ 0 ] * L.n
  for label, x in enumerate( order ):
    perm[x] = label
  moved = L.relabel( perm )
  P     = free_product( L.restrict( Sp ), L.contract( Sp ) )
  return P.r == moved.r and is_weak_map_image( moved, P )

#-----------------------------------------------------------------------
# conineq_holds
#-----------------------------------------------------------------------
# Every independent A of L has λ_{L|S'}(A_S') >= ν_{L/S'}(A - S').
def conineq_holds( L, Sp ):
  Sp    = int( Sp )
  rest  = L.full & ~Sp
  left  = L.restrict( Sp )
  right = L.contract( Sp )
  for A in helpers.subset_index( L.n )[ L.independence_table() ].tolist():
    aS = helpers.compress( A & Sp, Sp )
    aT = helpers.compress( A & rest, rest )
    if left.rank_lack( aS ) < right.nullity( aT ):
      return False
  return True
