#=======================================================================
# constructions.py
#=======================================================================
# The free product M□N on S+T, where S = 0..m-1 carries M and the
# elements of N are shifted up to m..m+k-1.
#
# Each construction below starts from a different characterization of
# the product (independent sets, bases, rank, closure, circuits) and
# builds a Matroid without going through the others, so the builders
# can be used as mutual checks. All of them work on whole 2^(m+k)
# tables at once: every subset A is split into A_S and A_T and the
# factor tables are indexed by those halves.

from collections import namedtuple

import numpy as np

from matfp.datatypes            import helpers
from matfp.datatypes.helpers    import MAX_N, full_mask
from matfp.datatypes.SubsetMask import SubsetMask
from matfp.datatypes.SetFamily  import SetFamily
from matfp.model.Matroid        import Matroid, empty, point, loop
from matfp.model.exceptions     import GroundSetOverflow

CONSTRUCTIONS = ( 'INDEP', 'BASES', 'RANK', 'CLOSURE', 'CIRCUITS' )

#-----------------------------------------------------------------------
# SplitTables
#-----------------------------------------------------------------------
# Per-subset quantities of the split A = A_S + A_T, all int arrays of
# length 2^(m+k): aS, aT, popS, popT, rM, rN, lam = λ_M(A_S) and
# nu = ν_N(A_T).
SplitTables = namedtuple( 'SplitTables',
                          'n m idx aS aT popS popT rM rN lam nu' )

def split_tables( M, N ):
  n = M.n + N.n
  if n > MAX_N:
    raise GroundSetOverflow( n )
  m    = M.n
  idx  = helpers.subset_index( n )
  aS   = idx & full_mask( m )
  aT   = idx >> m
  popS = helpers.popcount_table( M.n ).astype( np.int64 )[ aS ]
  popT = helpers.popcount_table( N.n ).astype( np.int64 )[ aT ]
  rM   = M.rank_table().astype( np.int64 )[ aS ]
  rN   = N.rank_table().astype( np.int64 )[ aT ]
  return SplitTables( n, m, idx, aS, aT, popS, popT, rM, rN,
                      M.r - rM, popT - rN )

#=======================================================================
# Definition
#=======================================================================

#-----------------------------------------------------------------------
# free_product
#-----------------------------------------------------------------------
def free_product( M, N ):
  'A is independent iff A_S is independent in M and λ_M(A_S) >= ν_N(A_T).'
  t     = split_tables( M, N )
  indep = ( t.rM == t.popS ) & ( t.lam >= t.nu )
  return Matroid.from_independent( t.n, indep )

#=======================================================================
# Cryptomorphic Characterizations
#=======================================================================

#-----------------------------------------------------------------------
# fp_bases
#-----------------------------------------------------------------------
def fp_bases( M, N ):
  t   = split_tables( M, N )
  sel = ( t.rM == t.popS ) & ( t.rN == N.r ) & ( t.lam == t.nu )
  return [ SubsetMask( t.n, b ) for b in t.idx[ sel ].tolist() ]

def fp_from_bases( M, N ):
  return Matroid( M.n + N.n, M.r + N.r, fp_bases( M, N ), validate = False )

#-----------------------------------------------------------------------
# fp_rank
#-----------------------------------------------------------------------
def _halves( M, A ):
  A = int( A )
  return A & M.full, A >> M.n

def fp_rank( M, N, A ):
  aS, aT = _halves( M, A )
  return M.rank( aS ) + N.rank( aT ) + min( M.rank_lack( aS ), N.nullity( aT ) )

def fp_nullity( M, N, A ):
  aS, aT = _halves( M, A )
  return M.nullity( aS ) + N.nullity( aT ) - min( M.rank_lack( aS ), N.nullity( aT ) )

def fp_rank_table( M, N ):
  t = split_tables( M, N )
  return t.rM + t.rN + np.minimum( t.lam, t.nu )

def fp_from_rank( M, N ):
  return Matroid.from_rank_table( M.n + N.n, fp_rank_table( M, N ) )

#-----------------------------------------------------------------------
# fp_closure
#-----------------------------------------------------------------------
# cl(A) = cl_M(A_S) + A_T when λ_M(A_S) > ν_N(A_T), and S + cl_N(A_T)
# otherwise.
def fp_closure( M, N, A ):
  aS, aT = _halves( M, A )
  n      = M.n + N.n
  if M.rank_lack( aS ) > N.nullity( aT ):
    return SubsetMask( n, int( M.closure( aS ) ) | ( aT << M.n ) )
  return SubsetMask( n, M.full | ( int( N.closure( aT ) ) << M.n ) )

def fp_closure_table( M, N ):
  t   = split_tables( M, N )
  clM = M.closure_table()[ t.aS ]
  clN = N.closure_table()[ t.aT ]
  return np.where( t.lam > t.nu, clM | ( t.aT << t.m ),
                   M.full | ( clN << t.m ) )

# A is independent iff no x in A lies in the closure of A - x.
def fp_from_closure( M, N ):
  cl    = fp_closure_table( M, N )
  idx   = helpers.subset_index( M.n + N.n )
  indep = np.ones( len( idx ), dtype=bool )
  for i in range( M.n + N.n ):
    bit    = 1 << i
    has    = ( idx & bit ) != 0
    indep &= ~has | ( ( cl[ idx ^ bit ] & bit ) == 0 )
  return Matroid.from_independent( M.n + N.n, indep )

#-----------------------------------------------------------------------
# fp_is_flat
#-----------------------------------------------------------------------
def fp_is_flat( M, N, A ):
  aS, aT = _halves( M, A )
  if M.rank_lack( aS ) > N.nullity( aT ):
    return M.is_flat( aS )
  return aS == M.full and N.is_flat( aT )

def fp_flats( M, N ):
  t    = split_tables( M, N )
  flat = np.where( t.lam > t.nu, M.flat_table()[ t.aS ],
                   ( t.aS == M.full ) & N.flat_table()[ t.aT ] )
  return SetFamily( t.n, t.idx[ flat ].tolist() )

#-----------------------------------------------------------------------
# fp_circuits
#-----------------------------------------------------------------------
# Circuits of M inside S, plus the sets C with C_S independent in M,
# N|C_T isthmusless and λ_M(C_S) + 1 = ν_N(C_T).
def fp_circuit_table( M, N ):
  t = split_tables( M, N )
  return ( ( ( t.aT == 0 ) & M.circuit_table()[ t.aS ] ) |
           ( ( t.rM == t.popS ) & N.cyclic_table()[ t.aT ] &
             ( t.lam + 1 == t.nu ) ) )

def fp_circuits( M, N ):
  n = M.n + N.n
  return [ SubsetMask( n, c ) for c in
           helpers.subset_index( n )[ fp_circuit_table( M, N ) ].tolist() ]

def fp_from_circuits( M, N ):
  n         = M.n + N.n
  dependent = helpers.subset_or( fp_circuit_table( M, N ), n )
  return Matroid.from_independent( n, ~dependent )

#-----------------------------------------------------------------------
# fp_cyclic_flats
#-----------------------------------------------------------------------
def fp_cyclic_flats( M, N ):
  S       = M.full
  members = [ z for z in M.cyclic_flats() if z != S ]
  members.extend( S | ( b << M.n ) for b in N.cyclic_flats() if b )
  if not M.isthmuses() and not N.loops():
    members.append( S )
  return SetFamily( M.n + N.n, members )

#=======================================================================
# Witnesses
#=======================================================================

_BUILDERS = {
  'INDEP'    : free_product,
  'BASES'    : fp_from_bases,
  'RANK'     : fp_from_rank,
  'CLOSURE'  : fp_from_closure,
  'CIRCUITS' : fp_from_circuits,
}

#-----------------------------------------------------------------------
# FreeProductWitness
#-----------------------------------------------------------------------
class FreeProductWitness( namedtuple( 'FreeProductWitness',
                                      'product left_size construction' ) ):
  'A free product together with the position of its S/T split.'

  __slots__ = ()

  def left( self ):
    return self.product.restrict( full_mask( self.left_size ) )

  def right( self ):
    return self.product.contract( full_mask( self.left_size ) )

  def check( self, M, N ):
    'True if the product restricts to M on S and contracts to N on T.'
    return self.left() == M and self.right() == N

def free_product_witness( M, N, construction = 'INDEP' ):
  if construction not in _BUILDERS:
    raise ValueError( 'unknown construction {!r}, expected one of {}'
                      .format( construction, ', '.join( CONSTRUCTIONS ) ) )
  return FreeProductWitness( _BUILDERS[ construction ]( M, N ),
                             M.n, construction )

#=======================================================================
# Iterated Products
#=======================================================================

#-----------------------------------------------------------------------
# multi_free_product
#-----------------------------------------------------------------------
def multi_free_product( Ms ):
  Ms    = list( Ms )
  total = sum( M.n for M in Ms )
  if total > MAX_N:
    raise GroundSetOverflow( total )
  result = empty()
  for M in Ms:
    result = free_product( result, M )
  return result

#-----------------------------------------------------------------------
# multi_indep
#-----------------------------------------------------------------------
# A is independent in M_1□...□M_k iff for every j the rank-lacks of
# the blocks before j cover the nullities of the blocks up to j.
def multi_indep( Ms, A ):
  A      = int( A )
  lacks  = 0
  nulls  = 0
  offset = 0
  for M in Ms:
    part    = ( A >> offset ) & M.full
    nulls  += M.nullity( part )
    if lacks < nulls:
      return False
    lacks  += M.rank_lack( part )
    offset += M.n
  return True

#-----------------------------------------------------------------------
# freedom_matroid
#-----------------------------------------------------------------------
def freedom_matroid( word ):
  'Free product of points and loops spelled by a word over {I, Z}.'
  pieces = { 'I' : point, 'Z' : loop }
  try:
    return multi_free_product( pieces[ c ]() for c in word.upper() )
  except KeyError as e:
    raise ValueError( 'freedom word may only contain I and Z, got {}'.format( e ) )

#-----------------------------------------------------------------------
# swap_blocks
#-----------------------------------------------------------------------
# Moves elements 0..m-1 behind the others, keeping the order inside each
# block. Dualizing M□N gives N*□M* only after this relabelling.
def swap_blocks( M, m ):
  if not ( 0 <= m <= M.n ):
    raise ValueError( 'block size {} outside 0..{}'.format( m, M.n ) )
  return M.relabel( [ i + M.n - m if i < m else i - m for i in range( M.n ) ] )
