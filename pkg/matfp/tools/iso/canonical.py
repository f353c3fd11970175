#=======================================================================
# canonical.py
#=======================================================================
# Canonical labelling, isomorphism tests and isomorphism-class keys.
#
# Elements are first split into classes by an invariant fingerprint;
# the classes take consecutive labels in increasing fingerprint order.
# Among the relabellings respecting that layout, the canonical one has
# the lexicographically smallest revlex basis string. The string is
# built label by label: the r-subsets whose largest label is k form
# one contiguous chunk of the string and depend only on the elements
# given labels 0..k, so partial labellings with a larger chunk are
# dropped as soon as that chunk is known.
#
# Two elements are twins when swapping them maps the basis family to
# itself. Any permutation of a twin class is an automorphism, so twins
# are only ever placed in increasing order of their original index.

import functools
import math
from collections import namedtuple

import numpy as np

from matfp.datatypes.helpers import MAX_N, elements, permute, popcount, subsets_of_size
from matfp.model.Matroid     import Matroid

#-----------------------------------------------------------------------
# IsoKey
#-----------------------------------------------------------------------
class IsoKey( namedtuple( 'IsoKey', 'n r canon' ) ):
  'Isomorphism-class key; renders as n:r:<revlex string>.'

  __slots__ = ()

  def __str__( self ):
    return '{}:{}:{}'.format( self.n, self.r, self.canon )

  @classmethod
  def parse( cls, text ):
    parts = text.strip().split( ':' )
    if len( parts ) != 3 or not parts[0].isdigit() or not parts[1].isdigit() \
       or set( parts[2] ) - set( '01' ):
      raise ValueError( 'bad isomorphism key {!r}'.format( text ) )
    n, r = int( parts[0] ), int( parts[1] )
    if n > MAX_N or r > n or len( parts[2] ) != math.comb( n, r ):
      raise ValueError( 'bad isomorphism key {!r}'.format( text ) )
    return cls( n, r, parts[2] )

  def matroid( self ):
    'The canonical representative of the class.'
    return _decode( self )

#-----------------------------------------------------------------------
# _decode
#-----------------------------------------------------------------------
@functools.lru_cache( maxsize = 1 << 14 )
def _decode( key ):
  bases = [ a for a, c in zip( subsets_of_size( key.n, key.r ), key.canon )
            if c == '1' ]
  return Matroid( key.n, key.r, bases, validate = False )

#-----------------------------------------------------------------------
# _membership
#-----------------------------------------------------------------------
# 0/1 matrix with one row per mask and one column per element.
def _membership( masks, n ):
  arr = np.array( masks, dtype=np.int64 ).reshape( -1, 1 )
  return ( arr >> np.arange( n, dtype=np.int64 ) ) & 1

#-----------------------------------------------------------------------
# invariant_profile
#-----------------------------------------------------------------------
def invariant_profile( M ):
  'Per element: (is loop, is isthmus, #bases containing it, circuit sizes through it).'
  loops  = int( M.loops() )
  isth   = int( M.isthmuses() )
  counts = _membership( M.bases, M.n ).sum( axis=0 )
  sizes  = [ [] for _ in range( M.n ) ]
  for c in M.circuits():
    k = popcount( c )
    for x in elements( c ):
      sizes[x].append( k )
  return [ ( bool( ( loops >> x ) & 1 ), bool( ( isth >> x ) & 1 ),
             int( counts[x] ), tuple( sorted( sizes[x] ) ) )
           for x in range( M.n ) ]

#-----------------------------------------------------------------------
# refined_profile
#-----------------------------------------------------------------------
# One refinement round: each element also records, for every other
# element, that element's fingerprint and the number of bases holding
# both of them.
def refined_profile( M ):
  profile = invariant_profile( M )
  X       = _membership( M.bases, M.n )
  pair    = X.T @ X
  return [ ( profile[x],
             tuple( sorted( ( profile[y], int( pair[x, y] ) )
                            for y in range( M.n ) if y != x ) ) )
           for x in range( M.n ) ]

#-----------------------------------------------------------------------
# twin_masks
#-----------------------------------------------------------------------
# Returns, for each element, the mask of its twins with smaller index.
def twin_masks( M, profile ):
  n      = M.n
  parent = list( range( n ) )

  def find( x ):
    while parent[x] != x:
      parent[x] = parent[ parent[x] ]
      x = parent[x]
    return x

  bases = np.array( M.bases, dtype=np.int64 )
  for x in range( n ):
    for y in range( x + 1, n ):
      if profile[x] != profile[y] or find( x ) == find( y ):
        continue
      has_x   = ( bases >> x ) & 1
      has_y   = ( bases >> y ) & 1
      swapped = bases ^ ( ( has_x ^ has_y ) * ( ( 1 << x ) | ( 1 << y ) ) )
      if np.array_equal( np.sort( swapped ), bases ):
        parent[ find( y ) ] = find( x )

  smaller = [ 0 ] * n
  for x in range( n ):
    for y in range( x ):
      if find( x ) == find( y ):
        smaller[x] |= 1 << y
  return smaller

#-----------------------------------------------------------------------
# _canonical_search
#-----------------------------------------------------------------------
# Returns (sequence, revlex string) where sequence[k] is the original
# element given label k.
def _canonical_search( M ):
  n, r = M.n, M.r

  if r == 0 or r == n:
    return tuple( range( n ) ), '1'

  profile    = refined_profile( M )
  order      = sorted( set( profile ) )
  class_of   = [ order.index( p ) for p in profile ]
  slot_class = sorted( class_of )
  members    = [ [ x for x in range( n ) if class_of[x] == c ]
                 for c in range( len( order ) ) ]
  smaller    = twin_masks( M, profile )
  baseset    = M.baseset()

  survivors = [ () ]
  chunks    = []

  for k in range( n ):
    heads = subsets_of_size( k, r - 1 )
    best  = None
    kept  = []
    for seq in survivors:
      used = 0
      for x in seq:
        used |= 1 << x
      images = [ permute( t, seq ) for t in heads ]
      for x in members[ slot_class[k] ]:
        if ( used >> x ) & 1 or smaller[x] & ~used:
          continue
        bit   = 1 << x
        chunk = tuple( ( im | bit ) in baseset for im in images )
        if best is None or chunk < best:
          best = chunk
          kept = [ seq + ( x, ) ]
        elif chunk == best:
          kept.append( seq + ( x, ) )
    survivors = kept
    chunks.append( best )

  canon = ''.join( '1' if b else '0' for chunk in chunks for b in chunk )
  return survivors[0], canon

#-----------------------------------------------------------------------
# canonical_form
#-----------------------------------------------------------------------
def canonical_form( M ):
  'Return (canonical relabelling of M, perm) with M.relabel( perm ) canonical.'
  seq, _ = _canonical_search( M )
  perm   = [ 0 ] * M.n
  for label, x in enumerate( seq ):
    perm[x] = label
  return M.relabel( perm ), tuple( perm )

#-----------------------------------------------------------------------
# canonical_key
#-----------------------------------------------------------------------
# Uncached; used by the enumerator, which sees each candidate once.
def canonical_key( M ):
  _, canon = _canonical_search( M )
  return IsoKey( M.n, M.r, canon )

#-----------------------------------------------------------------------
# iso_key
#-----------------------------------------------------------------------
@functools.lru_cache( maxsize = 1 << 16 )
def iso_key( M ):
  return canonical_key( M )

#-----------------------------------------------------------------------
# are_isomorphic
#-----------------------------------------------------------------------
def are_isomorphic( M, N ):
  if ( M.n, M.r, len( M.bases ) ) != ( N.n, N.r, len( N.bases ) ):
    return False
  return iso_key( M ) == iso_key( N )
