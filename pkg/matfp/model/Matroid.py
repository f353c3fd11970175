#=======================================================================
# Matroid.py
#=======================================================================
# Module containing the Matroid class: a matroid on the ground set
# 0..n-1 (n <= 16) stored as its full basis family. The rank of every
# subset is tabulated once at construction; the other derived tables
# (closure, circuits, flats) are tabulated on first use.

import functools
import math
import threading
from collections import namedtuple

import networkx as nx
import numpy    as np

from matfp.datatypes            import helpers
from matfp.datatypes.helpers    import MAX_N, elements, full_mask, popcount
from matfp.datatypes.SubsetMask import SubsetMask
from matfp.datatypes.SetFamily  import SetFamily

from .exceptions import (
  RankOutOfRange, GroundSetOverflow, EmptyBasisList, MaskOutOfRange,
  NotEquicardinal, ExchangeFails, NotNested, EmptyMatroid,
)

RankStats = namedtuple( 'RankStats', 'rank nullity rank_lack' )

#-----------------------------------------------------------------------
# _tabulated
#-----------------------------------------------------------------------
# Caches a derived table on first use. Concurrent first calls compute
# it once under the instance lock, which is reentrant since tables are
# built from other tables.
def _tabulated( func ):
  name = '_' + func.__name__

  @functools.wraps( func )
  def wrapper( self ):
    value = self.__dict__.get( name )
    if value is None:
      with self._lock:
        value = self.__dict__.get( name )
        if value is None:
          value = func( self )
          self.__dict__[ name ] = value
    return value

  return wrapper

#-----------------------------------------------------------------------
# _read_only
#-----------------------------------------------------------------------
def _read_only( table ):
  table.flags.writeable = False
  return table

#-----------------------------------------------------------------------
# _rank_table
#-----------------------------------------------------------------------
# Independent sets are the subsets of bases (superset OR from the basis
# indicator); the rank of A is the largest independent subset of A.
def _rank_table( n, bases ):
  is_basis = np.zeros( 1 << n, dtype=bool )
  is_basis[ list( bases ) ] = True
  indep = helpers.superset_or( is_basis, n )
  rank  = np.where( indep, helpers.popcount_table( n ), 0 )
  return _read_only( helpers.subset_max( rank, n ) )

#-----------------------------------------------------------------------
# _check_equicardinal
#-----------------------------------------------------------------------
def _check_equicardinal( n, r, bases ):
  for b in bases:
    if b < 0 or b >> n:
      raise MaskOutOfRange( b, n )
    if popcount( b ) != r:
      raise NotEquicardinal( b, r )

#-----------------------------------------------------------------------
# _check_exchange
#-----------------------------------------------------------------------
# For every b1 and x in b1 we first collect all y outside b1 with
# (b1 - x) + y a basis; the exchange axiom for (b1, b2, x) then asks
# that this set meets b2.
def _check_exchange( bases ):
  baseset = set( bases )
  ground  = 0
  for b in bases:
    ground |= b

  for b1 in bases:
    swaps = {}
    for x in elements( b1 ):
      rest = b1 & ~( 1 << x )
      ys   = 0
      for y in elements( ground & ~b1 ):
        if rest | ( 1 << y ) in baseset:
          ys |= 1 << y
      swaps[ x ] = ys
    for b2 in bases:
      for x in elements( b1 & ~b2 ):
        if not swaps[ x ] & b2:
          raise ExchangeFails( b1, b2, x )

#=======================================================================
# Matroid
#=======================================================================
class Matroid( object ):
  'Matroid on 0..n-1 given by rank r and its sorted list of bases.'

  #---------------------------------------------------------------------
  # __init__
  #---------------------------------------------------------------------
  # Internal builders whose output is a matroid by construction pass
  # validate=False to skip the exchange check.
  def __init__( self, n, r, bases, validate = True ):

    n = int( n )
    r = int( r )

    if not ( 0 <= n <= MAX_N ):
      raise GroundSetOverflow( n )
    if not ( 0 <= r <= n ):
      raise RankOutOfRange( r, n )

    bases = sorted( set( int( b ) for b in bases ) )
    if not bases:
      raise EmptyBasisList()

    if validate:
      _check_equicardinal( n, r, bases )
      _check_exchange( bases )

    self.n     = n
    self.r     = r
    self.bases = tuple( bases )
    self._lock = threading.RLock()
    self._rank = _rank_table( n, self.bases )

  #---------------------------------------------------------------------
  # from_independent
  #---------------------------------------------------------------------
  # Build from a 2^n independence indicator; bases are the independent
  # sets of maximum size.
  @classmethod
  def from_independent( cls, n, indep, validate = False ):
    indep = np.asarray( indep, dtype=bool )
    pop   = helpers.popcount_table( n )
    r     = int( pop[ indep ].max() )
    bases = helpers.subset_index( n )[ indep & ( pop == r ) ]
    return cls( n, r, bases.tolist(), validate )

  #---------------------------------------------------------------------
  # from_rank_table
  #---------------------------------------------------------------------
  @classmethod
  def from_rank_table( cls, n, rank, validate = False ):
    rank  = np.asarray( rank )
    pop   = helpers.popcount_table( n )
    r     = int( rank[ full_mask( n ) ] )
    bases = helpers.subset_index( n )[ ( rank == pop ) & ( pop == r ) ]
    return cls( n, r, bases.tolist(), validate )

  #---------------------------------------------------------------------
  # _mask
  #---------------------------------------------------------------------
  def _mask( self, A ):
    A = int( A )
    if A < 0 or A >> self.n:
      raise MaskOutOfRange( A, self.n )
    return A

  @property
  def full( self ):
    return full_mask( self.n )

  #---------------------------------------------------------------------
  # Rank Queries
  #---------------------------------------------------------------------

  def rank( self, A = None ):
    'Rank of A, or of the whole matroid when A is omitted.'
    if A is None:
      return self.r
    return int( self._rank[ self._mask( A ) ] )

  def rank_stats( self, A ):
    A  = self._mask( A )
    rk = int( self._rank[ A ] )
    return RankStats( rk, popcount( A ) - rk, self.r - rk )

  def nullity( self, A = None ):
    A = self.full if A is None else self._mask( A )
    return popcount( A ) - int( self._rank[ A ] )

  def rank_lack( self, A ):
    return self.r - int( self._rank[ self._mask( A ) ] )

  def is_independent( self, A ):
    A = self._mask( A )
    return int( self._rank[ A ] ) == popcount( A )

  def is_basis( self, A ):
    return int( A ) in self.baseset()

  def is_spanning( self, A ):
    return int( self._rank[ self._mask( A ) ] ) == self.r

  def closure( self, A ):
    return SubsetMask( self.n, int( self.closure_table()[ self._mask( A ) ] ) )

  def is_flat( self, A ):
    A = self._mask( A )
    return int( self.closure_table()[ A ] ) == A

  #---------------------------------------------------------------------
  # Tables
  #---------------------------------------------------------------------
  # All tables are read-only numpy arrays indexed by subset mask.

  def rank_table( self ):
    return self._rank

  @_tabulated
  def baseset( self ):
    return frozenset( self.bases )

  @_tabulated
  def independence_table( self ):
    return _read_only( self._rank == helpers.popcount_table( self.n ) )

  @_tabulated
  def closure_table( self ):
    idx = helpers.subset_index( self.n )
    cl  = idx.copy()
    for i in range( self.n ):
      bit = 1 << i
      cl |= np.where( self._rank[ idx | bit ] == self._rank, bit, 0 )
    return _read_only( cl )

  @_tabulated
  def flat_table( self ):
    return _read_only( self.closure_table() == helpers.subset_index( self.n ) )

  # Dependent sets whose every single-element deletion is independent.
  @_tabulated
  def circuit_table( self ):
    idx  = helpers.subset_index( self.n )
    pop  = helpers.popcount_table( self.n )
    circ = self._rank < pop
    for i in range( self.n ):
      bit = 1 << i
      has = ( idx & bit ) != 0
      circ &= ~has | ( self._rank[ idx ^ bit ] == pop - 1 )
    return _read_only( circ )

  # Sets with no isthmus in their restriction, i.e. unions of circuits.
  @_tabulated
  def cyclic_table( self ):
    idx = helpers.subset_index( self.n )
    cyc = np.ones( 1 << self.n, dtype=bool )
    for i in range( self.n ):
      bit = 1 << i
      has = ( idx & bit ) != 0
      cyc &= ~has | ( self._rank[ idx ^ bit ] == self._rank )
    return _read_only( cyc )

  #---------------------------------------------------------------------
  # Derived Structures
  #---------------------------------------------------------------------

  @_tabulated
  def flats( self ):
    idx = helpers.subset_index( self.n )
    return SetFamily( self.n, idx[ self.flat_table() ].tolist() )

  def hyperplanes( self ):
    return SetFamily( self.n, [ f for f in self.flats()
                                if self._rank[ f ] == self.r - 1 ] )

  @_tabulated
  def circuits( self ):
    idx = helpers.subset_index( self.n )
    return tuple( SubsetMask( self.n, c )
                  for c in idx[ self.circuit_table() ].tolist() )

  @_tabulated
  def cyclic_flats( self ):
    idx = helpers.subset_index( self.n )
    sel = self.flat_table() & self.cyclic_table()
    return SetFamily( self.n, idx[ sel ].tolist() )

  def loops( self ):
    return SubsetMask( self.n, int( self.closure_table()[ 0 ] ) )

  def isthmuses( self ):
    full = self.full
    mask = 0
    for i in range( self.n ):
      if self._rank[ full ^ ( 1 << i ) ] < self.r:
        mask |= 1 << i
    return SubsetMask( self.n, mask )

  #---------------------------------------------------------------------
  # dual
  #---------------------------------------------------------------------
  def dual( self ):
    full = self.full
    return Matroid( self.n, self.n - self.r,
                    [ full ^ b for b in self.bases ], validate = False )

  #---------------------------------------------------------------------
  # restrict
  #---------------------------------------------------------------------
  # Bases of M|A are the intersections B & A of maximum size rank(A).
  # Elements of A are relabelled 0..|A|-1 preserving order.
  def restrict( self, A ):
    A   = self._mask( A )
    r_A = int( self._rank[ A ] )
    bases = { helpers.compress( b & A, A ) for b in self.bases
              if popcount( b & A ) == r_A }
    return Matroid( popcount( A ), r_A, bases, validate = False )

  def delete( self, A ):
    return self.restrict( self.full & ~self._mask( A ) )

  #---------------------------------------------------------------------
  # contract
  #---------------------------------------------------------------------
  # Bases of M/A are B - A for the bases B meeting A in rank(A) elements.
  def contract( self, A ):
    A    = self._mask( A )
    r_A  = int( self._rank[ A ] )
    rest = self.full & ~A
    bases = { helpers.compress( b & rest, rest ) for b in self.bases
              if popcount( b & A ) == r_A }
    return Matroid( popcount( rest ), self.r - r_A, bases, validate = False )

  #---------------------------------------------------------------------
  # minor
  #---------------------------------------------------------------------
  # M(A,B) = (M|B)/A on B - A. With return_map the original element of
  # each new label is returned too.
  def minor( self, A, B, return_map = False ):
    A = self._mask( A )
    B = self._mask( B )
    if A & ~B:
      raise NotNested( A, B )
    result = self.restrict( B ).contract( helpers.compress( A, B ) )
    if return_map:
      return result, tuple( elements( B & ~A ) )
    return result

  #---------------------------------------------------------------------
  # relabel
  #---------------------------------------------------------------------
  # Element i of this matroid becomes element perm[i].
  def relabel( self, perm ):
    perm = [ int( p ) for p in perm ]
    if sorted( perm ) != list( range( self.n ) ):
      raise ValueError( '{} is not a permutation of 0..{}'.format( perm, self.n - 1 ) )
    return Matroid( self.n, self.r,
                    [ helpers.permute( b, perm ) for b in self.bases ],
                    validate = False )

  #---------------------------------------------------------------------
  # Predicates
  #---------------------------------------------------------------------

  def is_uniform( self ):
    return len( self.bases ) == math.comb( self.n, self.r )

  # Elements are joined when they share a circuit; single-element
  # matroids count as connected.
  def is_connected( self ):
    if self.n == 0:
      raise EmptyMatroid( 'is_connected' )
    if self.n == 1:
      return True
    graph = nx.Graph()
    graph.add_nodes_from( range( self.n ) )
    for c in self.circuits():
      nx.add_path( graph, elements( c ) )
    return nx.is_connected( graph )

  def equals( self, other ):
    return ( self.n, self.r, self.bases ) == ( other.n, other.r, other.bases )

  def is_identically_self_dual( self ):
    return self.equals( self.dual() )

  #---------------------------------------------------------------------
  # Value Semantics
  #---------------------------------------------------------------------

  def __eq__( self, other ):
    if not isinstance( other, Matroid ):
      return NotImplemented
    return self.equals( other )

  def __ne__( self, other ):
    result = self.__eq__( other )
    return result if result is NotImplemented else not result

  def __hash__( self ):
    return hash( ( self.n, self.r, self.bases ) )

  def __reduce__( self ):
    return ( Matroid, ( self.n, self.r, self.bases, False ) )

  def __repr__( self ):
    return 'Matroid( n={}, r={}, bases=[{}] )'.format(
      self.n, self.r, ';'.join( helpers.format_set( b ) for b in self.bases ) )

#=======================================================================
# Constructors
#=======================================================================

#-----------------------------------------------------------------------
# from_bases
#-----------------------------------------------------------------------
def from_bases( n, r, bases ):
  'Return the validated matroid with the given bases.'
  return Matroid( n, r, bases, validate = True )

#-----------------------------------------------------------------------
# uniform
#-----------------------------------------------------------------------
def uniform( r, n ):
  'Return U_{r,n}, whose bases are all r-subsets of 0..n-1.'
  if not ( 0 <= n <= MAX_N ):
    raise GroundSetOverflow( n )
  if not ( 0 <= r <= n ):
    raise RankOutOfRange( r, n )
  return Matroid( n, r, helpers.subsets_of_size( n, r ), validate = False )

def free( n ):
  return uniform( n, n )

def zero( n ):
  return uniform( 0, n )

def empty():
  return uniform( 0, 0 )

def point():
  'The single-element free matroid I.'
  return uniform( 1, 1 )

def loop():
  'The single-element zero matroid Z.'
  return uniform( 0, 1 )

#-----------------------------------------------------------------------
# direct_sum
#-----------------------------------------------------------------------
# Elements of N are shifted above those of M.
def direct_sum( M, N ):
  if M.n + N.n > MAX_N:
    raise GroundSetOverflow( M.n + N.n )
  bases = [ b | ( c << M.n ) for b in M.bases for c in N.bases ]
  return Matroid( M.n + N.n, M.r + N.r, bases, validate = False )
