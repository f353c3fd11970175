#=======================================================================
# weak_order.py
#=======================================================================
# Weak order on isomorphism classes of equal size: M <= N when some
# bijection carries every independent set of M to an independent set
# of N (equivalently, never raises rank going from M to N).

import networkx as nx
import numpy    as np

from matfp.model.exceptions    import SizeMismatch
from matfp.tools.iso.canonical import iso_key

#-----------------------------------------------------------------------
# _basis_counts
#-----------------------------------------------------------------------
def _basis_counts( M ):
  return [ sum( ( b >> x ) & 1 for b in M.bases ) for x in range( M.n ) ]

#-----------------------------------------------------------------------
# weak_leq
#-----------------------------------------------------------------------
# Backtracking over bijections, elements of M taken in order of
# decreasing basis count. After each assignment the images of the
# assigned parts of every basis of M must stay independent in N. When
# ranks agree bases go to bases, so an element of M can only go to an
# element of N lying in at least as many bases.
def weak_leq( M, N ):
  if M.n != N.n:
    raise SizeMismatch( 'weak order compares matroids of equal size, got {} and {}'
                        .format( M.n, N.n ) )
  if M.r > N.r:
    return False
  same_rank = M.r == N.r
  if same_rank and len( M.bases ) > len( N.bases ):
    return False

  n      = M.n
  indepN = N.independence_table()
  cntM   = _basis_counts( M )
  cntN   = _basis_counts( N )
  order  = sorted( range( n ), key = lambda x: ( -cntM[x], x ) )
  bases_of = [ [ b for b in M.bases if ( b >> x ) & 1 ] for x in range( n ) ]

  image = [ None ] * n

  def consistent( x ):
    for b in bases_of[x]:
      img = 0
      for z in range( n ):
        if ( b >> z ) & 1 and image[z] is not None:
          img |= 1 << image[z]
      if not indepN[ img ]:
        return False
    return True

  def search( depth, used ):
    if depth == n:
      return True
    x = order[ depth ]
    for y in range( n ):
      if ( used >> y ) & 1:
        continue
      if same_rank and cntM[x] > cntN[y]:
        continue
      image[x] = y
      if consistent( x ) and search( depth + 1, used | ( 1 << y ) ):
        return True
      image[x] = None
    return False

  return search( 0, 0 )

#=======================================================================
# WeakPoset
#=======================================================================

class WeakPoset( object ):
  'Classes of one size listed along a linear extension of the weak order.'

  def __init__( self, keys ):
    keys = sorted( set( keys ), key = lambda k: ( k.n, k.r, k.canon ) )
    if len( set( k.n for k in keys ) ) > 1:
      raise SizeMismatch( 'a weak poset holds classes of a single size' )

    count = len( keys )
    leq   = np.zeros( ( count, count ), dtype=bool )
    for i, a in enumerate( keys ):
      for j, b in enumerate( keys ):
        leq[i, j] = i == j or weak_leq( a.matroid(), b.matroid() )

    graph = nx.DiGraph()
    graph.add_nodes_from( range( count ) )
    graph.add_edges_from( ( i, j ) for i in range( count )
                          for j in range( count ) if i != j and leq[i, j] )
    order = list( nx.lexicographical_topological_sort( graph ) )

    self.classes = [ keys[i] for i in order ]
    self.leq     = leq[ np.ix_( order, order ) ]
    self._pos    = { k : i for i, k in enumerate( self.classes ) }

  def __len__( self ):
    return len( self.classes )

  def __iter__( self ):
    return iter( self.classes )

  def index( self, key ):
    return self._pos[ key ]

  def leq_keys( self, a, b ):
    return bool( self.leq[ self._pos[a], self._pos[b] ] )

  def up_set( self, key ):
    i = self._pos[ key ]
    return [ k for j, k in enumerate( self.classes ) if self.leq[i, j] ]

#-----------------------------------------------------------------------
# component_poset
#-----------------------------------------------------------------------
def component_poset( cat, r, k ):
  return WeakPoset( cat.component( r, k ) )

#-----------------------------------------------------------------------
# up_set_poset
#-----------------------------------------------------------------------
# The classes N >= M within M's (rank, nullity) component.
def up_set_poset( M, cat ):
  key  = iso_key( M )
  keys = [ k for k in cat.component( M.r, M.n - M.r )
           if k == key or weak_leq( M, k.matroid() ) ]
  return WeakPoset( keys )
