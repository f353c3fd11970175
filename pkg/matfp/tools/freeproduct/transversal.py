#=======================================================================
# transversal.py
#=======================================================================
# Transversal matroids from presentations, and the presentation of a
# free product of transversal matroids: each set A_i of M's
# presentation is widened by all of T, and N's sets are shifted onto T.

from collections import namedtuple

import networkx as nx
import numpy    as np

from matfp.datatypes         import helpers
from matfp.datatypes.helpers import MAX_N, full_mask
from matfp.model.Matroid     import Matroid
from matfp.model.exceptions  import GroundSetOverflow, PresentationRankMismatch

Presentation = namedtuple( 'Presentation', 'n sets' )

#-----------------------------------------------------------------------
# is_partial_transversal
#-----------------------------------------------------------------------
# A is a partial transversal when its elements can be matched to
# distinct sets containing them (Hopcroft-Karp on the bipartite graph).
def is_partial_transversal( sets, A ):
  elems = helpers.elements( int( A ) )
  if not elems:
    return True
  if len( elems ) > len( sets ):
    return False
  graph = nx.Graph()
  top   = [ ( 'e', x ) for x in elems ]
  graph.add_nodes_from( top )
  graph.add_nodes_from( ( 's', i ) for i in range( len( sets ) ) )
  for x in elems:
    for i, s in enumerate( sets ):
      if ( s >> x ) & 1:
        graph.add_edge( ( 'e', x ), ( 's', i ) )
  matching = nx.bipartite.hopcroft_karp_matching( graph, top_nodes = top )
  return all( ( 'e', x ) in matching for x in elems )

#-----------------------------------------------------------------------
# transversal_from_presentation
#-----------------------------------------------------------------------
# Independent sets are downward closed, so a set is only matched once
# all of its one-smaller subsets are known to be independent.
def transversal_from_presentation( n, sets ):
  if not ( 0 <= n <= MAX_N ):
    raise GroundSetOverflow( n )
  sets = [ int( s ) for s in sets ]
  for s in sets:
    if s < 0 or s >> n:
      raise ValueError( 'presentation set {:#x} is outside 0..{}'.format( s, n - 1 ) )

  indep = np.zeros( 1 << n, dtype=bool )
  indep[0] = True
  for k in range( 1, min( n, len( sets ) ) + 1 ):
    for A in helpers.subsets_of_size( n, k ):
      if all( indep[ A & ~( 1 << x ) ] for x in helpers.elements( A ) ) \
         and is_partial_transversal( sets, A ):
        indep[A] = True
  return Matroid.from_independent( n, indep )

def transversal_matroid( presentation ):
  return transversal_from_presentation( presentation.n, presentation.sets )

#-----------------------------------------------------------------------
# normalize_presentation
#-----------------------------------------------------------------------
# Drops empty sets; what is left must have exactly rank-many sets.
def normalize_presentation( presentation ):
  sets = [ int( s ) for s in presentation.sets if s ]
  rank = transversal_matroid( presentation ).r
  if len( sets ) != rank:
    raise PresentationRankMismatch( len( sets ), rank )
  return Presentation( presentation.n, sets )

#-----------------------------------------------------------------------
# fp_presentation
#-----------------------------------------------------------------------
def fp_presentation( pres_M, pres_N ):
  pres_M = normalize_presentation( pres_M )
  n      = pres_M.n + pres_N.n
  if n > MAX_N:
    raise GroundSetOverflow( n )
  T    = full_mask( n ) & ~full_mask( pres_M.n )
  sets = [ a | T for a in pres_M.sets ] + \
         [ int( b ) << pres_M.n for b in pres_N.sets ]
  return Presentation( n, sets )
