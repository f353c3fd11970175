#=======================================================================
# named.py
#=======================================================================
# Small matroids that come up again and again in free-product work.
#
#   I, Z       single point and single loop
#   U23, U24   uniform matroids
#   D          two disjoint parallel pairs, U12 ⊕ U12; the only
#              irreducible matroid on four elements
#   P          one parallel pair plus two points in general position,
#              the freedom matroid I□Z□I□Z
#   L7         rank-4 truncation of U24 ⊕ U33; it lies between
#              U23 ⊕ U24 and U23 □ U24 in the weak order but has no
#              subset realizing (U23, U24) as restriction/contraction

from matfp.model.Matroid import direct_sum, free, loop, point, uniform
from matfp.tools.freeproduct.constructions import free_product, freedom_matroid
from matfp.tools.freeproduct.structure     import truncation

def I():
  return point()

def Z():
  return loop()

def U23():
  return uniform( 2, 3 )

def U24():
  return uniform( 2, 4 )

def D():
  return direct_sum( uniform( 1, 2 ), uniform( 1, 2 ) )

def P():
  return freedom_matroid( 'IZIZ' )

def L7():
  return truncation( direct_sum( uniform( 2, 4 ), free( 3 ) ) )

#-----------------------------------------------------------------------
# Free-product examples
#-----------------------------------------------------------------------
# A point, and a three-point line, each placed freely below D.

def point_over_D():
  return free_product( I(), D() )

def line_over_D():
  return free_product( U23(), D() )

NAMED = {
  'I'   : I,
  'Z'   : Z,
  'U23' : U23,
  'U24' : U24,
  'D'   : D,
  'P'   : P,
  'L7'  : L7,
}

def named( name ):
  try:
    return NAMED[ name ]()
  except KeyError:
    raise ValueError( 'no named matroid {!r}, expected one of {}'
                      .format( name, ', '.join( sorted( NAMED ) ) ) )
