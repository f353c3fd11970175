#=======================================================================
# extensions.py
#=======================================================================
# Single-element extensions of a matroid, one for each modular cut of
# its lattice of flats. A modular cut is an up-closed family of flats
# that contains F & G whenever it contains a modular pair F, G.
#
# Flats are indexed in order of decreasing rank and the cuts are
# enumerated by a depth-first include/exclude walk over that order.
# Including a flat pulls in its up-set and the meets it forms with
# modular partners already in the cut; excluding it excludes its
# down-set.

from matfp.datatypes.helpers   import elements
from matfp.datatypes.SetFamily import SetFamily
from matfp.model.Matroid       import Matroid
from matfp.model.exceptions    import InvalidCut

#=======================================================================
# ModularCut
#=======================================================================

class ModularCut( object ):
  'A family of flats of an n-element matroid, used to extend it.'

  def __init__( self, n, flats ):
    self.flats = flats if isinstance( flats, SetFamily ) else SetFamily( n, flats )
    self.n     = n

  def __len__( self ):
    return len( self.flats )

  def __iter__( self ):
    return iter( self.flats )

  def __contains__( self, mask ):
    return mask in self.flats

  def __eq__( self, other ):
    if not isinstance( other, ModularCut ):
      return NotImplemented
    return self.flats == other.flats

  def __ne__( self, other ):
    result = self.__eq__( other )
    return result if result is NotImplemented else not result

  def __hash__( self ):
    return hash( self.flats )

  def __repr__( self ):
    return 'ModularCut( {}, [{}] )'.format(
      self.n, ', '.join( '{:#x}'.format( f ) for f in self.flats ) )

  #---------------------------------------------------------------------
  # validate
  #---------------------------------------------------------------------
  def validate( self, M ):
    'Raise InvalidCut unless this is a modular cut of M.'
    if self.n != M.n:
      raise InvalidCut( 'cut is over {} elements, matroid over {}'
                        .format( self.n, M.n ) )
    flats = list( M.flats() )
    for f in self.flats:
      if not M.is_flat( f ):
        raise InvalidCut( '{:#x} is not a flat'.format( f ) )
      for g in flats:
        if f & ~g == 0 and g not in self.flats:
          raise InvalidCut( 'flat {:#x} is above {:#x} but not in the cut'
                            .format( g, f ) )
    for f in self.flats:
      for g in self.flats:
        meet = f & g
        if M.rank( f ) + M.rank( g ) == M.rank( f | g ) + M.rank( meet ) \
           and meet not in self.flats:
          raise InvalidCut( 'modular pair {:#x}, {:#x} has meet {:#x} outside the cut'
                            .format( f, g, meet ) )

#=======================================================================
# Enumeration of Cuts
#=======================================================================

#-----------------------------------------------------------------------
# _FlatOrder
#-----------------------------------------------------------------------
# Flats by decreasing rank, with up-sets and down-sets as bitsets over
# flat indices and the incomparable modular partners of every flat.
class _FlatOrder( object ):

  def __init__( self, M ):
    flats = sorted( M.flats(), key = lambda f: ( -M.rank( f ), f ) )
    pos   = { f : i for i, f in enumerate( flats ) }
    count = len( flats )

    up   = [ 0 ] * count
    down = [ 0 ] * count
    for i, f in enumerate( flats ):
      for j, g in enumerate( flats ):
        if f & ~g == 0:
          up[i]   |= 1 << j
          down[j] |= 1 << i

    modpairs = [ [] for _ in range( count ) ]
    for i, f in enumerate( flats ):
      for j in range( i + 1, count ):
        g = flats[j]
        if f & ~g == 0 or g & ~f == 0:
          continue
        meet = f & g
        if M.rank( f ) + M.rank( g ) == M.rank( f | g ) + M.rank( meet ):
          modpairs[i].append( ( j, pos[ meet ] ) )
          modpairs[j].append( ( i, pos[ meet ] ) )

    self.flats    = flats
    self.up       = up
    self.down     = down
    self.modpairs = modpairs

  #---------------------------------------------------------------------
  # close
  #---------------------------------------------------------------------
  # Smallest cut containing "cut" (already closed) and flat i.
  def close( self, cut, i ):
    pending = [ i ]
    while pending:
      j = pending.pop()
      if ( cut >> j ) & 1:
        continue
      cut |= 1 << j
      pending.extend( elements( self.up[j] & ~cut ) )
      for k, meet in self.modpairs[j]:
        if ( cut >> k ) & 1 and not ( cut >> meet ) & 1:
          pending.append( meet )
    return cut

#-----------------------------------------------------------------------
# modular_cuts
#-----------------------------------------------------------------------
def modular_cuts( M ):
  order = _FlatOrder( M )
  count = len( order.flats )
  found = []

  stack = [ ( 0, 0, 0 ) ]
  while stack:
    i, cut, out = stack.pop()
    while i < count and ( ( cut | out ) >> i ) & 1:
      i += 1
    if i == count:
      found.append( cut )
      continue
    stack.append( ( i + 1, cut, out | order.down[i] ) )
    grown = order.close( cut, i )
    if not grown & out:
      stack.append( ( i + 1, grown, out ) )

  cuts = [ ModularCut( M.n, [ order.flats[j] for j in elements( cut ) ] )
           for cut in found ]
  cuts.sort( key = lambda c: ( len( c ), c.flats.members ) )
  return cuts

#=======================================================================
# Extension
#=======================================================================

#-----------------------------------------------------------------------
# extend
#-----------------------------------------------------------------------
# The new element e gets label n. A + e is independent iff A is
# independent and cl(A) is not in the cut; the empty cut makes e an
# isthmus and the cut of all flats makes it a loop.
def extend( M, cut, validate = True ):
  if not isinstance( cut, ModularCut ):
    cut = ModularCut( M.n, cut )
  if validate:
    cut.validate( M )

  e = 1 << M.n
  if len( cut ) == 0:
    return Matroid( M.n + 1, M.r + 1, [ b | e for b in M.bases ],
                    validate = False )

  closure = M.closure_table()
  bases   = set( M.bases )
  for b in M.bases:
    for x in elements( b ):
      rest = b & ~( 1 << x )
      if int( closure[ rest ] ) not in cut:
        bases.add( rest | e )
  return Matroid( M.n + 1, M.r, bases, validate = False )

#-----------------------------------------------------------------------
# single_element_extensions
#-----------------------------------------------------------------------
def single_element_extensions( M ):
  return [ extend( M, cut, validate = False ) for cut in modular_cuts( M ) ]

#-----------------------------------------------------------------------
# cut_of_extension
#-----------------------------------------------------------------------
# Recovers the modular cut from an extension whose last element is the
# added one: the flats F of the deletion whose rank does not grow when
# e joins F.
def cut_of_extension( L ):
  n     = L.n - 1
  M     = L.delete( 1 << n )
  e     = 1 << n
  flats = [ f for f in M.flats() if L.rank( f | e ) == L.rank( f ) ]
  return ModularCut( n, flats )

#-----------------------------------------------------------------------
# random_matroid
#-----------------------------------------------------------------------
# Grows a matroid one random extension at a time, then shuffles the
# labels. Below "exact_below" elements the cut is drawn from all modular
# cuts; above it from the empty cut and the principal cuts (all flats
# containing one random flat), which stay cheap to list.
def random_matroid( n, rng, exact_below = 6 ):
  M = Matroid( 0, 0, [ 0 ], validate = False )
  for _ in range( n ):
    if M.n < exact_below:
      cut = rng.choice( modular_cuts( M ) )
    else:
      flats = list( M.flats() )
      pick  = rng.randrange( len( flats ) + 1 )
      if pick == len( flats ):
        cut = ModularCut( M.n, [] )
      else:
        base = flats[ pick ]
        cut  = ModularCut( M.n, [ f for f in flats if base & ~f == 0 ] )
    M = extend( M, cut, validate = False )
  perm = list( range( n ) )
  rng.shuffle( perm )
  return M.relabel( perm )
