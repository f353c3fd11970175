#=======================================================================
# SetFamily.py
#=======================================================================
# Explicit families of subsets of 0..n-1 (lattices of cyclic flats, of
# free separators, modular cuts) and flags, the chains running from the
# empty set to the whole ground set.

from .SubsetMask import SubsetMask
from .helpers    import MAX_N, full_mask

#-----------------------------------------------------------------------
# SetFamily
#-----------------------------------------------------------------------
class SetFamily( object ):
  'Sorted duplicate-free family of subsets of the ground set 0..n-1.'

  def __init__( self, n, members ):

    if not ( 0 <= n <= MAX_N ):
      raise ValueError( 'The ground set size must be in 0..{}!'.format( MAX_N ) )

    members = sorted( set( int( m ) for m in members ) )
    for m in members:
      if m < 0 or m >> n:
        raise ValueError( 'Member {:#x} is outside the ground set 0..{}!'
                          .format( m, n - 1 ) )

    self.n       = n
    self.members = tuple( members )

  #---------------------------------------------------------------------
  # Container Methods
  #---------------------------------------------------------------------

  def __len__( self ):
    return len( self.members )

  def __iter__( self ):
    return iter( self.members )

  def __contains__( self, mask ):
    return int( mask ) in self._member_set()

  def __eq__( self, other ):
    if not isinstance( other, SetFamily ):
      return NotImplemented
    return self.n == other.n and self.members == other.members

  def __ne__( self, other ):
    result = self.__eq__( other )
    return result if result is NotImplemented else not result

  def __hash__( self ):
    return hash( ( self.n, self.members ) )

  def __repr__( self ):
    return 'SetFamily( {}, [{}] )'.format(
      self.n, ', '.join( '{:#x}'.format( m ) for m in self.members ) )

  def _member_set( self ):
    try:
      return self._set
    except AttributeError:
      self._set = frozenset( self.members )
      return self._set

  def masks( self ):
    'Return the members as SubsetMask values.'
    return [ SubsetMask( self.n, m ) for m in self.members ]

  #---------------------------------------------------------------------
  # lattice_closure
  #---------------------------------------------------------------------
  # Smallest family containing this one, the empty set and the ground
  # set, closed under pairwise union and intersection.
  def lattice_closure( self ):
    found   = set( self.members ) | { 0, full_mask( self.n ) }
    pending = list( found )
    while pending:
      a = pending.pop()
      for b in list( found ):
        for c in ( a | b, a & b ):
          if c not in found:
            found.add( c )
            pending.append( c )
    return SetFamily( self.n, found )

  #---------------------------------------------------------------------
  # is_sublattice
  #---------------------------------------------------------------------
  def is_sublattice( self ):
    members = self._member_set()
    return all( ( a | b ) in members and ( a & b ) in members
                for a in self.members for b in self.members )

  #---------------------------------------------------------------------
  # comparable_to_all
  #---------------------------------------------------------------------
  def comparable_to_all( self, mask ):
    'True if "mask" is contained in or contains every member.'
    mask = int( mask )
    return all( mask & ~m == 0 or m & ~mask == 0 for m in self.members )

  #---------------------------------------------------------------------
  # pinchpoints
  #---------------------------------------------------------------------
  def pinchpoints( self ):
    'Return the chain of members comparable to every member.'
    if 0 not in self or full_mask( self.n ) not in self:
      raise ValueError( 'pinchpoints need the empty set and the ground set' )
    chain = [ m for m in self.members if self.comparable_to_all( m ) ]
    chain.sort( key = lambda m: ( bin( m ).count( '1' ), m ) )
    return Flag( self.n, chain )

  #---------------------------------------------------------------------
  # covers
  #---------------------------------------------------------------------
  def covers( self, mask ):
    'Members strictly above "mask" with no member strictly in between.'
    mask  = int( mask )
    above = [ m for m in self.members if m != mask and mask & ~m == 0 ]
    return [ m for m in above
             if not any( o != m and o & ~m == 0 for o in above ) ]

  #---------------------------------------------------------------------
  # interval
  #---------------------------------------------------------------------
  def interval( self, lo, hi ):
    'Members between "lo" and "hi" under inclusion.'
    lo, hi = int( lo ), int( hi )
    return [ m for m in self.members if lo & ~m == 0 and m & ~hi == 0 ]

#-----------------------------------------------------------------------
# Flag
#-----------------------------------------------------------------------
class Flag( object ):
  'Strictly increasing chain of subsets running from the empty set to 0..n-1.'

  def __init__( self, n, chain ):

    chain = tuple( int( c ) for c in chain )

    if not chain or chain[0] != 0 or chain[-1] != full_mask( n ):
      raise ValueError( 'A flag must run from the empty set to the ground set!' )

    for lo, hi in zip( chain, chain[1:] ):
      if lo == hi or lo & ~hi:
        raise ValueError( 'Flag entries {:#x} and {:#x} are not strictly nested!'
                          .format( lo, hi ) )

    self.n     = n
    self.chain = chain

  def __len__( self ):
    return len( self.chain )

  def __iter__( self ):
    return iter( self.chain )

  def __getitem__( self, i ):
    return self.chain[i]

  def __eq__( self, other ):
    if not isinstance( other, Flag ):
      return NotImplemented
    return self.n == other.n and self.chain == other.chain

  def __ne__( self, other ):
    result = self.__eq__( other )
    return result if result is NotImplemented else not result

  def __hash__( self ):
    return hash( ( self.n, self.chain ) )

  def __repr__( self ):
    return 'Flag( {}, [{}] )'.format( self.n, self.hex() )

  def hex( self ):
    return ','.join( '{:#x}'.format( c ) for c in self.chain )

  #---------------------------------------------------------------------
  # blocks
  #---------------------------------------------------------------------
  def blocks( self ):
    'Return the differences chain[i] - chain[i-1].'
    return [ hi & ~lo for lo, hi in zip( self.chain, self.chain[1:] ) ]

  #---------------------------------------------------------------------
  # refines
  #---------------------------------------------------------------------
  def refines( self, other ):
    'True if every entry of "other" is also an entry of this flag.'
    return set( other.chain ) <= set( self.chain )
