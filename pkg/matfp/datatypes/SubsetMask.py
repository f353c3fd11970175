#=======================================================================
# SubsetMask.py
#=======================================================================
# Module containing the SubsetMask class.

from .helpers import MAX_N, elements, format_set, popcount

#-----------------------------------------------------------------------
# SubsetMask
#-----------------------------------------------------------------------
class SubsetMask( int ):
  'Immutable subset of the ground set 0..n-1 stored as its characteristic word.'

  #---------------------------------------------------------------------
  # __new__
  #---------------------------------------------------------------------
  # SubsetMask is an int, so masks compare, hash and index exactly like
  # the plain words used inside the kernel.
  def __new__( cls, n, value = 0 ):

    value = int( value )
    n     = int( n )

    if not ( 0 <= n <= MAX_N ):
      raise ValueError( 'The ground set size must be in 0..{}!'.format( MAX_N ) )

    if value < 0 or value >> n:
      raise ValueError(
        'Value {:#x} has elements outside the ground set 0..{}!'
        .format( value, n - 1 )
      )

    obj   = super( SubsetMask, cls ).__new__( cls, value )
    obj.n = n
    return obj

  #---------------------------------------------------------------------
  # from_elements
  #---------------------------------------------------------------------
  @classmethod
  def from_elements( cls, n, elems ):
    value = 0
    for x in elems:
      if not ( 0 <= x < n ):
        raise ValueError( 'Element {} is outside 0..{}!'.format( x, n - 1 ) )
      value |= 1 << x
    return cls( n, value )

  #---------------------------------------------------------------------
  # uint
  #---------------------------------------------------------------------
  def uint( self ):
    return int( self )

  #---------------------------------------------------------------------
  # Set Queries
  #---------------------------------------------------------------------

  def elements( self ):
    return elements( int( self ) )

  def popcount( self ):
    return popcount( int( self ) )

  def __len__( self ):
    return popcount( int( self ) )

  def __iter__( self ):
    return iter( elements( int( self ) ) )

  def __contains__( self, x ):
    return 0 <= x < self.n and bool( ( int( self ) >> x ) & 1 )

  def __getitem__( self, x ):
    if not ( 0 <= x < self.n ):
      raise IndexError( 'SubsetMask index [{}] out of range [0 - {}]'
                        .format( x, self.n ) )
    return ( int( self ) >> x ) & 1

  def issubset( self, other ):
    return int( self ) & ~int( other ) == 0

  def issuperset( self, other ):
    return int( other ) & ~int( self ) == 0

  #---------------------------------------------------------------------
  # Set Operators
  #---------------------------------------------------------------------
  # Results live in the larger of the two ambient ground sets. Note that
  # "-" is set difference, not integer subtraction.

  def _ambient( self, other ):
    return max( self.n, getattr( other, 'n', 0 ), int( other ).bit_length() )

  def __or__( self, other ):
    return SubsetMask( self._ambient( other ), int( self ) | int( other ) )

  def __and__( self, other ):
    return SubsetMask( self._ambient( other ), int( self ) & int( other ) )

  def __xor__( self, other ):
    return SubsetMask( self._ambient( other ), int( self ) ^ int( other ) )

  def __sub__( self, other ):
    return SubsetMask( self.n, int( self ) & ~int( other ) )

  __ror__  = __or__
  __rand__ = __and__
  __rxor__ = __xor__

  def __invert__( self ):
    return SubsetMask( self.n, ( ( 1 << self.n ) - 1 ) & ~int( self ) )

  def complement( self ):
    return ~self

  def shift( self, offset ):
    'Return the same elements moved up by "offset" (disjoint-union relabel).'
    return SubsetMask( self.n + offset, int( self ) << offset )

  #---------------------------------------------------------------------
  # Print Methods
  #---------------------------------------------------------------------

  def __repr__( self ):
    return 'SubsetMask( {}, {} )'.format( self.n, self.hex() )

  def __str__( self ):
    return format_set( int( self ) )

  def bin( self ):
    return '0b' + '{:b}'.format( int( self ) ).zfill( max( self.n, 1 ) )

  def hex( self ):
    return '0x' + '{:x}'.format( int( self ) ).zfill( max( ( self.n + 3 ) // 4, 1 ) )

  #---------------------------------------------------------------------
  # __reduce__
  #---------------------------------------------------------------------
  def __reduce__( self ):
    return ( SubsetMask, ( self.n, int( self ) ) )
