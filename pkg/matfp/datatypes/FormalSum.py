#=======================================================================
# FormalSum.py
#=======================================================================
# Finite linear combinations of isomorphism-class keys (or tuples of
# keys) with exact rational coefficients.

from fractions import Fraction

#-----------------------------------------------------------------------
# render_key
#-----------------------------------------------------------------------
def render_key( key ):
  if isinstance( key, tuple ) and not hasattr( key, '_fields' ):
    return '(' + ','.join( str( k ) for k in key ) + ')'
  return str( key )

#-----------------------------------------------------------------------
# _sort_key
#-----------------------------------------------------------------------
# Tuples of keys order left-then-right by their rendered components.
def _sort_key( key ):
  if isinstance( key, tuple ) and not hasattr( key, '_fields' ):
    return tuple( str( k ) for k in key )
  return ( str( key ), )

#-----------------------------------------------------------------------
# FormalSum
#-----------------------------------------------------------------------
class FormalSum( object ):
  'Exact weighted combination of hashable keys; zero terms are never stored.'

  def __init__( self, terms = None ):
    self._terms = {}
    for key, coeff in dict( terms or {} ).items():
      self._accumulate( key, coeff )

  #---------------------------------------------------------------------
  # from_keys
  #---------------------------------------------------------------------
  @classmethod
  def from_keys( cls, keys ):
    'Sum with coefficient = number of occurrences of each key.'
    out = cls()
    for key in keys:
      out._accumulate( key, 1 )
    return out

  def _accumulate( self, key, coeff ):
    coeff = Fraction( coeff )
    total = self._terms.get( key, Fraction( 0 ) ) + coeff
    if total:
      self._terms[ key ] = total
    else:
      self._terms.pop( key, None )

  #---------------------------------------------------------------------
  # Container Methods
  #---------------------------------------------------------------------

  def __getitem__( self, key ):
    return self._terms.get( key, Fraction( 0 ) )

  def __contains__( self, key ):
    return key in self._terms

  def __len__( self ):
    return len( self._terms )

  def __iter__( self ):
    return iter( self.keys() )

  def keys( self ):
    return sorted( self._terms, key = _sort_key )

  def items( self ):
    return [ ( key, self._terms[ key ] ) for key in self.keys() ]

  def total( self ):
    'Sum of all coefficients.'
    return sum( self._terms.values(), Fraction( 0 ) )

  def is_integral( self ):
    return all( c.denominator == 1 for c in self._terms.values() )

  #---------------------------------------------------------------------
  # Arithmetic
  #---------------------------------------------------------------------

  def __add__( self, other ):
    out = FormalSum( self._terms )
    for key, coeff in other._terms.items():
      out._accumulate( key, coeff )
    return out

  def __neg__( self ):
    return FormalSum( { k: -c for k, c in self._terms.items() } )

  def __sub__( self, other ):
    return self + ( -other )

  def __mul__( self, scalar ):
    return FormalSum( { k: c * Fraction( scalar ) for k, c in self._terms.items() } )

  __rmul__ = __mul__

  def __eq__( self, other ):
    if not isinstance( other, FormalSum ):
      return NotImplemented
    return self._terms == other._terms

  def __ne__( self, other ):
    result = self.__eq__( other )
    return result if result is NotImplemented else not result

  __hash__ = None

  #---------------------------------------------------------------------
  # Print Methods
  #---------------------------------------------------------------------

  def __repr__( self ):
    return 'FormalSum( {} )'.format( str( self ) )

  def __str__( self ):
    if not self._terms:
      return '0'
    return ' + '.join( '{}*{}'.format( coeff, render_key( key ) )
                       for key, coeff in self.items() )
