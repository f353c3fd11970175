#=======================================================================
# exceptions.py
#=======================================================================
# Error classes raised by matfp. Validation errors derive from
# MatroidError, text format errors from ParseError, and failed theorem
# checks from TheoremViolation.

#-----------------------------------------------------------------------
# MatfpError
#-----------------------------------------------------------------------
class MatfpError( Exception ):
  pass

#-----------------------------------------------------------------------
# MatroidError
#-----------------------------------------------------------------------
class MatroidError( MatfpError ):
  pass

#-----------------------------------------------------------------------
# RankOutOfRange
#-----------------------------------------------------------------------
class RankOutOfRange( MatroidError ):
  def __init__( self, r, n ):
    super( RankOutOfRange, self ).__init__(
      'rank {} is outside 0..{}'.format( r, n ) )
    self.r = r
    self.n = n

#-----------------------------------------------------------------------
# GroundSetOverflow
#-----------------------------------------------------------------------
class GroundSetOverflow( MatroidError ):
  def __init__( self, n ):
    super( GroundSetOverflow, self ).__init__(
      'ground set of size {} exceeds the 16 element limit'.format( n ) )
    self.n = n

#-----------------------------------------------------------------------
# EmptyBasisList
#-----------------------------------------------------------------------
class EmptyBasisList( MatroidError ):
  def __init__( self ):
    super( EmptyBasisList, self ).__init__( 'a matroid needs at least one basis' )

#-----------------------------------------------------------------------
# MaskOutOfRange
#-----------------------------------------------------------------------
class MaskOutOfRange( MatroidError ):
  def __init__( self, mask, n ):
    super( MaskOutOfRange, self ).__init__(
      'mask {:#x} has elements outside 0..{}'.format( mask, n - 1 ) )
    self.mask = mask
    self.n    = n

#-----------------------------------------------------------------------
# NotEquicardinal
#-----------------------------------------------------------------------
class NotEquicardinal( MatroidError ):
  def __init__( self, mask, r ):
    super( NotEquicardinal, self ).__init__(
      'basis {:#x} does not have {} elements'.format( mask, r ) )
    self.mask = mask
    self.r    = r

#-----------------------------------------------------------------------
# ExchangeFails
#-----------------------------------------------------------------------
# Carries the witness: no y in b2 - b1 makes (b1 - x) + y a basis.
class ExchangeFails( MatroidError ):
  def __init__( self, b1, b2, x ):
    super( ExchangeFails, self ).__init__(
      'exchange fails for bases {:#x}, {:#x} at element {}'.format( b1, b2, x ) )
    self.b1 = b1
    self.b2 = b2
    self.x  = x

#-----------------------------------------------------------------------
# NotNested
#-----------------------------------------------------------------------
class NotNested( MatroidError ):
  def __init__( self, a, b ):
    super( NotNested, self ).__init__(
      '{:#x} is not a subset of {:#x}'.format( a, b ) )
    self.a = a
    self.b = b

#-----------------------------------------------------------------------
# EmptyMatroid
#-----------------------------------------------------------------------
class EmptyMatroid( MatroidError ):
  def __init__( self, operation ):
    super( EmptyMatroid, self ).__init__(
      '{} is not defined for the empty matroid'.format( operation ) )
    self.operation = operation

#-----------------------------------------------------------------------
# SizeMismatch
#-----------------------------------------------------------------------
class SizeMismatch( MatroidError ):
  pass

#-----------------------------------------------------------------------
# SizeTooLarge
#-----------------------------------------------------------------------
class SizeTooLarge( MatroidError ):
  def __init__( self, n, limit ):
    super( SizeTooLarge, self ).__init__(
      'size {} is above the limit {}'.format( n, limit ) )
    self.n     = n
    self.limit = limit

#-----------------------------------------------------------------------
# InvalidCut
#-----------------------------------------------------------------------
class InvalidCut( MatroidError ):
  pass

#-----------------------------------------------------------------------
# NotAFreeSeparator
#-----------------------------------------------------------------------
class NotAFreeSeparator( MatroidError ):
  def __init__( self, mask ):
    super( NotAFreeSeparator, self ).__init__(
      'chain entry {:#x} is not a free separator'.format( mask ) )
    self.mask = mask

#-----------------------------------------------------------------------
# PresentationRankMismatch
#-----------------------------------------------------------------------
class PresentationRankMismatch( MatroidError ):
  def __init__( self, got, want ):
    super( PresentationRankMismatch, self ).__init__(
      'presentation has {} nonempty sets but the rank is {}'.format( got, want ) )
    self.got  = got
    self.want = want

#-----------------------------------------------------------------------
# IncompleteCatalog
#-----------------------------------------------------------------------
class IncompleteCatalog( MatroidError ):
  def __init__( self, n, max_n ):
    super( IncompleteCatalog, self ).__init__(
      'catalog covers sizes up to {} but size {} was needed'.format( max_n, n ) )
    self.n     = n
    self.max_n = max_n

#-----------------------------------------------------------------------
# SingularDiagonal
#-----------------------------------------------------------------------
class SingularDiagonal( MatroidError ):
  def __init__( self, index ):
    super( SingularDiagonal, self ).__init__(
      'zero diagonal entry at position {}'.format( index ) )
    self.index = index

#-----------------------------------------------------------------------
# ParseError
#-----------------------------------------------------------------------
class ParseError( MatfpError ):
  def __init__( self, message, filename=None, lineno=None, col=None ):
    location = ':'.join( str( x ) for x in ( filename, lineno, col )
                         if x is not None )
    if location:
      message = '{}: {}'.format( location, message )
    super( ParseError, self ).__init__( message )
    self.filename = filename
    self.lineno   = lineno
    self.col      = col

#-----------------------------------------------------------------------
# TheoremViolation
#-----------------------------------------------------------------------
# The witness maps names ('M', 'N', 'U', ...) to the matroids and masks
# that produced the failure.
class TheoremViolation( MatfpError ):
  def __init__( self, message, witness=None ):
    super( TheoremViolation, self ).__init__( message )
    self.witness = dict( witness or {} )
