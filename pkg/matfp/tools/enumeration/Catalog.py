#=======================================================================
# Catalog.py
#=======================================================================
# Isomorphism classes of matroids on up to max_n elements, built level
# by level: every class on n elements is a single-element extension of
# some class on n-1 elements, so extending all level n-1 classes by all
# their modular cuts and deduplicating by canonical key gives level n.
#
# Catalog file format:
#
#   MATFP-CATALOG v1 nmax=4
#   0:0:1 irr=0 factors=
#   1:0:1 irr=1 factors=1:0:1
#   ...
#
# Lines are sorted by (n, r, canonical string).

from __future__ import print_function

import sys
from collections import namedtuple

from pyparsing import Regex, Suppress, DelimitedList, Optional, Group, StringEnd
from pyparsing import one_of, ParseException

from matfp.model.Matroid    import empty
from matfp.model.exceptions import IncompleteCatalog, ParseError
from matfp.tools.factorization.factor import factor_irreducible, is_irreducible
from matfp.tools.iso.canonical        import IsoKey, canonical_key, iso_key

from .EnumerationMetrics import DummyMetrics
from .extensions         import extend, modular_cuts

CatalogRecord = namedtuple( 'CatalogRecord',
                            'matroid rank nullity irreducible factor_keys' )

def _order( key ):
  return ( key.n, key.r, key.canon )

#=======================================================================
# Catalog
#=======================================================================

class Catalog( object ):
  'Map from IsoKey to CatalogRecord for every class with n <= max_n.'

  def __init__( self, max_n, classes ):
    self.max_n   = max_n
    self.classes = dict( classes )

  def __len__( self ):
    return len( self.classes )

  def __contains__( self, key ):
    return key in self.classes

  def __getitem__( self, key ):
    return self.classes[ key ]

  def __iter__( self ):
    return iter( self.keys() )

  def keys( self ):
    return sorted( self.classes, key = _order )

  #---------------------------------------------------------------------
  # require
  #---------------------------------------------------------------------
  def require( self, n ):
    if n > self.max_n:
      raise IncompleteCatalog( n, self.max_n )

  def record( self, M ):
    'The record of the class of M.'
    self.require( M.n )
    return self.classes[ iso_key( M ) ]

  #---------------------------------------------------------------------
  # Slices
  #---------------------------------------------------------------------

  def level( self, n ):
    self.require( n )
    return [ k for k in self.keys() if k.n == n ]

  def irreducibles( self, n ):
    return [ k for k in self.level( n ) if self.classes[k].irreducible ]

  def component( self, r, k ):
    'Classes of rank r and nullity k.'
    self.require( r + k )
    return [ key for key in self.keys() if key.r == r and key.n - key.r == k ]

  def matroids( self, n = None ):
    keys = self.keys() if n is None else self.level( n )
    return [ self.classes[k].matroid for k in keys ]

  #---------------------------------------------------------------------
  # counts
  #---------------------------------------------------------------------
  def counts( self ):
    'm_n for n = 0..max_n.'
    out = [ 0 ] * ( self.max_n + 1 )
    for k in self.classes:
      out[ k.n ] += 1
    return out

  def irreducible_counts( self ):
    out = [ 0 ] * ( self.max_n + 1 )
    for k, rec in self.classes.items():
      if rec.irreducible:
        out[ k.n ] += 1
    return out

#-----------------------------------------------------------------------
# make_record
#-----------------------------------------------------------------------
def make_record( M ):
  if M.n == 0:
    return CatalogRecord( M, 0, 0, False, () )
  keys = tuple( factor_irreducible( M ).iso_keys() )
  return CatalogRecord( M, M.r, M.n - M.r, is_irreducible( M ), keys )

#=======================================================================
# Enumeration
#=======================================================================

#-----------------------------------------------------------------------
# extend_level
#-----------------------------------------------------------------------
# Returns the canonical representatives of all classes one element
# larger than the given parents.
def extend_level( parents, metrics = None ):
  metrics = metrics or DummyMetrics()
  found   = {}
  for parent in parents:
    metrics.incr_parents()
    cuts = modular_cuts( parent )
    metrics.incr_cuts( len( cuts ) )
    for cut in cuts:
      child = extend( parent, cut, validate = False )
      key   = canonical_key( child )
      metrics.incr_canonicalizations()
      if key not in found:
        found[ key ] = key.matroid()
        metrics.incr_new_classes()
  return [ found[k] for k in sorted( found, key = _order ) ]

#-----------------------------------------------------------------------
# enumerate_up_to
#-----------------------------------------------------------------------
def enumerate_up_to( n_max, metrics = None, line_trace = False, out = None ):
  metrics = metrics or DummyMetrics()
  out     = out or sys.stdout

  level   = [ empty() ]
  classes = { iso_key( level[0] ) : make_record( level[0] ) }

  for n in range( 1, n_max + 1 ):
    metrics.start_level( n )
    level = extend_level( level, metrics )
    for M in level:
      classes[ iso_key( M ) ] = make_record( M )
    metrics.end_level()
    if line_trace:
      print( metrics.line_trace() or 'n={} classes={}'.format( n, len( level ) ),
             file=out )

  return Catalog( n_max, classes )

#=======================================================================
# Tables
#=======================================================================

#-----------------------------------------------------------------------
# counts_by_rank_nullity
#-----------------------------------------------------------------------
# Returns (m, i) as dicts from (r, k) to counts, for all r + k <= max_n.
def counts_by_rank_nullity( cat ):
  m = {}
  i = {}
  for n in range( cat.max_n + 1 ):
    for r in range( n + 1 ):
      m[ ( r, n - r ) ] = 0
      i[ ( r, n - r ) ] = 0
  for key, rec in cat.classes.items():
    rk = ( key.r, key.n - key.r )
    m[ rk ] += 1
    if rec.irreducible:
      i[ rk ] += 1
  return m, i

#-----------------------------------------------------------------------
# gf_series
#-----------------------------------------------------------------------
def gf_series( cat ):
  'Return ([m_0..m_max], [i_0..i_max]).'
  return cat.counts(), cat.irreducible_counts()

#-----------------------------------------------------------------------
# verify_gf
#-----------------------------------------------------------------------
# Unique factorization makes the catalog a free monoid on irreducibles:
# m_n = sum_j i_j m_(n-j), and the same over (rank, nullity) bidegrees.
def verify_gf( cat, n = None ):
  n = cat.max_n if n is None else n
  cat.require( n )
  m, i = gf_series( cat )

  if m[0] != 1:
    return False
  for size in range( 1, n + 1 ):
    conv = sum( i[j] * m[ size - j ] for j in range( 1, size + 1 ) )
    if conv != m[ size ]:
      return False

  mb, ib = counts_by_rank_nullity( cat )
  for ( r, k ) in mb:
    if r + k > n or ( r, k ) == ( 0, 0 ):
      continue
    conv = 0
    for ( a, b ), count in ib.items():
      if count and a <= r and b <= k and ( a, b ) != ( 0, 0 ):
        conv += count * mb[ ( r - a, k - b ) ]
    if conv != mb[ ( r, k ) ]:
      return False
  return mb[ ( 0, 0 ) ] == 1

#=======================================================================
# Persistence
#=======================================================================

def _key_token():
  return Regex( r'\d+:\d+:[01]+' )

def _header_parser():
  return ( Suppress( 'MATFP-CATALOG' ) + Suppress( 'v1' ) +
           Regex( r'nmax=\d+' ).set_parse_action( lambda t: int( t[0][5:] ) )( 'max_n' ) +
           StringEnd() )

def _line_parser():
  return ( _key_token()( 'key' ) +
           Suppress( 'irr=' ) + one_of( '0 1' )( 'irr' ) +
           Suppress( 'factors=' ) +
           Group( Optional( DelimitedList( _key_token(), ',' ) ) )( 'factors' ) +
           StringEnd() )

#-----------------------------------------------------------------------
# format_catalog
#-----------------------------------------------------------------------
def format_catalog( cat ):
  lines = [ 'MATFP-CATALOG v1 nmax={}'.format( cat.max_n ) ]
  for key in cat.keys():
    rec = cat[ key ]
    lines.append( '{} irr={} factors={}'.format(
      key, int( rec.irreducible ), ','.join( str( f ) for f in rec.factor_keys ) ) )
  return '\n'.join( lines ) + '\n'

def write_catalog( cat, path ):
  with open( path, 'w' ) as f:
    f.write( format_catalog( cat ) )

#-----------------------------------------------------------------------
# parse_catalog
#-----------------------------------------------------------------------
# Parsed one line at a time; keys would otherwise run across newlines.
def parse_catalog( text, filename = None ):
  lines = text.splitlines()
  if not lines:
    raise ParseError( 'empty catalog', filename, 1, 1 )

  def parse( grammar, line, lineno ):
    try:
      return grammar.parse_string( line, parse_all = True )
    except ParseException as e:
      raise ParseError( e.msg, filename, lineno, e.col )
    except ValueError as e:
      raise ParseError( str( e ), filename, lineno, 1 )

  max_n   = parse( _header_parser(), lines[0], 1 )['max_n']
  line_p  = _line_parser()
  classes = {}
  for lineno, line in enumerate( lines[1:], start = 2 ):
    if not line.strip():
      continue
    result = parse( line_p, line, lineno )
    key    = IsoKey.parse( result['key'] )
    if key.n > max_n:
      raise ParseError( 'class {} is larger than nmax={}'.format( key, max_n ),
                        filename, lineno, 1 )
    classes[ key ] = CatalogRecord( key.matroid(), key.r, key.n - key.r,
                                    result['irr'] == '1',
                                    tuple( IsoKey.parse( f ) for f in result['factors'] ) )
  return Catalog( max_n, classes )

def read_catalog( path ):
  with open( path ) as f:
    return parse_catalog( f.read(), path )
