#=======================================================================
# formats.py
#=======================================================================
# Text formats for matroids and factorizations.
#
# MATROID format:
#
#   MATROID n=4 r=2
#   bases=0,2;0,3;1,2;1,3
#
# Compact format: "<n> <r> <s>" where s has one 0/1 character per
# r-subset in revlex order (increasing mask value), '1' for bases.
#
# Factorization format: the flavor tag, one MATROID block per factor,
# then "CHAIN=" with the separator chain masks in hex.
#
# Resources:
#
# - https://pyparsing-docs.readthedocs.io/en/latest/HowToUsePyparsing.html

import math

from pyparsing import Word, nums, Keyword, Regex, one_of
from pyparsing import Group, DelimitedList, ZeroOrMore, StringEnd
from pyparsing import ParseException, Suppress

from matfp.datatypes.helpers   import MAX_N, elements, format_set, mask_of, subsets_of_size
from matfp.datatypes.SetFamily import Flag

from .Matroid    import Matroid
from .exceptions import ParseError

FLAVORS = ( 'PRIMARY_FACTORIZATION', 'IRREDUCIBLE', 'CUSTOM' )

#-----------------------------------------------------------------------
# integer
#-----------------------------------------------------------------------
def integer():
  return Word( nums ).set_parse_action( lambda t: int( t[0] ) )

#-----------------------------------------------------------------------
# matroid_parser
#-----------------------------------------------------------------------
# A MATROID block: header line plus the bases line. Each basis is a
# comma separated element list or '-' for the empty set.
def matroid_parser():

  element_set = (
    Group( Suppress( '-' ) ) |
    Group( DelimitedList( integer(), ',' ) )
  )

  header = (
    Suppress( Keyword( 'MATROID' ) ) +
    Suppress( 'n=' ) + integer()( 'n' ) +
    Suppress( 'r=' ) + integer()( 'r' )
  )

  bases = Suppress( 'bases=' ) + Group( DelimitedList( element_set, ';' ) )( 'bases' )

  return Group( header + bases )

#-----------------------------------------------------------------------
# compact_parser
#-----------------------------------------------------------------------
def compact_parser():
  return Group( integer()( 'n' ) + integer()( 'r' ) + Regex( '[01]+' )( 's' ) )

#-----------------------------------------------------------------------
# factorization_parser
#-----------------------------------------------------------------------
def factorization_parser():
  chain = Group( DelimitedList( Regex( '0x[0-9a-fA-F]+' ), ',' ) )
  return (
    one_of( ' '.join( FLAVORS ) )( 'flavor' ) +
    Group( ZeroOrMore( matroid_parser() ) )( 'factors' ) +
    Suppress( 'CHAIN=' ) + chain( 'chain' ) +
    StringEnd()
  )

#-----------------------------------------------------------------------
# _parse
#-----------------------------------------------------------------------
def _parse( grammar, text, filename ):
  try:
    return grammar.parse_string( text, parse_all = True )
  except ParseException as e:
    raise ParseError( e.msg, filename, e.lineno, e.col )

#-----------------------------------------------------------------------
# _from_block
#-----------------------------------------------------------------------
def _from_block( block ):
  bases = [ mask_of( b ) for b in block['bases'] ]
  return Matroid( block['n'], block['r'], bases, validate = True )

#-----------------------------------------------------------------------
# _from_compact
#-----------------------------------------------------------------------
def _from_compact( block, filename ):
  n, r, s = block['n'], block['r'], block['s']
  if n > MAX_N:
    raise ParseError( 'size {} exceeds {}'.format( n, MAX_N ), filename, 1, 1 )
  if r > n:
    raise ParseError( 'rank {} exceeds size {}'.format( r, n ), filename, 1, 1 )
  if len( s ) != math.comb( n, r ):
    raise ParseError( 'basis string has length {} but C({},{}) = {}'
                      .format( len( s ), n, r, math.comb( n, r ) ), filename, 1, 1 )
  bases = [ a for a, c in zip( subsets_of_size( n, r ), s ) if c == '1' ]
  return Matroid( n, r, bases, validate = True )

#-----------------------------------------------------------------------
# parse_matroid
#-----------------------------------------------------------------------
# The format is detected from the first token.
def parse_matroid( text, filename = None ):
  if text.lstrip().startswith( 'MATROID' ):
    block = _parse( matroid_parser() + StringEnd(), text, filename )[0]
    return _from_block( block )
  block = _parse( compact_parser() + StringEnd(), text, filename )[0]
  return _from_compact( block, filename )

def read_matroid( path ):
  with open( path ) as f:
    return parse_matroid( f.read(), path )

#-----------------------------------------------------------------------
# revlex_string
#-----------------------------------------------------------------------
def revlex_string( M ):
  baseset = M.baseset()
  return ''.join( '1' if a in baseset else '0'
                  for a in subsets_of_size( M.n, M.r ) )

#-----------------------------------------------------------------------
# to_text
#-----------------------------------------------------------------------
# Bases are listed lexicographically by their sorted element lists.
def to_text( M ):
  bases = sorted( M.bases, key = lambda b: list( elements( b ) ) )
  return 'MATROID n={} r={}\nbases={}\n'.format(
    M.n, M.r, ';'.join( format_set( b ) for b in bases ) )

def to_compact( M ):
  return '{} {} {}\n'.format( M.n, M.r, revlex_string( M ) )

def format_matroid( M, fmt = 'full' ):
  if fmt == 'compact':
    return to_compact( M )
  if fmt == 'full':
    return to_text( M )
  raise ValueError( 'unknown format {!r}'.format( fmt ) )

#-----------------------------------------------------------------------
# format_factorization
#-----------------------------------------------------------------------
# Only the full format (MATROID blocks) parses back.
def format_factorization( factorization, fmt = 'full' ):
  out = [ factorization.flavor + '\n' ]
  for factor in factorization.factors:
    out.append( format_matroid( factor, fmt ) )
  out.append( 'CHAIN={}\n'.format( factorization.chain.hex() ) )
  return ''.join( out )

#-----------------------------------------------------------------------
# parse_factorization
#-----------------------------------------------------------------------
# Returns (flavor, factors, chain) without checking the chain against
# a source matroid.
def parse_factorization( text, filename = None ):
  result  = _parse( factorization_parser(), text, filename )
  factors = [ _from_block( b ) for b in result['factors'] ]
  n       = sum( f.n for f in factors )
  try:
    chain = Flag( n, [ int( c, 16 ) for c in result['chain'] ] )
  except ValueError as e:
    raise ParseError( str( e ), filename )
  return result['flavor'], factors, chain
