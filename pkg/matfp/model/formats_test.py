#=======================================================================
# formats_test.py
#=======================================================================

import pytest

from matfp.model.Matroid    import empty, uniform
from matfp.model.exceptions import ParseError, MatroidError, ExchangeFails
from matfp.model.formats    import *
from matfp.tools.factorization.factor import factor_irreducible, primary_factorization
from mflib.named import D, P

D_TEXT    = 'MATROID n=4 r=2\nbases=0,2;0,3;1,2;1,3\n'
D_COMPACT = '4 2 011110\n'

def test_to_text():

  assert to_text( D() ) == D_TEXT
  assert to_text( empty() ) == 'MATROID n=0 r=0\nbases=-\n'
  # element-list order, not mask order
  assert to_text( P() ) == 'MATROID n=4 r=2\nbases=0,2;0,3;1,2;1,3;2,3\n'

def test_to_compact():

  assert revlex_string( D() ) == '011110'
  assert to_compact( D() ) == D_COMPACT
  assert to_compact( uniform( 0, 3 ) ) == '3 0 1\n'

def test_parse_both_formats():

  assert parse_matroid( D_TEXT )    == D()
  assert parse_matroid( D_COMPACT ) == D()
  assert parse_matroid( '  MATROID n=2 r=0\nbases=-' ) == uniform( 0, 2 )
  assert parse_matroid( to_text( P() ) ) == P()
  assert parse_matroid( to_compact( P() ) ) == P()

def test_format_matroid():

  assert format_matroid( D(), 'full' )    == D_TEXT
  assert format_matroid( D(), 'compact' ) == D_COMPACT
  with pytest.raises( ValueError ): format_matroid( D(), 'xml' )

def test_read_matroid( tmpdir ):

  path = tmpdir.join( 'd.mat' )
  path.write( D_COMPACT )
  assert read_matroid( str( path ) ) == D()

#-----------------------------------------------------------------------
# errors
#-----------------------------------------------------------------------

def test_syntax_error_location():

  with pytest.raises( ParseError ) as e:
    parse_matroid( 'MATROID n=4 r=2\nbases=0,2;x', 'd.mat' )
  assert e.value.filename == 'd.mat'
  assert e.value.lineno   == 2
  assert str( e.value ).startswith( 'd.mat:2:' )

def test_compact_length_error():

  with pytest.raises( ParseError ): parse_matroid( '4 2 0111' )
  with pytest.raises( ParseError ): parse_matroid( '2 3 1' )

# rejected from the header alone, before any subsets are listed
def test_compact_size_limit():

  with pytest.raises( ParseError ) as e:
    parse_matroid( '40 20 0\n' )
  assert 'exceeds 16' in str( e.value )
  with pytest.raises( ParseError ): parse_matroid( '16 8 0\n' )

def test_validation_errors_pass_through():

  with pytest.raises( ExchangeFails ):
    parse_matroid( 'MATROID n=4 r=2\nbases=0,1;2,3' )
  with pytest.raises( MatroidError ):
    parse_matroid( 'MATROID n=2 r=1\nbases=0;5' )

#-----------------------------------------------------------------------
# factorizations
#-----------------------------------------------------------------------

def test_factorization_text():

  f    = factor_irreducible( P() )
  text = format_factorization( f )
  assert text.startswith( 'IRREDUCIBLE\nMATROID n=1 r=1\n' )
  assert text.endswith( 'CHAIN=0x0,0x1,0x3,0x7,0xf\n' )

  flavor, factors, chain = parse_factorization( text )
  assert flavor  == 'IRREDUCIBLE'
  assert factors == f.factors
  assert chain   == f.chain

def test_factorization_text_single_factor():

  f = primary_factorization( D() )
  flavor, factors, chain = parse_factorization( format_factorization( f ) )
  assert flavor == 'PRIMARY_FACTORIZATION'
  assert factors == [ D() ]
  assert chain.chain == ( 0, 0b1111 )

def test_factorization_bad_chain():

  text = 'CUSTOM\nMATROID n=1 r=1\nbases=0\nCHAIN=0x0,0x3\n'
  with pytest.raises( ParseError ): parse_factorization( text )
