#=======================================================================
# matfp_cli_test.py
#=======================================================================

import io
import os

import pytest

from matfp.model.Matroid     import free, loop, point, uniform
from matfp.model.exceptions  import TheoremViolation
from matfp.model.formats     import parse_matroid, parse_factorization, to_compact
from matfp.tools.cli         import matfp_cli
from matfp.tools.cli.matfp_cli import run, serialize_witness
from matfp.tools.enumeration.Catalog import read_catalog
from matfp.tools.verification.suites import Check
from mflib.named import D, P

#-----------------------------------------------------------------------
# Helpers
#-----------------------------------------------------------------------

@pytest.fixture
def files( tmpdir ):
  'Writes the named matroids into tmpdir and returns their paths.'
  paths = {}
  for name, M in [ ( 'i', point() ), ( 'z', loop() ), ( 'd', D() ),
                   ( 'p', P() ), ( 'u12', uniform( 1, 2 ) ), ( 'u22', free( 2 ) ) ]:
    path = tmpdir.join( name + '.mat' )
    path.write( to_compact( M ) )
    paths[ name ] = str( path )
  return paths

def call( *argv ):
  out = io.StringIO()
  err = io.StringIO()
  code = run( list( argv ), out, err )
  return code, out.getvalue(), err.getvalue()

#-----------------------------------------------------------------------
# Matroid verbs
#-----------------------------------------------------------------------

def test_freeprod( files ):
  code, out, _ = call( '--format', 'compact', 'freeprod', files['i'], files['d'] )
  assert code == 0
  n, r, s = out.split()
  assert ( n, r ) == ( '5', '3' )
  assert s.count( '1' ) == 8

def test_freeprod_full( files ):
  code, out, _ = call( 'freeprod', files['i'], files['z'] )
  assert code == 0
  assert parse_matroid( out ) == uniform( 1, 2 )

def test_dual( files ):
  code, out, _ = call( '--format', 'compact', 'dual', files['d'] )
  assert ( code, out ) == ( 0, '4 2 011110\n' )

def test_format_after_verb( files ):
  assert call( 'dual', files['d'], '--format', 'compact' )[:2] == ( 0, '4 2 011110\n' )
  _, out, _ = call( '--format', 'compact', 'dual', files['d'], '--format', 'full' )
  assert out.startswith( 'MATROID n=4' )
  assert call( 'dual', files['d'], '--format', 'wide' )[0] == 2

def test_minor( files ):
  code, out, _ = call( '--format', 'compact', 'minor', files['d'],
                       '--restrict', '0,1,2', '--contract', '0' )
  assert ( code, out ) == ( 0, '2 1 01\n' )

def test_factor( files ):
  code, out, _ = call( 'factor', files['p'] )
  assert code == 0
  flavor, factors, chain = parse_factorization( out )
  assert flavor == 'IRREDUCIBLE'
  assert [ f.n for f in factors ] == [ 1, 1, 1, 1 ]

  code, out, _ = call( 'factor', files['d'], '--primary' )
  assert code == 0
  assert out.startswith( 'PRIMARY_FACTORIZATION\n' )

def test_irreducible( files ):
  assert call( 'irreducible', files['d'] )[:2] == ( 0, 'true\n' )
  assert call( 'irreducible', files['p'] )[:2] == ( 0, 'false\n' )

#-----------------------------------------------------------------------
# Census verbs
#-----------------------------------------------------------------------

def test_enumerate( tmpdir ):
  path = str( tmpdir.join( 'catalog.txt' ) )
  code, out, _ = call( 'enumerate', '--max-n', '3', '--out', path )
  assert code == 0
  assert out == 'm 1 2 4 8\ni 0 2 0 0\n'
  assert read_catalog( path ).counts() == [ 1, 2, 4, 8 ]

def test_enumerate_metrics():
  code, _, err = call( '--metrics', '--verbose', 'enumerate', '--max-n', '2' )
  assert code == 0
  assert 'Enumeration Metrics' in err
  assert 'n=2' in err

def test_tables():
  code, out, _ = call( 'tables', '--max-n', '4' )
  assert code == 0
  lines = out.splitlines()
  assert lines[:3] == [ 'n 0 1 2 3 4', 'm 1 2 4 8 17', 'i 0 2 0 0 1' ]
  assert 'r=2 1 3 7' in lines
  assert 'r=2 0 0 1' in lines
  assert lines[-1] == 'gf-check PASS'

def test_tables_from_catalog( tmpdir ):
  path = str( tmpdir.join( 'catalog.txt' ) )
  assert call( 'enumerate', '--max-n', '4', '--out', path )[0] == 0

  code, out, _ = call( 'tables', '--max-n', '3', '--catalog', path )
  assert code == 0
  assert out.splitlines()[1] == 'm 1 2 4 8'

  code, _, err = call( 'tables', '--max-n', '5', '--catalog', path )
  assert code == 2
  assert err.startswith( 'error:' )

#-----------------------------------------------------------------------
# verify
#-----------------------------------------------------------------------

def test_verify( tmpdir ):
  code, out, _ = call( 'verify', '--suite', 'factorization', '--max-n', '3',
                       '--samples', '2', '--out-dir', str( tmpdir ) )
  assert code == 0
  assert all( line.startswith( 'PASS ' ) for line in out.splitlines() )
  assert not tmpdir.listdir( lambda p: p.basename.startswith( 'counterexample' ) )

def test_verify_failure( tmpdir, monkeypatch ):
  def fake_suite( name, **kwargs ):
    return [ Check( 'fake', False, 3, [ { 'M' : D(), 'S' : 5 } ] ) ]
  monkeypatch.setattr( matfp_cli, 'run_suite', fake_suite )

  code, out, _ = call( 'verify', '--suite', 'coalgebra', '--out-dir', str( tmpdir ) )
  assert code == 3
  assert out == 'FAIL fake (3 cases)\n'
  text = tmpdir.join( 'counterexample-fake-0.mat' ).read()
  assert text.startswith( '# M\nMATROID n=4 r=2\n' )
  assert '# S = 0x5\n' in text

#-----------------------------------------------------------------------
# coalg
#-----------------------------------------------------------------------

def test_coalg( files, tmpdir ):
  code, out, _ = call( 'coalg', '--op', 'coproduct', '--args', files['u22'] )
  assert code == 0
  assert out == '1*(0:0:1,2:2:1) + 2*(1:1:1,1:1:1) + 1*(2:2:1,0:0:1)\n'

  code, out, _ = call( 'coalg', '--op', 'section', '--args',
                       files['d'], files['u12'], files['u12'] )
  assert ( code, out ) == ( 0, '2\n' )

  path = str( tmpdir.join( 'catalog.txt' ) )
  assert call( 'enumerate', '--max-n', '4', '--out', path )[0] == 0
  code, out, _ = call( 'coalg', '--op', 'q', '--args', files['d'], '--catalog', path )
  assert code == 0
  assert out.count( '*' ) == 3
  assert '-2*' in out

def test_coalg_needs_a_matroid():
  code, _, err = call( 'coalg', '--op', 'coproduct' )
  assert code == 2

#-----------------------------------------------------------------------
# Errors
#-----------------------------------------------------------------------

def test_errors( tmpdir ):
  bad = tmpdir.join( 'bad.mat' )
  bad.write( '4 2 100001\n' )
  assert call( 'dual', str( bad ) )[0] == 2

  garbled = tmpdir.join( 'garbled.mat' )
  garbled.write( 'MATROID n=x\n' )
  code, _, err = call( 'dual', str( garbled ) )
  assert code == 2
  assert 'garbled.mat' in err

  assert call( 'dual', str( tmpdir.join( 'missing.mat' ) ) )[0] == 2

  huge = tmpdir.join( 'huge.mat' )
  huge.write( '40 20 0\n' )
  code, _, err = call( 'dual', str( huge ) )
  assert code == 2
  assert 'huge.mat' in err

def test_usage_errors():
  assert call()[0] == 2
  assert call( 'tables' )[0] == 2
  assert call( '--format', 'wide', 'dual', 'x' )[0] == 2

def test_theorem_violation( files, monkeypatch ):
  def boom( M ):
    raise TheoremViolation( 'boom', { 'M' : M } )
  monkeypatch.setattr( matfp_cli, 'is_irreducible', boom )
  code, out, err = call( 'irreducible', files['d'] )
  assert code == 3
  assert out == ''
  assert err.startswith( 'theorem violation: boom\n# M\nMATROID n=4' )

def test_serialize_witness():
  text = serialize_witness( { 'M' : point(), 'mask' : 6, 'tag' : 'x', 'ok' : True } )
  assert text == ( '# M\nMATROID n=1 r=1\nbases=0\n'
                   '# mask = 0x6\n'
                   '# ok = True\n'
                   '# tag = x\n' )
