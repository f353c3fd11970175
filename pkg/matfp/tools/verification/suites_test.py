#=======================================================================
# suites_test.py
#=======================================================================

import pytest

from matfp.model.Matroid import free, loop, point, uniform
from matfp.tools.enumeration.Catalog import enumerate_up_to
from matfp.tools.verification.suites import *
from mflib.named import D, P, U23

@pytest.fixture(scope="module")
def small_catalog():
  return enumerate_up_to( 3 )

@pytest.mark.parametrize( 'name', SUITE_NAMES )
def test_suite_passes( small_catalog, name ):
  checks = run_suite( name, samples = 4, seed = 7, cat = small_catalog )
  assert checks
  for check in checks:
    assert check.passed, check.name
    assert check.cases > 0
    assert check.failures == []

def test_unknown_suite():
  with pytest.raises( ValueError ):
    run_suite( 'nonsense' )

def test_run_property_caps_witnesses():
  cases = [ ( i, ) for i in range( 12 ) ]
  check = run_property( 'odd', lambda i: { 'i' : i } if i % 2 else None, cases )
  assert check == Check( 'odd', False, 12, [ { 'i' : i } for i in ( 1, 3, 5, 7, 9 ) ] )
  assert len( check.failures ) == MAX_WITNESSES

def test_case_generators( small_catalog, rng ):
  pairs = catalog_pairs( small_catalog, 2 )
  # classes on 0, 1 and 2 elements: 1 + 2 + 4
  assert len( pairs ) == 1*7 + 2*3 + 4*1
  assert all( M.n + N.n <= 2 for M, N in pairs )

  for M, N in random_pairs( rng, 5, 3, 4 ):
    assert 3 <= M.n + N.n <= 4

  assert len( catalog_triples( small_catalog, 1 ) ) == 1 + 3*2

def test_properties_on_named():
  assert constructions_agree( D(), point() ) is None
  assert cyclic_flats_agree( P(), loop() ) is None
  assert product_duality( uniform( 1, 2 ), D() ) is None
  assert product_duality( U23(), D() ) is None
  assert product_duality( P(), loop() ) is None
  assert associativity( point(), loop(), free( 2 ) ) is None
  assert factorization_reconstructs( P() ) is None
  assert irreducible_dual( D() ) is None
  assert cancellation( D(), point() ) is None
  assert coproduct_mass( D() ) is None
  assert extremality( D() ) is None
