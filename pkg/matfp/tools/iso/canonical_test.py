#=======================================================================
# canonical_test.py
#=======================================================================

import itertools

import pytest

from matfp.model.Matroid       import direct_sum, free, uniform, zero
from matfp.tools.iso.canonical import *
from mflib.named import D, P, U24, L7
from mflib.test  import naive_isomorphic, random_pair

def test_key_is_relabelling_invariant():

  for M in [ D(), P(), L7(), direct_sum( uniform( 1, 3 ), free( 2 ) ) ]:
    key = canonical_key( M )
    for perm in itertools.islice( itertools.permutations( range( M.n ) ), 40 ):
      assert canonical_key( M.relabel( perm ) ) == key

def test_canonical_form():

  M       = P().relabel( [ 3, 1, 0, 2 ] )
  C, perm = canonical_form( M )
  assert M.relabel( perm ) == C
  assert canonical_key( C ) == canonical_key( M )
  assert iso_key( C ).matroid() == C

def test_trivial_ranks():

  assert str( iso_key( free( 3 ) ) ) == '3:3:1'
  assert str( iso_key( zero( 2 ) ) ) == '2:0:1'
  assert str( iso_key( uniform( 0, 0 ) ) ) == '0:0:1'

def test_distinguishes_classes():

  assert iso_key( D() ) != iso_key( P() )
  assert iso_key( D() ) != iso_key( U24() )
  assert not are_isomorphic( D(), U24() )
  assert are_isomorphic( D(), D().relabel( [ 2, 3, 0, 1 ] ) )

def test_agrees_with_naive_isomorphism( rng ):

  for _ in range( 30 ):
    M, _ = random_pair( rng, 5 )
    N, _ = random_pair( rng, 5 )
    if M.n != N.n:
      continue
    assert are_isomorphic( M, N ) == naive_isomorphic( M, N )

def test_profiles_are_invariants():

  M = P()
  prof = invariant_profile( M )
  assert prof[0] == prof[1]
  assert prof[2] == prof[3]
  assert prof[0] != prof[2]

  # the two parallel elements of P are twins, as are the two free ones
  smaller = twin_masks( M, refined_profile( M ) )
  assert smaller == [ 0, 0b0001, 0, 0b0100 ]

def test_iso_key_text():

  key = iso_key( D() )
  assert IsoKey.parse( str( key ) ) == key
  assert IsoKey.parse( '2:1:11' ) == IsoKey( 2, 1, '11' )
  with pytest.raises( ValueError ): IsoKey.parse( '2:1:111' )
  with pytest.raises( ValueError ): IsoKey.parse( '2:3:1' )
  with pytest.raises( ValueError ): IsoKey.parse( 'x:1:11' )
  with pytest.raises( ValueError ): IsoKey.parse( '2:1:12' )
  with pytest.raises( ValueError ): IsoKey.parse( '40:20:0' )
  with pytest.raises( ValueError ): IsoKey.parse( '16:8:0' )

#-----------------------------------------------------------------------
# sweeps
#-----------------------------------------------------------------------

def test_random_relabellings( rng ):

  for M in [ D(), P(), U24(), L7() ]:
    key = iso_key( M )
    for _ in range( 200 ):
      perm = rng.sample( range( M.n ), M.n )
      assert iso_key( M.relabel( perm ) ) == key

def test_catalog_pairs( catalog ):

  for n in range( 6 ):
    Ms = catalog.matroids( n )
    for M, N in itertools.combinations_with_replacement( Ms, 2 ):
      same = iso_key( M ) == iso_key( N )
      assert same == ( M is N )
      assert are_isomorphic( M, N ) == same == naive_isomorphic( M, N )

def test_catalog_pairs_distinct( catalog ):

  for n in range( catalog.max_n + 1 ):
    keys = [ iso_key( M ) for M in catalog.matroids( n ) ]
    assert len( set( keys ) ) == len( keys )
    assert keys == catalog.level( n )
