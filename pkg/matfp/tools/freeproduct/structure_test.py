#=======================================================================
# structure_test.py
#=======================================================================

import pytest

from matfp.model.Matroid    import direct_sum, free, loop, point, uniform, zero
from matfp.model.exceptions import NotNested, TheoremViolation
from matfp.tools.freeproduct.constructions import free_product
from matfp.tools.freeproduct.structure     import *
from mflib.named import D, P, U23, U24, L7
from mflib.test  import random_pair

#-----------------------------------------------------------------------
# truncation and lift
#-----------------------------------------------------------------------

def test_truncation():

  assert truncation( U24() ) == uniform( 1, 4 )
  assert truncation( D() ) == uniform( 1, 4 )
  assert truncation( zero( 3 ) ) == zero( 3 )
  assert truncation_k( free( 4 ), 3 ) == uniform( 1, 4 )
  assert truncation_k( U24(), 9 ) == zero( 4 )
  assert truncation_k( D(), 0 ) == D()
  with pytest.raises( ValueError ): truncation_k( D(), -1 )

def test_truncation_keeps_loops():

  M = direct_sum( loop(), free( 2 ) )
  assert truncation( M ) == direct_sum( loop(), uniform( 1, 2 ) )

def test_lift():

  assert lift( U24() ) == uniform( 3, 4 )
  assert lift( D() ) == uniform( 3, 4 )
  assert lift_k( zero( 3 ), 2 ) == uniform( 2, 3 )
  assert lift_k( U24(), 9 ) == free( 4 )
  with pytest.raises( ValueError ): lift_k( D(), -1 )

def test_lift_and_truncation_are_dual():

  for M in [ D(), P(), U23(), direct_sum( loop(), free( 2 ) ) ]:
    assert lift( M ) == truncation( M.dual() ).dual()

def test_via_points_and_loops():

  for M in [ D(), P(), U23(), zero( 2 ), free( 2 ) ]:
    assert lift_via_point( M ) == lift( M )
    assert truncation_via_loop( M ) == truncation( M )

#-----------------------------------------------------------------------
# minors of free products
#-----------------------------------------------------------------------

def test_restriction_and_contraction():

  M, N = U23(), D()
  for U in range( 1 << 7 ):
    assert restriction_of_fp( M, N, U ) == free_product( M, N ).restrict( U )
    assert contraction_of_fp( M, N, U ) == free_product( M, N ).contract( U )

def test_minor_random( rng, samples ):

  for _ in range( samples ):
    M, N = random_pair( rng, 6 )
    n    = M.n + N.n
    V    = rng.randrange( 1 << n )
    U    = rng.randrange( 1 << n ) & V
    minor_of_fp( M, N, U, V )

def test_minor_not_nested():

  with pytest.raises( NotNested ): minor_of_fp( point(), loop(), 0b01, 0b10 )

def test_violation_carries_witness( monkeypatch ):

  from matfp.tools.freeproduct import structure
  monkeypatch.setattr( structure, 'lift_k', lambda M, i: M )
  with pytest.raises( TheoremViolation ) as e:
    structure.restriction_of_fp( point(), uniform( 1, 2 ), 0b110 )
  assert set( e.value.witness ) == { 'M', 'N', 'U', 'lhs', 'rhs' }

#-----------------------------------------------------------------------
# truncations and lifts of free products
#-----------------------------------------------------------------------

def test_identities():

  for M, N in [ ( U23(), D() ), ( D(), point() ), ( loop(), P() ),
                ( free( 2 ), zero( 2 ) ) ]:
    for i in range( 5 ):
      assert fp_truncation_identity( M, N, i )
      assert fp_lift_identity( M, N, i )

#-----------------------------------------------------------------------
# weak maps
#-----------------------------------------------------------------------

def test_weak_map_image():

  assert is_weak_map_image( D(), U24() )
  assert not is_weak_map_image( U24(), D() )
  assert is_weak_map_image( zero( 4 ), D() )
  assert not is_weak_map_image( D(), free( 3 ) )

def test_split_weak_map():

  for L in [ D(), P(), U24(), L7() ]:
    for Sp in range( 1 << L.n ):
      assert split_weak_map_holds( L, Sp )
      assert conineq_holds( L, Sp )

def test_direct_sum_and_free_product_bound():

  # M ⊕ N sits below M □ N on the same ground set
  M, N = U23(), U24()
  assert is_weak_map_image( direct_sum( M, N ), free_product( M, N ) )
