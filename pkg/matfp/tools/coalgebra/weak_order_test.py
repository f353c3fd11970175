#=======================================================================
# weak_order_test.py
#=======================================================================

import pytest

from matfp.model.Matroid    import direct_sum, free, uniform, zero
from matfp.model.exceptions import SizeMismatch
from matfp.tools.coalgebra.weak_order import *
from matfp.tools.freeproduct.constructions import free_product
from matfp.tools.iso.canonical import iso_key
from mflib.named import D, P, U23, U24, L7

def test_weak_leq():

  assert weak_leq( zero( 3 ), free( 3 ) )
  assert not weak_leq( free( 3 ), zero( 3 ) )
  assert weak_leq( D(), P() )
  assert not weak_leq( P(), D() )
  assert weak_leq( P(), U24() )
  assert weak_leq( D(), D().relabel( [ 2, 3, 0, 1 ] ) )

def test_weak_leq_needs_relabelling():
  # P with its parallel pair moved onto elements 1 and 2
  Q = P().relabel( [ 1, 2, 0, 3 ] )
  assert weak_leq( D(), Q )

def test_weak_leq_sizes():
  with pytest.raises( SizeMismatch ):
    weak_leq( free( 2 ), free( 3 ) )

def test_bounds_around_L7():
  assert weak_leq( direct_sum( U23(), U24() ), L7() )
  assert weak_leq( L7(), free_product( U23(), U24() ) )

#-----------------------------------------------------------------------
# WeakPoset
#-----------------------------------------------------------------------

def test_component_poset( catalog ):

  poset = component_poset( catalog, 2, 2 )
  assert len( poset ) == 7
  assert poset.classes[0]  == iso_key( direct_sum( free( 2 ), zero( 2 ) ) )
  assert poset.classes[-1] == iso_key( uniform( 2, 4 ) )

  # the listing is a linear extension
  for i, a in enumerate( poset ):
    for j, b in enumerate( poset ):
      if poset.leq_keys( a, b ):
        assert i <= j

def test_up_set( catalog ):

  keys = [ iso_key( M ) for M in [ D(), P(), U24() ] ]
  assert up_set_poset( D(), catalog ).classes == keys

  poset = component_poset( catalog, 2, 2 )
  assert poset.up_set( keys[0] ) == keys
  assert poset.index( keys[2] ) == 6

def test_poset_single_size():
  with pytest.raises( SizeMismatch ):
    WeakPoset( [ iso_key( free( 1 ) ), iso_key( free( 2 ) ) ] )
