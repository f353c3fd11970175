#=======================================================================
# SetFamily_test.py
#=======================================================================

import pytest

from matfp.datatypes.SetFamily import SetFamily, Flag

def test_members_sorted_and_deduplicated():

  F = SetFamily( 3, [ 4, 1, 4, 0 ] )
  assert F.members == ( 0, 1, 4 )
  assert len( F ) == 3
  assert 1 in F and 2 not in F
  assert F == SetFamily( 3, [ 0, 1, 4 ] )
  assert hash( F ) == hash( SetFamily( 3, [ 0, 4, 1 ] ) )
  with pytest.raises( ValueError ): SetFamily( 2, [ 4 ] )

def test_lattice_closure():

  F = SetFamily( 3, [ 0b001, 0b010 ] ).lattice_closure()
  assert F.members == ( 0b000, 0b001, 0b010, 0b011, 0b111 )
  assert F.is_sublattice()
  assert not SetFamily( 3, [ 0b001, 0b010 ] ).is_sublattice()

def test_pinchpoints():

  # 0 < {0} < {0,1},{0,2} < S: only 0, {0} and S are comparable to all
  F = SetFamily( 3, [ 0b000, 0b001, 0b011, 0b101, 0b111 ] )
  assert F.pinchpoints().chain == ( 0b000, 0b001, 0b111 )
  with pytest.raises( ValueError ): SetFamily( 3, [ 0b001 ] ).pinchpoints()

def test_covers_and_interval():

  F = SetFamily( 3, [ 0b000, 0b001, 0b011, 0b101, 0b111 ] )
  assert F.covers( 0b001 )  == [ 0b011, 0b101 ]
  assert F.covers( 0b111 )  == []
  assert F.interval( 0b001, 0b111 ) == [ 0b001, 0b011, 0b101, 0b111 ]

def test_flag():

  f = Flag( 3, [ 0, 0b010, 0b111 ] )
  assert len( f ) == 3
  assert f[1] == 0b010
  assert f.blocks() == [ 0b010, 0b101 ]
  assert f.hex() == '0x0,0x2,0x7'
  assert Flag( 3, [ 0, 0b010, 0b011, 0b111 ] ).refines( f )
  assert not f.refines( Flag( 3, [ 0, 0b001, 0b111 ] ) )

def test_flag_errors():

  with pytest.raises( ValueError ): Flag( 3, [ 0b001, 0b111 ] )
  with pytest.raises( ValueError ): Flag( 3, [ 0, 0b011 ] )
  with pytest.raises( ValueError ): Flag( 3, [ 0, 0b011, 0b100, 0b111 ] )
  with pytest.raises( ValueError ): Flag( 3, [ 0, 0b011, 0b011, 0b111 ] )

  # the empty ground set has the one-entry flag
  assert Flag( 0, [ 0 ] ).blocks() == []
