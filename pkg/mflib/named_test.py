#=======================================================================
# named_test.py
#=======================================================================

import pytest

from matfp.tools.coalgebra.coproduct import section_coefficient
from matfp.tools.factorization.factor import is_irreducible
from matfp.tools.iso.canonical import are_isomorphic
from mflib.named import *

def test_sizes():
  for name, n, r in [ ( 'I', 1, 1 ), ( 'Z', 1, 0 ), ( 'U23', 3, 2 ),
                      ( 'U24', 4, 2 ), ( 'D', 4, 2 ), ( 'P', 4, 2 ),
                      ( 'L7', 7, 4 ) ]:
    M = named( name )
    assert ( M.n, M.r ) == ( n, r )

def test_D_and_P():
  assert D().is_identically_self_dual()
  assert is_irreducible( D() )
  assert not is_irreducible( P() )
  assert P().bases == ( 0b0101, 0b0110, 0b1001, 0b1010, 0b1100 )

def test_free_products_over_D():
  assert len( point_over_D().bases ) == 8
  assert len( line_over_D().bases )  == 25
  assert line_over_D().cyclic_flats().members == ( 0, 0x07, 0x1f, 0x67, 0x7f )

def test_L7():
  assert section_coefficient( L7(), U23(), U24() ) == 0
  assert not are_isomorphic( L7(), U24() )

def test_unknown_name():
  with pytest.raises( ValueError ):
    named( 'Q8' )
