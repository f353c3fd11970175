#=======================================================================
# incidence_test.py
#=======================================================================

from fractions import Fraction

import numpy as np
import pytest

from matfp.datatypes.FormalSum import FormalSum
from matfp.model.Matroid       import free, uniform
from matfp.model.exceptions    import SingularDiagonal, SizeMismatch
from matfp.tools.coalgebra.coproduct  import pairing
from matfp.tools.coalgebra.incidence  import *
from matfp.tools.coalgebra.weak_order import up_set_poset
from matfp.tools.iso.canonical import iso_key
from mflib.named import D, P, U23, U24

C_DPU = [ [ 1, 8, 16 ],
          [ 0, 4, 20 ],
          [ 0, 0, 24 ] ]

def test_c_matrix( catalog ):
  poset = up_set_poset( D(), catalog )
  assert c_matrix( poset, catalog ).tolist() == C_DPU
  # factor keys computed on the fly agree with the catalog's
  assert c_matrix( poset ).tolist() == C_DPU

def test_c_inverse():
  inv  = c_inverse( C_DPU )
  want = [ [ 24, -48, 24 ], [ 0, 6, -5 ], [ 0, 0, 1 ] ]
  assert inv.tolist() == [ [ Fraction( x, 24 ) for x in row ] for row in want ]
  assert np.dot( np.array( C_DPU, dtype=object ), inv ).tolist() == np.eye( 3, dtype=int ).tolist()

def test_c_inverse_errors():
  with pytest.raises( ValueError ):
    c_inverse( [ [ 1, 0 ], [ 1, 1 ] ] )
  with pytest.raises( SingularDiagonal ):
    c_inverse( [ [ 1, 1 ], [ 0, 0 ] ] )

def test_q_primitive( catalog ):
  want = FormalSum( { iso_key( D() ) : 1, iso_key( P() ) : -2, iso_key( U24() ) : 1 } )
  assert q_primitive( D(), catalog ) == want

def test_q_of_maximum( catalog ):
  # U24 is the top of its component
  assert q_primitive( U24(), catalog ) == FormalSum( { iso_key( U24() ) : Fraction( 1, 24 ) } )

def test_dual_bases( catalog ):
  Q = q_primitive( D(), catalog )
  assert pairing( Q, p_expansion( D(), catalog ) )   == 1
  assert pairing( Q, p_expansion( P(), catalog ) )   == 0
  assert pairing( Q, p_expansion( U24(), catalog ) ) == 0

def test_p_expansion( catalog ):
  assert p_expansion( D(), catalog ) == FormalSum( { iso_key( D() ) : 1 } )
  PP = p_expansion( P(), catalog )
  assert PP[ iso_key( D() ) ]   == 8
  assert PP[ iso_key( P() ) ]   == 4
  assert PP[ iso_key( U24() ) ] == 0

def test_initial_bounds( catalog ):
  for L in catalog.matroids( 4 ):
    for M in catalog.matroids( 2 ):
      for N in catalog.matroids( 2 ):
        assert initial_bounds_check( L, M, N )

def test_initial_bounds_sizes():
  with pytest.raises( SizeMismatch ):
    initial_bounds_check( D(), U23(), free( 2 ) )
