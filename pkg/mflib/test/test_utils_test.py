#=========================================================================
# test_utils_test.py
#=========================================================================

import pytest

from matfp.model.Matroid import uniform
from mflib.named         import D
from mflib.test          import mk_test_case_table, naive_isomorphic

def test_case_table_fields():

  table = mk_test_case_table([
    ( "M rank" ),
    [ "line", uniform( 2, 3 ), 2 ],
    [ "D",    D(),             2 ],
  ])
  assert table['ids'] == [ 'line', 'D' ]
  assert table['argnames'] == 'test_params'
  assert [ case.rank for case in table['argvalues'] ] == [ 2, 2 ]
  assert table['argvalues'][1].M == D()

def test_case_table_list_header():

  table = mk_test_case_table([ [ 'n', 'r' ], [ 'u23', 3, 2 ] ])
  assert table['argvalues'][0]._fields == ( 'n', 'r' )

def test_case_table_short_row():

  with pytest.raises( ValueError ):
    mk_test_case_table([ ( "M rank" ), [ "line", uniform( 2, 3 ) ] ])

def test_naive_isomorphic():

  assert naive_isomorphic( D(), D().relabel( [ 2, 3, 0, 1 ] ) )
  assert not naive_isomorphic( D(), uniform( 2, 4 ) )
