#=======================================================================
# EnumerationMetrics_test.py
#=======================================================================

import io

from matfp.tools.enumeration.Catalog            import enumerate_up_to
from matfp.tools.enumeration.EnumerationMetrics import *

def test_counters():

  metrics = EnumerationMetrics()
  enumerate_up_to( 3, metrics )

  assert metrics.levels            == [ 1, 2, 3 ]
  assert metrics.parents_per_level == [ 1, 2, 4 ]
  assert metrics.new_per_level     == [ 2, 4, 8 ]
  assert metrics.cuts_per_level[0] == 2
  assert metrics.cuts_per_level[1] == 5
  for cuts, canon in zip( metrics.cuts_per_level, metrics.canon_per_level ):
    assert cuts == canon
  assert all( s >= 0.0 for s in metrics.seconds_per_level )

def test_line_trace():

  metrics = EnumerationMetrics()
  assert metrics.line_trace() == ''

  out = io.StringIO()
  enumerate_up_to( 2, metrics, line_trace = True, out = out )
  lines = out.getvalue().splitlines()
  assert len( lines ) == 2
  assert lines[1].startswith( 'n=2' )
  assert 'classes=4' in lines[1]

def test_print_metrics():

  metrics = EnumerationMetrics()
  enumerate_up_to( 2, metrics )
  out = io.StringIO()
  metrics.print_metrics( out )
  text = out.getvalue()
  assert 'Enumeration Metrics' in text
  assert len( [ l for l in text.splitlines() if l.lstrip().startswith( '2 ' ) ] ) == 1

def test_dummy():

  out = io.StringIO()
  enumerate_up_to( 2, DummyMetrics(), line_trace = True, out = out )
  assert out.getvalue().splitlines() == [ 'n=1 classes=2', 'n=2 classes=4' ]
  DummyMetrics().print_metrics( out )
