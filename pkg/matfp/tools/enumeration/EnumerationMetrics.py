#=======================================================================
# EnumerationMetrics.py
#=======================================================================

from __future__ import print_function

import sys
import time

#-----------------------------------------------------------------------
# EnumerationMetrics
#-----------------------------------------------------------------------
# Per-level counters for the single-element extension sweep. Useful for
# seeing where enumeration time goes (cuts per parent, how many
# candidates collapse onto already known classes).
class EnumerationMetrics( object ):

  #---------------------------------------------------------------------
  # __init__
  #---------------------------------------------------------------------
  def __init__( self ):
    self.levels              = []
    self.parents_per_level   = []
    self.cuts_per_level      = []
    self.canon_per_level     = []
    self.new_per_level       = []
    self.seconds_per_level   = []
    self._start              = None

  #---------------------------------------------------------------------
  # start_level
  #---------------------------------------------------------------------
  # Should be called before the first parent of level n is extended.
  def start_level( self, n ):
    self.levels            += [ n ]
    self.parents_per_level += [ 0 ]
    self.cuts_per_level    += [ 0 ]
    self.canon_per_level   += [ 0 ]
    self.new_per_level     += [ 0 ]
    self.seconds_per_level += [ 0.0 ]
    self._start             = time.perf_counter()

  def incr_parents( self ):
    self.parents_per_level[-1] += 1

  def incr_cuts( self, count = 1 ):
    self.cuts_per_level[-1] += count

  def incr_canonicalizations( self ):
    self.canon_per_level[-1] += 1

  def incr_new_classes( self ):
    self.new_per_level[-1] += 1

  #---------------------------------------------------------------------
  # end_level
  #---------------------------------------------------------------------
  def end_level( self ):
    self.seconds_per_level[-1] = time.perf_counter() - self._start

  #---------------------------------------------------------------------
  # line_trace
  #---------------------------------------------------------------------
  # One line describing the most recent level.
  def line_trace( self ):
    if not self.levels:
      return ''
    return 'n={:<2} parents={:<5} cuts={:<7} canon={:<7} classes={:<5} {:8.2f}s'.format(
      self.levels[-1], self.parents_per_level[-1], self.cuts_per_level[-1],
      self.canon_per_level[-1], self.new_per_level[-1],
      self.seconds_per_level[-1] )

  #---------------------------------------------------------------------
  # print_metrics
  #---------------------------------------------------------------------
  def print_metrics( self, out = None ):
    out = out or sys.stdout
    print( "-"*72, file=out )
    print( "Enumeration Metrics", file=out )
    print( "-"*72, file=out )
    print( file=out )
    print( "level  parents     cuts    canon  classes   seconds", file=out )
    print( "-----  -------  -------  -------  -------  --------", file=out )
    for i in range( len( self.levels ) ):
      print( "{:5}  {:7}  {:7}  {:7}  {:7}  {:8.2f}".format(
               self.levels[i], self.parents_per_level[i],
               self.cuts_per_level[i], self.canon_per_level[i],
               self.new_per_level[i], self.seconds_per_level[i] ), file=out )
    print( "-"*72, file=out )

#-----------------------------------------------------------------------
# DummyMetrics
#-----------------------------------------------------------------------
# Same interface as EnumerationMetrics but collects nothing; swapped in
# when collection is disabled so callers never test for it.
class DummyMetrics( object ):

  def start_level( self, n ): pass
  def incr_parents( self ): pass
  def incr_cuts( self, count = 1 ): pass
  def incr_canonicalizations( self ): pass
  def incr_new_classes( self ): pass
  def end_level( self ): pass
  def line_trace( self ): return ''
  def print_metrics( self, out = None ): pass
