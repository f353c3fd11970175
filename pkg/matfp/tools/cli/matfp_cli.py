#=======================================================================
# matfp_cli.py
#=======================================================================
# Command line front end.
#
#   matfp freeprod a.mat b.mat
#   matfp minor m.mat --restrict 0,1,2 --contract 0
#   matfp factor d.mat --primary
#   matfp enumerate --max-n 6 --out catalog.txt
#   matfp tables --max-n 7
#   matfp verify --suite crypto --samples 100 --seed 7
#   matfp coalg --op section --args l.mat m.mat n.mat
#
# Exit status: 0 on success, 2 on bad input (validation, parse and
# usage errors), 3 when a checked theorem fails.

from __future__ import print_function

import argparse
import functools
import os
import sys

from matfp.datatypes.helpers import parse_set
from matfp.model.Matroid     import Matroid
from matfp.model.exceptions  import MatroidError, ParseError, TheoremViolation
from matfp.model.formats     import format_matroid, format_factorization, read_matroid, to_text
from matfp.tools.coalgebra.coproduct import coproduct, multisection
from matfp.tools.coalgebra.incidence import q_primitive
from matfp.tools.enumeration.Catalog import (
  Catalog, counts_by_rank_nullity, enumerate_up_to, read_catalog,
  verify_gf, write_catalog,
)
from matfp.tools.enumeration.EnumerationMetrics import EnumerationMetrics, DummyMetrics
from matfp.tools.factorization.factor import (
  chain_factorization, factor_irreducible, is_irreducible, primary_factorization,
)
from matfp.tools.freeproduct.constructions import multi_free_product
from matfp.tools.verification.suites       import SUITE_NAMES, run_suite

FORMATS = ( 'compact', 'full' )

#-----------------------------------------------------------------------
# serialize_witness
#-----------------------------------------------------------------------
# Matroids become MATROID blocks under a "# name" line; everything else
# is written as a "# name = value" comment.
def serialize_witness( witness ):
  out = []
  for name in sorted( witness ):
    value = witness[ name ]
    if isinstance( value, Matroid ):
      out.append( '# {}\n{}'.format( name, to_text( value ) ) )
    elif isinstance( value, int ) and not isinstance( value, bool ):
      out.append( '# {} = {:#x}\n'.format( name, value ) )
    else:
      out.append( '# {} = {}\n'.format( name, value ) )
  return ''.join( out )

#-----------------------------------------------------------------------
# _set_arg
#-----------------------------------------------------------------------
def _set_arg( text ):
  try:
    return parse_set( text )
  except ValueError as e:
    raise argparse.ArgumentTypeError( str( e ) )

#=======================================================================
# Verbs
#=======================================================================

def _freeprod( args, out ):
  M = multi_free_product( read_matroid( p ) for p in args.files )
  out.write( format_matroid( M, args.format ) )

def _dual( args, out ):
  out.write( format_matroid( read_matroid( args.file ).dual(), args.format ) )

def _minor( args, out ):
  M = read_matroid( args.file )
  B = M.full if args.restrict is None else args.restrict
  out.write( format_matroid( M.minor( args.contract, B ), args.format ) )

def _factor( args, out ):
  M = read_matroid( args.file )
  if M.n == 0:
    result = chain_factorization( M, [ 0 ] )
  elif args.primary:
    result = primary_factorization( M )
  else:
    result = factor_irreducible( M )
  out.write( format_factorization( result, args.format ) )

def _irreducible( args, out ):
  print( 'true' if is_irreducible( read_matroid( args.file ) ) else 'false', file=out )

#-----------------------------------------------------------------------
# _catalog
#-----------------------------------------------------------------------
def _metrics( args ):
  return EnumerationMetrics() if args.metrics else DummyMetrics()

def _catalog( args, max_n, err ):
  if getattr( args, 'catalog', None ):
    cat = read_catalog( args.catalog )
    cat.require( max_n )
    return Catalog( max_n, { k : v for k, v in cat.classes.items() if k.n <= max_n } )
  metrics = _metrics( args )
  cat     = enumerate_up_to( max_n, metrics, line_trace = args.verbose, out = err )
  metrics.print_metrics( err )
  return cat

def _enumerate( args, out, err ):
  cat = _catalog( args, args.max_n, err )
  if args.out:
    write_catalog( cat, args.out )
  print( 'm ' + ' '.join( str( c ) for c in cat.counts() ), file=out )
  print( 'i ' + ' '.join( str( c ) for c in cat.irreducible_counts() ), file=out )

#-----------------------------------------------------------------------
# _tables
#-----------------------------------------------------------------------
# Class counts by size as three rows (n, m_n, i_n), then one grid per count
# with rank down and nullity across.
def _tables( args, out, err ):
  cat  = _catalog( args, args.max_n, err )
  size = cat.max_n
  print( 'n ' + ' '.join( str( n ) for n in range( size + 1 ) ), file=out )
  print( 'm ' + ' '.join( str( c ) for c in cat.counts() ), file=out )
  print( 'i ' + ' '.join( str( c ) for c in cat.irreducible_counts() ), file=out )
  m, i = counts_by_rank_nullity( cat )
  for label, grid in ( ( 'm_{r,k}', m ), ( 'i_{r,k}', i ) ):
    print( file=out )
    print( label, file=out )
    for r in range( size + 1 ):
      row = [ str( grid[ ( r, k ) ] ) for k in range( size + 1 - r ) ]
      print( 'r={} '.format( r ) + ' '.join( row ), file=out )
  print( file=out )
  print( 'gf-check {}'.format( 'PASS' if verify_gf( cat ) else 'FAIL' ), file=out )

#-----------------------------------------------------------------------
# _verify
#-----------------------------------------------------------------------
def _verify( args, out ):
  checks = run_suite( args.suite, samples = args.samples, seed = args.seed,
                      max_n = args.max_n )
  failed = False
  for check in checks:
    if check.passed:
      print( 'PASS {} ({} cases)'.format( check.name, check.cases ), file=out )
      continue
    failed = True
    print( 'FAIL {} ({} cases)'.format( check.name, check.cases ), file=out )
    for index, witness in enumerate( check.failures ):
      path = os.path.join( args.out_dir,
                           'counterexample-{}-{}.mat'.format( check.name, index ) )
      with open( path, 'w' ) as f:
        f.write( serialize_witness( witness ) )
  return 3 if failed else 0

#-----------------------------------------------------------------------
# _coalg
#-----------------------------------------------------------------------
def _coalg( args, out, err ):
  ms = [ read_matroid( p ) for p in args.args ]
  if not ms:
    raise MatroidError( 'coalg needs at least one matroid file' )
  if args.op == 'coproduct':
    print( coproduct( ms[0] ), file=out )
  elif args.op == 'section':
    print( multisection( ms[0], ms[1:] ), file=out )
  else:
    cat = _catalog( args, ms[0].n, err )
    print( q_primitive( ms[0], cat ), file=out )

#=======================================================================
# Parser
#=======================================================================

def build_parser():
  p = argparse.ArgumentParser( prog = 'matfp',
        description = 'Free products, factorization and census of matroids.' )
  p.add_argument( '--format', choices = FORMATS, default = 'full' )
  p.add_argument( '--verbose', action = 'store_true',
                  help = 'line traces on stderr' )
  p.add_argument( '--metrics', action = 'store_true',
                  help = 'enumeration metrics on stderr' )
  sub = p.add_subparsers( dest = 'verb', metavar = 'verb' )
  sub.required = True

  # --format is also accepted after the verb; it only overrides the
  # global value when given there.
  fmt = argparse.ArgumentParser( add_help = False )
  fmt.add_argument( '--format', choices = FORMATS, default = argparse.SUPPRESS )
  sub_parser = functools.partial( sub.add_parser, parents = [ fmt ] )

  s = sub_parser( 'freeprod', help = 'free product of the given matroids' )
  s.add_argument( 'files', nargs = '+' )

  s = sub_parser( 'dual' )
  s.add_argument( 'file' )

  s = sub_parser( 'minor' )
  s.add_argument( 'file' )
  s.add_argument( '--restrict', type = _set_arg, default = None )
  s.add_argument( '--contract', type = _set_arg, default = 0 )

  s = sub_parser( 'factor' )
  s.add_argument( 'file' )
  g = s.add_mutually_exclusive_group()
  g.add_argument( '--primary', action = 'store_true' )
  g.add_argument( '--irreducible', action = 'store_true' )

  s = sub_parser( 'irreducible' )
  s.add_argument( 'file' )

  s = sub_parser( 'enumerate' )
  s.add_argument( '--max-n', type = int, required = True )
  s.add_argument( '--out', default = None )

  s = sub_parser( 'tables' )
  s.add_argument( '--max-n', type = int, required = True )
  s.add_argument( '--catalog', default = None )

  s = sub_parser( 'verify' )
  s.add_argument( '--suite', choices = SUITE_NAMES, required = True )
  s.add_argument( '--samples', type = int, default = 20 )
  s.add_argument( '--seed', type = lambda x: int( x, 0 ), default = 0xfeed )
  s.add_argument( '--max-n', type = int, default = 4 )
  s.add_argument( '--out-dir', default = '.' )

  s = sub_parser( 'coalg' )
  s.add_argument( '--op', choices = ( 'coproduct', 'section', 'q' ), required = True )
  s.add_argument( '--args', nargs = '+', default = [] )
  s.add_argument( '--catalog', default = None )

  return p

#-----------------------------------------------------------------------
# run
#-----------------------------------------------------------------------
def run( argv = None, out = None, err = None ):
  out = out or sys.stdout
  err = err or sys.stderr

  try:
    args = build_parser().parse_args( argv )
  except SystemExit as e:
    return e.code

  try:
    if   args.verb == 'freeprod':    _freeprod( args, out )
    elif args.verb == 'dual':        _dual( args, out )
    elif args.verb == 'minor':       _minor( args, out )
    elif args.verb == 'factor':      _factor( args, out )
    elif args.verb == 'irreducible': _irreducible( args, out )
    elif args.verb == 'enumerate':   _enumerate( args, out, err )
    elif args.verb == 'tables':      _tables( args, out, err )
    elif args.verb == 'verify':      return _verify( args, out )
    elif args.verb == 'coalg':       _coalg( args, out, err )

  except ( MatroidError, ParseError ) as e:
    print( 'error: {}'.format( e ), file=err )
    return 2

  except TheoremViolation as e:
    print( 'theorem violation: {}'.format( e ), file=err )
    err.write( serialize_witness( e.witness ) )
    return 3

  except EnvironmentError as e:
    print( 'error: {}'.format( e ), file=err )
    return 2

  return 0

def main():
  sys.exit( run() )

if __name__ == '__main__':
  main()
