#=======================================================================
# suites.py
#=======================================================================
# Property sweeps behind "matfp verify". Each property is a function
# returning None when a case passes and a witness dict (matroids and
# masks) when it fails; a suite runs its properties over catalog
# matroids plus seeded random draws and reports one Check per property.

import random
from collections import namedtuple

import numpy as np

from matfp.tools.coalgebra.coproduct  import coproduct, section_coefficient
from matfp.tools.coalgebra.incidence  import c_inverse, c_matrix
from matfp.tools.coalgebra.twist      import bialgebra_check
from matfp.tools.coalgebra.weak_order import component_poset
from matfp.tools.enumeration.Catalog    import enumerate_up_to
from matfp.tools.enumeration.extensions import random_matroid
from matfp.tools.factorization.factor import (
  cancel, factor_irreducible, is_irreducible, random_maximal_chain,
  chain_factorization, free_separators, free_separators_by_intervals,
)
from matfp.tools.freeproduct.constructions import (
  CONSTRUCTIONS, free_product, free_product_witness, fp_cyclic_flats, swap_blocks,
)
from matfp.tools.freeproduct.structure import (
  minor_of_fp, fp_truncation_identity, fp_lift_identity,
  split_weak_map_holds, conineq_holds,
)
from matfp.tools.iso.canonical import are_isomorphic
from matfp.model.exceptions    import TheoremViolation

Check = namedtuple( 'Check', 'name passed cases failures' )

SUITE_NAMES = ( 'crypto', 'structure', 'factorization', 'coalgebra' )

# Witnesses kept per property; the count of failures is always exact.
MAX_WITNESSES = 5

#-----------------------------------------------------------------------
# run_property
#-----------------------------------------------------------------------
def run_property( name, prop, cases ):
  failures = []
  count    = 0
  failed   = 0
  for case in cases:
    count  += 1
    witness = prop( *case )
    if witness is not None:
      failed += 1
      if len( failures ) < MAX_WITNESSES:
        failures.append( witness )
  return Check( name, failed == 0, count, failures )

#=======================================================================
# Case Generators
#=======================================================================

def catalog_pairs( cat, max_total ):
  ms = cat.matroids()
  return [ ( M, N ) for M in ms for N in ms if M.n + N.n <= max_total ]

def random_pairs( rng, samples, lo, hi ):
  out = []
  for _ in range( samples ):
    total = rng.randint( lo, hi )
    m     = rng.randint( 0, total )
    out.append( ( random_matroid( m, rng ), random_matroid( total - m, rng ) ) )
  return out

def catalog_triples( cat, max_total ):
  ms = cat.matroids()
  return [ ( A, B, C ) for A in ms for B in ms for C in ms
           if A.n + B.n + C.n <= max_total ]

#=======================================================================
# Properties
#=======================================================================

def constructions_agree( M, N ):
  want = free_product( M, N )
  for tag in CONSTRUCTIONS:
    got = free_product_witness( M, N, tag ).product
    if got != want:
      return { 'M' : M, 'N' : N, 'construction' : tag, 'got' : got, 'want' : want }
  return None

def cyclic_flats_agree( M, N ):
  P = free_product( M, N )
  if fp_cyclic_flats( M, N ) != P.cyclic_flats():
    return { 'M' : M, 'N' : N, 'product' : P }
  return None

def product_duality( M, N ):
  lhs = swap_blocks( free_product( M, N ).dual(), M.n )
  rhs = free_product( N.dual(), M.dual() )
  if lhs != rhs:
    return { 'M' : M, 'N' : N, 'lhs' : lhs, 'rhs' : rhs }
  return None

def associativity( A, B, C ):
  lhs = free_product( free_product( A, B ), C )
  rhs = free_product( A, free_product( B, C ) )
  if lhs != rhs:
    return { 'A' : A, 'B' : B, 'C' : C, 'lhs' : lhs, 'rhs' : rhs }
  return None

def minor_theorem( M, N, U, V ):
  try:
    minor_of_fp( M, N, U, V )
  except TheoremViolation as e:
    return e.witness
  return None

def truncation_lift_identities( M, N ):
  for i in range( 5 ):
    if not fp_truncation_identity( M, N, i ) or not fp_lift_identity( M, N, i ):
      return { 'M' : M, 'N' : N, 'i' : i }
  return None

def extremality( L ):
  for Sp in range( 1 << L.n ):
    if not split_weak_map_holds( L, Sp ) or not conineq_holds( L, Sp ):
      return { 'L' : L, 'S' : Sp }
  return None

def factorization_reconstructs( M ):
  f = factor_irreducible( M )
  if not f.check() or not are_isomorphic( f.reconstruct(), M ):
    return { 'M' : M }
  return None

def chains_agree( M, rng ):
  first  = chain_factorization( M, random_maximal_chain( M, rng ) )
  second = chain_factorization( M, random_maximal_chain( M, rng ) )
  if sorted( map( str, first.iso_keys() ) ) != sorted( map( str, second.iso_keys() ) ):
    return { 'M' : M, 'first' : first.chain.hex(), 'second' : second.chain.hex() }
  return None

def irreducible_dual( M ):
  if is_irreducible( M ) != is_irreducible( M.dual() ):
    return { 'M' : M }
  return None

def separators_by_intervals( M ):
  if free_separators( M ) != free_separators_by_intervals( M ):
    return { 'M' : M }
  return None

def cancellation( M, N ):
  P = free_product( M, N )
  pair = cancel( P, M.n )
  if pair is None or not are_isomorphic( pair[0], M ) or not are_isomorphic( pair[1], N ):
    return { 'M' : M, 'N' : N }
  return None

def bialgebra( M, N ):
  if not bialgebra_check( M, N ):
    return { 'M' : M, 'N' : N }
  return None

def coproduct_mass( M ):
  total = coproduct( M ).total()
  if total != 1 << M.n:
    return { 'M' : M, 'total' : total }
  return None

def section_duality( L, M, N ):
  if section_coefficient( L, M, N ) != section_coefficient( L.dual(), N.dual(), M.dual() ):
    return { 'L' : L, 'M' : M, 'N' : N }
  return None

def c_inverse_identity( poset, cat ):
  c    = c_matrix( poset, cat )
  prod = np.dot( c, c_inverse( c ) )
  if not all( prod[i, j] == ( 1 if i == j else 0 )
              for i in range( len( poset ) ) for j in range( len( poset ) ) ):
    return { 'classes' : ' '.join( str( k ) for k in poset.classes ) }
  return None

#=======================================================================
# Suites
#=======================================================================

#-----------------------------------------------------------------------
# _minor_draws
#-----------------------------------------------------------------------
def _minor_draws( pairs, rng, samples ):
  out = []
  for _ in range( samples ):
    M, N = rng.choice( pairs )
    n    = M.n + N.n
    V    = rng.randrange( 1 << n )
    U    = rng.randrange( 1 << n ) & V
    out.append( ( M, N, U, V ) )
  return out

def _section_triples( cat, max_n ):
  out = []
  for key in cat.keys():
    if key.n > max_n:
      continue
    L = key.matroid()
    for A in range( 1 << L.n ):
      out.append( ( L, L.restrict( A ), L.contract( A ) ) )
  return out

#-----------------------------------------------------------------------
# run_suite
#-----------------------------------------------------------------------
# "max_n" bounds the catalog the sweeps are drawn from; "samples" sets
# the number of random draws for each randomized property.
def run_suite( name, samples = 20, seed = 0xfeed, max_n = 4, cat = None ):
  if name not in SUITE_NAMES:
    raise ValueError( 'unknown suite {!r}, expected one of {}'
                      .format( name, ', '.join( SUITE_NAMES ) ) )
  rng = random.Random( seed )
  cat = cat or enumerate_up_to( max_n )
  pairs = catalog_pairs( cat, cat.max_n )

  if name == 'crypto':
    rand = random_pairs( rng, samples, cat.max_n + 1, cat.max_n + 2 )
    return [
      run_property( 'constructions-agree', constructions_agree, pairs + rand ),
      run_property( 'cyclic-flats',        cyclic_flats_agree,  pairs + rand ),
      run_property( 'duality',             product_duality,     pairs + rand ),
    ]

  if name == 'structure':
    return [
      run_property( 'associativity', associativity,
                    catalog_triples( cat, cat.max_n ) ),
      run_property( 'minor-theorem', minor_theorem,
                    _minor_draws( pairs, rng, samples ) ),
      run_property( 'truncation-lift', truncation_lift_identities, pairs ),
      run_property( 'extremality', extremality,
                    [ ( M, ) for M in cat.matroids() ] ),
    ]

  singles = [ ( M, ) for M in cat.matroids() if M.n > 0 ]

  if name == 'factorization':
    return [
      run_property( 'reconstruct',       factorization_reconstructs, singles ),
      run_property( 'chains-agree',      chains_agree,
                    [ ( M, rng ) for ( M, ) in singles ] ),
      run_property( 'irreducible-dual',  irreducible_dual,        singles ),
      run_property( 'separator-intervals', separators_by_intervals, singles ),
      run_property( 'cancellation',      cancellation,             pairs ),
    ]

  posets = [ ( component_poset( cat, r, n - r ), cat )
             for n in range( cat.max_n + 1 ) for r in range( n + 1 ) ]
  return [
    run_property( 'bialgebra',      bialgebra,
                  catalog_pairs( cat, cat.max_n ) +
                  random_pairs( rng, samples, 2, cat.max_n + 2 ) ),
    run_property( 'coproduct-mass', coproduct_mass,  [ ( M, ) for M in cat.matroids() ] ),
    run_property( 'section-duality', section_duality, _section_triples( cat, cat.max_n ) ),
    run_property( 'c-inverse',      c_inverse_identity, posets ),
  ]
