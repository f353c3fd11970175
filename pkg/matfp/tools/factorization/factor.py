#=======================================================================
# factor.py
#=======================================================================
# Cyclic-flat lattice, free separators, primary flag and factorization
# of a matroid into irreducible free-product factors.
#
# A free separator is a subset comparable by inclusion to every cyclic
# flat; chains of free separators from the empty set to the ground set
# are exactly the ways to split M as an iterated free product, the
# factor between consecutive entries lo < hi being the minor M(lo,hi).

import numpy as np

from matfp.datatypes         import helpers
from matfp.datatypes.helpers import elements, popcount
from matfp.datatypes.SetFamily import SetFamily, Flag
from matfp.model.exceptions  import EmptyMatroid, NotAFreeSeparator, TheoremViolation
from matfp.tools.freeproduct.constructions import free_product, multi_free_product
from matfp.tools.iso.canonical import iso_key

PRIMARY     = 'PRIMARY_FACTORIZATION'
IRREDUCIBLE = 'IRREDUCIBLE'
CUSTOM      = 'CUSTOM'

#=======================================================================
# Lattices
#=======================================================================

#-----------------------------------------------------------------------
# d_lattice
#-----------------------------------------------------------------------
def d_lattice( M ):
  'Sublattice of 2^S generated by the cyclic flats, with the empty set and S.'
  return M.cyclic_flats().lattice_closure()

#-----------------------------------------------------------------------
# free_separators
#-----------------------------------------------------------------------
def free_separators( M ):
  idx  = helpers.subset_index( M.n )
  keep = np.ones( len( idx ), dtype=bool )
  for z in M.cyclic_flats():
    keep &= ( ( idx & ~z ) == 0 ) | ( ( z & ~idx ) == 0 )
  return SetFamily( M.n, idx[ keep ].tolist() )

def is_free_separator( M, A ):
  return M.cyclic_flats().comparable_to_all( A )

#-----------------------------------------------------------------------
# free_separators_by_intervals
#-----------------------------------------------------------------------
# The separators between consecutive primary-flag entries lo < hi are
# the whole interval [lo,hi] when hi covers lo in D(M), and just the two
# endpoints otherwise.
def free_separators_by_intervals( M ):
  if M.n == 0:
    return SetFamily( 0, [ 0 ] )
  D       = d_lattice( M )
  flag    = D.pinchpoints()
  members = set( flag )
  for lo, hi in zip( flag, flag[1:] ):
    if len( D.interval( lo, hi ) ) > 2:
      continue
    free = hi & ~lo
    sub  = free
    while True:
      members.add( lo | sub )
      if sub == 0:
        break
      sub = ( sub - 1 ) & free
  return SetFamily( M.n, members )

#-----------------------------------------------------------------------
# primary_flag
#-----------------------------------------------------------------------
def primary_flag( M ):
  if M.n == 0:
    raise EmptyMatroid( 'primary_flag' )
  return d_lattice( M ).pinchpoints()

#=======================================================================
# Factorization
#=======================================================================

class Factorization( object ):
  'Factors of "source" read off along a chain of free separators.'

  def __init__( self, source, chain, factors, flavor ):
    self.source  = source
    self.chain   = chain
    self.factors = list( factors )
    self.flavor  = flavor

  def __len__( self ):
    return len( self.factors )

  def __repr__( self ):
    return 'Factorization( {}, [{}], {} factors )'.format(
      self.flavor, self.chain.hex(), len( self.factors ) )

  #---------------------------------------------------------------------
  # reconstruct
  #---------------------------------------------------------------------
  # The product lists the chain blocks one after another; relabelling
  # sends every element back to its position in the source.
  def reconstruct( self ):
    order = []
    for block in self.chain.blocks():
      order.extend( elements( block ) )
    return multi_free_product( self.factors ).relabel( order )

  def iso_keys( self ):
    return [ iso_key( f ) for f in self.factors ]

  #---------------------------------------------------------------------
  # check
  #---------------------------------------------------------------------
  def check( self ):
    if self.reconstruct() != self.source:
      return False
    if self.flavor == IRREDUCIBLE:
      return all( is_irreducible( f ) for f in self.factors )
    if self.flavor == PRIMARY:
      if not all( f.is_uniform() or is_irreducible( f ) for f in self.factors ):
        return False
      return not any( free_product( a, b ).is_uniform()
                      for a, b in zip( self.factors, self.factors[1:] ) )
    return True

#-----------------------------------------------------------------------
# _minors_along
#-----------------------------------------------------------------------
def _minors_along( M, chain ):
  return [ M.minor( lo, hi ) for lo, hi in zip( chain, chain[1:] ) ]

#-----------------------------------------------------------------------
# chain_factorization
#-----------------------------------------------------------------------
def chain_factorization( M, chain ):
  if not isinstance( chain, Flag ):
    chain = Flag( M.n, chain )
  cyclic = M.cyclic_flats()
  for entry in chain:
    if not cyclic.comparable_to_all( entry ):
      raise NotAFreeSeparator( entry )
  return Factorization( M, chain, _minors_along( M, chain ), CUSTOM )

#-----------------------------------------------------------------------
# primary_factorization
#-----------------------------------------------------------------------
def primary_factorization( M ):
  flag = primary_flag( M )
  return Factorization( M, flag, _minors_along( M, flag ), PRIMARY )

#-----------------------------------------------------------------------
# is_irreducible
#-----------------------------------------------------------------------
# Computed two ways: no nontrivial free separator, and (uniform: size
# one / nonuniform: no nontrivial pinchpoint of D(M)).
def is_irreducible( M ):
  if M.n == 0:
    raise EmptyMatroid( 'is_irreducible' )
  by_separators = len( free_separators( M ) ) == 2
  if M.is_uniform():
    by_pinchpoints = M.n == 1
  else:
    by_pinchpoints = len( primary_flag( M ) ) == 2
  if by_separators != by_pinchpoints:
    raise TheoremViolation( 'irreducibility criteria disagree',
                            { 'M' : M, 'by_separators' : by_separators,
                              'by_pinchpoints' : by_pinchpoints } )
  return by_separators

#-----------------------------------------------------------------------
# factor_irreducible
#-----------------------------------------------------------------------
# Uniform primary blocks are split one element at a time in increasing
# order, which gives U_{r,m} = I^r □ Z^(m-r).
def factor_irreducible( M ):
  flag  = primary_flag( M )
  chain = [ 0 ]
  for lo, hi in zip( flag, flag[1:] ):
    if M.minor( lo, hi ).is_uniform():
      cur = lo
      for x in elements( hi & ~lo ):
        cur |= 1 << x
        chain.append( cur )
    else:
      chain.append( hi )
  chain = Flag( M.n, chain )
  return Factorization( M, chain, _minors_along( M, chain ), IRREDUCIBLE )

#-----------------------------------------------------------------------
# random_maximal_chain
#-----------------------------------------------------------------------
def random_maximal_chain( M, rng ):
  'A maximal chain of free separators, choosing covers with "rng".'
  F     = free_separators( M )
  chain = [ 0 ]
  while chain[-1] != M.full:
    chain.append( rng.choice( F.covers( chain[-1] ) ) )
  return Flag( M.n, chain )

#-----------------------------------------------------------------------
# cancel
#-----------------------------------------------------------------------
def cancel( L, m ):
  'Return (L|A, L/A) for the smallest free separator A of size m, or None.'
  for A in free_separators( L ):
    if popcount( A ) == m:
      return L.restrict( A ), L.contract( A )
  return None
