#=======================================================================
# brute_force.py
#=======================================================================
# Independent census of matroid classes for small n: every family of
# r-subsets is tested against the basis exchange axiom directly, with
# no use of flats, cuts or extensions.
#
# A family is encoded as a bit vector over the r-subsets of 0..n-1 and
# all 2^C(n,r) - 1 nonempty families are filtered at once, one exchange
# clause at a time: for bases B1, B2 and x in B1 - B2, some y in B2 - B1
# must make (B1 - x) + y a member.

import numpy as np

from matfp.datatypes.helpers import elements, full_mask, subsets_of_size
from matfp.model.Matroid     import Matroid
from matfp.model.exceptions  import SizeTooLarge
from matfp.tools.iso.canonical import canonical_key

BRUTE_FORCE_LIMIT = 6

#-----------------------------------------------------------------------
# exchange_families
#-----------------------------------------------------------------------
def exchange_families( n, r ):
  'All basis families of rank-r matroids on 0..n-1, as lists of masks.'
  subsets = subsets_of_size( n, r )
  index   = { s : i for i, s in enumerate( subsets ) }
  count   = len( subsets )
  fams    = np.arange( 1, 1 << count, dtype=np.int64 )

  for i, b1 in enumerate( subsets ):
    for j, b2 in enumerate( subsets ):
      need = ( 1 << i ) | ( 1 << j )
      for x in elements( b1 & ~b2 ):
        rest  = b1 & ~( 1 << x )
        swaps = 0
        for y in elements( b2 & ~b1 ):
          swaps |= 1 << index[ rest | ( 1 << y ) ]
        ok   = ( ( fams & need ) != need ) | ( ( fams & swaps ) != 0 )
        fams = fams[ ok ]

  return [ [ subsets[k] for k in range( count ) if ( f >> k ) & 1 ]
           for f in fams.tolist() ]

#-----------------------------------------------------------------------
# brute_force_enumerate
#-----------------------------------------------------------------------
# Ranks above n/2 are read off as duals of the lower ranks.
def brute_force_enumerate( n ):
  if n > BRUTE_FORCE_LIMIT:
    raise SizeTooLarge( n, BRUTE_FORCE_LIMIT )

  full = full_mask( n )
  keys = set()
  for r in range( n // 2 + 1 ):
    for bases in exchange_families( n, r ):
      keys.add( canonical_key( Matroid( n, r, bases, validate = False ) ) )
      if n - r != r:
        keys.add( canonical_key( Matroid( n, n - r, [ full ^ b for b in bases ],
                                          validate = False ) ) )

  return sorted( keys, key = lambda k: ( k.n, k.r, k.canon ) )
