#=======================================================================
# helpers.py
#=======================================================================
'Collection of subset helper functions for the matfp framework.'

import functools

import numpy as np

# Hard cap on ground-set size; every 2^n table below must fit in memory.
MAX_N = 16

#-----------------------------------------------------------------------
# popcount
#-----------------------------------------------------------------------
def popcount( mask ):
  'Return the number of elements in the subset "mask".'
  return bin( mask ).count( '1' )

#-----------------------------------------------------------------------
# full_mask
#-----------------------------------------------------------------------
def full_mask( n ):
  'Return the mask of the whole ground set 0..n-1.'
  return ( 1 << n ) - 1

#-----------------------------------------------------------------------
# elements
#-----------------------------------------------------------------------
def elements( mask ):
  'Return the elements of "mask" in ascending order.'
  out = []
  i   = 0
  while mask:
    if mask & 1:
      out.append( i )
    mask >>= 1
    i     += 1
  return out

#-----------------------------------------------------------------------
# mask_of
#-----------------------------------------------------------------------
def mask_of( elems ):
  'Return the mask whose elements are "elems".'
  mask = 0
  for x in elems:
    if x < 0:
      raise ValueError( 'negative element {}'.format( x ) )
    mask |= 1 << x
  return mask

#-----------------------------------------------------------------------
# format_set
#-----------------------------------------------------------------------
# Sets print as comma-separated ascending elements, '-' for the empty set.
def format_set( mask ):
  if not mask:
    return '-'
  return ','.join( str( x ) for x in elements( mask ) )

#-----------------------------------------------------------------------
# parse_set
#-----------------------------------------------------------------------
def parse_set( text ):
  'Return the mask written as "text" in format_set notation.'
  text = text.strip()
  if text in ( '', '-' ):
    return 0
  try:
    return mask_of( int( x ) for x in text.split( ',' ) )
  except ValueError:
    raise ValueError( 'bad element list {!r}'.format( text ) )

#-----------------------------------------------------------------------
# subsets_of_size
#-----------------------------------------------------------------------
# All k-subsets of 0..n-1 in revlex order, which for masks is plain
# increasing integer order. Gosper's hack walks them directly.
@functools.lru_cache( maxsize=None )
def subsets_of_size( n, k ):
  if k < 0 or k > n:
    return ()
  if k == 0:
    return ( 0, )
  out   = []
  v     = ( 1 << k ) - 1
  limit = 1 << n
  while v < limit:
    out.append( v )
    c = v & -v
    s = v + c
    v = ( ( ( s ^ v ) >> 2 ) // c ) | s
  return tuple( out )

#-----------------------------------------------------------------------
# compress
#-----------------------------------------------------------------------
def compress( mask, support ):
  'Relabel the elements of "mask" inside "support" to 0..|support|-1.'
  out = 0
  for j, i in enumerate( elements( support ) ):
    if ( mask >> i ) & 1:
      out |= 1 << j
  return out

#-----------------------------------------------------------------------
# expand
#-----------------------------------------------------------------------
def expand( mask, support ):
  'Inverse of compress: place bit j of "mask" on the j-th element of "support".'
  out = 0
  for j, i in enumerate( elements( support ) ):
    if ( mask >> j ) & 1:
      out |= 1 << i
  return out

#-----------------------------------------------------------------------
# permute
#-----------------------------------------------------------------------
def permute( mask, perm ):
  'Return the image of "mask" when element i is sent to perm[i].'
  out = 0
  i   = 0
  while mask:
    if mask & 1:
      out |= 1 << perm[i]
    mask >>= 1
    i     += 1
  return out

#-----------------------------------------------------------------------
# subset_index
#-----------------------------------------------------------------------
@functools.lru_cache( maxsize=None )
def subset_index( n ):
  'Return a read-only array holding every mask 0..2^n-1.'
  table = np.arange( 1 << n, dtype=np.int64 )
  table.flags.writeable = False
  return table

#-----------------------------------------------------------------------
# popcount_table
#-----------------------------------------------------------------------
@functools.lru_cache( maxsize=None )
def popcount_table( n ):
  'Return a read-only array with the popcount of every mask 0..2^n-1.'
  table = np.zeros( 1 << n, dtype=np.int8 )
  for i in range( n ):
    table[ 1 << i : 1 << ( i + 1 ) ] = table[ : 1 << i ] + 1
  table.flags.writeable = False
  return table

#-----------------------------------------------------------------------
# superset_or
#-----------------------------------------------------------------------
# t[A] = OR of f[B] over all B containing A. Each pass folds bit i of
# the index: viewed as (high, bit, low), the bit=1 half feeds bit=0.
def superset_or( f, n ):
  t = np.array( f, dtype=bool )
  for i in range( n ):
    v = t.reshape( -1, 2, 1 << i )
    v[:,0,:] |= v[:,1,:]
  return t

#-----------------------------------------------------------------------
# subset_or
#-----------------------------------------------------------------------
# t[A] = OR of f[C] over all C contained in A.
def subset_or( f, n ):
  t = np.array( f, dtype=bool )
  for i in range( n ):
    v = t.reshape( -1, 2, 1 << i )
    v[:,1,:] |= v[:,0,:]
  return t

#-----------------------------------------------------------------------
# subset_max
#-----------------------------------------------------------------------
# t[A] = max of f[C] over all C contained in A.
def subset_max( f, n ):
  t = np.array( f, dtype=np.int8 )
  for i in range( n ):
    v = t.reshape( -1, 2, 1 << i )
    np.maximum( v[:,1,:], v[:,0,:], out=v[:,1,:] )
  return t
