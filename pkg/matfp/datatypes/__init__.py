
from .SubsetMask import SubsetMask
from .SetFamily  import SetFamily, Flag
from .FormalSum  import FormalSum
from .helpers    import (
    MAX_N, popcount, full_mask, elements, mask_of, format_set, parse_set,
    subsets_of_size, compress, expand, permute
)
