#=========================================================================
# __init__
#=========================================================================

from .test_utils import mk_test_case_table
from .test_utils import random_pair
from .test_utils import naive_rank
from .test_utils import naive_is_matroid
from .test_utils import naive_isomorphic
