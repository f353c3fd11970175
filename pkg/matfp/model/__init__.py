
from .Matroid import (
    Matroid, RankStats, from_bases, uniform, free, zero, empty, point, loop,
    direct_sum
)
from .exceptions import *
from .formats import (
    parse_matroid, read_matroid, format_matroid, to_text, to_compact,
    revlex_string, format_factorization, parse_factorization
)
