#-----------------------------------------------------------------------
# matfp errors
#-----------------------------------------------------------------------

from matfp.model.exceptions import MatfpError, MatroidError, ParseError, TheoremViolation

#-----------------------------------------------------------------------
# matroids
#-----------------------------------------------------------------------

from matfp.model.Matroid import (
    Matroid, from_bases, uniform, free, zero, empty, point, loop, direct_sum
)
from matfp.model.formats import (
    parse_matroid, read_matroid, format_matroid, to_text, to_compact
)

#-----------------------------------------------------------------------
# data types
#-----------------------------------------------------------------------

from matfp.datatypes.SubsetMask import SubsetMask
from matfp.datatypes.SetFamily  import SetFamily, Flag
from matfp.datatypes.FormalSum  import FormalSum

#-----------------------------------------------------------------------
# tools
#-----------------------------------------------------------------------

from matfp.tools.freeproduct.constructions import (
    free_product, multi_free_product, freedom_matroid
)
from matfp.tools.freeproduct.structure import truncation, lift
from matfp.tools.factorization.factor  import (
    Factorization, primary_factorization, factor_irreducible, is_irreducible,
    free_separators
)
from matfp.tools.iso.canonical         import IsoKey, iso_key, are_isomorphic
from matfp.tools.enumeration.Catalog   import Catalog, enumerate_up_to
from matfp.tools.coalgebra.coproduct   import coproduct, section_coefficient

#-----------------------------------------------------------------------
# py.test decorators
#-----------------------------------------------------------------------
# Tests marked slow only run with --slow (see conftest.py).

from pytest import mark as _mark

slow = _mark.slow

#-----------------------------------------------------------------------
# matfp namespace
#-----------------------------------------------------------------------

__all__ = [ # Errors
            'MatfpError',
            'MatroidError',
            'ParseError',
            'TheoremViolation',
            # Matroids
            'Matroid',
            'from_bases',
            'uniform',
            'free',
            'zero',
            'empty',
            'point',
            'loop',
            'direct_sum',
            # Formats
            'parse_matroid',
            'read_matroid',
            'format_matroid',
            'to_text',
            'to_compact',
            # Data Types
            'SubsetMask',
            'SetFamily',
            'Flag',
            'FormalSum',
            # Free Products
            'free_product',
            'multi_free_product',
            'freedom_matroid',
            'truncation',
            'lift',
            # Factorization
            'Factorization',
            'primary_factorization',
            'factor_irreducible',
            'is_irreducible',
            'free_separators',
            # Isomorphism and Census
            'IsoKey',
            'iso_key',
            'are_isomorphic',
            'Catalog',
            'enumerate_up_to',
            # Coalgebra
            'coproduct',
            'section_coefficient',
            # py.test decorators
            'slow',
          ]
