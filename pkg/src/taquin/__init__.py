"""Jeu de taquin, growth diagrams, complements, and rectification games."""

from .complement import (ComplementParams, complement,
                         complement_involution_check, stable_complement)
from .errors import (BorderMismatchError, NotComputableError, ParameterError,
                     ParseError, SearchExhaustedError, ShapeError,
                     TableauError, TaquinError)
from .games import (column_extract, column_extraction_rectify,
                    column_insertion_game, internal_column_insert,
                    internal_row_insert, rectify_differential, row_extract,
                    row_extraction_rectify, row_insertion_game)
from .growth import (GrowthDiagram, LocalRule, fill_pair, rule_C, rule_H,
                     rule_J, rule_R)
from .hopscotch import (AlmostStandardTableau, hopscotch_pair, tesler_rectify,
                        tesler_shift)
from .jdt import (dual_equivalent, jdt_pair, knuth_equivalent, p_symbol,
                  rectify, reversal, slide_in, slide_out)
from .shapes import Cell, SkewShape, StableShape
from .tableau import (Filling, StableTableau, Tableau, from_filling,
                      standard_renumbering, to_filling)

__version__ = "0.1.0"
