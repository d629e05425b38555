"""Filling invariants of finitely presented groups: Dehn proof system
searches, van Kampen diagrams and their measures, combings, Heisenberg
fillings and diagram families."""

from .words import commutator, free_reduce, invert
from .presentation import Presentation, cayley_ball, make_oracle, preset
from .dps import NullSequence, fl_search, ffl_search, area_search, reduced_area_search, replay
from .diagram import Diagram, check, measure, sequence_to_diagram, shell_fl
from .fillfuncs import filling_table, word_measures

__version__ = "0.1.0"
