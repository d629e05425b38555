from .core import (Presentation, relator_closure, fatten, preset, preset_names,
                   free_group, free_abelian, z3_figure, bs12, heisenberg, bridson,
                   baumslag_gersten, ffl_example, ffl_example_word, short_null_presentation)
from .oracles import (Verdict, WordOracle, FreeReductionOracle, ExponentSumOracle,
                      HeisenbergOracle, BS12Oracle, DehnOracle, BoundedSearchOracle,
                      default_oracle, make_oracle)
from .ball import CayleyBall, cayley_ball, four_point_delta, l_delta_check
from .dehn import DehnResult, dehn_algorithm


def is_trivial(w, oracle):
    return oracle.is_trivial(w)
