from .core import (OUTER, Diagram, DiagramError, Graph, arc, boundary_word, check,
                   from_angles, from_faces, from_points, from_rotations, grid, polygon, square, vertex)
from .measure import (DGLResult, NotSpanning, TooManyTrees, TreePair, count_spanning_trees,
                      dgl, double_exponential_bounds, ediam, geodesic_spanning_tree, gl,
                      idiam, measure, rad, spanning_trees, tree_pair)
from .shelling import (Complex, InvalidShelling, OneCellCollapse, OneCellExpand, ShellResult,
                       Shelling, TooManyCells, TwoCellCollapse, diagram_to_sequence, shell_fl,
                       shelling_max, tree_following_bound)
from .bridge import InvalidSequence, sequence_to_diagram
