"""Questionable representations of finite partial orders."""

from .order import (EQ, GT, INC, LT, FiniteOrder, Rel, connected_components, cover_pairs,
                    from_relations, height, induced, invert, levels, linear_extension)
from .words import (ANTI2, TOTAL2, OrderSequence, QuestionableRepresentation, next_compare,
                    question, validate_qrep)
from .recognition import (OBS1, OBS2, OBST, classify, decompose_itov, find_obstruction,
                          forced_equal_closure, is_cedar, is_itov_fast, is_series_parallel,
                          is_trunk, is_up_regular, rmf_trunk, sp_decompose)
from .build import (build, build_itov_total_binary, build_total_strict_binary, build_width2,
                    prefix_components, strictify)
from .counting import (count_auto, count_bruteforce, count_cedar, count_disconnected, count_sp,
                       count_trunk, fusion)
from .iso import iso_bruteforce, iso_trunk, iso_up_regular
from .structures import AdjacencyStructure
from .tqd import (TQDecomposition, TreeDecomposition, depths, eval_clique_term, linear_tqd,
                  qrep_to_clique, tqd_from_clique_term, tqd_from_qrep,
                  tqd_from_tree_decomposition, tqd_grid, tqd_validate)
