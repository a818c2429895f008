"""Link patterns, Dyck paths, and 123-avoiding permutations on one generating tree.

The three Catalan families share a generating tree with succession rule
(k) -> (2)(3)...(k+1); this package exposes the objects, their tree
navigation, the level-by-level bijections between them, the diagrammatic
generator action on link patterns, and exact refined counting.
"""

from ._lpcat import (
    DyckPath,
    Error,
    LevelIter,
    LinkPattern,
    Perm123,
    RelationCheck,
    RelationReport,
    apply_generator,
    apply_word,
    binomial,
    brute_avoiders,
    brute_patterns,
    brute_preimages,
    catalan,
    check_relations,
    child,
    child_rank,
    children,
    convert,
    count_by_exposure,
    count_by_interaction,
    count_level,
    delete_strand,
    drag_outermost,
    encode,
    exposure,
    histogram,
    insert_strand,
    interaction,
    iterate_level,
    label,
    last_descent_length,
    node_at,
    parent,
    parse,
    path_code,
    peaks,
    preimages,
    render,
    root,
    rotate,
    stat_record,
)

__all__ = [
    "DyckPath",
    "Error",
    "LevelIter",
    "LinkPattern",
    "Perm123",
    "RelationCheck",
    "RelationReport",
    "apply_generator",
    "apply_word",
    "binomial",
    "brute_avoiders",
    "brute_patterns",
    "brute_preimages",
    "catalan",
    "check_relations",
    "child",
    "child_rank",
    "children",
    "convert",
    "count_by_exposure",
    "count_by_interaction",
    "count_level",
    "delete_strand",
    "drag_outermost",
    "encode",
    "exposure",
    "histogram",
    "insert_strand",
    "interaction",
    "iterate_level",
    "label",
    "last_descent_length",
    "node_at",
    "parent",
    "parse",
    "path_code",
    "peaks",
    "preimages",
    "render",
    "root",
    "rotate",
    "stat_record",
]
