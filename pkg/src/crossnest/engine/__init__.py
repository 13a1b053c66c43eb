"""Combinatorial core: shapes and tableaux, set partitions, walks, statistics and paths."""
