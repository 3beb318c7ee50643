"""Permutation groups, transformation semigroups and synchronization."""
