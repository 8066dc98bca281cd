"""Desk-scale laboratory for data-diversity scaling studies in map-free
point-goal navigation: dataset curation, pose fusion, a deterministic 2D
simulator, behavior-cloned MLP policies, closed-loop evaluation, and
power-law scaling analysis."""

__version__ = "0.1.0"
